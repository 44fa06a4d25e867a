#include "gdist/graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gdist {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
  darts_.assign(static_cast<std::size_t>(n_), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto [a, b] = edges_[i];
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
      throw std::invalid_argument("edge " + std::to_string(i) + " has an endpoint out of range");
    darts_[static_cast<std::size_t>(a)].push_back(static_cast<int>(2 * i));
    darts_[static_cast<std::size_t>(b)].push_back(static_cast<int>(2 * i + 1));
  }
}

int Graph::components() const {
  std::vector<int> parent(static_cast<std::size_t>(n_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  int comps = n_;
  for (auto [a, b] : edges_) {
    int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[static_cast<std::size_t>(ra)] = rb;
      --comps;
    }
  }
  return comps;
}

bool Graph::connected() const { return components() == 1; }

std::string Graph::str() const { return graph_to_text(*this); }

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  return Graph(vertex_count, edges);
}

namespace {

void need(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

Graph multi_cycle(int n, int mult) {
  need(n >= 1, "cycle size must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < mult; ++k) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

}  // namespace

Graph doubled_cycle(int n) { return multi_cycle(n, 2); }
Graph tripled_cycle(int n) { return multi_cycle(n, 3); }
Graph cycle_graph(int n) { return multi_cycle(n, 1); }

Graph doubled_path(int n) {
  need(n >= 1, "path size must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) {
    e.emplace_back(i, i + 1);
    e.emplace_back(i, i + 1);
  }
  return Graph(n, e);
}

Graph path_graph(int n) {
  need(n >= 1, "path size must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph ladder(int n) {
  need(n >= 1, "ladder needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, n + i);
  for (int i = 0; i + 1 < n; ++i) {
    e.emplace_back(i, i + 1);
    e.emplace_back(n + i, n + i + 1);
  }
  return Graph(2 * n, e);
}

Marked half_open_ladder_marked(int n) {
  need(n >= 1, "half-open ladder needs n >= 1");
  // u_i = i, v_i = n+1+i for i = 0..n; no rung at i = 0.
  std::vector<std::pair<int, int>> e;
  const int off = n + 1;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, i + 1);
    e.emplace_back(off + i, off + i + 1);
  }
  for (int i = 1; i <= n; ++i) e.emplace_back(i, off + i);
  return {Graph(2 * n + 2, e), 0, off};
}

Graph half_open_ladder(int n) { return half_open_ladder_marked(n).g; }

Graph grid(int rows, int cols) {
  need(rows >= 1 && cols >= 1, "grid needs positive sides");
  std::vector<std::pair<int, int>> e;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c + 1 < cols; ++c) e.emplace_back(r * cols + c, r * cols + c + 1);
  for (int r = 0; r + 1 < rows; ++r)
    for (int c = 0; c < cols; ++c) e.emplace_back(r * cols + c, (r + 1) * cols + c);
  return Graph(rows * cols, e);
}

Graph bouquet(int k) {
  need(k >= 0, "bouquet needs k >= 0");
  return Graph(1, std::vector<std::pair<int, int>>(static_cast<std::size_t>(k), {0, 0}));
}

Graph dipole(int k) {
  need(k >= 0, "dipole needs k >= 0");
  return Graph(2, std::vector<std::pair<int, int>>(static_cast<std::size_t>(k), {0, 1}));
}

Graph build_named(const std::string& kind, const std::vector<int>& p) {
  auto one = [&]() {
    need(p.size() == 1, kind + " takes one parameter");
    need(p[0] >= 1, kind + ": invalid size");
    return p[0];
  };
  if (kind == "doubled_cycle") return doubled_cycle(one());
  if (kind == "doubled_path") return doubled_path(one());
  if (kind == "tripled_cycle") return tripled_cycle(one());
  if (kind == "ladder") return ladder(one());
  if (kind == "half_open_ladder") return half_open_ladder(one());
  if (kind == "bouquet") return bouquet(one());
  if (kind == "dipole") return dipole(one());
  if (kind == "path") return path_graph(one());
  if (kind == "cycle") return cycle_graph(one());
  if (kind == "grid") {
    need(p.size() == 2 && p[0] >= 1 && p[1] >= 1, "grid takes two positive parameters");
    return grid(p[0], p[1]);
  }
  throw std::invalid_argument("unknown graph kind: " + kind);
}

GluingSpec parse_gluing(const std::string& text, bool self) {
  GluingSpec phi;
  phi.self = self;
  std::string s = text;
  if (s.rfind("glue", 0) == 0) s = s.substr(4);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    auto gt = item.find('>');
    if (gt == std::string::npos) throw std::invalid_argument("gluing item without '>': " + item);
    try {
      phi.pairs.emplace_back(std::stoi(item.substr(0, gt)), std::stoi(item.substr(gt + 1)));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad gluing item: " + item);
    }
  }
  return phi;
}

std::string to_string(const GluingSpec& phi) {
  std::string out;
  for (auto [a, b] : phi.pairs) out += (out.empty() ? "" : ",") + std::to_string(a) + ">" + std::to_string(b);
  return out;
}

Graph bar_amalgamate(const Graph& g, int u, const Graph& h, int v) {
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= h.vertex_count())
    throw std::invalid_argument("bar_amalgamate: vertex out of range");
  auto e = g.edges();
  const int off = g.vertex_count();
  for (auto [a, b] : h.edges()) e.emplace_back(a + off, b + off);
  e.emplace_back(u, v + off);
  return Graph(g.vertex_count() + h.vertex_count(), e);
}

Graph bar_ring(const std::vector<Marked>& parts) {
  if (parts.empty()) throw std::invalid_argument("bar_ring: no parts");
  std::vector<std::pair<int, int>> e;
  std::vector<int> off;
  int n = 0;
  for (const auto& p : parts) {
    if (p.g.degree(p.u) != 1 || p.g.degree(p.v) != 1)
      throw std::invalid_argument("bar_ring: marked vertices must be pendant");
    off.push_back(n);
    for (auto [a, b] : p.g.edges()) e.emplace_back(a + n, b + n);
    n += p.g.vertex_count();
  }
  const std::size_t k = parts.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = (i + 1) % k;
    e.emplace_back(parts[i].v + off[i], parts[j].u + off[j]);
  }
  return Graph(n, e);
}

Graph amalgamate(const Graph& g, const Graph* h, const GluingSpec& phi, std::vector<int>& vmap) {
  const int ng = g.vertex_count();
  const int nh = h ? h->vertex_count() : 0;
  if (phi.pairs.empty()) throw std::invalid_argument("amalgamate: empty gluing");
  std::set<int> src, dst;
  for (auto [a, b] : phi.pairs) {
    if (a < 0 || a >= ng) throw std::invalid_argument("amalgamate: source out of range");
    if (b < 0 || b >= (h ? nh : ng)) throw std::invalid_argument("amalgamate: target out of range");
    if (!src.insert(a).second || !dst.insert(b).second)
      throw std::invalid_argument("amalgamate: gluing is not a bijection");
  }
  if (!h)
    for (int a : src)
      if (dst.count(a)) throw std::invalid_argument("amalgamate: U1 and U2 overlap");
  // Old vertices: g's 0..ng-1 then h's ng..ng+nh-1.
  const int total = ng + nh;
  std::vector<int> rep(static_cast<std::size_t>(total));
  std::iota(rep.begin(), rep.end(), 0);
  for (auto [a, b] : phi.pairs) rep[static_cast<std::size_t>(h ? ng + b : b)] = a;
  vmap.assign(static_cast<std::size_t>(total), -1);
  int next = 0;
  for (int i = 0; i < total; ++i)
    if (rep[static_cast<std::size_t>(i)] == i) vmap[static_cast<std::size_t>(i)] = next++;
  for (int i = 0; i < total; ++i) vmap[static_cast<std::size_t>(i)] = vmap[static_cast<std::size_t>(rep[static_cast<std::size_t>(i)])];
  std::vector<std::pair<int, int>> e;
  for (auto [a, b] : g.edges()) e.emplace_back(vmap[static_cast<std::size_t>(a)], vmap[static_cast<std::size_t>(b)]);
  if (h)
    for (auto [a, b] : h->edges())
      e.emplace_back(vmap[static_cast<std::size_t>(ng + a)], vmap[static_cast<std::size_t>(ng + b)]);
  return Graph(next, e);
}

Graph amalgamate(const Graph& g, const Graph* h, const GluingSpec& phi) {
  std::vector<int> vmap;
  return amalgamate(g, h, phi, vmap);
}

Graph blow_up(const Graph& g, const std::vector<int>& U) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int u : U) {
    if (u < 0 || u >= g.vertex_count()) throw std::invalid_argument("blow_up: vertex out of range");
    in[static_cast<std::size_t>(u)] = 1;
  }
  std::vector<int> vmap(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!in[static_cast<std::size_t>(v)]) vmap[static_cast<std::size_t>(v)] = next++;
  std::vector<int> leaf(static_cast<std::size_t>(g.dart_count()), -1);
  for (int d = 0; d < g.dart_count(); ++d)
    if (in[static_cast<std::size_t>(g.dart_vertex(d))]) leaf[static_cast<std::size_t>(d)] = next++;
  if (next == 0) next = 1;  // blowing up an isolated vertex leaves nothing; keep one vertex
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < g.edge_count(); ++i) {
    auto end = [&](int d) {
      int v = g.dart_vertex(d);
      return in[static_cast<std::size_t>(v)] ? leaf[static_cast<std::size_t>(d)] : vmap[static_cast<std::size_t>(v)];
    };
    e.emplace_back(end(2 * i), end(2 * i + 1));
  }
  return Graph(next, e);
}

Graph attach_ear(const Graph& g, int e, EarKind kind) {
  if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("attach_ear: invalid edge id");
  auto edges = g.edges();
  auto [u, v] = edges[static_cast<std::size_t>(e)];
  const int x = g.vertex_count();
  if (kind == EarKind::open) {
    const int y = x + 1;
    edges[static_cast<std::size_t>(e)] = {u, x};
    edges.emplace_back(x, y);
    edges.emplace_back(y, v);
    edges.emplace_back(x, y);
    return Graph(x + 2, edges);
  }
  edges[static_cast<std::size_t>(e)] = {u, x};
  edges.emplace_back(x, v);
  edges.emplace_back(x, x);
  return Graph(x + 1, edges);
}

namespace {

bool separates(const Graph& h, const std::vector<char>& removed, const std::vector<int>& a,
               const std::vector<int>& b) {
  std::vector<char> seen(static_cast<std::size_t>(h.vertex_count()), 0);
  std::vector<int> stack(a.begin(), a.end());
  for (int s : a) seen[static_cast<std::size_t>(s)] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int d : h.darts_at(v)) {
      if (removed[static_cast<std::size_t>(d >> 1)]) continue;
      int w = h.dart_vertex(d ^ 1);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  for (int t : b)
    if (seen[static_cast<std::size_t>(t)]) return false;
  return true;
}

}  // namespace

SwapResult swapping(const Graph& h, const GluingSpec& phi, const std::vector<int>& cut) {
  std::vector<int> u1, u2;
  for (auto [a, b] : phi.pairs) {
    u1.push_back(a);
    u2.push_back(b);
  }
  std::vector<char> removed(static_cast<std::size_t>(h.edge_count()), 0);
  for (int k : cut) {
    if (k < 0 || k >= h.edge_count()) throw std::invalid_argument("swapping: edge out of range");
    removed[static_cast<std::size_t>(k)] = 1;
  }
  if (!separates(h, removed, u1, u2)) throw std::invalid_argument("swapping: K is not a cut between U1 and U2");
  for (int k : cut) {
    removed[static_cast<std::size_t>(k)] = 0;
    bool still = separates(h, removed, u1, u2);
    removed[static_cast<std::size_t>(k)] = 1;
    if (still) throw std::invalid_argument("swapping: K is not a minimal cut");
  }
  auto edges = h.edges();
  int n = h.vertex_count();
  std::vector<std::pair<int, int>> leaves;
  for (int k : cut) {
    auto [a, b] = edges[static_cast<std::size_t>(k)];
    const int n1 = n++, n2 = n++;
    edges[static_cast<std::size_t>(k)] = {a, n1};
    edges.emplace_back(n2, b);
    leaves.emplace_back(n1, n2);
  }
  Graph cutg(n, edges);
  std::vector<int> vmap;
  Graph out = amalgamate(cutg, nullptr, phi, vmap);
  SwapResult res{out, {}};
  for (auto [a, b] : leaves) res.psi.emplace_back(vmap[static_cast<std::size_t>(a)], vmap[static_cast<std::size_t>(b)]);
  return res;
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> e;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v") {
      if (!(ls >> n)) throw std::invalid_argument("line " + std::to_string(lineno) + ": bad vertex count");
    } else if (tag == "e") {
      int a, b;
      if (!(ls >> a >> b)) throw std::invalid_argument("line " + std::to_string(lineno) + ": bad edge");
      e.emplace_back(a, b);
    } else {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown record '" + tag + "'");
    }
  }
  if (n < 0) throw std::invalid_argument("graph text has no 'v N' line");
  return Graph(n, e);
}

Graph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    std::vector<std::pair<int, int>> e;
    for (const auto& p : j.at("edges")) e.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    return Graph(j.at("vertices").get<int>(), e);
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("graph json: ") + ex.what());
  }
}

Graph load_graph(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  std::string s = ss.str();
  auto first = s.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && s[first] == '{') return parse_graph_json(s);
  return parse_graph_text(s);
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream os;
  os << "v " << g.vertex_count() << "\n";
  for (auto [a, b] : g.edges()) os << "e " << a << " " << b << "\n";
  return os.str();
}

}  // namespace gdist
