#include "gdist/distributions.hpp"
#include "gdist/series.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gdist {

namespace {

LaurentPoly xpow(int e, long c = 1) { return LaurentPoly::monomial(Rational(c), e); }

LaurentPoly from_counts(const std::vector<std::uint64_t>& c) {
  std::vector<Rational> r;
  for (auto v : c) r.emplace_back(BigInt(std::to_string(v)));
  return LaurentPoly(0, r);
}

void bump(std::vector<std::uint64_t>& c, int e) {
  if (static_cast<int>(c.size()) <= e) c.resize(static_cast<std::size_t>(e + 1), 0);
  ++c[static_cast<std::size_t>(e)];
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

LaurentPoly ipow(const LaurentPoly& p, int k) {
  LaurentPoly r(1);
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

}  // namespace

PartialPair partial_pair_oracle(const Graph& g, int u, int v, PartialMode mode, const OracleOptions& opts) {
  if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || u == v)
    throw std::invalid_argument("partial_pair_oracle: bad marked vertices");
  if (g.degree(u) != 1 || g.degree(v) != 1)
    throw std::invalid_argument("partial_pair_oracle: marked vertices must be pendant");
  const bool euler = mode == PartialMode::euler;
  const int du = g.darts_at(u)[0], dv = g.darts_at(v)[0];
  std::vector<std::uint64_t> dc, sc;
  for_each_embedding(
      g, euler,
      [&](const EmbeddingRep& rep) {
        const FaceSet fs = trace_faces(g, rep);
        const int eg = 2 - g.vertex_count() + g.edge_count() - fs.faces;
        const int e = euler ? eg : eg / 2;
        if (fs.face_of_state(corner_state(rep, du)) == fs.face_of_state(corner_state(rep, dv)))
          bump(sc, e);
        else
          bump(dc, e);
      },
      opts);
  return {from_counts(dc), from_counts(sc)};
}

LadderPartials ladder_partials(int n, PartialMode mode) {
  if (n < 0) throw std::invalid_argument("ladder_partials: n < 0");
  const LaurentPoly x = LaurentPoly::x();
  LaurentPoly d(1), s = mode == PartialMode::euler ? x : LaurentPoly();
  for (int i = 1; i <= n; ++i) {
    LaurentPoly nd = LaurentPoly(2) * d + LaurentPoly(4) * s;
    LaurentPoly ns = mode == PartialMode::euler ? LaurentPoly{0, 2, 4} * d + LaurentPoly(4) * x * s
                                                : LaurentPoly(2) * x * d;
    d = std::move(nd);
    s = std::move(ns);
  }
  LadderPartials out;
  out.ladder = {d, s};
  out.half_open = {LaurentPoly(2) * d, LaurentPoly(4) * s + LaurentPoly(2) * d};
  return out;
}

PartialPair half_open_ladder_closed_form(int n) {
  PartialPair p;
  for (int k = 0; 2 * k <= n + 1; ++k) {
    p.d += LaurentPoly::monomial(Rational(binom(n - k, k) * (BigInt(1) << static_cast<unsigned>(n + k + 1))), k);
    p.s += LaurentPoly::monomial(Rational(binom(n + 1 - k, k) * (BigInt(1) << static_cast<unsigned>(k))), k);
  }
  return p;
}

LaurentPoly bar_ring_from_partials(const std::vector<PartialPair>& parts, PartialMode mode) {
  if (parts.empty()) throw std::invalid_argument("bar_ring_from_partials: no parts");
  LaurentPoly tot(1), s(1);
  for (const auto& p : parts) {
    tot *= p.total();
    s *= p.s;
  }
  if (mode == PartialMode::genus) return LaurentPoly::x() * tot + LaurentPoly{1, -1} * s;
  return xpow(2, 2) * tot + LaurentPoly{1, 1, -2} * s;
}

Graph star_ladder(const std::vector<int>& alpha) {
  std::vector<Marked> parts;
  for (int a : alpha) parts.push_back(half_open_ladder_marked(a));
  return bar_ring(parts);
}

Marked break_edge(const Graph& g, int e) {
  if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("break_edge: invalid edge id");
  auto edges = g.edges();
  const auto [a, b] = edges[static_cast<std::size_t>(e)];
  const int p = g.vertex_count(), q = p + 1;
  edges[static_cast<std::size_t>(e)] = {a, p};
  edges.emplace_back(q, b);
  return {Graph(p + 2, edges), p, q};
}

Graph eared_graph(const Graph& g, int e, int r, int s) {
  if (r < 0 || s < 0) throw std::invalid_argument("eared_graph: negative ear count");
  Graph h = g;
  for (int i = 0; i < r; ++i) h = attach_ear(h, e, EarKind::open);
  for (int i = 0; i < s; ++i) h = attach_ear(h, e, EarKind::closed);
  return h;
}

std::pair<LaurentPoly, LaurentPoly> ear_formula_parts(const PartialPair& gp, int r, int s) {
  if (r < 0 || s < 0) throw std::invalid_argument("ear_formula_euler: negative ear count");
  LaurentPoly p = xpow(2, 2) * gp.total() * ipow(LaurentPoly{4, 4}, r) * ipow(LaurentPoly{6, 6}, s);
  LaurentPoly q = LaurentPoly{1, 1, -2} * gp.s * ipow(LaurentPoly{2, 4}, r) * ipow(LaurentPoly{4, 6}, s);
  return {p, q};
}

LaurentPoly ear_formula_euler(const PartialPair& gp, int r, int s) {
  auto [p, q] = ear_formula_parts(gp, r, s);
  return p + q;
}

bool is_cactus(const Graph& c) {
  if (!c.connected()) return false;
  const int m = c.edge_count(), n = c.vertex_count();
  std::vector<char> bridge(static_cast<std::size_t>(m), 0);
  for (int e = 0; e < m; ++e) {
    auto [a, b] = c.edge(e);
    if (a == b) continue;
    std::vector<std::pair<int, int>> rest;
    for (int f = 0; f < m; ++f)
      if (f != e) rest.push_back(c.edge(f));
    bridge[static_cast<std::size_t>(e)] = !Graph(n, rest).connected();
  }
  // Non-bridge edges form 2-edge-connected pieces; each must be a single cycle.
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
  };
  for (int e = 0; e < m; ++e) {
    if (bridge[static_cast<std::size_t>(e)]) continue;
    auto [a, b] = c.edge(e);
    parent[static_cast<std::size_t>(find(a))] = find(b);
  }
  std::vector<int> ve(static_cast<std::size_t>(n), 0), vv(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) ++vv[static_cast<std::size_t>(find(v))];
  for (int e = 0; e < m; ++e)
    if (!bridge[static_cast<std::size_t>(e)]) ++ve[static_cast<std::size_t>(find(c.edge(e).first))];
  for (int v = 0; v < n; ++v)
    if (ve[static_cast<std::size_t>(v)] != 0 && ve[static_cast<std::size_t>(v)] != vv[static_cast<std::size_t>(v)])
      return false;
  return true;
}

LaurentPoly cactus_euler(const Graph& c) {
  if (!is_cactus(c)) throw std::invalid_argument("cactus_euler: graph is not a cactus");
  const int beta = c.betti();
  BigInt k = BigInt(1) << static_cast<unsigned>(c.edge_count() - beta);
  for (int v = 0; v < c.vertex_count(); ++v) k *= factorial(c.degree(v) - 1);
  return Rational(k) * ipow(LaurentPoly{1, 1}, beta);
}

LaurentPoly tree_like_compose(const std::vector<LaurentPoly>& parts) {
  if (parts.empty()) throw std::invalid_argument("tree_like_compose: no parts");
  LaurentPoly r(1);
  for (const auto& p : parts) r *= p;
  return r;
}

Rational perturbation_tv_bound(const LaurentPoly& p, const LaurentPoly& q) {
  Rational abs_sum = 0;
  for (const auto& c : q.dense()) abs_sum += abs(c);
  const Rational den = p.sum_coeffs() + q.sum_coeffs();
  if (den == 0) throw std::invalid_argument("perturbation_tv_bound: zero mass");
  return (abs_sum + q.sum_coeffs()) / den;
}

// ---------------------------------------------------------------------------

namespace {

const char* const kNames[kPedTypes] = {"dd0", "ds0", "sd0", "ss0", "dd'", "dd''", "ds'", "sd'", "ss1", "ss2"};

}  // namespace

const char* ped_type_name(int t) { return (t >= 0 && t < kPedTypes) ? kNames[t] : "?"; }

int ped_type_from_name(const std::string& name) {
  for (int i = 0; i < kPedTypes; ++i)
    if (name == kNames[i]) return i;
  return -1;
}

int classify_ped(const Graph& g, const EmbeddingRep& rep, const FaceSet& fs, int s, int t) {
  const auto& sd = g.darts_at(s);
  const auto& td = g.darts_at(t);
  if (sd.size() != 2 || td.size() != 2) throw std::invalid_argument("classify_ped: marked vertices need degree 2");
  const int s0 = fs.face_of_state(corner_state(rep, sd[0])), s1 = fs.face_of_state(corner_state(rep, sd[1]));
  const int t0 = fs.face_of_state(corner_state(rep, td[0])), t1 = fs.face_of_state(corner_state(rep, td[1]));
  const bool s_split = s0 != s1, t_split = t0 != t1;
  std::set<int> fs_s{s0, s1}, fs_t{t0, t1};
  int shared = 0;
  for (int f : fs_s) shared += static_cast<int>(fs_t.count(f));
  if (s_split && t_split) return shared == 0 ? dd0 : shared == 1 ? dd1 : dd2;
  if (s_split) return shared == 0 ? ds0 : ds1;
  if (t_split) return shared == 0 ? sd0 : sd1;
  if (shared == 0) return ss0;

  // One face through all four corners: read the corner pattern off its walk.
  std::map<int, int> label;
  for (int x : sd) {
    label[2 * rep.succ[static_cast<std::size_t>(x)]] = 0;
    label[2 * x + 1] = 0;
  }
  for (int x : td) {
    label[2 * rep.succ[static_cast<std::size_t>(x)]] = 1;
    label[2 * x + 1] = 1;
  }
  const int o = fs.orbit_of[static_cast<std::size_t>(corner_state(rep, sd[0]))];
  const auto& orbit = fs.orbits[static_cast<std::size_t>(o)];
  const std::size_t len = fs.self_paired[static_cast<std::size_t>(o)] ? orbit.size() / 2 : orbit.size();
  std::vector<int> seq;
  for (std::size_t i = 0; i < len; ++i) {
    auto it = label.find(orbit[i]);
    if (it != label.end()) seq.push_back(it->second);
  }
  if (seq.size() != 4) throw std::logic_error("classify_ped: corner walk has " + std::to_string(seq.size()) + " marks");
  const bool alternating = seq[0] != seq[1] && seq[1] != seq[2] && seq[2] != seq[3];
  return alternating ? ss2 : ss1;
}

PEdVector ped_vector_oracle(const Graph& g, int s, int t, const OracleOptions& opts) {
  if (s == t || g.degree(s) != 2 || g.degree(t) != 2)
    throw std::invalid_argument("ped_vector_oracle: s and t must be distinct degree-2 vertices");
  std::array<std::vector<std::uint64_t>, kPedTypes> c;
  for_each_embedding(
      g, true,
      [&](const EmbeddingRep& rep) {
        const FaceSet fs = trace_faces(g, rep);
        const int eg = 2 - g.vertex_count() + g.edge_count() - fs.faces;
        bump(c[static_cast<std::size_t>(classify_ped(g, rep, fs, s, t))], eg);
      },
      opts);
  PEdVector v;
  for (int i = 0; i < kPedTypes; ++i) v[static_cast<std::size_t>(i)] = from_counts(c[static_cast<std::size_t>(i)]);
  return v;
}

LaurentPoly ped_sum(const PEdVector& v) {
  LaurentPoly s;
  for (const auto& p : v) s += p;
  return s;
}

std::string ped_str(const PEdVector& v) {
  std::string out = "(";
  for (int i = 0; i < kPedTypes; ++i) {
    if (i) out += ", ";
    out += v[static_cast<std::size_t>(i)].str();
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Table derivation.

namespace {

struct Witness {
  Graph g;
  int s = 0, t = 0;
  EmbeddingRep rep;
  int eg = 0;
  int type = 0;
  std::string label;
};

int eg_of(const Graph& g, const EmbeddingRep& rep) { return euler_genus(g, rep); }

std::string compact(const Graph& g) {
  std::string out = "v" + std::to_string(g.vertex_count()) + ":";
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edge(e);
    out += (e ? "," : "") + std::to_string(a) + "-" + std::to_string(b);
  }
  return out;
}

// Left witness's t merged with right witness's s; `order` picks the cyclic order
// of the four darts at the merged vertex (left's first dart fixed).
struct MergedEmbedding {
  Graph g;
  EmbeddingRep rep;
  int s = 0, t = 0;
};

MergedEmbedding merge_witnesses(const Witness& a, const Witness& b, int order) {
  const int va = a.g.vertex_count(), ea = a.g.edge_count();
  std::vector<int> vmap(static_cast<std::size_t>(b.g.vertex_count()));
  int next = va;
  for (int v = 0; v < b.g.vertex_count(); ++v) vmap[static_cast<std::size_t>(v)] = v == b.s ? a.t : next++;
  auto edges = a.g.edges();
  for (auto [x, y] : b.g.edges()) edges.emplace_back(vmap[static_cast<std::size_t>(x)], vmap[static_cast<std::size_t>(y)]);
  MergedEmbedding m;
  m.g = Graph(next, edges);
  m.s = a.s;
  m.t = vmap[static_cast<std::size_t>(b.t)];
  m.rep.succ = a.rep.succ;
  for (int d : b.rep.succ) m.rep.succ.push_back(d + 2 * ea);
  m.rep.twist = a.rep.twist;
  m.rep.twist.insert(m.rep.twist.end(), b.rep.twist.begin(), b.rep.twist.end());
  const auto& ad = a.g.darts_at(a.t);
  const auto& bd = b.g.darts_at(b.s);
  std::array<int, 3> rest{ad[1], bd[0] + 2 * ea, bd[1] + 2 * ea};
  for (int i = 0; i < order; ++i) std::next_permutation(rest.begin(), rest.end());
  const std::array<int, 4> cyc{ad[0], rest[0], rest[1], rest[2]};
  for (int i = 0; i < 4; ++i) m.rep.succ[static_cast<std::size_t>(cyc[static_cast<std::size_t>(i)])] = cyc[static_cast<std::size_t>((i + 1) % 4)];
  return m;
}

std::vector<Transition> merge_transitions(const Witness& a, const Witness& b) {
  std::map<std::pair<int, int>, int> acc;
  for (int o = 0; o < 6; ++o) {
    MergedEmbedding m = merge_witnesses(a, b, o);
    const FaceSet fs = trace_faces(m.g, m.rep);
    const int eg = 2 - m.g.vertex_count() + m.g.edge_count() - fs.faces;
    ++acc[{classify_ped(m.g, m.rep, fs, m.s, m.t), eg - a.eg - b.eg}];
  }
  std::vector<Transition> out;
  for (auto [k, c] : acc) out.push_back({k.first, k.second, c});
  return out;
}

std::map<int, int> closure_histogram(const Witness& w) {
  const Graph& g = w.g;
  const int e = g.edge_count();
  auto edges = g.edges();
  edges.emplace_back(w.s, w.t);
  edges.emplace_back(w.s, w.t);
  const Graph h(g.vertex_count(), edges);
  const auto& sd = g.darts_at(w.s);
  const auto& td = g.darts_at(w.t);
  std::map<int, int> hist;
  EmbeddingRep rep;
  rep.succ = w.rep.succ;
  rep.succ.resize(static_cast<std::size_t>(2 * e + 4));
  rep.twist = w.rep.twist;
  rep.twist.resize(static_cast<std::size_t>(e + 2), 0);
  std::array<int, 3> rs{sd[1], 2 * e, 2 * e + 2};
  for (int os = 0; os < 6; ++os, std::next_permutation(rs.begin(), rs.end())) {
    std::array<int, 3> rt{td[1], 2 * e + 1, 2 * e + 3};
    for (int ot = 0; ot < 6; ++ot, std::next_permutation(rt.begin(), rt.end())) {
      const std::array<int, 4> cs{sd[0], rs[0], rs[1], rs[2]}, ct{td[0], rt[0], rt[1], rt[2]};
      for (int i = 0; i < 4; ++i) {
        rep.succ[static_cast<std::size_t>(cs[static_cast<std::size_t>(i)])] = cs[static_cast<std::size_t>((i + 1) % 4)];
        rep.succ[static_cast<std::size_t>(ct[static_cast<std::size_t>(i)])] = ct[static_cast<std::size_t>((i + 1) % 4)];
      }
      for (int tw = 0; tw < 4; ++tw) {
        rep.twist[static_cast<std::size_t>(e)] = static_cast<std::uint8_t>(tw & 1);
        rep.twist[static_cast<std::size_t>(e + 1)] = static_cast<std::uint8_t>(tw >> 1);
        ++hist[eg_of(h, rep) - w.eg];
      }
    }
  }
  return hist;
}

std::string transitions_str(const std::vector<Transition>& ts) {
  if (ts.empty()) return "(none)";
  std::string out;
  for (const auto& t : ts) {
    if (!out.empty()) out += " + ";
    out += std::to_string(t.mult) + (t.target >= 0 ? ped_type_name(t.target) : "??");
    if (t.shift) out += "[+" + std::to_string(t.shift) + "]";
  }
  return out;
}

std::string hist_str(const std::map<int, int>& h) {
  std::string out;
  for (auto [k, c] : h) {
    if (!out.empty()) out += ", ";
    out += std::to_string(k) + ":" + std::to_string(c);
  }
  return out.empty() ? "(none)" : out;
}

// Enumerates connected multigraphs on <= max_edges edges in which vertices 0 and 1
// have degree 2, smallest edge count first.
void for_each_marked_graph(int max_edges, const std::function<bool(const Graph&)>& fn) {
  for (int m = 2; m <= max_edges; ++m) {
    for (int n = 2; n <= m + 1; ++n) {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) pairs.emplace_back(i, j);
      std::vector<int> pick;
      std::vector<int> deg(static_cast<std::size_t>(n), 0);
      bool stop = false;
      std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (stop) return;
        if (static_cast<int>(pick.size()) == m) {
          if (deg[0] != 2 || deg[1] != 2) return;
          for (int v = 0; v < n; ++v)
            if (deg[static_cast<std::size_t>(v)] == 0) return;
          std::vector<std::pair<int, int>> e;
          for (int p : pick) e.push_back(pairs[static_cast<std::size_t>(p)]);
          Graph g(n, e);
          if (g.connected() && !fn(g)) stop = true;
          return;
        }
        for (std::size_t p = from; p < pairs.size(); ++p) {
          auto [a, b] = pairs[p];
          deg[static_cast<std::size_t>(a)]++;
          deg[static_cast<std::size_t>(b)]++;
          if (deg[0] <= 2 && deg[1] <= 2) {
            pick.push_back(static_cast<int>(p));
            rec(p);
            pick.pop_back();
          }
          deg[static_cast<std::size_t>(a)]--;
          deg[static_cast<std::size_t>(b)]--;
        }
      };
      rec(0);
      if (stop) return;
    }
  }
}

}  // namespace

TransitionTables derive_transition_tables(int max_edges) {
  constexpr std::size_t kGraphsPerType = 3, kRepsPerGraph = 4;
  std::array<std::vector<Witness>, kPedTypes> pool;
  std::array<std::size_t, kPedTypes> graphs_seen{};
  int level_done = 0;
  for_each_marked_graph(max_edges, [&](const Graph& g) {
    const int m = g.edge_count();
    if (m > level_done) {
      bool full = true;
      for (int i = 0; i < kPedTypes; ++i) full = full && graphs_seen[static_cast<std::size_t>(i)] >= kGraphsPerType;
      if (full) return false;
      level_done = m;
    }
    std::array<std::vector<Witness>, kPedTypes> found;
    int idx = 0;
    for_each_embedding(g, true, [&](const EmbeddingRep& rep) {
      ++idx;
      const FaceSet fs = trace_faces(g, rep);
      const int type = classify_ped(g, rep, fs, 0, 1);
      auto& f = found[static_cast<std::size_t>(type)];
      if (f.size() < kRepsPerGraph)
        f.push_back({g, 0, 1, rep, 2 - g.vertex_count() + g.edge_count() - fs.faces, type,
                     compact(g) + " #" + std::to_string(idx - 1)});
    });
    for (int i = 0; i < kPedTypes; ++i) {
      const auto k = static_cast<std::size_t>(i);
      if (found[k].empty() || graphs_seen[k] >= kGraphsPerType) continue;
      ++graphs_seen[k];
      pool[k].insert(pool[k].end(), found[k].begin(), found[k].end());
    }
    return true;
  });

  TransitionTables tabs;
  tabs.witnesses.resize(kPedTypes);
  for (int i = 0; i < kPedTypes; ++i) {
    const auto& p = pool[static_cast<std::size_t>(i)];
    if (p.empty()) {
      tabs.conflicts.push_back(std::string("no witness of type ") + ped_type_name(i));
      continue;
    }
    tabs.witnesses[static_cast<std::size_t>(i)] = p.front().label;
  }
  for (int a = 0; a < kPedTypes; ++a) {
    for (int b = 0; b < kPedTypes; ++b) {
      const auto& pa = pool[static_cast<std::size_t>(a)];
      const auto& pb = pool[static_cast<std::size_t>(b)];
      if (pa.empty() || pb.empty()) continue;
      auto& entry = tabs.amal[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      entry = merge_transitions(pa.front(), pb.front());
      for (const auto& wa : pa)
        for (const auto& wb : pb) {
          ++tabs.observations;
          auto got = merge_transitions(wa, wb);
          if (got != entry)
            tabs.conflicts.push_back(std::string(ped_type_name(a)) + "*" + ped_type_name(b) + ": " +
                                     transitions_str(got) + " (from " + wa.label + " | " + wb.label + ") vs " +
                                     transitions_str(entry));
        }
    }
  }
  for (int a = 0; a < kPedTypes; ++a) {
    const auto& pa = pool[static_cast<std::size_t>(a)];
    if (pa.empty()) continue;
    auto& h = tabs.close[static_cast<std::size_t>(a)];
    h = closure_histogram(pa.front());
    for (const auto& w : pa) {
      ++tabs.observations;
      auto got = closure_histogram(w);
      if (got != h)
        tabs.conflicts.push_back(std::string("close ") + ped_type_name(a) + ": " + hist_str(got) + " (from " +
                                 w.label + ") vs " + hist_str(h));
    }
  }
  return tabs;
}

// ---------------------------------------------------------------------------
// Printed tables. Block = right type, row = left type; entries "mult type shift".

namespace {

const char* const kPrinted[kPedTypes][kPedTypes] = {
    // right dd0
    {"4 dd0 0, 2 dd0 2", "6 dd0 0", "4 sd0 0, 2 sd0 2", "6 sd0 0", "4 dd0 0, 2 dd0 2", "4 dd0 0, 2 dd0 2",
     "6 dd0 0", "4 sd0 0, 2 sd0 2", "6 sd0 0", "4 sd0 0, 2 dd0 0"},
    // right ds0
    {"4 ds0 0, 2 ds0 2", "6 ds0 0", "4 ss0 0, 2 ss0 2", "6 ss0 0", "4 ds0 0, 2 ds0 2", "4 ds0 0, 2 ds0 2",
     "6 ds0 0", "4 ss0 0, 2 ss0 2", "6 ss0 0", "4 ss0 0, 2 ds0 0"},
    // right sd0
    {"6 dd0 0", "6 dd0 0", "6 sd0 0", "6 sd0 0", "6 dd0 0", "6 dd0 0", "6 dd0 0", "6 sd0 0", "6 sd0 0", "6 sd0 0"},
    // right ss0
    {"6 ds0 0", "6 ds0 0", "6 ss0 0", "6 ss0 0", "6 ds0 0", "6 ds0 0", "6 ds0 0", "6 ss0 0", "6 ss0 0", "6 ss0 0"},
    // right dd'
    {"4 dd0 0, 2 dd0 2", "6 dd0 0", "4 sd0 0, 2 sd0 2", "6 sd0 0", "1 dd' 0, 3 dd0 0, 2 dd' 2",
     "2 dd0 0, 2 dd' 0, 2 sd' 2", "3 dd0 0, 3 dd' 0", "1 sd' 0, 3 sd0 0, 2 sd0 2", "3 sd0 0, 3 sd' 0",
     "2 sd0 0, 2 sd' 0, 2 dd0 0"},
    // right dd''
    {"4 dd0 0, 2 ds0 2", "6 dd0 0", "4 sd0 0, 2 ss0 2", "6 sd0 0", "2 dd0 0, 2 dd' 0, 2 ds' 2",
     "4 dd' 0, 2 ss2 2", "6 dd' 0", "2 sd' 0, 2 sd0 0, 2 ss1 2", "6 sd' 0", "4 sd' 0, 2 dd'' 0"},
    // right ds'
    {"4 ds0 0, 2 ds0 2", "6 ds0 0", "4 ss0 0, 2 ss0 2", "6 ss0 0", "1 ds' 0, 3 ds0 0, 2 ds' 2",
     "2 ds0 0, 2 ds' 0, 2 ss1 2", "3 ds0 0, 3 ds' 0", "2 ss' 0, 2 ss0 0, 2 ss1 2", "6 sd' 0", "3 ss0 0, 3 ss1 0"},
    // right sd'
    {"6 dd0 0", "6 dd0 0", "6 sd0 0", "6 sd0 0", "3 dd0 0, 3 dd' 0", "6 dd' 0", "6 sd' 0", "6 dd' 0", "6 sd' 0",
     "6 sd' 0"},
    // right ss1
    {"6 ds0 0", "6 ds0 0", "6 ss0 0", "6 ss0 0", "3 ds0 0, 3 ds' 0", "6 ds' 0", "6 ds' 0", "3 ss0 0, 3 ss1 0",
     "6 ss1 0", "6 ss1 0"},
    // right ss2
    {"4 ds0 0, 2 dd0 0", "6 ds0 0", "4 ss0 0, 2 sd0 0", "6 ss0 0", "2 ds' 0, 2 ds0 0, 2 dd' 0", "4 ds' 0, 2 dd' 0",
     "6 ds' 0", "2 ss' 0, 2 ss0 0, 2 sd' 0", "6 ss1 0", "4 ss1 0, 2 ss2 0"},
};

const std::map<int, int> kPrintedClose[kPedTypes] = {
    {{2, 32}, {3, 32}, {4, 80}},
    {{2, 50}, {3, 48}, {4, 46}},
    {{2, 50}, {3, 48}, {4, 46}},
    {{2, 72}, {3, 72}},
    {{0, 2}, {1, 6}, {2, 52}, {3, 44}, {4, 40}},
    {{0, 6}, {1, 16}, {2, 70}, {3, 52}},
    {{0, 6}, {1, 18}, {2, 72}, {3, 48}},
    {{0, 6}, {1, 18}, {2, 72}, {3, 48}},
    {{0, 18}, {1, 54}, {2, 72}},
    {{0, 20}, {1, 56}, {2, 68}},
};

std::vector<Transition> parse_entry(const std::string& text) {
  std::map<std::pair<int, int>, int> acc;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::stringstream is(item);
    int mult = 0, shift = 0;
    std::string name;
    is >> mult >> name >> shift;
    acc[{ped_type_from_name(name), shift}] += mult;
  }
  std::vector<Transition> out;
  for (auto [k, c] : acc) out.push_back({k.first, k.second, c});
  return out;
}

}  // namespace

TransitionTables printed_transition_tables() {
  TransitionTables t;
  for (int b = 0; b < kPedTypes; ++b)
    for (int a = 0; a < kPedTypes; ++a)
      t.amal[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = parse_entry(kPrinted[b][a]);
  for (int a = 0; a < kPedTypes; ++a) t.close[static_cast<std::size_t>(a)] = kPrintedClose[a];
  t.witnesses.assign(kPedTypes, "printed");
  return t;
}

std::array<LaurentPoly, kPedTypes> printed_closure_column() {
  // The ss0 entry is printed as 72x^2 + 72x^2.
  return {LaurentPoly{0, 0, 32, 32, 80}, LaurentPoly{0, 0, 50, 48, 46}, LaurentPoly{0, 0, 50, 48, 46},
          LaurentPoly{0, 0, 144},        LaurentPoly{2, 6, 52, 44, 40}, LaurentPoly{6, 16, 70, 52},
          LaurentPoly{6, 18, 72, 48},    LaurentPoly{6, 18, 72, 48},    LaurentPoly{18, 54, 72},
          LaurentPoly{20, 56, 68}};
}

PolyMatrix printed_transfer_matrix() {
  using L = LaurentPoly;
  const L z;
  return {
      {4, L{0, 4, 4}, z, z, z, z, z, z, z, z},
      {6, L{0, 6}, z, z, z, z, z, z, z, z},
      {z, z, 4, L{0, 4, 4}, z, z, z, z, z, z},
      {z, z, 6, L{0, 6}, z, z, z, z, z, z},
      {2, L{0, 2}, z, z, 2, z, L{0, 2, 4}, z, z, z},
      {z, z, z, z, 4, z, L{0, 4}, z, z, L{0, 0, 4}},
      {z, z, z, z, 6, z, L{0, 6}, z, z, z},
      {z, z, 2, L{0, 2}, z, z, z, 2, L{0, 2, 4}, z},
      {z, z, z, z, z, z, z, 6, L{0, 6}, z},
      {z, z, z, z, z, 2, z, 4, L{0, 4}, L{0, 2}},
  };
}

std::string diff_tables(const TransitionTables& printed, const TransitionTables& derived) {
  std::ostringstream out;
  int amal_diff = 0, close_diff = 0;
  for (int b = 0; b < kPedTypes; ++b)
    for (int a = 0; a < kPedTypes; ++a) {
      const auto& p = printed.amal[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      const auto& d = derived.amal[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (p == d) continue;
      ++amal_diff;
      out << ped_type_name(a) << " * " << ped_type_name(b) << ": printed " << transitions_str(p) << " | derived "
          << transitions_str(d) << "\n";
    }
  for (int a = 0; a < kPedTypes; ++a) {
    const auto& p = printed.close[static_cast<std::size_t>(a)];
    const auto& d = derived.close[static_cast<std::size_t>(a)];
    if (p == d) continue;
    ++close_diff;
    out << "close " << ped_type_name(a) << ": printed " << hist_str(p) << " | derived " << hist_str(d) << "\n";
  }
  std::ostringstream head;
  head << "amalgamation entries differing: " << amal_diff << " of " << kPedTypes * kPedTypes
       << "\nclosure rows differing: " << close_diff << " of " << kPedTypes << "\n";
  return head.str() + out.str();
}

std::string TransitionTables::to_json() const {
  nlohmann::ordered_json j;
  nlohmann::ordered_json am = nlohmann::ordered_json::object();
  for (int a = 0; a < kPedTypes; ++a) {
    nlohmann::ordered_json row = nlohmann::ordered_json::object();
    for (int b = 0; b < kPedTypes; ++b) {
      nlohmann::ordered_json list = nlohmann::ordered_json::array();
      for (const auto& t : amal[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
        list.push_back({t.target >= 0 ? ped_type_name(t.target) : "?", t.shift, t.mult});
      row[ped_type_name(b)] = list;
    }
    am[ped_type_name(a)] = row;
  }
  j["amalgamation"] = am;
  nlohmann::ordered_json cl = nlohmann::ordered_json::object();
  for (int a = 0; a < kPedTypes; ++a) {
    nlohmann::ordered_json h = nlohmann::ordered_json::object();
    for (auto [k, c] : close[static_cast<std::size_t>(a)]) h[std::to_string(k)] = c;
    cl[ped_type_name(a)] = h;
  }
  j["closure"] = cl;
  j["witnesses"] = witnesses;
  j["conflicts"] = conflicts;
  j["observations"] = observations;
  return j.dump(2);
}

PEdVector ped_compose(const PEdVector& a, const PEdVector& b, const TransitionTables& tabs) {
  PEdVector out;
  for (int i = 0; i < kPedTypes; ++i) {
    if (a[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < kPedTypes; ++j) {
      if (b[static_cast<std::size_t>(j)].is_zero()) continue;
      const LaurentPoly ab = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
      for (const auto& t : tabs.amal[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        if (t.target >= 0) out[static_cast<std::size_t>(t.target)] += ab.shifted(t.shift) * Rational(t.mult);
    }
  }
  return out;
}

std::array<LaurentPoly, kPedTypes> closure_column(const TransitionTables& tabs) {
  std::array<LaurentPoly, kPedTypes> c;
  for (int a = 0; a < kPedTypes; ++a)
    for (auto [k, n] : tabs.close[static_cast<std::size_t>(a)]) c[static_cast<std::size_t>(a)] += xpow(k, n);
  return c;
}

LaurentPoly ped_close(const PEdVector& v, const std::array<LaurentPoly, kPedTypes>& column) {
  LaurentPoly s;
  for (int a = 0; a < kPedTypes; ++a) s += v[static_cast<std::size_t>(a)] * column[static_cast<std::size_t>(a)];
  return s;
}

LaurentPoly ped_close(const PEdVector& v, const TransitionTables& tabs) { return ped_close(v, closure_column(tabs)); }

PolyMatrix ped_transfer_matrix(const PEdVector& h, const TransitionTables& tabs) {
  PolyMatrix m(kPedTypes, std::vector<LaurentPoly>(kPedTypes));
  for (int a = 0; a < kPedTypes; ++a)
    for (int b = 0; b < kPedTypes; ++b) {
      if (h[static_cast<std::size_t>(b)].is_zero()) continue;
      for (const auto& t : tabs.amal[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
        if (t.target >= 0)
          m[static_cast<std::size_t>(a)][static_cast<std::size_t>(t.target)] +=
              h[static_cast<std::size_t>(b)].shifted(t.shift) * Rational(t.mult);
    }
  return m;
}

SeriesPrefix ped_series(const TransitionTables& tabs, int n_max) {
  SeriesPrefix out;
  if (n_max < 1) return out;
  out.push_back(euler_distribution_oracle(doubled_cycle(1)).euler.poly());
  const PEdVector h = ped_vector_oracle(doubled_path(2), 0, 1);
  const auto col = closure_column(tabs);
  PEdVector v = h;
  for (int n = 2; n <= n_max; ++n) {
    out.push_back(ped_close(v, col));
    v = ped_compose(v, h, tabs);
  }
  return out;
}

Graph add_parallel_pair(const Graph& g, int s, int t) {
  auto e = g.edges();
  e.emplace_back(s, t);
  e.emplace_back(s, t);
  return Graph(g.vertex_count(), e);
}

// ---------------------------------------------------------------------------

std::vector<LaurentPoly> cn2_recurrence_coeffs(CnRecurrence which) {
  using L = LaurentPoly;
  switch (which) {
    case CnRecurrence::genus6:
      return {L{6}, L{-8, 28}, L{0, -96}, L{0, 32, -240}, L{0, 0, 288}, L{0, 0, 0, 576}};
    case CnRecurrence::euler10:
      return {
          L{12, 26},
          L{-52, -240, -160},
          L{96, 728, 768, -816},
          L{-64, -768, -208, 8640, 8304},
          L{0, 128, -1920, -21216, -29376, 16416},
          L{0, 0, 512, 9216, -4992, -165888, -155520},
          L{0, 0, 0, 0, 18432, 179712, 165888, -359424},
          L{0, 0, 0, 0, 0, 0, 239616, 1327104, 884736},
          L{0, 0, 0, 0, 0, 0, 0, 0, 1327104, 3317760},
          L{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2654208},
      };
    case CnRecurrence::euler6:
      return {
          L{6, 14},
          L{-8, -48, -4},
          L{0, 16, -120, -408},
          L{0, 0, 64, 576, -96},
          L{0, 0, 0, 0, 1152, 3456},
          L{0, 0, 0, 0, 0, 0, 4608},
      };
  }
  return {};
}

std::vector<LaurentPoly> cn2_printed_initial(CnRecurrence which) {
  using L = LaurentPoly;
  if (which == CnRecurrence::genus6)
    return {L{4, 2}, L{6, 30}, L{8, 136, 72}, L{16, 440, 840}, L{32, 1472, 4832, 1440}, L{64, 5184, 22496, 18912}};
  return {
      L{4, 10, 10},
      L{6, 36, 126, 120},
      L{8, 84, 576, 1444, 1344},
      L{16, 208, 1944, 8128, 17960, 13216},
      L{32, 512, 6304, 35792, 120224, 208272, 126528},
      L{64, 1216, 20160, 145472, 634528, 1650112, 2334112, 1186304},
      L{128, 2816, 64768, 573696, 3042048, 10201152, 21506560, 25230656, 11041792},
      L{256, 6400, 213504, 2261504, 14003712, 56356352, 152367488, 266558464, 266050176, 102145536},
      L{512, 14336, 730624, 9050112, 63676416, 294905856, 950924288, 2133587200, 3176284672, 2748807424,
        941579264},
      L{1024, 31744, 2601984, 36924416, 289603584, 1503739904, 5549844480, 14842849280, 28366170624,
        36636175360, 27954014720, 8652771328},
  };
}

SeriesPrefix cn2_recurrences(CnRecurrence which, int n_max, const std::vector<LaurentPoly>& init) {
  const auto b = cn2_recurrence_coeffs(which);
  SeriesPrefix start = init.empty() ? cn2_printed_initial(which) : init;
  if (start.size() < b.size()) throw std::invalid_argument("cn2_recurrences: too few initial values");
  if (static_cast<int>(start.size()) > n_max) start.resize(static_cast<std::size_t>(std::max(n_max, 0)));
  if (static_cast<int>(start.size()) < static_cast<int>(b.size())) return start;
  return extend_series(b, start, n_max);
}

bool satisfies_recurrence(CnRecurrence which, const SeriesPrefix& s, int* first_bad) {
  const auto b = cn2_recurrence_coeffs(which);
  for (std::size_t n = b.size(); n < s.size(); ++n) {
    LaurentPoly acc;
    for (std::size_t j = 1; j <= b.size(); ++j) acc += b[j - 1] * s[n - j];
    if (acc != s[n]) {
      if (first_bad) *first_bad = static_cast<int>(n) + 1;
      return false;
    }
  }
  return true;
}

}  // namespace gdist
