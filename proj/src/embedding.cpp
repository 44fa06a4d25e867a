#include "gdist/embedding.hpp"

#include <algorithm>
#include <deque>
#include <thread>

namespace gdist {

bool EmbeddingRep::orientable() const {
  return std::none_of(twist.begin(), twist.end(), [](std::uint8_t t) { return t != 0; });
}

std::vector<int> predecessors(const std::vector<int>& succ) {
  std::vector<int> pred(succ.size());
  for (std::size_t d = 0; d < succ.size(); ++d) pred[static_cast<std::size_t>(succ[d])] = static_cast<int>(d);
  return pred;
}

EmbeddingRep make_rep(const Graph& g, const std::vector<std::vector<int>>& rotation,
                      const std::vector<std::uint8_t>& twist) {
  if (static_cast<int>(rotation.size()) != g.vertex_count())
    throw std::invalid_argument("rotation: wrong number of vertices");
  EmbeddingRep rep;
  rep.succ.assign(static_cast<std::size_t>(g.dart_count()), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto cyc = rotation[static_cast<std::size_t>(v)];
    auto want = g.darts_at(v);
    auto sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != want) throw std::invalid_argument("rotation at vertex " + std::to_string(v) + " is not a permutation of its darts");
    for (std::size_t i = 0; i < cyc.size(); ++i)
      rep.succ[static_cast<std::size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
  }
  rep.twist = twist;
  rep.twist.resize(static_cast<std::size_t>(g.edge_count()), 0);
  return rep;
}

namespace {

inline int next_state(int s, const std::vector<int>& succ, const std::vector<int>& pred,
                      const std::vector<std::uint8_t>& twist) {
  const int d = (s >> 1) ^ 1;
  const int f = (s & 1) ^ twist[static_cast<std::size_t>(s >> 2)];
  return 2 * (f ? pred[static_cast<std::size_t>(d)] : succ[static_cast<std::size_t>(d)]) + f;
}

// Reverse traversal of the same face.
inline int pair_state(int s, const std::vector<std::uint8_t>& twist) {
  const int d = s >> 1;
  return 2 * (d ^ 1) + ((s & 1) ^ 1 ^ twist[static_cast<std::size_t>(d >> 1)]);
}

}  // namespace

FaceSet trace_faces(const Graph& g, const EmbeddingRep& rep) {
  const int nd = g.dart_count();
  if (static_cast<int>(rep.succ.size()) != nd || static_cast<int>(rep.twist.size()) != g.edge_count())
    throw std::invalid_argument("trace_faces: rep does not match graph");
  std::vector<char> seen(static_cast<std::size_t>(nd), 0);
  for (int d = 0; d < nd; ++d) {
    int s = rep.succ[static_cast<std::size_t>(d)];
    if (s < 0 || s >= nd || seen[static_cast<std::size_t>(s)] || g.dart_vertex(s) != g.dart_vertex(d))
      throw std::invalid_argument("trace_faces: malformed rotation");
    seen[static_cast<std::size_t>(s)] = 1;
  }
  const auto pred = predecessors(rep.succ);
  FaceSet fs;
  fs.orbit_of.assign(static_cast<std::size_t>(2 * nd), -1);
  for (int s0 = 0; s0 < 2 * nd; ++s0) {
    if (fs.orbit_of[static_cast<std::size_t>(s0)] >= 0) continue;
    const int id = static_cast<int>(fs.orbits.size());
    std::vector<int> walk;
    int s = s0;
    do {
      fs.orbit_of[static_cast<std::size_t>(s)] = id;
      walk.push_back(s);
      s = next_state(s, rep.succ, pred, rep.twist);
    } while (s != s0);
    fs.orbits.push_back(std::move(walk));
  }
  const std::size_t no = fs.orbits.size();
  fs.face_of_orbit.assign(no, -1);
  fs.self_paired.assign(no, 0);
  for (std::size_t o = 0; o < no; ++o) {
    if (fs.face_of_orbit[o] >= 0) continue;
    const int partner = fs.orbit_of[static_cast<std::size_t>(pair_state(fs.orbits[o][0], rep.twist))];
    fs.face_of_orbit[o] = fs.faces;
    fs.face_of_orbit[static_cast<std::size_t>(partner)] = fs.faces;
    fs.self_paired[o] = static_cast<std::size_t>(partner) == o;
    ++fs.faces;
  }
  return fs;
}

int face_count(const std::vector<int>& succ, const std::vector<int>& pred,
               const std::vector<std::uint8_t>& twist, std::vector<int>& mark) {
  const int nd = static_cast<int>(succ.size());
  bool plain = std::none_of(twist.begin(), twist.end(), [](std::uint8_t t) { return t != 0; });
  if (plain) {
    mark.assign(static_cast<std::size_t>(nd), 0);
    int cycles = 0;
    for (int d = 0; d < nd; ++d) {
      if (mark[static_cast<std::size_t>(d)]) continue;
      ++cycles;
      int e = d;
      do {
        mark[static_cast<std::size_t>(e)] = 1;
        e = succ[static_cast<std::size_t>(e ^ 1)];
      } while (e != d);
    }
    return cycles;
  }
  mark.assign(static_cast<std::size_t>(2 * nd), -1);
  int orbits = 0, self = 0;
  for (int s0 = 0; s0 < 2 * nd; ++s0) {
    if (mark[static_cast<std::size_t>(s0)] >= 0) continue;
    int s = s0;
    do {
      mark[static_cast<std::size_t>(s)] = orbits;
      s = next_state(s, succ, pred, twist);
    } while (s != s0);
    if (mark[static_cast<std::size_t>(pair_state(s0, twist))] == orbits) ++self;
    ++orbits;
  }
  return (orbits + self) / 2;
}

int face_count(const Graph& g, const EmbeddingRep& rep) {
  (void)g;
  std::vector<int> scratch;
  return face_count(rep.succ, predecessors(rep.succ), rep.twist, scratch);
}

int euler_genus(const Graph& g, const EmbeddingRep& rep) {
  return 2 * g.components() - g.vertex_count() + g.edge_count() - face_count(g, rep);
}

std::vector<char> tree_edges(const Graph& g) {
  std::vector<char> tree(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    std::deque<int> q{root};
    seen[static_cast<std::size_t>(root)] = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop_front();
      // Incident edges in increasing index; darts_at is sorted, so edges are too.
      for (int d : g.darts_at(v)) {
        const int w = g.dart_vertex(d ^ 1);
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        tree[static_cast<std::size_t>(d >> 1)] = 1;
        q.push_back(w);
      }
    }
  }
  return tree;
}

std::vector<int> cotree_edges(const Graph& g) {
  auto tree = tree_edges(g);
  std::vector<int> out;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!tree[static_cast<std::size_t>(e)]) out.push_back(e);
  return out;
}

BudgetExceeded::BudgetExceeded(const BigInt& need, const BigInt& budget)
    : std::runtime_error("budget exceeded: " + need.get_str() + " embeddings required, budget " +
                         budget.get_str() + " (raise with --budget)"),
      required(need) {}

BigInt rotation_system_count(const Graph& g) {
  BigInt n = 1;
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int k = 2; k < g.degree(v); ++k) n *= k;
  return n;
}

BigInt embedding_count(const Graph& g, bool twisted) {
  BigInt n = rotation_system_count(g);
  if (twisted) n <<= static_cast<mp_bitcnt_t>(cotree_edges(g).size());
  return n;
}

namespace {

struct Space {
  std::vector<std::vector<std::vector<int>>> rots;  // per vertex, cyclic orders
  std::vector<std::uint64_t> radix;
  std::vector<int> cotree;
  std::uint64_t nrot = 1;
  std::uint64_t nmask = 1;
};

Space build_space(const Graph& g, bool twisted, const OracleOptions& opts) {
  const BigInt need = embedding_count(g, twisted);
  if (need > BigInt(std::to_string(opts.budget))) throw BudgetExceeded(need, BigInt(std::to_string(opts.budget)));
  Space sp;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& ds = g.darts_at(v);
    std::vector<std::vector<int>> list;
    if (ds.empty()) {
      list.push_back({});
    } else {
      std::vector<int> rest(ds.begin() + 1, ds.end());
      do {
        std::vector<int> cyc{ds[0]};
        cyc.insert(cyc.end(), rest.begin(), rest.end());
        list.push_back(std::move(cyc));
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
    sp.radix.push_back(list.size());
    sp.nrot *= list.size();
    sp.rots.push_back(std::move(list));
  }
  if (twisted) {
    sp.cotree = cotree_edges(g);
    sp.nmask = std::uint64_t{1} << sp.cotree.size();
  }
  return sp;
}

// Walks rotation indices [lo, hi), vertex 0 most significant.
template <class Fn>
void walk_rotations(const Graph& g, const Space& sp, std::uint64_t lo, std::uint64_t hi, Fn&& fn) {
  if (lo >= hi) return;
  const std::size_t nv = sp.rots.size();
  std::vector<std::uint64_t> digit(nv);
  std::uint64_t x = lo;
  for (std::size_t v = nv; v-- > 0;) {
    digit[v] = x % sp.radix[v];
    x /= sp.radix[v];
  }
  std::vector<int> succ(static_cast<std::size_t>(g.dart_count())), pred(succ.size());
  auto apply = [&](std::size_t v) {
    const auto& cyc = sp.rots[v][digit[v]];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      succ[static_cast<std::size_t>(a)] = b;
      pred[static_cast<std::size_t>(b)] = a;
    }
  };
  for (std::size_t v = 0; v < nv; ++v) apply(v);
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    fn(succ, pred);
    for (std::size_t v = nv; v-- > 0;) {
      if (++digit[v] < sp.radix[v]) {
        apply(v);
        break;
      }
      digit[v] = 0;
      apply(v);
    }
  }
}

int worker_count(const OracleOptions& opts, std::uint64_t work) {
  int w = opts.workers > 0 ? opts.workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (work < 4096) w = 1;
  return static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(w), work ? work : 1));
}

// Per-worker histograms indexed by [orientable][face count].
using Hist = std::vector<std::vector<std::uint64_t>>;

Hist face_histogram(const Graph& g, bool twisted, const OracleOptions& opts) {
  const Space sp = build_space(g, twisted, opts);
  const int maxf = g.dart_count() + 2;
  const int nw = worker_count(opts, sp.nrot * sp.nmask);
  std::vector<Hist> parts(static_cast<std::size_t>(nw), Hist(2, std::vector<std::uint64_t>(static_cast<std::size_t>(maxf), 0)));
  auto job = [&](int w) {
    const std::uint64_t lo = sp.nrot * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(nw);
    const std::uint64_t hi = sp.nrot * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(nw);
    Hist& h = parts[static_cast<std::size_t>(w)];
    std::vector<std::uint8_t> twist(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<int> scratch;
    walk_rotations(g, sp, lo, hi, [&](const std::vector<int>& succ, const std::vector<int>& pred) {
      for (std::uint64_t m = 0; m < sp.nmask; ++m) {
        for (std::size_t i = 0; i < sp.cotree.size(); ++i)
          twist[static_cast<std::size_t>(sp.cotree[i])] = static_cast<std::uint8_t>((m >> i) & 1u);
        const int f = face_count(succ, pred, twist, scratch);
        ++h[m == 0 ? 1 : 0][static_cast<std::size_t>(f)];
      }
    });
  };
  if (nw == 1) {
    job(0);
  } else {
    std::vector<std::thread> th;
    for (int w = 0; w < nw; ++w) th.emplace_back(job, w);
    for (auto& t : th) t.join();
  }
  Hist total(2, std::vector<std::uint64_t>(static_cast<std::size_t>(maxf), 0));
  for (const auto& p : parts)
    for (int o = 0; o < 2; ++o)
      for (int f = 0; f < maxf; ++f) total[static_cast<std::size_t>(o)][static_cast<std::size_t>(f)] += p[static_cast<std::size_t>(o)][static_cast<std::size_t>(f)];
  return total;
}

void bump(std::vector<BigInt>& v, int e, std::uint64_t n) {
  if (n == 0) return;
  if (e < 0) throw std::logic_error("negative genus: graph must be connected");
  if (static_cast<int>(v.size()) <= e) v.resize(static_cast<std::size_t>(e + 1), BigInt(0));
  v[static_cast<std::size_t>(e)] += BigInt(std::to_string(n));
}

}  // namespace

void for_each_embedding(const Graph& g, bool twisted, const std::function<void(const EmbeddingRep&)>& fn,
                        const OracleOptions& opts) {
  const Space sp = build_space(g, twisted, opts);
  EmbeddingRep rep;
  rep.twist.assign(static_cast<std::size_t>(g.edge_count()), 0);
  walk_rotations(g, sp, 0, sp.nrot, [&](const std::vector<int>& succ, const std::vector<int>&) {
    rep.succ = succ;
    for (std::uint64_t m = 0; m < sp.nmask; ++m) {
      for (std::size_t i = 0; i < sp.cotree.size(); ++i)
        rep.twist[static_cast<std::size_t>(sp.cotree[i])] = static_cast<std::uint8_t>((m >> i) & 1u);
      fn(rep);
    }
  });
}

LaurentPoly EmbeddingDistribution::poly() const {
  std::vector<Rational> c;
  for (const auto& b : coeffs) c.emplace_back(b);
  return LaurentPoly(0, c);
}

BigInt EmbeddingDistribution::total() const {
  BigInt s = 0;
  for (const auto& b : coeffs) s += b;
  return s;
}

std::string kind_name(DistKind k) {
  switch (k) {
    case DistKind::genus: return "genus";
    case DistKind::euler: return "euler";
    case DistKind::crosscap: return "crosscap";
  }
  return "?";
}

EmbeddingDistribution genus_distribution_oracle(const Graph& g, const OracleOptions& opts) {
  if (!g.connected()) throw std::invalid_argument("genus oracle needs a connected graph");
  const Hist h = face_histogram(g, false, opts);
  EmbeddingDistribution out{DistKind::genus, {}};
  const int base = 2 - g.vertex_count() + g.edge_count();
  for (std::size_t f = 0; f < h[1].size(); ++f) {
    if (!h[1][f]) continue;
    const int eg = base - static_cast<int>(f);
    if (eg % 2) throw std::logic_error("odd Euler genus for an orientable rep");
    bump(out.coeffs, eg / 2, h[1][f]);
  }
  return out;
}

EulerOracleResult euler_distribution_oracle(const Graph& g, const OracleOptions& opts) {
  if (!g.connected()) throw std::invalid_argument("Euler oracle needs a connected graph");
  const Hist h = face_histogram(g, true, opts);
  EulerOracleResult r;
  r.euler.kind = DistKind::euler;
  r.orientable.kind = DistKind::euler;
  r.crosscap.kind = DistKind::crosscap;
  const int base = 2 - g.vertex_count() + g.edge_count();
  for (int o = 0; o < 2; ++o)
    for (std::size_t f = 0; f < h[static_cast<std::size_t>(o)].size(); ++f) {
      const std::uint64_t n = h[static_cast<std::size_t>(o)][f];
      if (!n) continue;
      const int eg = base - static_cast<int>(f);
      bump(r.euler.coeffs, eg, n);
      bump(o ? r.orientable.coeffs : r.crosscap.coeffs, eg, n);
    }
  return r;
}

}  // namespace gdist
