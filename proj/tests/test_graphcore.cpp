#include "gdist/embedding.hpp"
#include "gdist/graph.hpp"
#include "gdist/verify.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>

using namespace gdist;

namespace {

// Independent reference: every rotation (all cyclic orders) and every one of the
// 2^|E| twist vectors; faces are components of the flag graph built from the
// corner and edge involutions. Each embedding class appears 2^(|V|-1) times.
struct Reference {
  std::map<int, long> genus;  // by genus
  std::map<int, long> euler;  // by Euler genus
};

int find(std::vector<int>& p, int x) {
  while (p[static_cast<std::size_t>(x)] != x) x = p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
  return x;
}

int flag_faces(const Graph& g, const std::vector<int>& succ, unsigned twist_mask) {
  const int nf = 2 * g.dart_count();
  std::vector<int> p(static_cast<std::size_t>(nf));
  std::iota(p.begin(), p.end(), 0);
  auto join = [&](int a, int b) { p[static_cast<std::size_t>(find(p, a))] = find(p, b); };
  for (int d = 0; d < g.dart_count(); ++d) {
    const int s = succ[static_cast<std::size_t>(d)];
    join(2 * d + 1, 2 * s);  // corner between d and its successor
    const unsigned tw = (twist_mask >> (d / 2)) & 1u;
    for (int s = 0; s < 2; ++s) join(2 * d + s, 2 * (d ^ 1) + static_cast<int>(static_cast<unsigned>(s) ^ 1u ^ tw));
  }
  int comps = 0;
  for (int f = 0; f < nf; ++f) comps += find(p, f) == f;
  return comps;
}

Reference reference(const Graph& g) {
  Reference r;
  const int V = g.vertex_count(), E = g.edge_count();
  std::vector<std::vector<int>> tails(static_cast<std::size_t>(V));
  for (int v = 0; v < V; ++v) {
    const auto& d = g.darts_at(v);
    if (d.size() > 1) tails[static_cast<std::size_t>(v)].assign(d.begin() + 1, d.end());
  }
  std::vector<int> succ(static_cast<std::size_t>(g.dart_count()));
  const long flips = 1L << (V - 1);
  std::function<void(int)> rec = [&](int v) {
    if (v == V) {
      for (int u = 0; u < V; ++u) {
        const auto& d = g.darts_at(u);
        if (d.empty()) continue;
        std::vector<int> cyc{d[0]};
        cyc.insert(cyc.end(), tails[static_cast<std::size_t>(u)].begin(), tails[static_cast<std::size_t>(u)].end());
        for (std::size_t i = 0; i < cyc.size(); ++i) succ[static_cast<std::size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
      }
      for (unsigned m = 0; m < (1u << E); ++m) {
        const int eg = 2 - V + E - flag_faces(g, succ, m);
        r.euler[eg] += 1;
        if (m == 0) r.genus[eg / 2] += flips;
      }
      return;
    }
    auto& t = tails[static_cast<std::size_t>(v)];
    std::sort(t.begin(), t.end());
    do rec(v + 1);
    while (std::next_permutation(t.begin(), t.end()));
  };
  rec(0);
  for (auto& [k, c] : r.genus) c /= flips;
  for (auto& [k, c] : r.euler) c /= flips;
  return r;
}

LaurentPoly as_poly(const std::map<int, long>& m) {
  std::map<int, Rational> t;
  for (auto [k, c] : m)
    if (c) t[k] = c;
  return LaurentPoly::from_terms(t);
}

}  // namespace

TEST(Graph, BuildCounts) {
  Graph b1(1, {{0, 0}});
  EXPECT_EQ(b1.dart_count(), 2);
  EXPECT_EQ(b1.betti(), 1);
  Graph d3(2, {{0, 1}, {0, 1}, {0, 1}});
  EXPECT_EQ(d3.degree(0), 3);
  EXPECT_EQ(d3.degree(1), 3);
  EXPECT_EQ(d3.betti(), 2);
  EXPECT_EQ(genus_distribution_oracle(doubled_cycle(2)).total(), 36);
}

TEST(Graph, DartConvention) {
  Graph g(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(g.dart_vertex(0), 0);
  EXPECT_EQ(g.dart_vertex(1), 1);
  EXPECT_EQ(g.dart_vertex(3), 2);
  EXPECT_EQ(g.darts_at(1), (std::vector<int>{1, 2}));
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(Graph(2, {{0, 2}}), std::invalid_argument);
  EXPECT_THROW(parse_graph_text("v 2\ne 0 5\n"), std::invalid_argument);
  EXPECT_THROW(build_named("nonsense", {1}), std::invalid_argument);
}

TEST(Graph, Named) {
  const Graph c1 = build_named("doubled_cycle", {1});
  EXPECT_EQ(c1.vertex_count(), 1);
  EXPECT_EQ(c1.edge_count(), 2);
  EXPECT_EQ(c1.degree(0), 4);
  const Graph g33 = build_named("grid", {3, 3});
  EXPECT_EQ(g33.vertex_count(), 9);
  EXPECT_EQ(g33.edge_count(), 12);
  EXPECT_EQ(rotation_system_count(g33), 96);
  const Graph hl1 = build_named("half_open_ladder", {1});
  EXPECT_EQ(hl1.vertex_count(), 4);
  EXPECT_EQ(hl1.edge_count(), 3);
  EXPECT_EQ(hl1.betti(), 0);
}

TEST(Graph, BarAmalgamation) {
  const Graph b1 = bouquet(1);
  const Graph db = bar_amalgamate(b1, 0, b1, 0);
  EXPECT_EQ(db.vertex_count(), 2);
  EXPECT_EQ(db.edge_count(), 3);
  EXPECT_EQ(db.betti(), 2);
  const Graph k2 = path_graph(2);
  const Graph p4 = bar_amalgamate(k2, 1, k2, 0);
  EXPECT_EQ(p4.vertex_count(), 4);
  EXPECT_EQ(p4.edge_count(), 3);
  EXPECT_EQ(genus_distribution_oracle(p4).poly(), LaurentPoly(1));
}

TEST(Graph, BarRing) {
  const Marked hl1 = half_open_ladder_marked(1);
  const Graph ring = bar_ring({hl1, hl1});
  EXPECT_EQ(ring.vertex_count(), 8);
  EXPECT_EQ(ring.edge_count(), 8);
  EXPECT_EQ(genus_distribution_oracle(ring).poly(), LaurentPoly(1));
  const Graph one = bar_ring({Marked{path_graph(3), 0, 2}});
  EXPECT_EQ(one.edge_count(), 3);
  EXPECT_EQ(one.betti(), 1);
  const Graph sl = bar_ring({hl1, hl1, hl1});
  EXPECT_EQ(sl.vertex_count(), 12);
  EXPECT_EQ(sl.edge_count(), 12);
}

TEST(Graph, Amalgamation) {
  const Graph b1 = amalgamate(path_graph(2), nullptr, parse_gluing("0>1"));
  EXPECT_EQ(b1.vertex_count(), 1);
  EXPECT_EQ(b1.edge_count(), 1);
  GluingSpec cross = parse_gluing("1>0", false);
  const Graph p22 = doubled_path(2);
  const Graph p3 = amalgamate(p22, &p22, cross);
  EXPECT_EQ(p3.vertex_count(), 3);
  EXPECT_EQ(p3.edge_count(), 4);
  EXPECT_THROW(amalgamate(path_graph(2), nullptr, parse_gluing("0>0")), std::invalid_argument);
}

TEST(Graph, BlowUp) {
  const Graph p2 = blow_up(bouquet(1), {0});
  EXPECT_EQ(p2.vertex_count(), 2);
  EXPECT_EQ(p2.edge_count(), 1);
  const Graph star = blow_up(dipole(3), {0});
  EXPECT_EQ(star.vertex_count(), 4);
  EXPECT_EQ(star.edge_count(), 3);
  std::vector<int> deg;
  for (int v = 0; v < 4; ++v) deg.push_back(star.degree(v));
  std::sort(deg.begin(), deg.end());
  EXPECT_EQ(deg, (std::vector<int>{1, 1, 1, 3}));
}

TEST(Graph, Ears) {
  const Graph closed = attach_ear(path_graph(2), 0, EarKind::closed);
  EXPECT_EQ(closed.vertex_count(), 3);
  EXPECT_EQ(closed.edge_count(), 3);
  EXPECT_EQ(closed.betti(), 1);
  const Graph open = attach_ear(path_graph(2), 0, EarKind::open);
  EXPECT_EQ(open.vertex_count(), 4);
  EXPECT_EQ(open.edge_count(), 4);
  EXPECT_EQ(open.betti(), 1);
}

TEST(Graph, Swapping) {
  const Graph p3 = path_graph(3);
  const auto s = swapping(p3, parse_gluing("0>2"), {1});
  EXPECT_EQ(s.psi.size(), 1u);
  EXPECT_THROW(swapping(cycle_graph(3), parse_gluing("0>1"), {0}), std::invalid_argument);
}

TEST(Graph, TextAndJsonRoundTrip) {
  const Graph g = grid(2, 3);
  EXPECT_EQ(parse_graph_text(graph_to_text(g)).edges(), g.edges());
  const Graph j = parse_graph_json(R"({"vertices": 2, "edges": [[0,1],[0,1],[1,1]]})");
  EXPECT_EQ(j.edge_count(), 3);
  EXPECT_EQ(j.degree(1), 4);
  EXPECT_EQ(parse_graph_text("# comment\nv 1\ne 0 0\n").edge_count(), 1);
}

TEST(Faces, SingleLoop) {
  const Graph b1 = bouquet(1);
  const auto flat = make_rep(b1, {{0, 1}}, {0});
  EXPECT_EQ(trace_faces(b1, flat).faces, 2);
  EXPECT_EQ(euler_genus(b1, flat), 0);
  const auto twisted = make_rep(b1, {{0, 1}}, {1});
  EXPECT_EQ(trace_faces(b1, twisted).faces, 1);
  EXPECT_EQ(euler_genus(b1, twisted), 1);
}

TEST(Oracle, PrintedSmallValues) {
  EXPECT_EQ(genus_distribution_oracle(doubled_cycle(1)).poly(), (LaurentPoly{4, 2}));
  EXPECT_EQ(genus_distribution_oracle(dipole(3)).poly(), (LaurentPoly{2, 2}));
  EXPECT_EQ(genus_distribution_oracle(doubled_cycle(2)).poly(), (LaurentPoly{6, 30}));
  EXPECT_EQ(euler_distribution_oracle(doubled_cycle(1)).euler.poly(), (LaurentPoly{4, 10, 10}));
  EXPECT_EQ(euler_distribution_oracle(doubled_path(2)).euler.poly(), (LaurentPoly{1, 1}));
  EXPECT_EQ(euler_distribution_oracle(doubled_cycle(2)).euler.poly(), (LaurentPoly{6, 36, 126, 120}));
}

TEST(Oracle, OrientablePartMatchesGenus) {
  for (const Graph& g : {bouquet(2), dipole(4), doubled_cycle(3), grid(2, 3)}) {
    const auto r = euler_distribution_oracle(g);
    const auto gp = genus_distribution_oracle(g).poly();
    EXPECT_EQ(r.orientable.poly(), gp.substitute_power(2));
    EXPECT_EQ(r.euler.poly(), r.orientable.poly() + r.crosscap.poly());
  }
}

TEST(Oracle, BudgetAndWorkers) {
  OracleOptions small;
  small.budget = 10;
  try {
    genus_distribution_oracle(doubled_cycle(4), small);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.required, 1296);
  }
  OracleOptions one, four;
  one.workers = 1;
  four.workers = 4;
  EXPECT_EQ(euler_distribution_oracle(grid(2, 4), one).euler.poly(), euler_distribution_oracle(grid(2, 4), four).euler.poly());
}

TEST(Oracle, MatchesIndependentReference) {
  std::vector<Graph> corpus = {bouquet(1), bouquet(2), dipole(3), doubled_cycle(2), doubled_path(3),
                               Graph(3, {{0, 1}, {1, 2}, {2, 0}, {0, 0}}), Graph(2, {{0, 0}, {0, 1}, {1, 1}, {0, 1}}),
                               grid(2, 3), tripled_cycle(1), Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})};
  std::mt19937_64 rng(7);
  RandomGraphParams p{4, 6, 5000};
  for (int i = 0; i < 20; ++i) corpus.push_back(random_multigraph(rng, p));
  for (const Graph& g : corpus) {
    const auto ref = reference(g);
    EXPECT_EQ(genus_distribution_oracle(g).poly(), as_poly(ref.genus)) << g.str();
    EXPECT_EQ(euler_distribution_oracle(g).euler.poly(), as_poly(ref.euler)) << g.str();
  }
}

// Frozen reference values for graphs beyond the hand-checkable range.
TEST(Oracle, FrozenValues) {
  EXPECT_EQ(genus_distribution_oracle(grid(3, 3)).poly(), (LaurentPoly{2, 58, 36}));
  const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(genus_distribution_oracle(k4).poly(), (LaurentPoly{2, 14}));
  EXPECT_EQ(euler_distribution_oracle(k4).crosscap.poly(), (LaurentPoly{0, 14, 42, 56}));
}
