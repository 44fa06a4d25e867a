#pragma once

#include "gdist/bivar.hpp"
#include "gdist/embedding.hpp"
#include "gdist/graph.hpp"
#include "gdist/laurent.hpp"
#include "gdist/matrix.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace gdist {

enum class PartialMode { genus, euler };

// Embeddings of a graph with pendant marks u, v split by whether u and v lie on
// one face (S) or not (D).
struct PartialPair {
  LaurentPoly d, s;
  LaurentPoly total() const { return d + s; }
};

PartialPair partial_pair_oracle(const Graph& g, int u, int v, PartialMode mode, const OracleOptions& opts = {});

// Recurrence pairs for the ladder (index n) and the half-open ladder completion.
struct LadderPartials {
  PartialPair ladder;
  PartialPair half_open;
};
LadderPartials ladder_partials(int n, PartialMode mode);
// Displayed closed forms for the half-open ladder (genus).
PartialPair half_open_ladder_closed_form(int n);

// Ring of parts; each part gives (total, partial pair).
LaurentPoly bar_ring_from_partials(const std::vector<PartialPair>& parts, PartialMode mode);

Graph star_ladder(const std::vector<int>& alpha);

// G with edge e cut into two pendant edges; u is on e's first end.
Marked break_edge(const Graph& g, int e);
// r open then s closed ears attached in series on edge e.
Graph eared_graph(const Graph& g, int e, int r, int s);
LaurentPoly ear_formula_euler(const PartialPair& gprime, int r, int s);
// The P and Q summands separately.
std::pair<LaurentPoly, LaurentPoly> ear_formula_parts(const PartialPair& gprime, int r, int s);

// Connected, and no two cycles share a vertex (loops and multi-edges count as cycles).
bool is_cactus(const Graph& c);
// 2^(|E|-beta) (1+x)^beta prod (d_v-1)!; counts every twist vector separately,
// so it is 2^(|V|-1) times the oracle. Throws on non-cactus input.
LaurentPoly cactus_euler(const Graph& c);

LaurentPoly tree_like_compose(const std::vector<LaurentPoly>& parts);

// (sum |q_k| + q(1)) / (p(1) + q(1)).
Rational perturbation_tv_bound(const LaurentPoly& p, const LaurentPoly& q);

// ---- ten-type machinery for two marked degree-2 vertices (s, t) ----

enum PedType { dd0 = 0, ds0, sd0, ss0, dd1, dd2, ds1, sd1, ss1, ss2 };
constexpr int kPedTypes = 10;
const char* ped_type_name(int t);
int ped_type_from_name(const std::string& name);  // -1 if unknown

using PEdVector = std::array<LaurentPoly, kPedTypes>;

int classify_ped(const Graph& g, const EmbeddingRep& rep, const FaceSet& faces, int s, int t);
PEdVector ped_vector_oracle(const Graph& g, int s, int t, const OracleOptions& opts = {});
LaurentPoly ped_sum(const PEdVector& v);
std::string ped_str(const PEdVector& v);

struct Transition {
  int target = 0;  // -1 marks a target the printed tables name but that is not a type
  int shift = 0;
  int mult = 0;
  friend bool operator==(const Transition& a, const Transition& b) {
    return a.target == b.target && a.shift == b.shift && a.mult == b.mult;
  }
};

struct TransitionTables {
  // amal[a][b]: left graph of type a, right graph of type b, merged at left t / right s.
  std::array<std::array<std::vector<Transition>, kPedTypes>, kPedTypes> amal;
  std::array<std::map<int, int>, kPedTypes> close;  // Euler-genus shift -> count
  std::vector<std::string> witnesses;                // per type, empty if not found
  std::vector<std::string> conflicts;                // observations disagreeing with the table
  std::size_t observations = 0;

  std::string to_json() const;
};

TransitionTables derive_transition_tables(int max_edges = 5);
TransitionTables printed_transition_tables();
// Closure column and transfer matrix exactly as printed.
std::array<LaurentPoly, kPedTypes> printed_closure_column();
PolyMatrix printed_transfer_matrix();

std::string diff_tables(const TransitionTables& printed, const TransitionTables& derived);

PEdVector ped_compose(const PEdVector& a, const PEdVector& b, const TransitionTables& tabs);
LaurentPoly ped_close(const PEdVector& v, const TransitionTables& tabs);
LaurentPoly ped_close(const PEdVector& v, const std::array<LaurentPoly, kPedTypes>& column);
std::array<LaurentPoly, kPedTypes> closure_column(const TransitionTables& tabs);
// Row a: sum over b of h_b times the a*b transitions.
PolyMatrix ped_transfer_matrix(const PEdVector& h, const TransitionTables& tabs);
// pEd(P2^2) M^(n-2) closed; n >= 2.
SeriesPrefix ped_series(const TransitionTables& tabs, int n_max);

// Graph with s, t degree 2 plus two parallel s-t edges (the closure).
Graph add_parallel_pair(const Graph& g, int s, int t);

// ---- hardcoded recurrences for the doubled cycle ----

enum class CnRecurrence { genus6, euler10, euler6 };
std::vector<LaurentPoly> cn2_recurrence_coeffs(CnRecurrence which);
std::vector<LaurentPoly> cn2_printed_initial(CnRecurrence which);  // genus: 6 terms, euler: 10
// Series terms 1..n_max from the given initial values (printed if empty).
SeriesPrefix cn2_recurrences(CnRecurrence which, int n_max, const std::vector<LaurentPoly>& init = {});
// Whether s[n] = sum b_j s[n-j] for every n > order with n <= s.size().
bool satisfies_recurrence(CnRecurrence which, const SeriesPrefix& s, int* first_bad = nullptr);

}  // namespace gdist
