#pragma once

#include "gdist/bivar.hpp"
#include "gdist/graph.hpp"
#include "gdist/groupring.hpp"
#include "gdist/matrix.hpp"
#include "gdist/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gdist {

enum class FamilyKind { linear, circular, capped };

// Family generated by gluing copy k+1's u_i to copy k's w_i for (u_i > w_i) in phi.
// Transfer states use three point ranges: the newest copy at its own ids, the
// previous copy shifted by one copy, and (circular only) the first copy's U1
// darts shifted by two copies. Caps sit at three copies.
struct FamilySpec {
  Graph h;
  GluingSpec phi;
  FamilyKind kind = FamilyKind::linear;
  FaceMode mode = FaceMode::orientable;
  Graph cap;
  GluingSpec cap_glue;  // (U2 vertex of h > cap vertex)
  int index_offset = 0;  // series term t^n is the graph with n + index_offset copies

  // Derived by make_family.
  int nd = 0;  // darts per copy
  std::vector<int> u1, u2;
  PointSet left, right;   // boundary points of U1 / U2 at copy ids
  GroupRingElem p_h;      // face projection of the blown-up copy onto its boundary
  GroupRingElem glue_ph;  // C over glued vertices times p_h
  std::string label;

  int points_per_copy() const { return mode == FaceMode::euler ? 2 * nd : nd; }
};

FamilySpec make_family(const Graph& h, const GluingSpec& phi, FamilyKind kind, FaceMode mode,
                       const Graph* cap = nullptr, const GluingSpec* cap_glue = nullptr,
                       const OracleOptions& opts = {});

// Named families: "doubled_cycle" (circular on the doubled edge), "doubled_path"
// (linear on the doubled edge, G_n = P^2_{n+1}), "tripled_cycle", "grid3" (capped,
// index offset 1 so that t^n is the 3 x (n+2) grid), "grid3_circular".
FamilySpec named_family(const std::string& name, FaceMode mode);

// JSON {h, glue, kind, cap:{graph, glue}, mode}.
FamilySpec parse_family_json(const std::string& text);

struct TransferState {
  GroupRingElem a;
  int n = 1;  // copies of H, ignoring index_offset
};

TransferState initial_state(const FamilySpec& spec);
TransferState step_state(const FamilySpec& spec, const TransferState& a);
// Completion of a state to the family's polynomial at index a.n.
LaurentPoly complete_state(const FamilySpec& spec, const TransferState& a);

LaurentPoly family_genus_poly(const FamilySpec& spec, int n);
LaurentPoly capped_family_poly(const FamilySpec& spec, int n);
SeriesPrefix family_series(const FamilySpec& spec, int n);

// The graph the engine computes at index n, and its vertex/edge counts.
Graph family_graph(const FamilySpec& spec, int n);
std::string family_index_note(const FamilySpec& spec);

struct FamilyGF {
  PadeResult pade;
  SeriesPrefix series;
  std::string index_note;
};

FamilyGF family_rational_gf(const FamilySpec& spec, int p_max, int q_max, int guard = 3);

struct TransferMatrix {
  std::vector<Perm> basis;
  PolyMatrix t;      // raw operator in the removed-cycle variable z, V_n = V_{n-1} t
  PolyMatrix m;      // in y with x = y^2, including vertex/edge growth (and gauge)
  QMatrix at_one;    // m at x = 1
  QMatrix stochastic;
  PrimitivityReport primitivity;
};

TransferMatrix transfer_matrix(const FamilySpec& spec, std::size_t max_basis = 50000);

// det(1 - t M) as a polynomial in t with coefficients in y.
BivarPoly det_one_minus_tm(const PolyMatrix& m);
// Whether q(t, y^2) divides d(t, y) (q(0) = d(0) = 1), by power-series division.
bool divides_in_t(const BivarPoly& q_in_x, const BivarPoly& d_in_y);

}  // namespace gdist
