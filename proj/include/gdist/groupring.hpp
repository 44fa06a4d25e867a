#pragma once

#include "gdist/embedding.hpp"
#include "gdist/graph.hpp"
#include "gdist/laurent.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace gdist {

using PointSet = std::vector<int>;  // sorted, distinct

PointSet point_union(const PointSet& a, const PointSet& b);
bool point_subset(const PointSet& a, const PointSet& b);

// Bijection of a finite point set; image[i] is the image of support[i].
struct Perm {
  PointSet support;
  std::vector<int> image;

  static Perm identity(const PointSet& s);
  // Cycles over the given support, e.g. {{1,2,5},{3,4}}.
  static Perm from_cycles(const PointSet& s, const std::vector<std::vector<int>>& cycles);
  int operator()(int p) const;
  Perm lift(const PointSet& bigger) const;
  std::vector<std::vector<int>> cycles() const;  // each starting at its least point, sorted
  std::string str() const;                        // "(1,2,5)(3)(4)"
  friend bool operator==(const Perm& a, const Perm& b) { return a.support == b.support && a.image == b.image; }
};

// (a b)(p) = a(b(p)); supports are united first.
Perm compose(const Perm& a, const Perm& b);
// Restriction of the cycle notation to E'; `avoided` counts cycles missing E'.
Perm restrict_perm(const Perm& s, const PointSet& sub, int* avoided = nullptr);

// Sparse sum of permutations of one support with Laurent coefficients.
class GroupRingElem {
public:
  using Key = std::vector<int>;

  GroupRingElem() = default;
  explicit GroupRingElem(PointSet support) : support_(std::move(support)) {}
  static GroupRingElem identity(const PointSet& s, const LaurentPoly& c = LaurentPoly(1));
  static GroupRingElem single(const Perm& p, const LaurentPoly& c = LaurentPoly(1));

  const PointSet& support() const { return support_; }
  const std::map<Key, LaurentPoly>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add(const Perm& p, const LaurentPoly& c);
  void add_key(const Key& k, const LaurentPoly& c);
  LaurentPoly coeff(const Perm& p) const;
  Perm perm(const Key& k) const { return Perm{support_, k}; }
  GroupRingElem lifted(const PointSet& bigger) const;
  LaurentPoly coeff_sum() const;

  GroupRingElem& operator+=(const GroupRingElem& o);
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator*(const LaurentPoly& c, const GroupRingElem& a);
  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b);

  // One line per term: cycle notation, tab, coefficient.
  std::string dump(const std::string& var = "x") const;

private:
  PointSet support_;
  std::map<Key, LaurentPoly> terms_;
};

// Renames every point by f (f injective on the support).
GroupRingElem relabel(const GroupRingElem& e, const std::function<int(int)>& f);

GroupRingElem ring_multiply(const GroupRingElem& a, const GroupRingElem& b);
inline GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) { return ring_multiply(a, b); }
GroupRingElem proj(const GroupRingElem& e, const PointSet& sub);
// Multiplies each term by x^(cycles avoiding sub), then projects.
GroupRingElem face_proj(const GroupRingElem& e, const PointSet& sub);
// face_proj(a * b, sub) without materializing the product.
GroupRingElem mul_face_proj(const GroupRingElem& a, const GroupRingElem& b, const PointSet& sub);

enum class FaceMode { orientable, euler };

// Euler mode works on flags: dart d has flags 2d (L) and 2d+1 (R).
inline int flag(int d, int side) { return 2 * d + side; }
PointSet points_of_darts(const std::vector<int>& darts, FaceMode mode);

// Product over vertices of the sum of all full cycles on the vertex's darts.
// Euler mode uses the flag action +d -> +s(d), -d -> -s^{-1}(d).
GroupRingElem cyclic_sum_element(const std::vector<std::vector<int>>& vertex_darts, FaceMode mode);
inline GroupRingElem cyclic_sum_element(const std::vector<std::vector<int>>& vertex_darts, bool signed_mode) {
  return cyclic_sum_element(vertex_darts, signed_mode ? FaceMode::euler : FaceMode::orientable);
}

// Orientable: sum over rotation systems of sigma*tau on darts.
// Euler: sum over rotations and all 2^|E| twist vectors of the corner involution
// times the edge involution on flags; each flag cycle is half a face.
GroupRingElem face_element(const Graph& h, FaceMode mode, const OracleOptions& opts = {});

// Vertex-flip multiplicity of face_element(euler) relative to the canonical reps.
BigInt euler_gauge(int vertices, int components);

// Polynomial from the empty projection (the element is projected to empty first).
LaurentPoly genus_poly_from_face_element(const GroupRingElem& e, int v, int e_count, FaceMode mode,
                                         int components = 1);
// Same from the face-count polynomial sum_k c_k z^k (k = removed cycles).
LaurentPoly genus_poly_from_cycle_poly(const LaurentPoly& cyc, int v, int e_count, FaceMode mode,
                                       int components = 1);

struct CalibrationRow {
  std::string name;
  BigInt ratio;  // coefficient mass of the face element over the oracle's mass
  BigInt expected;
  bool poly_match = false;
};

struct CalibrationReport {
  std::vector<CalibrationRow> rows;
  bool consistent = false;
  std::string str() const;
};

// Euler-mode face elements against the oracle on B1, B2, P2^2 and dipoles D2..D4.
CalibrationReport calibrate_signed();

}  // namespace gdist
