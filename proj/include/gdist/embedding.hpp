#pragma once

#include "gdist/graph.hpp"
#include "gdist/laurent.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdist {

// Rotation (successor of each dart around its vertex) plus a twist bit per edge.
// Canonical reps keep tree edges untwisted.
struct EmbeddingRep {
  std::vector<int> succ;
  std::vector<std::uint8_t> twist;
  bool orientable() const;
};

// Rep from explicit cyclic dart lists per vertex; throws on malformed rotations.
EmbeddingRep make_rep(const Graph& g, const std::vector<std::vector<int>>& rotation,
                      const std::vector<std::uint8_t>& twist = {});

std::vector<int> predecessors(const std::vector<int>& succ);

// A state is 2*dart + flag, flag 0 = '+', 1 = '-'.
struct FaceSet {
  std::vector<std::vector<int>> orbits;  // states in traversal order
  std::vector<int> orbit_of;             // per state
  std::vector<int> face_of_orbit;        // paired orbits share a face id
  std::vector<char> self_paired;         // per orbit
  int faces = 0;

  int face_of_state(int s) const { return face_of_orbit[static_cast<std::size_t>(orbit_of[static_cast<std::size_t>(s)])]; }
};

FaceSet trace_faces(const Graph& g, const EmbeddingRep& rep);
// Face count only; the untwisted case counts cycles of succ o tau.
int face_count(const Graph& g, const EmbeddingRep& rep);
int face_count(const std::vector<int>& succ, const std::vector<int>& pred,
               const std::vector<std::uint8_t>& twist, std::vector<int>& scratch);
int euler_genus(const Graph& g, const EmbeddingRep& rep);

// The corner between dart x and succ(x) lies on the face of state (succ(x), +).
inline int corner_state(const EmbeddingRep& rep, int x) { return 2 * rep.succ[static_cast<std::size_t>(x)]; }

// Lowest-index BFS spanning forest from vertex 0 (then the lowest unreached vertex).
std::vector<char> tree_edges(const Graph& g);
std::vector<int> cotree_edges(const Graph& g);

struct BudgetExceeded : std::runtime_error {
  BigInt required;
  BudgetExceeded(const BigInt& need, const BigInt& budget);
};

struct OracleOptions {
  std::uint64_t budget = 100000000ULL;
  int workers = 0;  // 0 = hardware concurrency
};

// Number of rotation systems, and of rotation + cotree-twist reps.
BigInt rotation_system_count(const Graph& g);
BigInt embedding_count(const Graph& g, bool twisted);

// Sequential enumeration in canonical order: rotations lexicographic per vertex
// (lowest dart fixed), vertex 0 slowest, twist mask fastest.
void for_each_embedding(const Graph& g, bool twisted, const std::function<void(const EmbeddingRep&)>& fn,
                        const OracleOptions& opts = {});

enum class DistKind { genus, euler, crosscap };

struct EmbeddingDistribution {
  DistKind kind = DistKind::genus;
  std::vector<BigInt> coeffs;
  LaurentPoly poly() const;
  BigInt total() const;
};

std::string kind_name(DistKind k);

EmbeddingDistribution genus_distribution_oracle(const Graph& g, const OracleOptions& opts = {});

struct EulerOracleResult {
  EmbeddingDistribution euler;       // by Euler genus
  EmbeddingDistribution orientable;  // all-zero twists, by Euler genus
  EmbeddingDistribution crosscap;    // non-orientable reps, by crosscap number
};

EulerOracleResult euler_distribution_oracle(const Graph& g, const OracleOptions& opts = {});

}  // namespace gdist
