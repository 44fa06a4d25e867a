#pragma once

#include "gdist/graph.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace gdist {

struct VerifyOptions {
  std::uint64_t seed = 20240611;
  int workers = 0;
  std::string report_dir = ".";  // tables_diff.txt goes here
  bool c3_euler_oracle = true;    // C_3^3 Euler oracle (about 2.2e8 embeddings)
};

struct CriterionResult {
  int id = 0;
  bool pass = false;
  std::string title;
  std::string summary;
  std::vector<std::string> details;
  double seconds = 0;
};

constexpr int kCriteria = 13;

CriterionResult run_criterion(int id, const VerifyOptions& opts);
// Runs 1..13 in order; `progress` sees each result as soon as it is known.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts,
                                            const std::function<void(const CriterionResult&)>& progress = {});
std::string format_result_line(const CriterionResult& r);

// Random connected multigraph with at most max_edges edges whose Euler embedding
// count stays below max_embeddings. Loops and multi-edges allowed.
struct RandomGraphParams {
  int max_vertices = 5;
  int max_edges = 8;
  double max_embeddings = 2e5;
};
Graph random_multigraph(std::mt19937_64& rng, const RandomGraphParams& p);

}  // namespace gdist
