#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gdist {

// Multigraph with loops. Edge i owns darts 2i (at edges[i].first) and 2i+1
// (at edges[i].second); tau(d) = d ^ 1.
class Graph {
public:
  Graph() = default;
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int dart_count() const { return 2 * edge_count(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::pair<int, int> edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }

  static int edge_of(int d) { return d >> 1; }
  static int opposite(int d) { return d ^ 1; }
  int dart_vertex(int d) const {
    const auto& e = edges_[static_cast<std::size_t>(d >> 1)];
    return (d & 1) ? e.second : e.first;
  }
  // Darts at v in increasing order.
  const std::vector<int>& darts_at(int v) const { return darts_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(darts_at(v).size()); }
  bool connected() const;
  int components() const;
  // |E| - |V| + #components
  int betti() const { return edge_count() - n_ + components(); }

  std::string str() const;

private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> darts_;
};

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

// Named families; see README for labelings. Throws std::invalid_argument.
Graph build_named(const std::string& kind, const std::vector<int>& params);

Graph doubled_cycle(int n);
Graph doubled_path(int n);   // n vertices, each consecutive pair doubled
Graph tripled_cycle(int n);
Graph ladder(int n);         // n rungs: u_i = i, v_i = n + i
Graph half_open_ladder(int n);  // pendants u = 0, v = n + 1
Graph grid(int rows, int cols);  // vertex r*cols + c
Graph bouquet(int k);
Graph dipole(int k);
Graph path_graph(int n);
Graph cycle_graph(int n);

struct Marked {
  Graph g;
  int u = 0, v = 0;
};

Marked half_open_ladder_marked(int n);

// Self gluing (u_i -> w_i inside one graph) or cross gluing (g vertex -> h vertex).
struct GluingSpec {
  std::vector<std::pair<int, int>> pairs;
  bool self = true;
};

GluingSpec parse_gluing(const std::string& text, bool self = true);
std::string to_string(const GluingSpec& phi);

Graph bar_amalgamate(const Graph& g, int u, const Graph& h, int v);
Graph bar_ring(const std::vector<Marked>& parts);

// Edges keep their order (h's edges after g's), so dart ids of g are unchanged
// and h's darts are shifted by 2|E(g)|. Surviving vertices keep relative order.
Graph amalgamate(const Graph& g, const Graph* h, const GluingSpec& phi);
// Same, also reporting the new index of every old vertex (g's then h's).
Graph amalgamate(const Graph& g, const Graph* h, const GluingSpec& phi, std::vector<int>& vmap);

// Each dart at a vertex of U moves to its own new leaf. Vertices outside U keep
// their relative order; leaves follow in dart order. Dart ids are unchanged.
Graph blow_up(const Graph& g, const std::vector<int>& U);

enum class EarKind { open, closed };
Graph attach_ear(const Graph& g, int e, EarKind kind);

struct SwapResult {
  Graph g;
  std::vector<std::pair<int, int>> psi;  // (N1 leaf, N2 leaf) per cut edge
};
SwapResult swapping(const Graph& h, const GluingSpec& phi, const std::vector<int>& cut);

// Text format ("v N" / "e U W" / '#') and JSON {vertices, edges}.
Graph parse_graph_text(const std::string& text);
Graph parse_graph_json(const std::string& text);
Graph load_graph(const std::string& path);
std::string graph_to_text(const Graph& g);

}  // namespace gdist
