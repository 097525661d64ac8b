#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace decompkit {

/// Simple undirected graph over named vertices. Vertex order is stable and
/// doubles as the linear order on V used by the width-reduction transform.
/// Immutable after construction; "mutating" operations return new graphs.
class Graph {
 public:
  Graph() = default;

  /// Collapses duplicate edges, rejects loops and unknown endpoints.
  static Graph build(const std::vector<std::string>& vertices,
                     const std::vector<std::pair<std::string, std::string>>& edges);

  /// Same, but endpoints given as indices into `vertices`.
  static Graph build_indexed(std::vector<std::string> vertices,
                             const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return static_cast<int>(ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertex_ids() const { return ids_; }
  const std::string& id_of(int v) const { return ids_[v]; }
  bool has_vertex(const std::string& id) const { return index_.count(id) != 0; }
  /// Index of `id`, or -1 when absent.
  int find_vertex(const std::string& id) const;
  /// Index of `id`; throws malformed-input when absent.
  int index_of(const std::string& id) const;
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }  // sorted
  /// Canonical edge list: (u, v) with u < v, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  int min_degree() const;

  bool identical(const Graph& o) const;  // same ids in same order, same edges

  Graph contract_edge(const std::string& a, const std::string& b) const;
  Graph contract_edge(int u, int v) const;

  // plumbing used by generators and transforms
  Graph with_extra_edges(const std::vector<std::pair<int, int>>& extra) const;
  Graph without_edge(int u, int v) const;
  Graph induced(const std::vector<int>& keep) const;

  std::vector<int> component_of(int start) const;
  std::vector<std::vector<int>> components() const;
  bool connected_subset(const std::vector<int>& subset) const;

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;

  void finish(std::vector<std::pair<int, int>> edges);
};

}  // namespace decompkit
