#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "decompkit/embedding.hpp"
#include "decompkit/graph.hpp"

namespace decompkit {

/// One node of a decomposition: an identifier plus a bag of host vertices
/// (indices into the host graph, sorted). Bags may repeat as sets and may be
/// empty; node identity, not bag content, is what counts. `belongs` records
/// which node of the input a transform-produced node replaces.
struct BagNode {
  std::string id;
  std::vector<int> bag;
  std::string belongs;
};

/// A decomposition of a host graph: a graph whose vertices are bags.
class Decomposition {
 public:
  Decomposition() = default;
  /// Bags given by host vertex ids; throws malformed-input on unknown ids,
  /// duplicate node ids or duplicate in-bag vertices.
  Decomposition(Graph host,
                const std::vector<std::pair<std::string, std::vector<std::string>>>& bags,
                const std::vector<std::pair<std::string, std::string>>& bag_edges,
                std::optional<RotationSystem> embedding = std::nullopt);

  /// Index-based constructor used by transforms.
  static Decomposition from_indexed(Graph host, std::vector<BagNode> nodes,
                                    std::vector<std::pair<int, int>> edges,
                                    std::optional<RotationSystem> embedding = std::nullopt,
                                    std::string provenance = {});

  const Graph& host() const { return host_; }
  const std::vector<BagNode>& nodes() const { return nodes_; }
  const std::vector<std::pair<int, int>>& node_edges() const { return edges_; }
  int order() const { return static_cast<int>(nodes_.size()); }
  int node_index(const std::string& id) const;  // -1 when absent
  const std::optional<RotationSystem>& embedding() const { return embedding_; }
  const std::string& provenance() const { return provenance_; }

  /// The decomposition graph, with node ids as vertices (same order).
  Graph decomposition_graph() const;

  Decomposition with_embedding(RotationSystem r) const;

 private:
  Graph host_;
  std::vector<BagNode> nodes_;
  std::vector<std::pair<int, int>> edges_;
  std::optional<RotationSystem> embedding_;
  std::string provenance_;
};

/// Disjoint connected branch sets in a host graph, one per pattern vertex,
/// plus one witnessing host edge per pattern edge.
struct MinorModel {
  Graph pattern;
  Graph host;
  std::vector<std::vector<int>> branch_sets;              // per pattern vertex, host indices
  std::map<std::pair<int, int>, std::pair<int, int>> witnesses;  // pattern edge -> host edge
};

struct VertexCheck {
  std::string vertex;
  bool nonempty = false;
  bool connected = false;
};

struct EdgeCheck {
  std::string u, v;
  bool touches = false;
};

struct DecompReport {
  bool valid = false;                 // definition checks + embedding consistency
  bool planar = false;                // verdict on the decomposition graph
  bool embedding_consistent = true;   // Euler check, when an embedding is present
  std::vector<VertexCheck> vertex_checks;
  std::vector<EdgeCheck> edge_checks;
  std::vector<std::string> problems;
};

DecompReport validate_decomposition(const Decomposition& d);

struct DecompMetrics {
  int width = 0;
  int order = 0;
  int degree = 0;
  bool planar = false;
};

DecompMetrics metrics(const Decomposition& d);

struct ModelReport {
  bool valid = false;
  bool disjoint = true;
  std::vector<VertexCheck> branch_checks;  // nonempty + connected per pattern vertex
  std::vector<EdgeCheck> witness_checks;   // witness present and correct per pattern edge
  std::vector<std::string> problems;
};

ModelReport check_minor_model(const MinorModel& m);

/// Width-1 decomposition of the pattern shaped like the model's host graph.
Decomposition minor_to_decomposition(const MinorModel& m);

/// Inverse direction: a width-<=1 decomposition yields a minor model of its
/// host inside the decomposition graph. Throws width-violation when width > 1.
MinorModel extract_minor_model(const Decomposition& d);

}  // namespace decompkit
