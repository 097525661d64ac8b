#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "decompkit/decomposition.hpp"

namespace decompkit {

/// A direction for every decomposition edge, keyed by canonical node-id pair
/// (smaller id first); `forward` means the arc runs smaller -> larger.
struct OrientationOverlay {
  std::map<std::pair<std::string, std::string>, bool> forward;

  static OrientationOverlay lexicographic(const Decomposition& d);
};

/// Decomposition of d's host shaped like j's decomposition graph, width at
/// most width(d) * width(j). j must decompose d's decomposition graph.
Decomposition compose(const Decomposition& d, const Decomposition& j);

/// Decomposition of the model's pattern shaped like j's decomposition graph:
/// the width-1 decomposition from the model composed with j.
Decomposition lift_decomposition(const MinorModel& m, const Decomposition& j);

struct TransformResult {
  Decomposition out;
  // the min-degree-3 planar supergraph the construction ran on
  Graph augmented_graph;
  RotationSystem augmented_rotation;
  int pre_order = 0;
  int augmented_order = 0;
  int augmented_edges = 0;
  std::vector<std::string> added_nodes;  // pads; empty bags in `out`'s provenance chain
};

/// Degree reduction: every bag becomes a cycle of copies, one per incident
/// edge end. Output: same width, degree <= 3, order = 2 * augmented_edges.
TransformResult simplify_degree(const Decomposition& d);

/// Width reduction to 2: every degree-reduced bag becomes a triangular
/// half-grid of pair bags in a wedge pattern. Degree <= 4.
TransformResult simplify_width(const Decomposition& d,
                               const std::optional<OrientationOverlay>& overlay = std::nullopt);

/// Width 2 and degree 3 together: degree-4 nodes of the width-2 output are
/// split into adjacent twins along the embedding.
TransformResult simplify_both(const Decomposition& d,
                              const std::optional<OrientationOverlay>& overlay = std::nullopt);

/// Compact cubic form: every node of degree t becomes a path of t-2 copies.
/// Width preserved, degree <= 3, order <= 4 * augmented_order.
TransformResult compact_degree(const Decomposition& d);

}  // namespace decompkit
