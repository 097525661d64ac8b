#pragma once

#include <optional>
#include <string>
#include <vector>

#include "decompkit/graph.hpp"

namespace decompkit {

/// Clockwise cyclic neighbor order per vertex; the combinatorial stand-in for
/// a planar embedding. order[v] must be a permutation of neighbors(v).
struct RotationSystem {
  std::vector<std::vector<int>> order;
};

/// All facial walks of the embedded graph. Each directed edge appears in
/// exactly one walk; a walk is the closed vertex sequence along the face.
/// Throws malformed-embedding when the rotation does not cover the graph.
std::vector<std::vector<int>> trace_faces(const Graph& g, const RotationSystem& r);

/// Genus-0 certificate: V - E + F = 2 on every connected component
/// (an isolated vertex counts one face).
bool euler_check(const Graph& g, const RotationSystem& r);

struct Planarity {
  bool planar = false;
  RotationSystem rotation;                       // valid iff planar
  std::vector<std::pair<int, int>> kuratowski;   // K5/K3,3 subdivision edges iff non-planar
};

/// Planarity test; returns an embedding whose face trace satisfies Euler's
/// formula, or a non-planar verdict with a Kuratowski witness.
Planarity test_planarity(const Graph& g);

struct AugmentResult {
  Graph graph;
  RotationSystem rotation;
  std::vector<std::string> added_vertices;  // pads; become empty bags downstream
};

/// Planar supergraph with minimum degree >= 3: pads to >= 4 vertices with
/// flagged isolated vertices, connects components, then triangulates faces.
/// Returns the input untouched when it already has minimum degree >= 3.
AugmentResult augment_min_degree_3(const Graph& g, const RotationSystem& r);

}  // namespace decompkit
