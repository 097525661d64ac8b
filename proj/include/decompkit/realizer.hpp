#pragma once

#include <optional>
#include <string>
#include <vector>

#include "decompkit/decomposition.hpp"

namespace decompkit {

/// A graph containing some G as a minor, with the model exhibiting it.
struct Realizer {
  Graph expanded;    // G'
  MinorModel model;  // pattern = G, host = expanded
  std::string source;
};

struct ExpandResult {
  Realizer realizer;
  Decomposition expanded_decomposition;  // same shape as the input, bags replaced by copies
};

/// One expanded vertex per (host vertex, containing bag) incidence; copies in
/// equal or adjacent bags are adjacent. Max degree <= (degree(D)+1)*width - 1.
ExpandResult expand_to_realizer(const Decomposition& d);

ModelReport verify_minor_model(const MinorModel& m);

struct MinorSearchLimits {
  int max_pattern = 8;
  int max_host = 16;
};

/// Exhaustive branch-and-prune search for a minor model of `pattern` in
/// `host`; returns the first model in lexicographic search order, or nothing.
/// Throws instance-too-large beyond the limits.
std::optional<MinorModel> minor_search_small(const Graph& pattern, const Graph& host,
                                             const MinorSearchLimits& limits = {});

}  // namespace decompkit
