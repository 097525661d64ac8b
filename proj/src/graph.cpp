#include "decompkit/graph.hpp"

#include <algorithm>
#include <set>

#include "decompkit/errors.hpp"

namespace decompkit {

void Graph::finish(std::vector<std::pair<int, int>> edges) {
  for (auto& [u, v] : edges) {
    if (u == v) fail(errc::malformed_input, "loop at vertex '" + ids_[u] + "'");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adj_.assign(ids_.size(), {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

Graph Graph::build(const std::vector<std::string>& vertices,
                   const std::vector<std::pair<std::string, std::string>>& edges) {
  Graph g;
  g.ids_ = vertices;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    if (!g.index_.emplace(vertices[i], i).second)
      fail(errc::malformed_input, "duplicate vertex id '" + vertices[i] + "'");
  }
  std::vector<std::pair<int, int>> es;
  es.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = g.index_.find(a);
    auto ib = g.index_.find(b);
    if (ia == g.index_.end()) fail(errc::malformed_input, "unknown edge endpoint '" + a + "'");
    if (ib == g.index_.end()) fail(errc::malformed_input, "unknown edge endpoint '" + b + "'");
    es.emplace_back(ia->second, ib->second);
  }
  g.finish(std::move(es));
  return g;
}

Graph Graph::build_indexed(std::vector<std::string> vertices,
                           const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  g.ids_ = std::move(vertices);
  for (int i = 0; i < static_cast<int>(g.ids_.size()); ++i) {
    if (!g.index_.emplace(g.ids_[i], i).second)
      fail(errc::malformed_input, "duplicate vertex id '" + g.ids_[i] + "'");
  }
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
      fail(errc::malformed_input, "edge endpoint index out of range");
  }
  g.finish(edges);
  return g;
}

int Graph::find_vertex(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

int Graph::index_of(const std::string& id) const {
  int i = find_vertex(id);
  if (i < 0) fail(errc::malformed_input, "unknown vertex '" + id + "'");
  return i;
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

int Graph::min_degree() const {
  if (ids_.empty()) return 0;
  int d = static_cast<int>(adj_[0].size());
  for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
  return d;
}

bool Graph::identical(const Graph& o) const { return ids_ == o.ids_ && edges_ == o.edges_; }

Graph Graph::contract_edge(int u, int v) const {
  if (!has_edge(u, v)) fail(errc::missing_edge, "no edge " + ids_[u] + "-" + ids_[v]);
  // merged vertex keeps the lexicographically-first identifier
  int keep = ids_[u] < ids_[v] ? u : v;
  int drop = keep == u ? v : u;
  std::vector<std::string> vids;
  std::vector<int> remap(ids_.size(), -1);
  for (int i = 0; i < vertex_count(); ++i) {
    if (i == drop) continue;
    remap[i] = static_cast<int>(vids.size());
    vids.push_back(ids_[i]);
  }
  remap[drop] = remap[keep];
  std::vector<std::pair<int, int>> es;
  es.reserve(edges_.size());
  for (auto [a, b] : edges_) {
    int x = remap[a], y = remap[b];
    if (x != y) es.emplace_back(x, y);
  }
  return build_indexed(std::move(vids), es);
}

Graph Graph::contract_edge(const std::string& a, const std::string& b) const {
  return contract_edge(index_of(a), index_of(b));
}

Graph Graph::with_extra_edges(const std::vector<std::pair<int, int>>& extra) const {
  std::vector<std::pair<int, int>> es = edges_;
  es.insert(es.end(), extra.begin(), extra.end());
  return build_indexed(ids_, es);
}

Graph Graph::without_edge(int u, int v) const {
  std::vector<std::pair<int, int>> es;
  es.reserve(edges_.size());
  if (u > v) std::swap(u, v);
  for (auto e : edges_)
    if (e != std::make_pair(u, v)) es.push_back(e);
  return build_indexed(ids_, es);
}

Graph Graph::induced(const std::vector<int>& keep) const {
  std::vector<int> remap(ids_.size(), -1);
  std::vector<std::string> vids;
  for (int v : keep) {
    if (remap[v] >= 0) continue;
    remap[v] = static_cast<int>(vids.size());
    vids.push_back(ids_[v]);
  }
  std::vector<std::pair<int, int>> es;
  for (auto [a, b] : edges_)
    if (remap[a] >= 0 && remap[b] >= 0) es.emplace_back(remap[a], remap[b]);
  return build_indexed(std::move(vids), es);
}

std::vector<int> Graph::component_of(int start) const {
  std::vector<bool> seen(ids_.size(), false);
  std::vector<int> stack{start}, out;
  seen[start] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (int w : adj_[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<bool> seen(ids_.size(), false);
  std::vector<std::vector<int>> comps;
  for (int v = 0; v < vertex_count(); ++v) {
    if (seen[v]) continue;
    auto comp = component_of(v);
    for (int w : comp) seen[w] = true;
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool Graph::connected_subset(const std::vector<int>& subset) const {
  if (subset.empty()) return false;
  std::set<int> in(subset.begin(), subset.end());
  std::vector<int> stack{subset[0]};
  std::set<int> seen{subset[0]};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v])
      if (in.count(w) && !seen.count(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
  }
  return seen.size() == in.size();
}

}  // namespace decompkit
