#include "decompkit/decomposition.hpp"

#include <algorithm>
#include <set>

#include "decompkit/errors.hpp"

namespace decompkit {

Decomposition::Decomposition(Graph host,
                             const std::vector<std::pair<std::string, std::vector<std::string>>>& bags,
                             const std::vector<std::pair<std::string, std::string>>& bag_edges,
                             std::optional<RotationSystem> embedding)
    : host_(std::move(host)), embedding_(std::move(embedding)) {
  std::set<std::string> ids;
  for (const auto& [id, contents] : bags) {
    if (!ids.insert(id).second) fail(errc::malformed_input, "duplicate bag id '" + id + "'");
    BagNode n;
    n.id = id;
    for (const auto& vid : contents) {
      int vi = host_.find_vertex(vid);
      if (vi < 0) fail(errc::malformed_input, "bag '" + id + "' contains unknown host vertex '" + vid + "'");
      n.bag.push_back(vi);
    }
    std::sort(n.bag.begin(), n.bag.end());
    if (std::adjacent_find(n.bag.begin(), n.bag.end()) != n.bag.end())
      fail(errc::malformed_input, "bag '" + id + "' repeats a vertex");
    nodes_.push_back(std::move(n));
  }
  for (const auto& [a, b] : bag_edges) {
    int ia = node_index(a), ib = node_index(b);
    if (ia < 0) fail(errc::malformed_input, "bag edge references unknown bag '" + a + "'");
    if (ib < 0) fail(errc::malformed_input, "bag edge references unknown bag '" + b + "'");
    if (ia == ib) fail(errc::malformed_input, "loop on bag '" + a + "'");
    edges_.emplace_back(std::min(ia, ib), std::max(ia, ib));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

Decomposition Decomposition::from_indexed(Graph host, std::vector<BagNode> nodes,
                                          std::vector<std::pair<int, int>> edges,
                                          std::optional<RotationSystem> embedding,
                                          std::string provenance) {
  Decomposition d;
  d.host_ = std::move(host);
  d.nodes_ = std::move(nodes);
  for (auto& n : d.nodes_) {
    std::sort(n.bag.begin(), n.bag.end());
    for (int v : n.bag)
      if (v < 0 || v >= d.host_.vertex_count())
        fail(errc::malformed_input, "bag '" + n.id + "' has out-of-range vertex index");
  }
  for (auto& [a, b] : edges) {
    if (a == b || a < 0 || b < 0 || a >= d.order() || b >= d.order())
      fail(errc::malformed_input, "bad bag edge");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  d.edges_ = std::move(edges);
  d.embedding_ = std::move(embedding);
  d.provenance_ = std::move(provenance);
  std::set<std::string> ids;
  for (const auto& n : d.nodes_)
    if (!ids.insert(n.id).second) fail(errc::malformed_input, "duplicate bag id '" + n.id + "'");
  return d;
}

int Decomposition::node_index(const std::string& id) const {
  for (int i = 0; i < order(); ++i)
    if (nodes_[i].id == id) return i;
  return -1;
}

Graph Decomposition::decomposition_graph() const {
  std::vector<std::string> ids;
  ids.reserve(nodes_.size());
  for (const auto& n : nodes_) ids.push_back(n.id);
  return Graph::build_indexed(std::move(ids), edges_);
}

Decomposition Decomposition::with_embedding(RotationSystem r) const {
  Decomposition d = *this;
  d.embedding_ = std::move(r);
  return d;
}

DecompReport validate_decomposition(const Decomposition& d) {
  DecompReport rep;
  const Graph& host = d.host();
  const auto& nodes = d.nodes();
  Graph dg = d.decomposition_graph();

  // nodes containing each host vertex
  std::vector<std::vector<int>> holding(host.vertex_count());
  for (int n = 0; n < d.order(); ++n)
    for (int v : nodes[n].bag) holding[v].push_back(n);

  bool all_ok = true;
  for (int v = 0; v < host.vertex_count(); ++v) {
    VertexCheck c;
    c.vertex = host.id_of(v);
    c.nonempty = !holding[v].empty();
    if (c.nonempty) {
      // BFS restricted to nodes whose bags contain v
      std::set<int> in(holding[v].begin(), holding[v].end());
      std::vector<int> stack{holding[v][0]};
      std::set<int> seen{holding[v][0]};
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : dg.neighbors(x))
          if (in.count(y) && !seen.count(y)) {
            seen.insert(y);
            stack.push_back(y);
          }
      }
      c.connected = seen.size() == in.size();
    }
    if (!c.nonempty) rep.problems.push_back("D(" + c.vertex + ") is empty");
    else if (!c.connected) rep.problems.push_back("D(" + c.vertex + ") is disconnected");
    all_ok = all_ok && c.nonempty && c.connected;
    rep.vertex_checks.push_back(std::move(c));
  }

  // touch pairs: shared bag, or a decomposition edge between holders
  std::set<std::pair<int, int>> touching;
  for (const auto& n : nodes)
    for (size_t i = 0; i < n.bag.size(); ++i)
      for (size_t j = i + 1; j < n.bag.size(); ++j)
        touching.insert({n.bag[i], n.bag[j]});
  for (auto [a, b] : d.node_edges())
    for (int v : nodes[a].bag)
      for (int w : nodes[b].bag)
        if (v != w) touching.insert({std::min(v, w), std::max(v, w)});
  for (auto [u, v] : host.edges()) {
    EdgeCheck c;
    c.u = host.id_of(u);
    c.v = host.id_of(v);
    c.touches = touching.count({u, v}) != 0;
    if (!c.touches) rep.problems.push_back("D(" + c.u + ") and D(" + c.v + ") do not touch");
    all_ok = all_ok && c.touches;
    rep.edge_checks.push_back(std::move(c));
  }

  if (d.embedding()) {
    rep.embedding_consistent = euler_check(dg, *d.embedding());
    if (!rep.embedding_consistent) rep.problems.push_back("embedding fails the Euler check");
    rep.planar = rep.embedding_consistent;
    if (!rep.embedding_consistent) rep.planar = test_planarity(dg).planar;
  } else {
    rep.planar = test_planarity(dg).planar;
  }

  rep.valid = all_ok && rep.embedding_consistent;
  return rep;
}

DecompMetrics metrics(const Decomposition& d) {
  DecompMetrics m;
  m.order = d.order();
  for (const auto& n : d.nodes()) m.width = std::max(m.width, static_cast<int>(n.bag.size()));
  Graph dg = d.decomposition_graph();
  m.degree = dg.max_degree();
  m.planar = d.embedding() ? euler_check(dg, *d.embedding()) : test_planarity(dg).planar;
  return m;
}

ModelReport check_minor_model(const MinorModel& m) {
  ModelReport rep;
  bool ok = true;
  if (static_cast<int>(m.branch_sets.size()) != m.pattern.vertex_count()) {
    rep.problems.push_back("branch set count does not match pattern");
    rep.valid = false;
    rep.disjoint = false;
    return rep;
  }
  std::vector<int> owner(m.host.vertex_count(), -1);
  for (int v = 0; v < m.pattern.vertex_count(); ++v) {
    for (int x : m.branch_sets[v]) {
      if (x < 0 || x >= m.host.vertex_count()) {
        rep.problems.push_back("branch set of " + m.pattern.id_of(v) + " has out-of-range vertex");
        ok = false;
        continue;
      }
      if (owner[x] >= 0) {
        rep.disjoint = false;
        rep.problems.push_back("branch sets of " + m.pattern.id_of(owner[x]) + " and " +
                               m.pattern.id_of(v) + " overlap at " + m.host.id_of(x));
      }
      owner[x] = v;
    }
  }
  ok = ok && rep.disjoint;
  for (int v = 0; v < m.pattern.vertex_count(); ++v) {
    VertexCheck c;
    c.vertex = m.pattern.id_of(v);
    c.nonempty = !m.branch_sets[v].empty();
    c.connected = c.nonempty && m.host.connected_subset(m.branch_sets[v]);
    if (!c.nonempty) rep.problems.push_back("branch set of " + c.vertex + " is empty");
    else if (!c.connected) rep.problems.push_back("branch set of " + c.vertex + " is disconnected");
    ok = ok && c.nonempty && c.connected;
    rep.branch_checks.push_back(std::move(c));
  }
  for (auto [u, v] : m.pattern.edges()) {
    EdgeCheck c;
    c.u = m.pattern.id_of(u);
    c.v = m.pattern.id_of(v);
    auto it = m.witnesses.find({u, v});
    c.touches = false;
    if (it != m.witnesses.end()) {
      auto [x, y] = it->second;
      bool x_ok = x >= 0 && x < m.host.vertex_count() && owner[x] == u;
      bool y_ok = y >= 0 && y < m.host.vertex_count() && owner[y] == v;
      if (x_ok && y_ok && m.host.has_edge(x, y)) c.touches = true;
    }
    if (!c.touches)
      rep.problems.push_back("pattern edge " + c.u + "-" + c.v + " has no valid witness");
    ok = ok && c.touches;
    rep.witness_checks.push_back(std::move(c));
  }
  rep.valid = ok;
  return rep;
}

Decomposition minor_to_decomposition(const MinorModel& m) {
  auto rep = check_minor_model(m);
  if (!rep.valid)
    fail(errc::model_violation, rep.problems.empty() ? "invalid minor model" : rep.problems.front());
  std::vector<int> owner(m.host.vertex_count(), -1);
  for (int v = 0; v < m.pattern.vertex_count(); ++v)
    for (int x : m.branch_sets[v]) owner[x] = v;
  std::vector<BagNode> nodes;
  for (int x = 0; x < m.host.vertex_count(); ++x) {
    BagNode n;
    n.id = m.host.id_of(x);
    if (owner[x] >= 0) n.bag = {owner[x]};
    nodes.push_back(std::move(n));
  }
  return Decomposition::from_indexed(m.pattern, std::move(nodes), m.host.edges(), std::nullopt,
                                     "minor-to-decomposition");
}

MinorModel extract_minor_model(const Decomposition& d) {
  MinorModel m;
  m.pattern = d.host();
  m.host = d.decomposition_graph();
  m.branch_sets.assign(m.pattern.vertex_count(), {});
  for (int n = 0; n < d.order(); ++n) {
    const auto& bag = d.nodes()[n].bag;
    if (bag.size() > 1)
      fail(errc::width_violation, "width exceeds 1 at bag '" + d.nodes()[n].id + "'");
    if (bag.size() == 1) m.branch_sets[bag[0]].push_back(n);
  }
  for (auto [u, v] : m.pattern.edges()) {
    bool found = false;
    for (auto [a, b] : d.node_edges()) {
      const auto& ba = d.nodes()[a].bag;
      const auto& bb = d.nodes()[b].bag;
      if (ba.size() != 1 || bb.size() != 1) continue;
      if ((ba[0] == u && bb[0] == v) || (ba[0] == v && bb[0] == u)) {
        m.witnesses[{u, v}] = ba[0] == u ? std::make_pair(a, b) : std::make_pair(b, a);
        found = true;
        break;
      }
    }
    if (!found)
      fail(errc::model_violation, "no witness for host edge " + m.pattern.id_of(u) + "-" +
                                      m.pattern.id_of(v) + " in the width-1 decomposition");
  }
  return m;
}

}  // namespace decompkit
