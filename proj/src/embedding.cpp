#include "decompkit/embedding.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "decompkit/errors.hpp"

namespace decompkit {

namespace {

// position of each neighbor within rot[v], checking the permutation property
std::vector<std::map<int, int>> neighbor_positions(const Graph& g, const RotationSystem& r) {
  if (static_cast<int>(r.order.size()) != g.vertex_count())
    fail(errc::malformed_embedding, "rotation covers wrong vertex count");
  std::vector<std::map<int, int>> pos(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& cyc = r.order[v];
    if (static_cast<int>(cyc.size()) != g.degree(v))
      fail(errc::malformed_embedding, "rotation at '" + g.id_of(v) + "' has wrong length");
    for (int i = 0; i < static_cast<int>(cyc.size()); ++i) {
      int w = cyc[i];
      if (w < 0 || w >= g.vertex_count() || !g.has_edge(v, w) || pos[v].count(w))
        fail(errc::malformed_embedding, "rotation at '" + g.id_of(v) + "' is not a permutation of its neighbors");
      pos[v][w] = i;
    }
  }
  return pos;
}

}  // namespace

std::vector<std::vector<int>> trace_faces(const Graph& g, const RotationSystem& r) {
  auto pos = neighbor_positions(g, r);
  // darts indexed per-vertex: dart (v, i) points to r.order[v][i]
  std::vector<int> offset(g.vertex_count() + 1, 0);
  for (int v = 0; v < g.vertex_count(); ++v) offset[v + 1] = offset[v] + g.degree(v);
  std::vector<bool> used(offset[g.vertex_count()], false);
  std::vector<std::vector<int>> faces;
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int i = 0; i < g.degree(v); ++i) {
      if (used[offset[v] + i]) continue;
      std::vector<int> walk;
      int cv = v, ci = i;
      while (!used[offset[cv] + ci]) {
        used[offset[cv] + ci] = true;
        walk.push_back(cv);
        int w = r.order[cv][ci];
        int j = pos[w].at(cv);
        cv = w;
        ci = (j + 1) % g.degree(w);
      }
      faces.push_back(std::move(walk));
    }
  }
  return faces;
}

bool euler_check(const Graph& g, const RotationSystem& r) {
  std::vector<std::vector<int>> faces;
  try {
    faces = trace_faces(g, r);
  } catch (const error&) {
    return false;
  }
  auto comps = g.components();
  std::vector<int> comp_of(g.vertex_count(), -1);
  for (int c = 0; c < static_cast<int>(comps.size()); ++c)
    for (int v : comps[c]) comp_of[v] = c;
  std::vector<long long> V(comps.size(), 0), E(comps.size(), 0), F(comps.size(), 0);
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) V[c] = comps[c].size();
  for (auto [u, v] : g.edges()) E[comp_of[u]]++, (void)v;
  for (const auto& f : faces) F[comp_of[f[0]]]++;
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    if (E[c] == 0) F[c] = 1;  // isolated vertex: one face
    if (V[c] - E[c] + F[c] != 2) return false;
  }
  return true;
}

Planarity test_planarity(const Graph& g) {
  Planarity out;
  if (g.vertex_count() == 0) {
    out.planar = true;
    return out;
  }
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                   boost::property<boost::vertex_index_t, int>,
                                   boost::property<boost::edge_index_t, int>>;
  BG bg(g.vertex_count());
  int ei = 0;
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, ei++, bg);
  using Edge = boost::graph_traits<BG>::edge_descriptor;
  std::vector<std::vector<Edge>> emb(g.vertex_count());
  std::vector<Edge> kur;
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = emb.data(),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kur));
  out.planar = planar;
  if (planar) {
    out.rotation.order.assign(g.vertex_count(), {});
    for (int v = 0; v < g.vertex_count(); ++v) {
      for (const Edge& e : emb[v]) {
        int a = static_cast<int>(boost::source(e, bg));
        int b = static_cast<int>(boost::target(e, bg));
        out.rotation.order[v].push_back(a == v ? b : a);
      }
    }
  } else {
    for (const Edge& e : kur) {
      int a = static_cast<int>(boost::source(e, bg));
      int b = static_cast<int>(boost::target(e, bg));
      out.kuratowski.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.kuratowski.begin(), out.kuratowski.end());
    out.kuratowski.erase(std::unique(out.kuratowski.begin(), out.kuratowski.end()),
                         out.kuratowski.end());
  }
  return out;
}

AugmentResult augment_min_degree_3(const Graph& g, const RotationSystem& r) {
  if (g.vertex_count() >= 4 && g.min_degree() >= 3) {
    neighbor_positions(g, r);  // structural check only
    return {g, r, {}};
  }

  std::vector<std::string> ids = g.vertex_ids();
  std::set<std::string> taken(ids.begin(), ids.end());
  std::vector<std::string> added;
  int pad = 0;
  while (static_cast<int>(ids.size()) < 4) {
    std::string id;
    do {
      id = "aug" + std::to_string(pad++);
    } while (taken.count(id));
    taken.insert(id);
    ids.push_back(id);
    added.push_back(id);
  }

  std::vector<std::pair<int, int>> es;
  for (auto [u, v] : g.edges()) es.emplace_back(u, v);
  Graph work = Graph::build_indexed(ids, es);

  // join components so one triangulation pass covers everything
  auto comps = work.components();
  for (int c = 1; c < static_cast<int>(comps.size()); ++c)
    es.emplace_back(comps[0][0], comps[c][0]);
  work = Graph::build_indexed(ids, es);

  auto pl = test_planarity(work);
  if (!pl.planar) fail(errc::malformed_embedding, "augmentation input is not planar");

  // add chords until every face walk has all its distinct vertex pairs
  // adjacent; for a connected simple plane graph on >= 4 vertices this ends
  // in a triangulation, hence minimum degree >= 3
  for (;;) {
    auto faces = trace_faces(work, pl.rotation);
    bool changed = false;
    std::set<std::pair<int, int>> have(work.edges().begin(), work.edges().end());
    std::vector<std::pair<int, int>> extra;
    for (const auto& walk : faces) {
      std::vector<int> distinct;
      std::set<int> seen;
      for (int v : walk)
        if (seen.insert(v).second) distinct.push_back(v);
      if (distinct.size() < 3) continue;
      // chords fanned from a single walk vertex stay planar inside one face
      for (int apex : distinct) {
        std::vector<std::pair<int, int>> fan;
        for (int w : distinct) {
          if (w == apex) continue;
          auto key = std::minmax(apex, w);
          if (!have.count({key.first, key.second})) fan.emplace_back(key.first, key.second);
        }
        if (!fan.empty()) {
          for (auto e : fan) have.insert(e);
          extra.insert(extra.end(), fan.begin(), fan.end());
          changed = true;
          break;
        }
      }
    }
    if (!changed) break;
    work = work.with_extra_edges(extra);
    pl = test_planarity(work);
    if (!pl.planar) fail(errc::malformed_embedding, "triangulation lost planarity");
  }

  if (work.min_degree() < 3)
    fail(errc::malformed_embedding, "augmentation failed to reach minimum degree 3");
  return {work, pl.rotation, added};
}

}  // namespace decompkit
