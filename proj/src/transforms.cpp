#include "decompkit/transforms.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "decompkit/errors.hpp"

namespace decompkit {

namespace {

// the augmented decomposition the Simplify constructions run on: original
// nodes plus empty pad bags, edge set from the augmentation
struct Prepared {
  std::vector<BagNode> nodes;                       // pads appended
  std::vector<std::pair<int, int>> edges;           // on node indices
  RotationSystem rotation;                          // on node indices
  Graph graph;                                      // augmented decomposition graph
  int pre_order = 0;
  std::vector<std::string> added;
};

Prepared prepare(const Decomposition& d) {
  if (!d.embedding()) fail(errc::embedding_required, "transform needs an embedded decomposition");
  Graph dg = d.decomposition_graph();
  auto aug = augment_min_degree_3(dg, *d.embedding());
  Prepared p;
  p.pre_order = d.order();
  p.nodes = d.nodes();
  for (const auto& id : aug.added_vertices) {
    BagNode n;
    n.id = id;
    p.nodes.push_back(std::move(n));
  }
  p.edges = aug.graph.edges();
  p.rotation = aug.rotation;
  p.graph = aug.graph;
  p.added = aug.added_vertices;
  return p;
}

RotationSystem embed_or_die(const Graph& g, const char* what) {
  auto pl = test_planarity(g);
  if (!pl.planar) fail(errc::malformed_embedding, std::string(what) + " lost planarity");
  return pl.rotation;
}

// nodes X_e, Y_e per augmented edge e = XY, cycles along each node's rotation
struct CycleForm {
  std::vector<BagNode> nodes;
  std::vector<std::pair<int, int>> edges;
  // copy_at[x][y] = index of the copy of node x that faces the edge x-y
  std::map<std::pair<int, int>, int> copy_at;
};

CycleForm build_cycle_form(const Prepared& p) {
  CycleForm c;
  for (auto [a, b] : p.edges) {
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      BagNode n;
      n.id = p.nodes[x].id + "|" + p.nodes[y].id;
      n.bag = p.nodes[x].bag;
      n.belongs = p.nodes[x].id;
      c.copy_at[{x, y}] = static_cast<int>(c.nodes.size());
      c.nodes.push_back(std::move(n));
    }
    c.edges.emplace_back(c.copy_at[{a, b}], c.copy_at[{b, a}]);
  }
  for (int x = 0; x < p.graph.vertex_count(); ++x) {
    const auto& cyc = p.rotation.order[x];
    int t = static_cast<int>(cyc.size());
    for (int s = 0; s < t; ++s)
      c.edges.emplace_back(c.copy_at[{x, cyc[s]}], c.copy_at[{x, cyc[(s + 1) % t]}]);
  }
  return c;
}

TransformResult finish(const Decomposition& d, const Prepared& p, std::vector<BagNode> nodes,
                       std::vector<std::pair<int, int>> edges, const std::string& provenance) {
  auto out = Decomposition::from_indexed(d.host(), std::move(nodes), std::move(edges),
                                         std::nullopt, provenance);
  out = out.with_embedding(embed_or_die(out.decomposition_graph(), provenance.c_str()));
  TransformResult r{std::move(out), p.graph, p.rotation, p.pre_order,
                    p.graph.vertex_count(), p.graph.edge_count(), p.added};
  return r;
}

// width-2 construction shared by simplify_width and simplify_both
struct WedgeForm {
  std::vector<BagNode> nodes;
  std::vector<std::pair<int, int>> edges;
};

WedgeForm build_wedge_form(const Prepared& p, const CycleForm& cyc, const OrientationOverlay& ori) {
  WedgeForm w;
  auto arc_out_of = [&](int x, int y) {
    // true when the arc on edge {x,y} leaves x
    const std::string &ix = p.nodes[x].id, &iy = p.nodes[y].id;
    auto key = ix < iy ? std::make_pair(ix, iy) : std::make_pair(iy, ix);
    auto it = ori.forward.find(key);
    if (it == ori.forward.end()) fail(errc::malformed_input, "orientation overlay misses edge " + key.first + "-" + key.second);
    return it->second == (ix < iy);
  };

  // pair bags per cycle-form node; grid[c] maps (i,j) 1-based, i<=j, to index
  std::vector<std::map<std::pair<int, int>, int>> grid(cyc.nodes.size());
  for (int cn = 0; cn < static_cast<int>(cyc.nodes.size()); ++cn) {
    const auto& bag = cyc.nodes[cn].bag;  // sorted by host order
    int sz = static_cast<int>(bag.size());
    for (int i = 1; i <= sz; ++i)
      for (int j = i; j <= sz; ++j) {
        BagNode n;
        n.id = cyc.nodes[cn].id + "#" + std::to_string(i) + "," + std::to_string(j);
        n.bag = i == j ? std::vector<int>{bag[i - 1]} : std::vector<int>{bag[i - 1], bag[j - 1]};
        n.belongs = cyc.nodes[cn].id;
        grid[cn][{i, j}] = static_cast<int>(w.nodes.size());
        w.nodes.push_back(std::move(n));
      }
    for (int i = 1; i <= sz; ++i)
      for (int j = i; j < sz; ++j) w.edges.emplace_back(grid[cn].at({i, j}), grid[cn].at({i, j + 1}));
    for (int j = 2; j <= sz; ++j)
      for (int i = 1; i < j; ++i) w.edges.emplace_back(grid[cn].at({i, j}), grid[cn].at({i + 1, j}));
  }

  // wedge-to-wedge edges between copies consecutive around each node
  for (int x = 0; x < p.graph.vertex_count(); ++x) {
    const auto& rot = p.rotation.order[x];
    int t = static_cast<int>(rot.size());
    int sz = static_cast<int>(p.nodes[x].bag.size());
    if (sz == 0) continue;
    for (int s = 0; s < t; ++s) {
      int ce = cyc.copy_at.at({x, rot[s]});
      int cf = cyc.copy_at.at({x, rot[(s + 1) % t]});
      bool e_out = arc_out_of(x, rot[s]);
      bool f_out = arc_out_of(x, rot[(s + 1) % t]);
      for (int i = 1; i <= sz; ++i) {
        int pi = e_out ? grid[ce].at({i, sz}) : grid[ce].at({i, i});
        int qi = f_out ? grid[cf].at({i, i}) : grid[cf].at({i, sz});
        w.edges.emplace_back(pi, qi);
      }
    }
  }

  // across each arc, matching edges between the spines wherever bags share a vertex
  for (auto [a, b] : p.edges) {
    int x = arc_out_of(a, b) ? a : b;
    int y = x == a ? b : a;
    int cx = cyc.copy_at.at({x, y});
    int cy = cyc.copy_at.at({y, x});
    const auto& bx = p.nodes[x].bag;
    const auto& by = p.nodes[y].bag;
    size_t i = 0, j = 0;
    while (i < bx.size() && j < by.size()) {
      if (bx[i] < by[j]) ++i;
      else if (bx[i] > by[j]) ++j;
      else {
        w.edges.emplace_back(grid[cx].at({1, static_cast<int>(i) + 1}),
                             grid[cy].at({1, static_cast<int>(j) + 1}));
        ++i, ++j;
      }
    }
  }
  return w;
}

}  // namespace

OrientationOverlay OrientationOverlay::lexicographic(const Decomposition& d) {
  OrientationOverlay o;
  const auto& nodes = d.nodes();
  for (auto [a, b] : d.node_edges()) {
    const std::string &ia = nodes[a].id, &ib = nodes[b].id;
    auto key = ia < ib ? std::make_pair(ia, ib) : std::make_pair(ib, ia);
    o.forward[key] = true;
  }
  return o;
}

Decomposition compose(const Decomposition& d, const Decomposition& j) {
  Graph dg = d.decomposition_graph();
  if (!j.host().identical(dg))
    fail(errc::composition_mismatch, "j's host is not d's decomposition graph");
  std::vector<BagNode> nodes;
  nodes.reserve(j.order());
  for (const auto& jn : j.nodes()) {
    BagNode n;
    n.id = jn.id;
    n.belongs = jn.belongs;
    std::set<int> bag;
    for (int x : jn.bag)
      for (int v : d.nodes()[x].bag) bag.insert(v);
    n.bag.assign(bag.begin(), bag.end());
    nodes.push_back(std::move(n));
  }
  return Decomposition::from_indexed(d.host(), std::move(nodes), j.node_edges(), j.embedding(),
                                     "composition");
}

Decomposition lift_decomposition(const MinorModel& m, const Decomposition& j) {
  Decomposition width1 = minor_to_decomposition(m);
  if (!j.host().identical(m.host))
    fail(errc::composition_mismatch, "j does not decompose the model's host");
  Decomposition out = compose(width1, j);
  return Decomposition::from_indexed(out.host(), out.nodes(), out.node_edges(), out.embedding(),
                                     "lift");
}

TransformResult simplify_degree(const Decomposition& d) {
  Prepared p = prepare(d);
  CycleForm cyc = build_cycle_form(p);
  return finish(d, p, cyc.nodes, cyc.edges, "simplify-a");
}

TransformResult simplify_width(const Decomposition& d,
                               const std::optional<OrientationOverlay>& overlay) {
  Prepared p = prepare(d);
  CycleForm cyc = build_cycle_form(p);
  OrientationOverlay ori;
  if (overlay) {
    ori = *overlay;
  } else {
    for (auto [a, b] : p.edges) {
      const std::string &ia = p.nodes[a].id, &ib = p.nodes[b].id;
      auto key = ia < ib ? std::make_pair(ia, ib) : std::make_pair(ib, ia);
      ori.forward[key] = true;
    }
  }
  WedgeForm w = build_wedge_form(p, cyc, ori);
  return finish(d, p, w.nodes, w.edges, "simplify-b");
}

TransformResult simplify_both(const Decomposition& d,
                              const std::optional<OrientationOverlay>& overlay) {
  TransformResult b = simplify_width(d, overlay);
  const Decomposition& d2 = b.out;
  Graph g2 = d2.decomposition_graph();
  const RotationSystem& rot = *d2.embedding();

  // split each degree-4 node into adjacent twins, two consecutive rotation
  // neighbors each
  std::vector<BagNode> nodes;
  std::vector<std::pair<int, int>> edges;
  // for original node x and neighbor y: index of the copy handling edge x-y
  std::map<std::pair<int, int>, int> attach;
  for (int x = 0; x < g2.vertex_count(); ++x) {
    const BagNode& n = d2.nodes()[x];
    if (g2.degree(x) == 4) {
      BagNode n1 = n, n2 = n;
      n1.id = n.id + "/1";
      n2.id = n.id + "/2";
      int i1 = static_cast<int>(nodes.size());
      nodes.push_back(std::move(n1));
      int i2 = static_cast<int>(nodes.size());
      nodes.push_back(std::move(n2));
      edges.emplace_back(i1, i2);
      const auto& cyc = rot.order[x];
      attach[{x, cyc[0]}] = i1;
      attach[{x, cyc[1]}] = i1;
      attach[{x, cyc[2]}] = i2;
      attach[{x, cyc[3]}] = i2;
    } else {
      int i = static_cast<int>(nodes.size());
      nodes.push_back(n);
      for (int y : g2.neighbors(x)) attach[{x, y}] = i;
    }
  }
  for (auto [x, y] : g2.edges()) edges.emplace_back(attach.at({x, y}), attach.at({y, x}));

  auto out = Decomposition::from_indexed(d.host(), std::move(nodes), std::move(edges),
                                         std::nullopt, "simplify-c");
  out = out.with_embedding(embed_or_die(out.decomposition_graph(), "simplify-c"));
  TransformResult r = std::move(b);
  r.out = std::move(out);
  return r;
}

TransformResult compact_degree(const Decomposition& d) {
  Prepared p = prepare(d);
  // node of degree t -> path of t-2 copies; ends take two consecutive
  // rotation neighbors, inner copies one each
  std::vector<BagNode> nodes;
  std::vector<std::pair<int, int>> edges;
  std::map<std::pair<int, int>, int> attach;
  for (int x = 0; x < p.graph.vertex_count(); ++x) {
    const auto& rot = p.rotation.order[x];
    int t = static_cast<int>(rot.size());
    int copies = t - 2;
    std::vector<int> path;
    for (int c = 0; c < copies; ++c) {
      BagNode n = p.nodes[x];
      n.id = p.nodes[x].id + "/" + std::to_string(c);
      n.belongs = p.nodes[x].id;
      path.push_back(static_cast<int>(nodes.size()));
      nodes.push_back(std::move(n));
    }
    for (int c = 0; c + 1 < copies; ++c) edges.emplace_back(path[c], path[c + 1]);
    attach[{x, rot[0]}] = path.front();
    attach[{x, rot[1]}] = path.front();
    for (int s = 2; s < t - 1; ++s) attach[{x, rot[s]}] = path[s - 1];
    attach[{x, rot[t - 1]}] = path.back();
  }
  for (auto [x, y] : p.edges) edges.emplace_back(attach.at({x, y}), attach.at({y, x}));
  return finish(d, p, std::move(nodes), std::move(edges), "compact");
}

}  // namespace decompkit
