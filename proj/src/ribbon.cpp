#include "hms/ribbon.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hms {

int RibbonGraph::add_vertex() {
  rot_.emplace_back();
  return int(rot_.size()) - 1;
}

int RibbonGraph::add_edge(int u, int v) {
  int h1 = int(half_.size());
  int h2 = h1 + 1;
  int e = int(edges_.size());
  half_.push_back({u, h2, e});
  half_.push_back({v, h1, e});
  edges_.push_back({h1, h2});
  rot_[u].push_back(h1);
  rot_[v].push_back(h2);
  return e;
}

int RibbonGraph::add_external(int v) {
  int h = int(half_.size());
  int e = int(edges_.size());
  half_.push_back({v, h, e});
  edges_.push_back({h, -1});
  rot_[v].push_back(h);
  return e;
}

void RibbonGraph::set_rotation(int v, const std::vector<int>& halves) {
  std::vector<int> a = rot_[v], b = halves;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw std::logic_error("set_rotation: not a permutation of the incident halves");
  rot_[v] = halves;
}

std::vector<int> RibbonGraph::endpoints(int e) const {
  std::vector<int> out{half_[edges_[e][0]].vertex};
  if (edges_[e][1] >= 0) out.push_back(half_[edges_[e][1]].vertex);
  return out;
}

std::vector<int> RibbonGraph::incident_edges(int v) const {
  std::vector<int> out;
  for (int h : rot_[v]) out.push_back(half_[h].edge);
  return out;
}

void RibbonGraph::check() const {
  for (int h = 0; h < int(half_.size()); ++h) {
    if (tau(tau(h)) != h) throw std::logic_error("RibbonGraph: tau not an involution");
    if (external_half(h) && edges_[half_[h].edge][1] >= 0)
      throw std::logic_error("RibbonGraph: fixed half on an internal edge");
  }
  std::vector<int> seen(half_.size(), 0);
  for (int v = 0; v < num_vertices(); ++v)
    for (int h : rot_[v]) {
      if (half_[h].vertex != v) throw std::logic_error("RibbonGraph: rotation/vertex mismatch");
      if (seen[h]++) throw std::logic_error("RibbonGraph: half-edge in two rotations");
    }
  for (int c : seen)
    if (c != 1) throw std::logic_error("RibbonGraph: half-edge missing from rotations");
}

std::string RibbonGraph::to_dot(const std::map<int, std::string>& vertex_names,
                                const std::map<int, std::string>& edge_names) const {
  std::ostringstream os;
  os << "graph ribbon {\n";
  for (int v = 0; v < num_vertices(); ++v) {
    os << "  v" << v;
    auto it = vertex_names.find(v);
    if (it != vertex_names.end()) os << " [label=\"" << it->second << "\"]";
    os << ";\n";
  }
  for (int v = 0; v < num_vertices(); ++v) {
    // cyclic order encoded in port ordering comments
    os << "  // rot v" << v << ":";
    for (int h : rot_[v]) os << " e" << half_[h].edge;
    os << "\n";
  }
  for (int e = 0; e < num_edges(); ++e) {
    auto ends = endpoints(e);
    os << "  v" << ends[0] << " -- ";
    if (ends.size() == 2) os << "v" << ends[1];
    else os << "ext" << e;
    auto it = edge_names.find(e);
    if (it != edge_names.end()) os << " [label=\"" << it->second << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

int64_t euler_characteristic(const RibbonGraph& g) { return g.euler_characteristic(); }

Wheel make_wheel(int p, int q) {
  std::vector<bool> arr(size_t(p + q), false);
  for (int i = 0; i < p; ++i) arr[i] = true;
  return make_wheel(p, q, arr);
}

Wheel make_wheel(int p, int q, const std::vector<bool>& arrangement) {
  if (p < 0 || q < 0) throw std::invalid_argument("make_wheel: negative spoke count");
  if (int(arrangement.size()) != p + q ||
      std::count(arrangement.begin(), arrangement.end(), true) != p)
    throw std::invalid_argument("make_wheel: arrangement does not match (p,q)");
  Wheel w;
  w.p = p;
  w.q = q;
  w.up = arrangement;
  const int n = p + q;
  if (n == 0) {
    int v = w.graph.add_vertex();
    w.feet.push_back(v);
    w.arcs.push_back(w.graph.add_edge(v, v));
    w.graph.check();
    return w;
  }
  for (int k = 0; k < n; ++k) w.feet.push_back(w.graph.add_vertex());
  for (int k = 0; k < n; ++k) w.arcs.push_back(w.graph.add_edge(w.feet[k], w.feet[(k + 1) % n]));
  for (int k = 0; k < n; ++k) w.spokes.push_back(w.graph.add_external(w.feet[k]));
  w.graph.check();
  return w;
}

RibbonGraph make_dumbbell() {
  RibbonGraph g;
  int a = g.add_vertex(), b = g.add_vertex();
  g.add_edge(a, a);
  g.add_edge(b, b);
  g.add_edge(a, b);
  g.check();
  return g;
}

SubgraphPredicates subgraph_predicates(const RibbonGraph& g, const SubgraphRef& h) {
  for (int v : h.vertices)
    if (v < 0 || v >= g.num_vertices()) throw std::invalid_argument("subgraph: bad vertex id");
  for (int e : h.edges)
    if (e < 0 || e >= g.num_edges()) throw std::invalid_argument("subgraph: bad edge id");
  std::set<int> vs(h.vertices.begin(), h.vertices.end());
  std::set<int> es(h.edges.begin(), h.edges.end());

  SubgraphPredicates out;
  out.is_open = true;
  for (int v : vs)
    for (int e : g.incident_edges(v))
      if (!es.count(e)) out.is_open = false;

  bool closed = true;
  for (int e : es)
    for (int v : g.endpoints(e))
      if (!vs.count(v)) closed = false;
  if (closed) {
    bool good = true;
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (vs.count(v)) continue;
      int valency = 0;
      for (int e : g.incident_edges(v))
        if (!es.count(e)) ++valency;
      if (valency == 1) good = false;
    }
    out.is_good_closed = good;
  }
  return out;
}

LabeledSkeleton LabeledSkeleton::build(const GroupData& gd, std::array<int, 2> slots) {
  if (slots[0] < 1 || slots[0] > 3 || slots[1] < 1 || slots[1] > 3 || slots[0] >= slots[1])
    throw std::invalid_argument("LabeledSkeleton: slots must be an ordered pair in 1..3");
  LabeledSkeleton sk;
  sk.gd_ = gd;
  sk.slots_ = slots;
  const int64_t n = gd.order();
  for (auto& l : sk.locate_) l.assign(size_t(n), {-1, -1});

  for (int side = 0; side < 2; ++side) {
    int slot = slots[side];
    int rho = gd.rho[slot - 1];
    auto [m_i, r_i] = gd.seq[slot - 1];
    std::vector<bool> seen(size_t(n), false);
    int64_t circles_made = 0;
    for (int start = 0; start < n; ++start) {
      if (seen[start]) continue;
      Circle c;
      c.slot = slot;
      int cur = start;
      do {
        seen[cur] = true;
        c.labels.push_back(cur);
        cur = gd.chi_mul(cur, rho);
      } while (cur != start);
      if (int64_t(c.labels.size()) != r_i)
        throw std::logic_error("LabeledSkeleton: orbit size differs from r_i");
      int rsz = int(c.labels.size());
      for (int k = 0; k < rsz; ++k) c.feet.push_back(sk.graph_.add_vertex());
      for (int k = 0; k < rsz; ++k)
        c.arcs.push_back(sk.graph_.add_edge(c.feet[(k + rsz - 1) % rsz], c.feet[k]));
      for (int k = 0; k < rsz; ++k)
        sk.locate_[slot].at(size_t(c.labels[k])) = {int(sk.circles_.size()), k};
      sk.circles_.push_back(std::move(c));
      ++circles_made;
    }
    if (circles_made != m_i)
      throw std::logic_error("LabeledSkeleton: circle count differs from m_i");
  }

  // segment labeled theta joins interval (slot_a, theta) to interval (slot_b, theta),
  // attached at the foot that follows each interval
  sk.segments_.assign(size_t(n), -1);
  for (int chi = 0; chi < n; ++chi) {
    auto [ca, pa] = sk.locate(slots[0], chi);
    auto [cb, pb] = sk.locate(slots[1], chi);
    int fa = sk.circles_[ca].feet[pa];
    int fb = sk.circles_[cb].feet[pb];
    sk.segments_[chi] = sk.graph_.add_edge(fa, fb);
  }
  // rotations: (arc in, arc out, segment) at every foot
  for (const auto& c : sk.circles_) {
    int rsz = int(c.labels.size());
    for (int k = 0; k < rsz; ++k) {
      int v = c.feet[k];
      int seg = sk.segments_[c.labels[k]];
      int in_arc = c.arcs[k], out_arc = c.arcs[(k + 1) % rsz];
      std::vector<int> order;
      for (int h : sk.graph_.rotation(v)) {
        int e = sk.graph_.edge_of(h);
        if (e == in_arc && (in_arc != out_arc || order.empty())) order.push_back(h);
      }
      for (int h : sk.graph_.rotation(v))
        if (sk.graph_.edge_of(h) == out_arc &&
            std::find(order.begin(), order.end(), h) == order.end())
          order.push_back(h);
      for (int h : sk.graph_.rotation(v))
        if (sk.graph_.edge_of(h) == seg) order.push_back(h);
      sk.graph_.set_rotation(v, order);
    }
  }
  sk.graph_.check();
  if (sk.chi() != -n) throw std::logic_error("LabeledSkeleton: Euler characteristic mismatch");
  return sk;
}

std::vector<const LabeledSkeleton::Circle*> LabeledSkeleton::circles_at_slot(int slot) const {
  std::vector<const Circle*> out;
  for (const auto& c : circles_)
    if (c.slot == slot) out.push_back(&c);
  return out;
}

int LabeledSkeleton::shift_char(int slot) const { return gd_.rho[slot - 1]; }

int LabeledSkeleton::crossing_shift() const {
  return gd_.chi_inv(gd_.chi_mul(gd_.rho[slots_[0] - 1], gd_.rho[slots_[1] - 1]));
}

std::pair<int, int> LabeledSkeleton::locate(int slot, int chi) const {
  auto pr = locate_[slot].at(size_t(chi));
  if (pr.first < 0) throw std::logic_error("LabeledSkeleton::locate: slot carries no circles");
  return pr;
}

std::string LabeledSkeleton::to_dot() const {
  std::map<int, std::string> vn, en;
  for (const auto& c : circles_)
    for (size_t k = 0; k < c.labels.size(); ++k)
      vn[c.feet[k]] = "s" + std::to_string(c.slot) + ":" + gd_.group.tuple_str(c.labels[k]);
  for (int chi = 0; chi < gd_.order(); ++chi)
    en[segments_[chi]] = "seg" + gd_.group.tuple_str(chi);
  return graph_.to_dot(vn, en);
}

std::vector<int64_t> circle_edge_label(const StackyFan& fan, const PicardCharTable& pct,
                                       int edge, const CokernelModel& edge_coker,
                                       const GroupData& gd, const LabeledSkeleton::Circle& c) {
  std::vector<int64_t> label =
      restrict_char_to_edge(fan, pct, edge, edge_coker, gd.chi_inv(c.labels[0]));
  for (int chi : c.labels)
    if (restrict_char_to_edge(fan, pct, edge, edge_coker, gd.chi_inv(chi)) != label)
      throw std::logic_error("circle_edge_label: label not constant on the circle");
  return label;
}

std::vector<std::array<int, 2>> choose_placements(const StackyFan& fan,
                                                  const std::vector<GroupData>& gds) {
  std::vector<std::set<int>> needed(fan.triangles().size());
  for (int e : fan.interior_edges())
    for (int side = 0; side < 2; ++side) {
      int t = fan.edges()[e].tris[side];
      needed[t].insert(gds[t].nf.slot[fan.omitted_position(e, t)]);
    }
  std::vector<std::array<int, 2>> out;
  for (size_t t = 0; t < needed.size(); ++t) {
    if (needed[t].size() > 2)
      throw FanError("uncoverable circle placement: cone " + std::to_string(t) +
                     " has three interior edges");
    for (std::array<int, 2> cand : {std::array<int, 2>{1, 2}, {1, 3}, {2, 3}}) {
      bool ok = true;
      for (int s : needed[t])
        if (s != cand[0] && s != cand[1]) ok = false;
      if (ok) {
        out.push_back(cand);
        break;
      }
    }
  }
  return out;
}

GlobalSkeleton glue_skeletons(const StackyFan& fan, const std::vector<GroupData>& gds,
                              const std::vector<LabeledSkeleton>& skels,
                              const std::vector<PicardCharTable>& pcts) {
  GlobalSkeleton gs;
  const int ntri = int(fan.triangles().size());

  // classify: which (tri, circle) pairs get merged at which interior edge
  struct Site {
    int edge;
    CokernelModel coker;
    std::array<int, 2> tris, slots;
    // per label: circle index on each side
    std::vector<std::vector<int64_t>> labels;
    std::vector<std::array<int, 2>> circle_of_label;
  };
  std::vector<Site> sites;
  std::set<std::pair<int, int>> merged;  // (tri, circle index)
  for (int e : fan.interior_edges()) {
    const auto& fe = fan.edges()[e];
    Site site;
    site.edge = e;
    site.coker = stacky_picard(fan, {fe.v[0], fe.v[1]});
    site.tris = fe.tris;
    site.labels = site.coker.torsion_elements();
    site.circle_of_label.assign(site.labels.size(), {-1, -1});
    for (int side = 0; side < 2; ++side) {
      int t = fe.tris[side];
      int slot = gds[t].nf.slot[fan.omitted_position(e, t)];
      site.slots[side] = slot;
      bool has = skels[t].slots()[0] == slot || skels[t].slots()[1] == slot;
      if (!has)
        throw FanError("uncoverable circle placement: cone " + std::to_string(t) +
                       " exposes no circles at an interior edge");
      const auto& circles = skels[t].circles();
      for (size_t ci = 0; ci < circles.size(); ++ci) {
        if (circles[ci].slot != slot) continue;
        auto label = circle_edge_label(fan, pcts[t], e, site.coker, gds[t], circles[ci]);
        auto it = std::find(site.labels.begin(), site.labels.end(), label);
        if (it == site.labels.end()) throw std::logic_error("glue_skeletons: unknown label");
        auto& slot_pair = site.circle_of_label[size_t(it - site.labels.begin())];
        if (slot_pair[side] >= 0)
          throw std::logic_error("glue_skeletons: duplicate circle label");
        slot_pair[side] = int(ci);
        merged.insert({t, int(ci)});
      }
    }
    for (const auto& pr : site.circle_of_label)
      if (pr[0] < 0 || pr[1] < 0)
        throw std::logic_error("glue_skeletons: circle label sets do not match across the edge");
    sites.push_back(std::move(site));
  }

  // assemble the global graph: feet first (merged circles keep all feet)
  for (int t = 0; t < ntri; ++t)
    for (const auto& c : skels[t].circles())
      for (size_t k = 0; k < c.labels.size(); ++k)
        gs.foot_of[{t, c.slot, c.labels[k]}] = gs.graph.add_vertex();

  auto foot = [&](int t, int slot, int chi) { return gs.foot_of.at({t, slot, chi}); };

  // arcs of unmerged circles
  for (int t = 0; t < ntri; ++t)
    for (size_t ci = 0; ci < skels[t].circles().size(); ++ci) {
      if (merged.count({t, int(ci)})) continue;
      const auto& c = skels[t].circles()[ci];
      int rsz = int(c.labels.size());
      for (int k = 0; k < rsz; ++k)
        gs.graph.add_edge(foot(t, c.slot, c.labels[(k + rsz - 1) % rsz]),
                          foot(t, c.slot, c.labels[k]));
    }

  // merged circles: all feet of both sides on one circle, side-0 block first
  for (const auto& site : sites) {
    for (size_t li = 0; li < site.labels.size(); ++li) {
      GluedCircle gc;
      gc.edge = site.edge;
      gc.label = site.labels[li];
      gc.tris = site.tris;
      gc.slots = site.slots;
      gc.circle_idx = site.circle_of_label[li];
      std::vector<int> ring;
      for (int side = 0; side < 2; ++side) {
        const auto& c = skels[site.tris[side]].circles()[gc.circle_idx[side]];
        gc.spokes[side] = int64_t(c.labels.size());
        for (int chi : c.labels) ring.push_back(foot(site.tris[side], c.slot, chi));
      }
      for (size_t k = 0; k < ring.size(); ++k) {
        gc.feet.push_back(ring[k]);
        gc.arcs.push_back(gs.graph.add_edge(ring[(k + ring.size() - 1) % ring.size()], ring[k]));
      }
      gs.glued.push_back(std::move(gc));
    }
  }

  // segments
  for (int t = 0; t < ntri; ++t) {
    auto slots = skels[t].slots();
    for (int chi = 0; chi < gds[t].order(); ++chi)
      gs.graph.add_edge(foot(t, slots[0], chi), foot(t, slots[1], chi));
  }
  gs.graph.check();
  gs.chi = gs.graph.euler_characteristic();

  // wheel-pattern validation at every site
  for (const auto& gc : gs.glued) {
    for (int side = 0; side < 2; ++side) {
      int t = gc.tris[side];
      auto [m_i, r_i] = gds[t].seq[gc.slots[side] - 1];
      if (gc.spokes[side] != r_i)
        throw std::logic_error("glue_skeletons: spoke count differs from r_i");
      if (r_i * m_i != gds[t].order())
        throw std::logic_error("glue_skeletons: wheel side-consistency failed");
    }
    SubgraphRef circle{gc.feet, gc.arcs};
    auto pred = subgraph_predicates(gs.graph, circle);
    if (!pred.is_good_closed)
      throw std::logic_error("glue_skeletons: glued circle is not good closed");
  }
  return gs;
}

}  // namespace hms
