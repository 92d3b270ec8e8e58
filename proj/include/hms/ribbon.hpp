#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hms/fan.hpp"

namespace hms {

// Half-edge graph with a cyclic order at every vertex. External edges are the
// tau-fixed half-edges; internal edges are twin pairs.
class RibbonGraph {
public:
  int add_vertex();
  // internal edge between u and v (loops allowed); returns the edge id
  int add_edge(int u, int v);
  // external edge at v
  int add_external(int v);

  int num_vertices() const { return int(rot_.size()); }
  int num_edges() const { return int(edges_.size()); }
  int64_t euler_characteristic() const { return num_vertices() - num_edges(); }

  // half-edge structure
  int tau(int h) const { return half_[h].twin; }
  int vertex_of(int h) const { return half_[h].vertex; }
  int edge_of(int h) const { return half_[h].edge; }
  bool external_half(int h) const { return half_[h].twin == h; }
  const std::vector<int>& rotation(int v) const { return rot_[v]; }
  void set_rotation(int v, const std::vector<int>& halves);

  bool edge_external(int e) const { return edges_[e][1] < 0; }
  // finite endpoints of an edge: two for internal (equal for loops), one for external
  std::vector<int> endpoints(int e) const;
  std::vector<int> incident_edges(int v) const;

  void check() const;  // structural invariants; throws on violation

  // DOT rendering with stable ordering; names may be empty
  std::string to_dot(const std::map<int, std::string>& vertex_names,
                     const std::map<int, std::string>& edge_names) const;

private:
  struct Half {
    int vertex, twin, edge;
  };
  std::vector<Half> half_;
  std::vector<std::vector<int>> rot_;
  std::vector<std::array<int, 2>> edges_;  // half ids; [1] = -1 for external
};

int64_t euler_characteristic(const RibbonGraph& g);

// Wheel Gamma(p,q): central circle, p up and q down spokes.
struct Wheel {
  int p = 0, q = 0;
  std::vector<bool> up;  // arrangement per spoke position; canonical: p ups then q downs
  RibbonGraph graph;
  std::vector<int> feet, arcs, spokes;  // ids; empty spoke list for Gamma(0,0)
  bool bare_circle() const { return p == 0 && q == 0; }
};

Wheel make_wheel(int p, int q);
Wheel make_wheel(int p, int q, const std::vector<bool>& arrangement);

// two lollipops joined by a segment; the skeleton of the pair of pants
RibbonGraph make_dumbbell();

// Subgraphs may contain edges dangling at removed vertices.
struct SubgraphRef {
  std::vector<int> vertices;
  std::vector<int> edges;
};

struct SubgraphPredicates {
  bool is_open = false;
  bool is_good_closed = false;
};

SubgraphPredicates subgraph_predicates(const RibbonGraph& g, const SubgraphRef& h);

// The G^dual-labeled lift of the dumbbell skeleton. `slots` picks the two
// puncture groups carrying circles; {1,2} is the Hom-bearing default.
class LabeledSkeleton {
public:
  struct Circle {
    int slot = 0;                 // 1..3
    std::vector<int> labels;      // interval labels (character indices) in shift order
    std::vector<int> feet, arcs;  // graph ids; foot k follows interval k
  };

  static LabeledSkeleton build(const GroupData& gd, std::array<int, 2> slots = {1, 2});

  const GroupData& group_data() const { return gd_; }
  const RibbonGraph& graph() const { return graph_; }
  std::array<int, 2> slots() const { return slots_; }
  const std::vector<Circle>& circles() const { return circles_; }
  std::vector<const Circle*> circles_at_slot(int slot) const;
  int shift_char(int slot) const;  // rho for that slot
  // shift of the off-base crossing letter: (rho_a rho_b)^{-1} for the pair
  int crossing_shift() const;
  int segment_edge(int chi) const { return segments_.at(chi); }
  // (circle index, position) of an interval label on a slot's side
  std::pair<int, int> locate(int slot, int chi) const;
  int64_t chi() const { return graph_.euler_characteristic(); }

  std::string to_dot() const;

private:
  GroupData gd_;
  std::array<int, 2> slots_{1, 2};
  std::vector<Circle> circles_;
  std::vector<int> segments_;  // per character: segment edge id
  std::array<std::vector<std::pair<int, int>>, 4> locate_;
  RibbonGraph graph_;
};

// interval labels of one circle restricted to an edge of the fan: the common
// value of pi_tau(label^{-1}), which is constant on the circle
std::vector<int64_t> circle_edge_label(const StackyFan& fan, const PicardCharTable& pct,
                                       int edge, const CokernelModel& edge_coker,
                                       const GroupData& gd, const LabeledSkeleton::Circle& c);

// per-cone slot pair exposing circles at every interior edge; throws FanError
// when a cone has three interior edges
std::vector<std::array<int, 2>> choose_placements(const StackyFan& fan,
                                                  const std::vector<GroupData>& gds);

struct GluedCircle {
  int edge = -1;
  std::vector<int64_t> label;        // canonical element of coker(tau)
  std::array<int, 2> tris{-1, -1};
  std::array<int, 2> slots{0, 0};
  std::array<int64_t, 2> spokes{0, 0};  // r_i from each side: the wheel pattern counts
  std::array<int, 2> circle_idx{-1, -1};
  std::vector<int> feet, arcs;          // the merged circle in the global graph
};

struct GlobalSkeleton {
  RibbonGraph graph;
  std::vector<GluedCircle> glued;
  // global ids: foot_of[(tri, slot, char)] for introspection and DOT export
  std::map<std::array<int, 3>, int> foot_of;
  int64_t chi = 0;
};

GlobalSkeleton glue_skeletons(const StackyFan& fan, const std::vector<GroupData>& gds,
                              const std::vector<LabeledSkeleton>& skels,
                              const std::vector<PicardCharTable>& pcts);

}  // namespace hms
