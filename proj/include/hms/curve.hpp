#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hms/fan.hpp"

namespace hms {

// Topology of the affine mirror curve of one cone.
struct AffineCurveModel {
  int64_t r = 1, m = 1, s = 0;
  int64_t group_order = 1;                // r*m = covering degree onto the pair of pants
  std::array<int64_t, 3> punctures{};     // m_1, m_2, m_3
  int64_t chi_bar = 0;                    // compactified Euler characteristic
  int64_t genus = 0;
  int64_t total_punctures() const { return punctures[0] + punctures[1] + punctures[2]; }
};

AffineCurveModel affine_curve(const ConeNormalForm& nf);

struct PickCounts {
  int64_t interior = 0, boundary = 0;
};

// Exact lattice-point counts of a convex polygon by bounding-box enumeration.
PickCounts pick_counts(const std::vector<LatticePoint>& polygon);

// Deck transformations of the covering (X,Y) -> (X^r Y^-s, Y^m), as characters.
struct MonodromyData {
  int sigma_x = 0, sigma_y = 0;  // character indices in G^dual
  int64_t orbits_x = 0, orbit_size_x = 0;
  int64_t orbits_y = 0, orbit_size_y = 0;
};

MonodromyData monodromy(const GroupData& gd);

// orbit count and common size of multiplication by chi on the character group;
// throws if the orbits are not all the same size
std::pair<int64_t, int64_t> character_orbits(const FiniteAbelianGroup& g, int chi);

// Mirror curve of the whole fan, glued along interior edges at the deepest degeneration.
struct EdgeIdentification {
  int edge = -1;                    // index into fan.edges()
  int64_t circles = 0;              // |G_tau^dual|
  // per circle: canonical edge label and the two adjacent cones' orbit data
  std::vector<std::vector<int64_t>> labels;         // canonical coker elements
  std::array<std::vector<int>, 2> orbit_reps;       // aligned with labels; char indices
};

struct GlobalCurveModel {
  std::vector<AffineCurveModel> cones;   // by triangle index
  std::vector<EdgeIdentification> interior;
  int64_t genus = 0;      // interior lattice points of the polygon
  int64_t punctures = 0;  // boundary lattice points
  int64_t chi = 0;        // 2 - 2g - punctures
};

GlobalCurveModel glue_curve(const StackyFan& fan);

}  // namespace hms
