#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hms/group.hpp"
#include "hms/intmat.hpp"

namespace hms {

struct LatticePoint {
  int64_t x = 0, y = 0;
  bool operator==(const LatticePoint&) const = default;
  auto operator<=>(const LatticePoint&) const = default;
};

// malformed input; message carries the offending indices
class FanError : public std::runtime_error {
public:
  explicit FanError(const std::string& what) : std::runtime_error(what) {}
};

struct Triangle {
  std::array<int, 3> v;  // point indices, stored counterclockwise
};

struct FanEdge {
  std::array<int, 2> v;     // point indices, v[0] < v[1]
  bool interior = false;
  std::array<int, 2> tris;  // adjacent triangle indices; tris[1] = -1 on the boundary
};

// Cone over a triangulated lattice polygon at height one.
class StackyFan {
public:
  static StackyFan parse(const std::string& json_text);
  static StackyFan from_data(std::vector<LatticePoint> points,
                             std::vector<std::array<int, 3>> triangles);

  const std::vector<LatticePoint>& points() const { return points_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<FanEdge>& edges() const { return edges_; }
  std::vector<int> interior_edges() const;
  // vertices of the polygon hull, counterclockwise
  const std::vector<LatticePoint>& hull() const { return hull_; }

  // doubled area of triangle t
  int64_t doubled_area(int t) const;
  // local position (0..2) of the edge inside triangle t: the position of the
  // omitted vertex in the triangle's stored order
  int omitted_position(int edge, int t) const;

private:
  void validate();
  bool on_segment_hull_edge(const LatticePoint& a, const LatticePoint& b) const;
  std::vector<LatticePoint> points_;
  std::vector<Triangle> triangles_;
  std::vector<FanEdge> edges_;
  std::vector<LatticePoint> hull_;
};

// Paper-normal coordinates of a CY 3-cone: rays (r,-s,1), (0,m,1), (0,0,1).
struct ConeNormalForm {
  int64_t r = 1, m = 1, s = 0;
  IntMat basis_change;      // 3x3 unimodular; basis_change * input ray = normal ray
  std::array<int, 3> slot;  // slot[pos] in {1,2,3}: where input position pos landed
};

// The three rays as height-one lattice points, in a fixed order.
// Throws FanError on degenerate input.
ConeNormalForm normalize_cone(const LatticePoint& b1, const LatticePoint& b2,
                              const LatticePoint& b3);

// G = ker phi with its characters, both element representations reconciled.
struct GroupData {
  ConeNormalForm nf;
  FiniteAbelianGroup group;  // order r*m; also the shape of its character group
  int eta1 = 0, eta2 = 0;    // distinguished elements: (a,b) = eta1^a eta2^b
  std::array<int, 3> rho{};  // coordinate characters rho_1, rho_2, rho_3
  // image of each element in (C*)^3 as exponent triples, in units of 1/(r*m)
  std::vector<std::array<int64_t, 3>> embedding;
  std::array<std::pair<int64_t, int64_t>, 3> seq;  // (m_i, r_i)

  int64_t order() const { return group.order(); }
  // character evaluation in units of 1/group.exponent()
  int64_t eval(int chi, int g) const { return group.pair(chi, g); }
  int chi_mul(int a, int b) const { return group.mul(a, b); }
  int chi_inv(int a) const { return group.inv(a); }
  int chi_pow(int a, int64_t k) const { return group.pow(a, int64_t(k)); }
};

GroupData structure_group(const ConeNormalForm& nf);

// (m_i, r_i) for i = 1..3 by the gcd formulas
std::array<std::pair<int64_t, int64_t>, 3> sequence_data(const ConeNormalForm& nf);

// Cokernel of u -> (<u, b_i>)_i over a ray subset (sorted point indices).
CokernelModel stacky_picard(const StackyFan& fan, const std::vector<int>& ray_subset);

// projection between two stacky Picard models, sub_rays ⊆ rays of `from`
std::vector<int64_t> picard_project(const CokernelModel& from, const std::vector<int>& from_rays,
                                    const CokernelModel& to, const std::vector<int>& to_rays,
                                    const std::vector<int64_t>& elem);

// Identification of a cone's stacky Picard model with the characters of its
// structure group: the class of e_i maps to rho_{slot(i)}. Bijectivity is
// verified at construction.
struct PicardCharTable {
  std::vector<int> rays;  // point indices in triangle vertex order
  CokernelModel coker;
  std::vector<std::vector<int64_t>> elems;  // torsion elements, canonical order
  std::vector<int> elem_to_char;            // aligned with elems
  std::vector<std::vector<int64_t>> char_to_elem;
};

PicardCharTable picard_char_table(const StackyFan& fan, int tri, const GroupData& gd);

// restriction of a character of G_sigma to an edge label in coker(tau)
std::vector<int64_t> restrict_char_to_edge(const StackyFan& fan, const PicardCharTable& pct,
                                           int edge, const CokernelModel& edge_coker, int chi);

}  // namespace hms
