#pragma once

#include <cstdint>
#include <vector>

#include "hms/ribbon.hpp"
#include "hms/series.hpp"

namespace hms {

// Quiver of a wheel: vertices are the intervals between spokes, arrows are the
// spokes. Gamma(0,0) has no intervals and is flagged as the circle model.
struct Quiver {
  int vertices = 0;
  struct Arrow {
    int from, to;
  };
  std::vector<Arrow> arrows;
  bool circle_model = false;
};

Quiver wheel_quiver(const Wheel& w);

// path counts from vertex j to vertex i, bucketed by length (even parity)
GradedSeries wheel_hom_series(const Wheel& w, int i, int j, int N);

// Dimension of the degree-(b-a) slice of k[x,y] with generator weights p and q,
// reported at weight b-a; zero elsewhere and for negative twists.
GradedSeries weighted_p1_series(int p, int q, int a, int b, int N);

// Independent monomial-count model of the wheel quiver: monomials x^alpha
// y^beta weighted by the twist lattice Z<x1,x2>/(p x1 = q x2), with vertex k
// carrying twist k*x1 on the up arm and (p+q-k)*x2 on the down arm. Counts at
// weight alpha+beta match path counts between the interval generators.
GradedSeries wheel_monomial_oracle(int p, int q, int a, int b, int N);

struct GeneratorId {
  int axis = 1;   // j in {1,2}: the generator supported on the axis z_j = 0
  int theta = 0;  // character index
  bool operator==(const GeneratorId&) const = default;
};

// Hom series between ordered generator pairs; deterministic dense layout.
class HomTable {
public:
  HomTable() = default;
  HomTable(int64_t group_order, int trunc);
  int64_t group_order() const { return n_; }
  int trunc() const { return trunc_; }
  int64_t size() const { return 2 * n_; }
  int64_t flat(const GeneratorId& g) const { return (g.axis - 1) * n_ + g.theta; }
  GeneratorId unflat(int64_t k) const { return {int(k / n_) + 1, int(k % n_)}; }
  GradedSeries& at(const GeneratorId& a, const GeneratorId& b) {
    return entries_[size_t(flat(a) * size() + flat(b))];
  }
  const GradedSeries& at(const GeneratorId& a, const GeneratorId& b) const {
    return entries_[size_t(flat(a) * size() + flat(b))];
  }

private:
  int64_t n_ = 0;
  int trunc_ = 0;
  std::vector<GradedSeries> entries_;
};

// The interval carrying generator (j, theta) on the canonical skeleton:
// side 3-j, label c_j * theta^{-1} with c_1 = 1 and c_2 = rho_1.
int generator_interval(const GroupData& gd, const GeneratorId& g);

// Monodromy-filtered word counting between two generators on the labeled
// skeleton; closed form per bucket (loop powers and alternating u-strings).
GradedSeries skeleton_hom_series(const LabeledSkeleton& sk, const GeneratorId& from,
                                 const GeneratorId& to, int N);

// full table over all generator pairs; the parallel kernel and the serial
// reference must agree entrywise
HomTable affine_hom_table(const LabeledSkeleton& sk, int N);
HomTable affine_hom_table_serial(const LabeledSkeleton& sk, int N);

// Laurent-loop counting on a labeled circle: dim 1 at each weight w in [-N, N]
// with shift^w = theta' * theta^{-1}, even parity.
GradedSeries circle_hom_series(const FiniteAbelianGroup& g, int shift_chi, int theta,
                               int theta_p, int N);

}  // namespace hms
