#include "hms/fukaya.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hms {

Quiver wheel_quiver(const Wheel& w) {
  Quiver q;
  const int n = w.p + w.q;
  if (n == 0) {
    q.circle_model = true;
    return q;
  }
  q.vertices = n;
  // interval k sits between spoke k and spoke k+1; spoke k has interval
  // (k-1 mod n) right before it and interval k right after it
  for (int k = 0; k < n; ++k) {
    int before = (k + n - 1) % n, after = k;
    if (w.up[k]) q.arrows.push_back({before, after});
    else q.arrows.push_back({after, before});
  }
  return q;
}

GradedSeries wheel_hom_series(const Wheel& w, int i, int j, int N) {
  Quiver q = wheel_quiver(w);
  if (q.circle_model)
    throw std::invalid_argument("wheel_hom_series: Gamma(0,0) carries the circle model");
  if (i < 0 || i >= q.vertices || j < 0 || j >= q.vertices)
    throw std::invalid_argument("wheel_hom_series: vertex not in quiver");
  GradedSeries out(N);
  std::vector<int64_t> dp(size_t(q.vertices), 0);
  dp[size_t(j)] = 1;
  out.add(Parity::Even, 0, dp[size_t(i)]);
  for (int len = 1; len <= N; ++len) {
    std::vector<int64_t> next(size_t(q.vertices), 0);
    for (const auto& a : q.arrows) next[size_t(a.to)] += dp[size_t(a.from)];
    dp = std::move(next);
    out.add(Parity::Even, len, dp[size_t(i)]);
  }
  return out;
}

GradedSeries weighted_p1_series(int p, int q, int a, int b, int N) {
  if (p < 1 || q < 1) throw std::invalid_argument("weighted_p1_series: weights must be positive");
  GradedSeries out(N);
  int d = b - a;
  if (d < 0 || d > N) return out;
  int64_t count = 0;
  for (int alpha = 0; alpha * p <= d; ++alpha)
    if ((d - alpha * p) % q == 0) ++count;
  out.add(Parity::Even, d, count);
  return out;
}

GradedSeries wheel_monomial_oracle(int p, int q, int a, int b, int N) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("wheel_monomial_oracle: spoke counts must be positive");
  const int n = p + q;
  if (a < 0 || a >= n || b < 0 || b >= n)
    throw std::invalid_argument("wheel_monomial_oracle: vertex out of range");
  auto twist = [&](int k) -> std::pair<int64_t, int64_t> {
    if (k <= p) return {k, 0};
    return {0, n - k};
  };
  auto [b1, b2] = twist(b);
  auto [a1, a2] = twist(a);
  int64_t d1 = b1 - a1, d2 = b2 - a2;
  GradedSeries out(N);
  // solutions (alpha, beta) >= 0 of (alpha, beta) = delta + k (p, -q)
  for (int64_t k = -(N + std::abs(d1)) / p - 1; k <= (N + std::abs(d2)) / q + 1; ++k) {
    int64_t alpha = d1 + k * p, beta = d2 - k * q;
    if (alpha < 0 || beta < 0) continue;
    if (alpha + beta > N) continue;
    out.add(Parity::Even, int(alpha + beta), 1);
  }
  return out;
}

HomTable::HomTable(int64_t group_order, int trunc)
    : n_(group_order),
      trunc_(trunc),
      entries_(size_t(4 * group_order * group_order), GradedSeries(trunc)) {}

int generator_interval(const GroupData& gd, const GeneratorId& g) {
  int c = g.axis == 1 ? gd.group.identity() : gd.rho[0];
  return gd.chi_mul(c, gd.chi_inv(g.theta));
}

GradedSeries skeleton_hom_series(const LabeledSkeleton& sk, const GeneratorId& from,
                                 const GeneratorId& to, int N) {
  if (N < 0) throw std::invalid_argument("skeleton_hom_series: negative truncation");
  if (sk.slots() != std::array<int, 2>{1, 2})
    throw std::invalid_argument("skeleton_hom_series: Hom model needs the {1,2} skeleton");
  const GroupData& gd = sk.group_data();
  const int alpha = generator_interval(gd, from);
  const int alpha_p = generator_interval(gd, to);
  const int cross = sk.crossing_shift();
  GradedSeries out(N);

  if (from.axis == to.axis) {
    // loop letter on the carrying circle: side 3-j
    int shift = sk.shift_char(3 - from.axis);
    int cur = alpha;
    for (int a = 0; a <= N; ++a) {
      if (cur == alpha_p) out.add(Parity::Even, a, 1);
      cur = gd.chi_mul(cur, shift);
    }
    // alternating u-cycles through the base: weight 2 per crossing pair
    int curv = alpha;
    for (int b = 1; 2 * b <= N; ++b) {
      curv = gd.chi_mul(curv, cross);
      if (curv == alpha_p) out.add(Parity::Even, 2 * b, 1);
    }
  } else {
    // u_1 starts along the base segment (no shift); u_2 picks up the
    // crossing shift, so the odd string from axis j carries cross^(b + [j=2])
    int start = from.axis == 1 ? alpha : gd.chi_mul(alpha, cross);
    for (int b = 0; 1 + 2 * b <= N; ++b) {
      if (start == alpha_p) out.add(Parity::Odd, 1 + 2 * b, 1);
      start = gd.chi_mul(start, cross);
    }
  }
  return out;
}

namespace {

HomTable assemble_hom_table(const LabeledSkeleton& sk, int N, bool parallel) {
  const GroupData& gd = sk.group_data();
  HomTable t(gd.order(), N);
  const int64_t sz = t.size();
  const int64_t total = sz * sz;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int64_t k = 0; k < total; ++k) {
    GeneratorId a = t.unflat(k / sz), b = t.unflat(k % sz);
    t.at(a, b) = skeleton_hom_series(sk, a, b, N);
  }
  (void)parallel;
  return t;
}

}  // namespace

HomTable affine_hom_table(const LabeledSkeleton& sk, int N) {
  return assemble_hom_table(sk, N, true);
}

HomTable affine_hom_table_serial(const LabeledSkeleton& sk, int N) {
  const GroupData& gd = sk.group_data();
  HomTable t(gd.order(), N);
  for (int ja = 1; ja <= 2; ++ja)
    for (int ta = 0; ta < gd.order(); ++ta)
      for (int jb = 1; jb <= 2; ++jb)
        for (int tb = 0; tb < gd.order(); ++tb) {
          GeneratorId a{ja, ta}, b{jb, tb};
          t.at(a, b) = skeleton_hom_series(sk, a, b, N);
        }
  return t;
}

GradedSeries circle_hom_series(const FiniteAbelianGroup& g, int shift_chi, int theta,
                               int theta_p, int N) {
  GradedSeries out(N);
  int target = g.mul(theta_p, g.inv(theta));
  for (int w = -N; w <= N; ++w)
    if (g.pow(shift_chi, w) == target) out.add(Parity::Even, w, 1);
  return out;
}

}  // namespace hms
