#include "hms/mfside.hpp"

#include <stdexcept>

namespace hms {

WeightedCharacterRing::WeightedCharacterRing(const FiniteAbelianGroup* shape,
                                             std::vector<RingGenerator> gens,
                                             std::vector<std::pair<int, int>> forbidden_products)
    : shape_(shape), gens_(std::move(gens)), forbidden_(std::move(forbidden_products)) {
  for (const auto& [a, b] : forbidden_)
    if (a < 0 || b < 0 || a >= int(gens_.size()) || b >= int(gens_.size()))
      throw std::invalid_argument("WeightedCharacterRing: relation references missing generator");
  for (const auto& g : gens_)
    if (g.weight <= 0)
      throw std::invalid_argument("WeightedCharacterRing: generator weights must be positive");
}

void WeightedCharacterRing::enumerate(
    int N, const std::function<void(int, Parity, int)>& visit) const {
  std::vector<int> expo(gens_.size(), 0);
  std::function<void(size_t, int, int, int)> rec = [&](size_t k, int weight, int par, int chi) {
    if (k == gens_.size()) {
      for (const auto& [a, b] : forbidden_)
        if (expo[a] > 0 && expo[b] > 0) return;
      visit(weight, par % 2 ? Parity::Odd : Parity::Even, chi);
      return;
    }
    int cur_chi = chi;
    for (int e = 0; weight + e * gens_[k].weight <= N; ++e) {
      expo[k] = e;
      rec(k + 1, weight + e * gens_[k].weight, par + e * int(gens_[k].parity), cur_chi);
      cur_chi = shape_->mul(cur_chi, gens_[k].character);
    }
    expo[k] = 0;
  };
  rec(0, 0, 0, shape_->identity());
}

namespace {

GradedSeries ext_series(const GroupData& gd, const ExtQuery& q, int v_char_source) {
  // v_char_source only names the route; v and z_3 carry the same action rho_3
  (void)v_char_source;
  if (q.from.axis < 1 || q.from.axis > 2 || q.to.axis < 1 || q.to.axis > 2)
    throw std::invalid_argument("ext query: axis must be 1 or 2");
  GradedSeries out(q.trunc);
  const auto& g = gd.group;
  // invariance filter: char(monomial) * theta^{-1} theta' = 1
  const int delta = g.mul(g.inv(q.from.theta), q.to.theta);
  auto passes = [&](int chi) { return g.mul(chi, delta) == g.identity(); };

  if (q.from.axis == q.to.axis) {
    const int j = q.from.axis;
    WeightedCharacterRing ring(
        &g,
        {{"z", 1, Parity::Even, gd.rho[(3 - j) - 1]}, {"w", 2, Parity::Even, gd.rho[2]}},
        {{0, 1}});
    ring.enumerate(q.trunc, [&](int weight, Parity p, int chi) {
      if (passes(chi)) out.add(p, weight, 1);
    });
  } else {
    const int j = q.from.axis;
    const int u_char = g.inv(gd.rho[j - 1]);
    WeightedCharacterRing ring(&g, {{"w", 2, Parity::Even, gd.rho[2]}}, {});
    ring.enumerate(q.trunc - 1, [&](int weight, Parity p, int chi) {
      int total_chi = g.mul(u_char, chi);
      Parity total_p = p == Parity::Even ? Parity::Odd : Parity::Even;
      if (passes(total_chi)) out.add(total_p, weight + 1, 1);
    });
  }
  return out;
}

}  // namespace

GradedSeries ext_affine(const GroupData& gd, const ExtQuery& q) { return ext_series(gd, q, 0); }

GradedSeries ext_mf(const GroupData& gd, const ExtQuery& q) {
  // the stable 2-periodic resolution gives k[z_{3-j}, z_3]/(z_{3-j} z_3) and
  // u_j k[z_3]; the counting below builds those rings explicitly
  if (q.from.axis < 1 || q.from.axis > 2 || q.to.axis < 1 || q.to.axis > 2)
    throw std::invalid_argument("ext query: axis must be 1 or 2");
  GradedSeries out(q.trunc);
  const auto& g = gd.group;
  const int delta = g.mul(g.inv(q.from.theta), q.to.theta);
  auto passes = [&](int chi) { return g.mul(chi, delta) == g.identity(); };

  if (q.from.axis == q.to.axis) {
    const int j = q.from.axis;
    // even part k[z_{3-j}, z_3]/(z_{3-j} z_3); odd part vanishes
    WeightedCharacterRing ring(
        &g,
        {{"z", 1, Parity::Even, gd.rho[(3 - j) - 1]}, {"z3", 2, Parity::Even, gd.rho[2]}},
        {{0, 1}});
    ring.enumerate(q.trunc, [&](int weight, Parity p, int chi) {
      if (passes(chi)) out.add(p, weight, 1);
    });
  } else {
    // odd part u_j k[z_3]; even part vanishes
    const int j = q.from.axis;
    const int u_char = g.inv(gd.rho[j - 1]);
    WeightedCharacterRing ring(&g, {{"z3", 2, Parity::Even, gd.rho[2]}}, {});
    ring.enumerate(q.trunc - 1, [&](int weight, Parity p, int chi) {
      int total_chi = g.mul(u_char, chi);
      Parity total_p = p == Parity::Even ? Parity::Odd : Parity::Even;
      if (passes(total_chi)) out.add(total_p, weight + 1, 1);
    });
  }
  return out;
}

GradedSeries ext_chart(const FiniteAbelianGroup& g, int acting_chi, int theta, int theta_p,
                       int N) {
  GradedSeries out(N);
  const int delta = g.mul(g.inv(theta), theta_p);
  for (int a = -N; a <= N; ++a)
    if (g.mul(g.pow(acting_chi, a), delta) == g.identity()) out.add(Parity::Even, a, 1);
  return out;
}

std::vector<GeneratorId> generator_set(const GroupData& gd) {
  std::vector<GeneratorId> out;
  for (int j = 1; j <= 2; ++j)
    for (int t = 0; t < gd.order(); ++t) out.push_back({j, t});
  return out;
}

namespace {

HomTable assemble_ext_table(const GroupData& gd, int N, ExtRoute route, bool parallel) {
  HomTable t(gd.order(), N);
  const int64_t sz = t.size();
  const int64_t total = sz * sz;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int64_t k = 0; k < total; ++k) {
    GeneratorId a = t.unflat(k / sz), b = t.unflat(k % sz);
    ExtQuery q{a, b, N};
    t.at(a, b) = route == ExtRoute::Affine ? ext_affine(gd, q) : ext_mf(gd, q);
  }
  (void)parallel;
  return t;
}

}  // namespace

HomTable ext_table(const GroupData& gd, int N, ExtRoute route) {
  return assemble_ext_table(gd, N, route, true);
}

HomTable ext_table_serial(const GroupData& gd, int N, ExtRoute route) {
  HomTable t(gd.order(), N);
  for (int ja = 1; ja <= 2; ++ja)
    for (int ta = 0; ta < gd.order(); ++ta)
      for (int jb = 1; jb <= 2; ++jb)
        for (int tb = 0; tb < gd.order(); ++tb) {
          GeneratorId a{ja, ta}, b{jb, tb};
          ExtQuery q{a, b, N};
          t.at(a, b) = route == ExtRoute::Affine ? ext_affine(gd, q) : ext_mf(gd, q);
        }
  return t;
}

}  // namespace hms
