#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hms/fan.hpp"
#include "hms/fukaya.hpp"
#include "hms/series.hpp"

namespace hms {

struct RingGenerator {
  std::string name;
  int weight = 1;
  Parity parity = Parity::Even;
  int character = 0;
};

// Commutative monomial model with weights, parities, characters and forbidden
// products; the Ext rings of the axis generators all fit this shape.
class WeightedCharacterRing {
public:
  WeightedCharacterRing(const FiniteAbelianGroup* shape, std::vector<RingGenerator> gens,
                        std::vector<std::pair<int, int>> forbidden_products);

  // every monomial of weight <= N whose support avoids the forbidden pairs
  void enumerate(int N, const std::function<void(int weight, Parity, int chi)>& visit) const;

private:
  const FiniteAbelianGroup* shape_;
  std::vector<RingGenerator> gens_;
  std::vector<std::pair<int, int>> forbidden_;
};

struct ExtQuery {
  GeneratorId from, to;
  int trunc = 30;
};

// Ext series on the nodal curve model: monomial counts in k[z_{3-j}, v]/(z v)
// (same axis, even) and u_j k[v] (cross axis, odd), filtered by the invariance
// condition char(monomial) * theta^{-1} theta' = 1.
GradedSeries ext_affine(const GroupData& gd, const ExtQuery& q);

// Same data recomputed from the 2-periodic matrix-factorization resolution:
// v is replaced by the weight-2 generator z_3 carrying rho_3.
GradedSeries ext_mf(const GroupData& gd, const ExtQuery& q);

// Torus-chart series: even dims 1 at each weight a in [-N, N] with
// acting^a * theta^{-1} theta' trivial.
GradedSeries ext_chart(const FiniteAbelianGroup& g, int acting_chi, int theta, int theta_p,
                       int N);

// the 2|G| generators (j, theta), axis-major, theta ascending
std::vector<GeneratorId> generator_set(const GroupData& gd);

enum class ExtRoute { Affine, Mf };

HomTable ext_table(const GroupData& gd, int N, ExtRoute route);
HomTable ext_table_serial(const GroupData& gd, int N, ExtRoute route);

}  // namespace hms
