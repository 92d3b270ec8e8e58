#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hms/intmat.hpp"

namespace hms {

// Finite abelian group presented as Z^n / (column span of a relation matrix),
// realized as the direct sum of Z/d_i with d_1 | d_2 | ... from the Smith form.
// Elements are dense indices 0..order-1 (mixed-radix encoding of residue
// tuples); the same object doubles as the model of its own character group,
// with the pairing <c, x> = sum c_i x_i / d_i reported in units of 1/exponent().
class FiniteAbelianGroup {
public:
  FiniteAbelianGroup() = default;

  // group = Z^ambient_rank / relations, relations given as matrix columns.
  // Throws if the quotient is infinite.
  static FiniteAbelianGroup from_relations(const IntMat& relations);

  int64_t order() const { return order_; }
  int ambient_rank() const { return int(factors_.size()); }
  // all torsion factors in divisibility order, 1s included
  const std::vector<int64_t>& factors() const { return factors_; }
  // the nontrivial invariant factors d_1 | d_2 | ... (> 1)
  std::vector<int64_t> invariant_factors() const;
  // lcm of the factors = the largest one; 1 for the trivial group
  int64_t exponent() const { return exponent_; }

  int identity() const { return 0; }
  int mul(int a, int b) const;
  int inv(int a) const;
  int pow(int a, int64_t k) const;
  int64_t element_order(int a) const;

  std::vector<int64_t> tuple(int idx) const;
  int index_of_tuple(const std::vector<int64_t>& t) const;

  // class of an ambient integer vector in the quotient
  int reduce(const std::vector<mpz_class>& ambient) const;
  int reduce(const std::vector<int64_t>& ambient) const;

  // pairing of a character (index in the same group shape) against an element,
  // in units of 1/exponent(): the value is pair/exponent() mod 1.
  int64_t pair(int chi, int g) const;

  std::string tuple_str(int idx) const;

private:
  std::vector<int64_t> factors_;    // one per ambient coordinate
  std::vector<int64_t> radix_;      // mixed-radix place values
  int64_t order_ = 1;
  int64_t exponent_ = 1;
  IntMat u_;                        // row transform of the Smith form
};

// Cokernel of an integer matrix  Z^k -> Z^n  (image = column span), keeping
// the free part. Elements are canonical coordinate vectors: torsion residues
// followed by free coordinates.
class CokernelModel {
public:
  CokernelModel() = default;
  explicit CokernelModel(const IntMat& presentation);

  int ambient_rank() const { return n_; }
  int free_rank() const { return free_rank_; }
  int64_t torsion_order() const { return torsion_order_; }
  const std::vector<int64_t>& torsion_factors() const { return torsion_factors_; }
  const IntMat& presentation() const { return presentation_; }

  // canonical form of the class of an ambient vector
  std::vector<int64_t> canon(const std::vector<int64_t>& ambient) const;
  // all torsion classes, deterministic order (free coordinates zero)
  std::vector<std::vector<int64_t>> torsion_elements() const;
  // canonical form of (class a + class b) given canonical forms
  std::vector<int64_t> add(const std::vector<int64_t>& a, const std::vector<int64_t>& b) const;

  // an ambient representative of a canonical class
  std::vector<int64_t> ambient_rep(const std::vector<int64_t>& canon_elem) const;

private:
  IntMat presentation_;
  int n_ = 0;
  int free_rank_ = 0;
  int64_t torsion_order_ = 1;
  std::vector<int64_t> torsion_factors_;  // d_i > 0 per torsion coordinate
  std::vector<int> torsion_pos_;          // Smith-basis coordinates with d_i > 0
  std::vector<int> free_pos_;             // Smith-basis coordinates with d_i = 0
  IntMat u_, u_inv_;
};

}  // namespace hms
