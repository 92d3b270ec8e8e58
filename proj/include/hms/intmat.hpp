#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <vector>

namespace hms {

// Dense matrix over arbitrary-precision integers, row major.
class IntMat {
public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols), 0) {}

  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  mpz_class& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const mpz_class& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  IntMat operator*(const IntMat& o) const;
  bool operator==(const IntMat& o) const = default;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void negate_row(int i);
  void negate_col(int j);
  // row i -= q * row k   /   col j -= q * col k
  void addmul_row(int i, int k, const mpz_class& q);
  void addmul_col(int j, int k, const mpz_class& q);

  // Fraction-free determinant (Bareiss). Square matrices only.
  mpz_class det() const;
  // Rank over Q.
  int rank() const;

  std::string str() const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<mpz_class> a_;
};

// u * a * v = d with u, v unimodular and d diagonal, d1 | d2 | ... >= 0.
struct SmithForm {
  IntMat u, d, v;
  std::vector<mpz_class> diag;  // min(rows, cols) entries, trailing zeros possible
};

// Total on rectangular integer matrices. The product identity u*a*v = d and
// |det u| = |det v| = 1 are re-verified on every call; failure throws.
SmithForm smith_normal_form(const IntMat& a);

}  // namespace hms
