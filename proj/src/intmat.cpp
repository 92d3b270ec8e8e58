#include "hms/intmat.hpp"

#include <sstream>
#include <stdexcept>

namespace hms {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw std::logic_error("IntMat: dimension mismatch in product");
  IntMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const mpz_class& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

void IntMat::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMat::negate_row(int i) {
  for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMat::negate_col(int j) {
  for (int r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

void IntMat::addmul_row(int i, int k, const mpz_class& q) {
  if (q == 0) return;
  for (int c = 0; c < cols_; ++c) at(i, c) -= q * at(k, c);
}

void IntMat::addmul_col(int j, int k, const mpz_class& q) {
  if (q == 0) return;
  for (int r = 0; r < rows_; ++r) at(r, j) -= q * at(r, k);
}

mpz_class IntMat::det() const {
  if (rows_ != cols_) throw std::logic_error("IntMat: det of non-square matrix");
  int n = rows_;
  if (n == 0) return 1;
  IntMat m = *this;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = q;
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : mpz_class(-m.at(n - 1, n - 1));
}

int IntMat::rank() const {
  IntMat m = *this;
  int rank = 0;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int p = -1;
    for (int i = row; i < rows_; ++i)
      if (m.at(i, col) != 0) { p = i; break; }
    if (p < 0) continue;
    m.swap_rows(row, p);
    for (int i = row + 1; i < rows_; ++i) {
      if (m.at(i, col) == 0) continue;
      // integer row elimination: scale both rows, keeps rank
      mpz_class a = m.at(row, col), b = m.at(i, col);
      for (int j = col; j < cols_; ++j) m.at(i, j) = m.at(i, j) * a - m.at(row, j) * b;
    }
    ++row;
    ++rank;
  }
  return rank;
}

std::string IntMat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
  }
  os << "]";
  return os.str();
}

namespace {

// true if every entry of the trailing block is divisible by pivot
bool block_divisible(const IntMat& d, int t, mpz_class& bad_i, mpz_class& bad_j) {
  for (int i = t + 1; i < d.rows(); ++i)
    for (int j = t + 1; j < d.cols(); ++j)
      if (d.at(i, j) % d.at(t, t) != 0) { bad_i = i; bad_j = j; return false; }
  return true;
}

}  // namespace

SmithForm smith_normal_form(const IntMat& a) {
  const int nr = a.rows(), nc = a.cols();
  SmithForm f;
  f.u = IntMat::identity(nr);
  f.v = IntMat::identity(nc);
  f.d = a;
  IntMat& d = f.d;
  const int nmin = std::min(nr, nc);

  for (int t = 0; t < nmin; ++t) {
    for (;;) {
      // locate smallest nonzero |entry| in the trailing block
      int pi = -1, pj = -1;
      mpz_class best;
      for (int i = t; i < nr; ++i)
        for (int j = t; j < nc; ++j) {
          if (d.at(i, j) == 0) continue;
          mpz_class v = abs(d.at(i, j));
          if (pi < 0 || v < best) { best = v; pi = i; pj = j; }
        }
      if (pi < 0) goto done;  // block is zero, remaining diagonal entries are 0

      d.swap_rows(t, pi);
      f.u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      f.v.swap_cols(t, pj);

      bool clean = true;
      for (int i = t + 1; i < nr; ++i) {
        if (d.at(i, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(), d.at(t, t).get_mpz_t());
        d.addmul_row(i, t, q);
        f.u.addmul_row(i, t, q);
        if (d.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < nc; ++j) {
        if (d.at(t, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(), d.at(t, t).get_mpz_t());
        d.addmul_col(j, t, q);
        f.v.addmul_col(j, t, q);
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      mpz_class bi, bj;
      if (!block_divisible(d, t, bi, bj)) {
        // fold the offending row into row t, then restart the pivot step
        int i = int(bi.get_si());
        d.addmul_row(t, i, mpz_class(-1));
        f.u.addmul_row(t, i, mpz_class(-1));
        continue;
      }
      break;
    }
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      f.u.negate_row(t);
    }
  }
done:
  f.diag.resize(nmin);
  for (int t = 0; t < nmin; ++t) f.diag[t] = d.at(t, t);

  // re-verify u*a*v = d and unimodularity on every call
  if (!(f.u * a * f.v == d)) throw std::logic_error("smith_normal_form: U*A*V != D");
  if (abs(f.u.det()) != 1 || abs(f.v.det()) != 1)
    throw std::logic_error("smith_normal_form: transform not unimodular");
  for (int t = 0; t + 1 < nmin; ++t)
    if (f.diag[t + 1] != 0 && (f.diag[t] == 0 || f.diag[t + 1] % f.diag[t] != 0))
      throw std::logic_error("smith_normal_form: divisibility chain broken");
  return f;
}

}  // namespace hms
