#include "hms/group.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hms {

namespace {

int64_t to_i64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer out of int64 range");
  return z.get_si();
}

int64_t pos_mod(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// adjugate/det inverse of a unimodular integer matrix
IntMat inverse_unimodular(const IntMat& u) {
  const int n = u.rows();
  mpz_class det = u.det();
  if (abs(det) != 1) throw std::logic_error("inverse_unimodular: matrix not unimodular");
  IntMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMat minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor.at(rr, cc) = u.at(r, c);
          ++cc;
        }
        ++rr;
      }
      mpz_class cof = minor.det();
      if ((i + j) % 2) cof = -cof;
      inv.at(i, j) = det == 1 ? cof : mpz_class(-cof);
    }
  return inv;
}

}  // namespace

FiniteAbelianGroup FiniteAbelianGroup::from_relations(const IntMat& relations) {
  FiniteAbelianGroup g;
  SmithForm f = smith_normal_form(relations);
  const int n = relations.rows();
  g.u_ = f.u;
  g.factors_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    mpz_class d = i < int(f.diag.size()) ? f.diag[i] : mpz_class(0);
    if (d == 0) throw std::domain_error("FiniteAbelianGroup: quotient has free part");
    g.factors_[i] = to_i64(d);
  }
  g.radix_.assign(n, 1);
  for (int i = n - 2; i >= 0; --i) g.radix_[i] = g.radix_[i + 1] * g.factors_[i + 1];
  g.order_ = 1;
  for (int64_t d : g.factors_) g.order_ *= d;
  g.exponent_ = g.factors_.empty() ? 1 : g.factors_.back();
  return g;
}

std::vector<int64_t> FiniteAbelianGroup::invariant_factors() const {
  std::vector<int64_t> out;
  for (int64_t d : factors_)
    if (d > 1) out.push_back(d);
  return out;
}

std::vector<int64_t> FiniteAbelianGroup::tuple(int idx) const {
  std::vector<int64_t> t(factors_.size());
  int64_t rest = idx;
  for (size_t i = 0; i < factors_.size(); ++i) {
    t[i] = rest / radix_[i];
    rest %= radix_[i];
  }
  return t;
}

int FiniteAbelianGroup::index_of_tuple(const std::vector<int64_t>& t) const {
  int64_t idx = 0;
  for (size_t i = 0; i < factors_.size(); ++i) idx += pos_mod(t[i], factors_[i]) * radix_[i];
  return int(idx);
}

int FiniteAbelianGroup::mul(int a, int b) const {
  auto ta = tuple(a), tb = tuple(b);
  for (size_t i = 0; i < ta.size(); ++i) ta[i] = pos_mod(ta[i] + tb[i], factors_[i]);
  return index_of_tuple(ta);
}

int FiniteAbelianGroup::inv(int a) const {
  auto t = tuple(a);
  for (size_t i = 0; i < t.size(); ++i) t[i] = pos_mod(-t[i], factors_[i]);
  return index_of_tuple(t);
}

int FiniteAbelianGroup::pow(int a, int64_t k) const {
  auto t = tuple(a);
  for (size_t i = 0; i < t.size(); ++i) {
    int64_t kk = pos_mod(k, factors_[i]);
    t[i] = pos_mod(t[i] * kk, factors_[i]);
  }
  return index_of_tuple(t);
}

int64_t FiniteAbelianGroup::element_order(int a) const {
  auto t = tuple(a);
  int64_t ord = 1;
  for (size_t i = 0; i < t.size(); ++i) {
    int64_t o = factors_[i] / std::gcd(t[i], factors_[i]);
    ord = std::lcm(ord, o);
  }
  return ord;
}

int FiniteAbelianGroup::reduce(const std::vector<mpz_class>& ambient) const {
  const int n = ambient_rank();
  if (int(ambient.size()) != n) throw std::logic_error("reduce: wrong ambient dimension");
  std::vector<int64_t> t(n);
  for (int i = 0; i < n; ++i) {
    mpz_class y = 0;
    for (int j = 0; j < n; ++j) y += u_.at(i, j) * ambient[j];
    mpz_class d = factors_[i];
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), y.get_mpz_t(), d.get_mpz_t());
    t[i] = to_i64(r);
  }
  return index_of_tuple(t);
}

int FiniteAbelianGroup::reduce(const std::vector<int64_t>& ambient) const {
  std::vector<mpz_class> z(ambient.begin(), ambient.end());
  return reduce(z);
}

int64_t FiniteAbelianGroup::pair(int chi, int g) const {
  auto c = tuple(chi), x = tuple(g);
  int64_t acc = 0;
  for (size_t i = 0; i < c.size(); ++i) acc += c[i] * x[i] * (exponent_ / factors_[i]);
  return pos_mod(acc, exponent_);
}

std::string FiniteAbelianGroup::tuple_str(int idx) const {
  auto t = tuple(idx);
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ")";
  return os.str();
}

CokernelModel::CokernelModel(const IntMat& presentation) : presentation_(presentation) {
  n_ = presentation.rows();
  SmithForm f = smith_normal_form(presentation);
  u_ = f.u;
  u_inv_ = inverse_unimodular(f.u);
  for (int i = 0; i < n_; ++i) {
    mpz_class d = i < int(f.diag.size()) ? f.diag[i] : mpz_class(0);
    if (d == 0) {
      free_pos_.push_back(i);
    } else {
      torsion_pos_.push_back(i);
      torsion_factors_.push_back(to_i64(d));
      torsion_order_ *= to_i64(d);
    }
  }
  free_rank_ = int(free_pos_.size());
}

std::vector<int64_t> CokernelModel::canon(const std::vector<int64_t>& ambient) const {
  if (int(ambient.size()) != n_) throw std::logic_error("CokernelModel::canon: wrong dimension");
  std::vector<int64_t> out(n_, 0);
  for (int i = 0; i < n_; ++i) {
    mpz_class y = 0;
    for (int j = 0; j < n_; ++j) y += u_.at(i, j) * ambient[j];
    out[i] = to_i64(y);
  }
  for (size_t k = 0; k < torsion_pos_.size(); ++k)
    out[torsion_pos_[k]] = pos_mod(out[torsion_pos_[k]], torsion_factors_[k]);
  return out;
}

std::vector<int64_t> CokernelModel::add(const std::vector<int64_t>& a,
                                        const std::vector<int64_t>& b) const {
  std::vector<int64_t> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = a[i] + b[i];
  for (size_t k = 0; k < torsion_pos_.size(); ++k)
    out[torsion_pos_[k]] = pos_mod(out[torsion_pos_[k]], torsion_factors_[k]);
  return out;
}

std::vector<std::vector<int64_t>> CokernelModel::torsion_elements() const {
  std::vector<std::vector<int64_t>> out;
  std::vector<int64_t> cur(n_, 0);
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == torsion_pos_.size()) {
      out.push_back(cur);
      return;
    }
    for (int64_t v = 0; v < torsion_factors_[k]; ++v) {
      cur[torsion_pos_[k]] = v;
      rec(k + 1);
    }
    cur[torsion_pos_[k]] = 0;
  };
  rec(0);
  return out;
}

std::vector<int64_t> CokernelModel::ambient_rep(const std::vector<int64_t>& canon_elem) const {
  std::vector<int64_t> out(n_, 0);
  for (int i = 0; i < n_; ++i) {
    mpz_class y = 0;
    for (int j = 0; j < n_; ++j) y += u_inv_.at(i, j) * mpz_class(canon_elem[j]);
    out[i] = to_i64(y);
  }
  return out;
}

}  // namespace hms
