#pragma once

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pascaline/errors.hpp"
#include "pascaline/rational.hpp"

namespace pascaline {

// Homogeneous binary form of a fixed order m with exact coefficients in K.
// coeff(i) multiplies x1^(m-i) * x2^i. The zero form of each order is
// representable; is_zero() is the explicit test.
//
// K must be a commutative ring with K(long), K(const Rat&), +, -, *, ==.
// K = Rat covers the geometry; K = MultiPoly drives the symbolic solver.
template <typename K>
class BinaryFormT {
 public:
  explicit BinaryFormT(int order) : c_(checked(order) + 1, K(0)) {}

  BinaryFormT(std::initializer_list<K> coeffs) : c_(coeffs) {
    if (c_.empty()) throw contract_error("binary form needs at least one coefficient");
  }

  static BinaryFormT from_coeffs(std::vector<K> coeffs) {
    if (coeffs.empty()) throw contract_error("binary form needs at least one coefficient");
    BinaryFormT f(static_cast<int>(coeffs.size()) - 1);
    f.c_ = std::move(coeffs);
    return f;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const K& operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }
  K& operator[](int i) { return c_.at(static_cast<std::size_t>(i)); }
  const std::vector<K>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const K& c : c_)
      if (!(c == K(0))) return false;
    return true;
  }

  BinaryFormT operator-() const {
    BinaryFormT r(order());
    for (int i = 0; i <= order(); ++i) r.c_[i] = K(0) - c_[i];
    return r;
  }

  friend BinaryFormT operator+(const BinaryFormT& a, const BinaryFormT& b) {
    if (a.order() != b.order()) throw contract_error("form addition: order mismatch");
    BinaryFormT r(a.order());
    for (int i = 0; i <= a.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }

  friend BinaryFormT operator-(const BinaryFormT& a, const BinaryFormT& b) {
    if (a.order() != b.order()) throw contract_error("form subtraction: order mismatch");
    BinaryFormT r(a.order());
    for (int i = 0; i <= a.order(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }

  // Product of forms; orders add.
  friend BinaryFormT operator*(const BinaryFormT& a, const BinaryFormT& b) {
    BinaryFormT r(a.order() + b.order());
    for (int i = 0; i <= a.order(); ++i)
      for (int j = 0; j <= b.order(); ++j)
        r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    return r;
  }

  friend BinaryFormT operator*(const K& s, const BinaryFormT& f) {
    BinaryFormT r(f.order());
    for (int i = 0; i <= f.order(); ++i) r.c_[i] = s * f.c_[i];
    return r;
  }
  friend BinaryFormT operator*(const BinaryFormT& f, const K& s) { return s * f; }

  friend bool operator==(const BinaryFormT& a, const BinaryFormT& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const BinaryFormT& a, const BinaryFormT& b) { return !(a == b); }

 private:
  static int checked(int order) {
    if (order < 0) throw contract_error("negative form order");
    return order;
  }
  std::vector<K> c_;
};

using BinaryForm = BinaryFormT<Rat>;

template <typename K>
BinaryFormT<K> diff_x1(const BinaryFormT<K>& f) {
  const int m = f.order();
  if (m == 0) throw contract_error("derivative of an order-0 form");
  BinaryFormT<K> r(m - 1);
  for (int i = 0; i < m; ++i) r[i] = K(static_cast<long>(m - i)) * f[i];
  return r;
}

template <typename K>
BinaryFormT<K> diff_x2(const BinaryFormT<K>& f) {
  const int m = f.order();
  if (m == 0) throw contract_error("derivative of an order-0 form");
  BinaryFormT<K> r(m - 1);
  for (int i = 0; i < m; ++i) r[i] = K(static_cast<long>(i + 1)) * f[i + 1];
  return r;
}

namespace detail {
template <typename K>
BinaryFormT<K> mixed_partial(BinaryFormT<K> f, int dx1, int dx2) {
  for (int k = 0; k < dx1; ++k) f = diff_x1(f);
  for (int k = 0; k < dx2; ++k) f = diff_x2(f);
  return f;
}
}  // namespace detail

// r-th transvectant (U,V)_r of forms of orders m and n, including the exact
// prefactor (m-r)!(n-r)!/(m!n!). Result has order m+n-2r.
template <typename K>
BinaryFormT<K> transvectant(const BinaryFormT<K>& u, const BinaryFormT<K>& v, int r) {
  const int m = u.order(), n = v.order();
  if (r < 0 || r > m || r > n)
    throw std::out_of_range("transvectant index out of range");
  BinaryFormT<K> sum(m + n - 2 * r);
  for (int i = 0; i <= r; ++i) {
    BinaryFormT<K> du = detail::mixed_partial(u, r - i, i);
    BinaryFormT<K> dv = detail::mixed_partial(v, i, r - i);
    Rat c(binomial(static_cast<unsigned>(r), static_cast<unsigned>(i)));
    if (i % 2 != 0) c = -c;
    sum = sum + K(c) * (du * dv);
  }
  Rat pre(factorial(static_cast<unsigned>(m - r)) * factorial(static_cast<unsigned>(n - r)),
          factorial(static_cast<unsigned>(m)) * factorial(static_cast<unsigned>(n)));
  pre.canonicalize();
  return K(pre) * sum;
}

// Coefficient matrix of a linear substitution x1 -> a*x1 + b*x2,
// x2 -> c*x1 + d*x2.
struct Mat2 {
  Rat a, b, c, d;
  Rat det() const { return a * d - b * c; }
  static Mat2 identity() { return {1, 0, 0, 1}; }
};

// Expands F(a*x1 + b*x2, c*x1 + d*x2) exactly. Singular matrices are allowed.
template <typename K>
BinaryFormT<K> substitute(const BinaryFormT<K>& f, const Mat2& g) {
  const int m = f.order();
  BinaryFormT<K> l1 = {K(g.a), K(g.b)};
  BinaryFormT<K> l2 = {K(g.c), K(g.d)};
  // powers[i][j] caches l1^i * l2^j along the diagonal i+j = m.
  BinaryFormT<K> acc(m);
  BinaryFormT<K> p1 = {K(1)};
  std::vector<BinaryFormT<K>> pow1;
  pow1.reserve(static_cast<std::size_t>(m) + 1);
  pow1.push_back(p1);
  for (int i = 1; i <= m; ++i) pow1.push_back(pow1.back() * l1);
  BinaryFormT<K> p2 = {K(1)};
  std::vector<BinaryFormT<K>> pow2;
  pow2.reserve(static_cast<std::size_t>(m) + 1);
  pow2.push_back(p2);
  for (int i = 1; i <= m; ++i) pow2.push_back(pow2.back() * l2);
  for (int i = 0; i <= m; ++i) {
    BinaryFormT<K> term = pow1[static_cast<std::size_t>(m - i)] *
                          pow2[static_cast<std::size_t>(i)];
    acc = acc + f[i] * term;
  }
  return acc;
}

template <typename K>
BinaryFormT<K> pow_form(const BinaryFormT<K>& f, int e) {
  if (e < 0) throw contract_error("negative form power");
  BinaryFormT<K> r = {K(1)};
  for (int k = 0; k < e; ++k) r = r * f;
  return r;
}

// True iff a and b have equal order and proportional coefficient vectors
// (all 2x2 minors of the stacked rows vanish). Zero forms count as
// proportional to everything of the same order.
template <typename K>
bool proportional(const BinaryFormT<K>& a, const BinaryFormT<K>& b) {
  if (a.order() != b.order()) return false;
  for (int i = 0; i <= a.order(); ++i)
    for (int j = i + 1; j <= a.order(); ++j)
      if (!(a[i] * b[j] == a[j] * b[i])) return false;
  return true;
}

// A binary form up to nonzero scale, held canonically: integer coefficients
// with content 1 and a positive first nonzero entry. Canonicalization is
// idempotent; equality of canonical coefficient lists decides projective
// equality.
class ProjectiveForm {
 public:
  explicit ProjectiveForm(const BinaryForm& f) : f_(canonical(f)) {}

  const BinaryForm& form() const { return f_; }
  int order() const { return f_.order(); }

  friend bool operator==(const ProjectiveForm& a, const ProjectiveForm& b) {
    return a.f_ == b.f_;
  }
  friend bool operator!=(const ProjectiveForm& a, const ProjectiveForm& b) {
    return !(a == b);
  }
  friend bool operator<(const ProjectiveForm& a, const ProjectiveForm& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    for (int i = 0; i <= a.order(); ++i) {
      int c = cmp(a.f_[i], b.f_[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  // "(3,-11,14)"
  std::string tuple_str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i <= order(); ++i) {
      if (i) os << ',';
      os << rat_str(f_[i]);
    }
    os << ')';
    return os.str();
  }

 private:
  static BinaryForm canonical(const BinaryForm& f) {
    if (f.is_zero())
      throw degenerate_error("projective class of the zero form");
    Int den_lcm = 1;
    for (int i = 0; i <= f.order(); ++i)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), f[i].get_den().get_mpz_t());
    Int num_gcd = 0;
    std::vector<Int> scaled(static_cast<std::size_t>(f.order()) + 1);
    for (int i = 0; i <= f.order(); ++i) {
      Rat v = f[i] * Rat(den_lcm);
      v.canonicalize();
      scaled[static_cast<std::size_t>(i)] = v.get_num();
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
              scaled[static_cast<std::size_t>(i)].get_mpz_t());
    }
    int lead_sign = 0;
    for (const Int& z : scaled) {
      if (sgn(z) != 0) {
        lead_sign = sgn(z);
        break;
      }
    }
    if (lead_sign < 0) num_gcd = -num_gcd;
    BinaryForm out(f.order());
    for (int i = 0; i <= f.order(); ++i)
      out[i] = Rat(scaled[static_cast<std::size_t>(i)] / num_gcd);
    return out;
  }

  BinaryForm f_;
};

inline ProjectiveForm canonicalize(const BinaryForm& f) { return ProjectiveForm(f); }

}  // namespace pascaline
