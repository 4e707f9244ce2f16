#pragma once

#include <array>
#include <random>
#include <set>
#include <vector>

#include "pascaline/binary_form.hpp"
#include "pascaline/conic.hpp"
#include "pascaline/labels.hpp"
#include "pascaline/pascal_engine.hpp"

namespace testutil {

using namespace pascaline;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long ilong(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(eng_);
  }

  Rat rat(long num_mag = 30, long den_max = 8) {
    return make_rat(ilong(-num_mag, num_mag), ilong(1, den_max));
  }

  Rat nonzero_rat(long num_mag = 30, long den_max = 8) {
    for (;;) {
      Rat v = rat(num_mag, den_max);
      if (!is_zero(v)) return v;
    }
  }

  std::vector<Rat> distinct_rats(std::size_t n, long num_mag = 40, long den_max = 8) {
    std::set<Rat> seen;
    while (seen.size() < n) seen.insert(rat(num_mag, den_max));
    return {seen.begin(), seen.end()};
  }

  Hexad hexad() {
    std::vector<Rat> v = distinct_rats(6);
    std::shuffle(v.begin(), v.end(), eng_);
    std::array<ConicPoint, 6> pts = {
        ConicPoint::from_affine(v[0]), ConicPoint::from_affine(v[1]),
        ConicPoint::from_affine(v[2]), ConicPoint::from_affine(v[3]),
        ConicPoint::from_affine(v[4]), ConicPoint::from_affine(v[5])};
    return Hexad(pts);
  }

  BinaryForm form(int order, long num_mag = 9, long den_max = 4) {
    BinaryForm f(order);
    for (int i = 0; i <= order; ++i) f[i] = rat(num_mag, den_max);
    return f;
  }

  BinaryForm nonzero_form(int order, long num_mag = 9, long den_max = 4) {
    for (;;) {
      BinaryForm f = form(order, num_mag, den_max);
      if (!f.is_zero()) return f;
    }
  }

  // Product of elementary shears: always determinant one, integer entries.
  Mat2 unimodular(int steps = 6) {
    Mat2 g = Mat2::identity();
    for (int k = 0; k < steps; ++k) {
      Rat t(ilong(-3, 3));
      Mat2 e = (ilong(0, 1) == 0) ? Mat2{1, t, 0, 1} : Mat2{1, 0, t, 1};
      g = Mat2{g.a * e.a + g.b * e.c, g.a * e.b + g.b * e.d,
               g.c * e.a + g.d * e.c, g.c * e.b + g.d * e.d};
    }
    return g;
  }

  Perm perm() {
    Perm p = perm_identity();
    std::shuffle(p.begin(), p.end(), eng_);
    return p;
  }

  HexArray hex_array() {
    Perm p = perm();
    return HexArray({p[0], p[1], p[2]}, {p[3], p[4], p[5]});
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

// Dense bivariate polynomials over Q: the independent route for checking
// transvectants. Differentiation and multiplication are spelled out on a
// coefficient grid c[i][j] of x1^i * x2^j.
class Poly2 {
 public:
  Poly2() : c_(1, std::vector<Rat>(1, Rat(0))) {}

  static Poly2 from_form(const BinaryForm& f) {
    int m = f.order();
    Poly2 p;
    p.c_.assign(static_cast<std::size_t>(m) + 1,
                std::vector<Rat>(static_cast<std::size_t>(m) + 1, Rat(0)));
    for (int i = 0; i <= m; ++i)
      p.c_[static_cast<std::size_t>(m - i)][static_cast<std::size_t>(i)] = f[i];
    return p;
  }

  Poly2 diff_x1() const {
    Poly2 r;
    if (c_.size() <= 1) return r;
    r.c_.assign(c_.size() - 1, std::vector<Rat>(c_[0].size(), Rat(0)));
    for (std::size_t i = 1; i < c_.size(); ++i)
      for (std::size_t j = 0; j < c_[i].size(); ++j)
        r.c_[i - 1][j] = Rat(static_cast<long>(i)) * c_[i][j];
    return r;
  }

  Poly2 diff_x2() const {
    Poly2 r;
    if (c_[0].size() <= 1) return r;
    r.c_.assign(c_.size(), std::vector<Rat>(c_[0].size() - 1, Rat(0)));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 1; j < c_[i].size(); ++j)
        r.c_[i][j - 1] = Rat(static_cast<long>(j)) * c_[i][j];
    return r;
  }

  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1,
                std::vector<Rat>(a.c_[0].size() + b.c_[0].size() - 1, Rat(0)));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < a.c_[i].size(); ++j) {
        if (is_zero(a.c_[i][j])) continue;
        for (std::size_t k = 0; k < b.c_.size(); ++k)
          for (std::size_t l = 0; l < b.c_[k].size(); ++l)
            r.c_[i + k][j + l] += a.c_[i][j] * b.c_[k][l];
      }
    return r;
  }

  Poly2& add_scaled(const Poly2& o, const Rat& s) {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size(), std::vector<Rat>(c_[0].size(), Rat(0)));
    std::size_t w = std::max(c_[0].size(), o.c_[0].size());
    for (auto& row : c_) row.resize(w, Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_[i].size(); ++j)
        c_[i][j] += s * o.c_[i][j];
    return *this;
  }

  // Requires the polynomial to be homogeneous of the given order.
  BinaryForm to_form(int order) const {
    BinaryForm f(order);
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < c_[i].size(); ++j) {
        if (is_zero(c_[i][j])) continue;
        if (static_cast<int>(i + j) != order)
          throw contract_error("oracle polynomial is not homogeneous");
        f[static_cast<int>(j)] = c_[i][j];
      }
    return f;
  }

 private:
  std::vector<std::vector<Rat>> c_;
};

// Literal evaluation of the transvectant formula on the dense grid.
inline BinaryForm transvectant_oracle(const BinaryForm& u, const BinaryForm& v, int r) {
  const int m = u.order(), n = v.order();
  Poly2 acc;
  for (int i = 0; i <= r; ++i) {
    Poly2 du = Poly2::from_form(u);
    for (int k = 0; k < r - i; ++k) du = du.diff_x1();
    for (int k = 0; k < i; ++k) du = du.diff_x2();
    Poly2 dv = Poly2::from_form(v);
    for (int k = 0; k < i; ++k) dv = dv.diff_x1();
    for (int k = 0; k < r - i; ++k) dv = dv.diff_x2();
    Rat c(binomial(static_cast<unsigned>(r), static_cast<unsigned>(i)));
    if (i % 2 != 0) c = -c;
    acc.add_scaled(du * dv, c);
  }
  Rat pre(factorial(static_cast<unsigned>(m - r)) * factorial(static_cast<unsigned>(n - r)),
          factorial(static_cast<unsigned>(m)) * factorial(static_cast<unsigned>(n)));
  pre.canonicalize();
  Poly2 scaled;
  scaled.add_scaled(acc, pre);
  return scaled.to_form(m + n - 2 * r);
}

inline ConicPoint cp(long v) { return ConicPoint::from_affine(AffineCoord(Rat(v))); }
inline ConicPoint cp(const Rat& v) { return ConicPoint::from_affine(AffineCoord(v)); }
inline ConicPoint cp_inf() { return ConicPoint::from_affine(AffineCoord::infinity()); }

}  // namespace testutil
