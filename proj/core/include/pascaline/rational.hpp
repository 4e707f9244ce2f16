#pragma once

#include <gmpxx.h>

#include <string>

#include "pascaline/errors.hpp"

namespace pascaline {

// Exact arbitrary-precision arithmetic. GMP keeps rationals canonical:
// reduced to lowest terms with a positive denominator.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw degenerate_error("rational with zero denominator");
  Rat x(num, den);
  x.canonicalize();
  return x;
}

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

std::string rat_str(const Rat& x);

// "-3", "5/7"; throws std::invalid_argument on anything else.
Rat parse_rat(const std::string& token);

// Affine coordinate on the conic: a rational value or the point at infinity.
class AffineCoord {
 public:
  AffineCoord() : inf_(false), v_(0) {}
  AffineCoord(const Rat& v) : inf_(false), v_(v) {}  // intentionally implicit
  AffineCoord(long v) : inf_(false), v_(v) {}        // intentionally implicit
  static AffineCoord infinity() {
    AffineCoord c;
    c.inf_ = true;
    return c;
  }

  bool is_infinity() const { return inf_; }
  const Rat& value() const {
    if (inf_) throw contract_error("value() on the point at infinity");
    return v_;
  }

  bool operator==(const AffineCoord& o) const {
    return inf_ == o.inf_ && (inf_ || v_ == o.v_);
  }
  bool operator!=(const AffineCoord& o) const { return !(*this == o); }

  std::string str() const { return inf_ ? "inf" : rat_str(v_); }

 private:
  bool inf_;
  Rat v_;
};

// Point token: "-3", "5/7", or "inf".
AffineCoord parse_coord(const std::string& token);

}  // namespace pascaline
