#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "pascaline/rational.hpp"

namespace pascaline {

// Sparse exact polynomial in the three parameters p, q, r. Terms are kept in
// a map on exponent triples, so iteration order, printing, and equality are
// canonical. Degrees stay small throughout the case analysis; naive
// arithmetic is enough.
class MultiPoly {
 public:
  using Exps = std::array<int, 3>;

  MultiPoly() = default;
  MultiPoly(long c) { *this = constant(Rat(c)); }   // intentionally implicit
  MultiPoly(const Rat& c) { *this = constant(c); }  // intentionally implicit

  static MultiPoly constant(const Rat& c);
  static MultiPoly variable(int var);  // 0:p 1:q 2:r
  static MultiPoly monomial(const Exps& e, const Rat& c);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  // Coefficient of the constant term (zero if absent).
  Rat constant_value() const;

  int degree(int var) const;
  int total_degree() const;
  std::size_t term_count() const { return t_.size(); }
  const std::map<Exps, Rat>& terms() const { return t_; }

  // Lexicographically largest exponent triple and its coefficient.
  std::pair<Exps, Rat> leading() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
  friend bool operator<(const MultiPoly& a, const MultiPoly& b) { return a.t_ < b.t_; }

  MultiPoly pow(int e) const;

  Rat eval(const Rat& p, const Rat& q, const Rat& r) const;

  // Substitutes the fraction num/den for each variable and clears
  // denominators: the result is sum over terms of
  // c * prod_v num_v^e_v * den_v^(deg_v - e_v);
  // it vanishes identically iff the substituted rational function does
  // (denominators must not be identically zero).
  MultiPoly eval_fractions(const std::array<std::pair<MultiPoly, MultiPoly>, 3>& subs) const;

  // Integer coefficients, content 1, positive leading coefficient.
  MultiPoly primitive_integer() const;

  // Quotient when b divides a exactly, nullopt otherwise.
  static std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

  // "p*r - p*q + p - q", graded-lex descending.
  std::string str() const;

 private:
  void trim();
  std::map<Exps, Rat> t_;
};

// Up to a rational unit: primitive with positive leading coefficient.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace pascaline
