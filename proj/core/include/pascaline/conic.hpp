#pragma once

#include <string>

#include "pascaline/binary_form.hpp"
#include "pascaline/rational.hpp"

namespace pascaline {

// The projective plane P(S2) over Q with the fixed conic K = image of the
// Veronese map [u] -> [u^2]. A plane point is a quadratic form up to scale;
// a line is stored by its pole, so that every incidence reduces to a
// transvectant.

// Point of K, stored as a projective linear form u. Affine coordinate
// convention: [x1 - a*x2] <-> a, and [x2] <-> inf.
class ConicPoint {
 public:
  explicit ConicPoint(const BinaryForm& linear);
  static ConicPoint from_affine(const AffineCoord& a);

  const ProjectiveForm& form() const { return u_; }
  AffineCoord affine() const;

  friend bool operator==(const ConicPoint& a, const ConicPoint& b) { return a.u_ == b.u_; }
  friend bool operator!=(const ConicPoint& a, const ConicPoint& b) { return !(a == b); }
  friend bool operator<(const ConicPoint& a, const ConicPoint& b) { return a.u_ < b.u_; }

  std::string str() const { return affine().str(); }

 private:
  ProjectiveForm u_;
};

// Point of P(S2), a nonzero quadratic form up to scale.
class PlanePoint {
 public:
  explicit PlanePoint(const BinaryForm& quadratic);
  explicit PlanePoint(ProjectiveForm q);

  const ProjectiveForm& form() const { return q_; }

  friend bool operator==(const PlanePoint& a, const PlanePoint& b) { return a.q_ == b.q_; }
  friend bool operator!=(const PlanePoint& a, const PlanePoint& b) { return !(a == b); }
  friend bool operator<(const PlanePoint& a, const PlanePoint& b) { return a.q_ < b.q_; }

  std::string str() const { return q_.tuple_str(); }

 private:
  ProjectiveForm q_;
};

// A line, determined by its pole: the line through [Q] and [R] is the polar
// of [(Q,R)_1], and [R] lies on the polar of [Q] iff (R,Q)_2 = 0.
class Line {
 public:
  explicit Line(PlanePoint pole) : pole_(std::move(pole)) {}

  const PlanePoint& pole() const { return pole_; }

  friend bool operator==(const Line& a, const Line& b) { return a.pole_ == b.pole_; }
  friend bool operator!=(const Line& a, const Line& b) { return !(a == b); }
  friend bool operator<(const Line& a, const Line& b) { return a.pole_ < b.pole_; }

  std::string str() const { return pole_.str(); }

 private:
  PlanePoint pole_;
};

PlanePoint veronese(const ConicPoint& z);
bool on_conic(const PlanePoint& p);

Line polar(const PlanePoint& p);
PlanePoint pole(const Line& l);

// Join of distinct plane points / meet of distinct lines. Equal arguments
// raise degenerate_error, so collapsing geometry surfaces loudly.
Line join(const PlanePoint& p, const PlanePoint& r);
PlanePoint meet(const Line& l1, const Line& l2);

bool incident(const PlanePoint& p, const Line& l);

// Chord through two distinct conic points (pole [u1*u2]); tangent at a point
// (pole [u^2]). chord_or_tangent dispatches on coincidence.
Line chord(const ConicPoint& z1, const ConicPoint& z2);
Line tangent(const ConicPoint& z);
Line chord_or_tangent(const ConicPoint& z1, const ConicPoint& z2);

// <z1,z2,z3,z4> = ((a1-a3)(a2-a4)) / ((a1-a4)(a2-a3)) with the usual limits
// at infinity, so that <inf,0,1,w> = w. Requires z1,z2,z3 pairwise distinct.
AffineCoord cross_ratio(const ConicPoint& z1, const ConicPoint& z2,
                        const ConicPoint& z3, const ConicPoint& z4);

// Apolarity test (Q1,Q2)_2 = 0: the root pairs of Q1 and Q2 are harmonically
// conjugate. Rational even when the roots are not.
bool harmonic_pairs(const PlanePoint& q1, const PlanePoint& q2);

// Quadratic involution with centre Q off the conic. On K it sends [u] to
// [(Q,u)_1]; on the plane, sigma_Q(R) = (Q,Q)_2 R - 2 (Q,R)_2 Q.
ConicPoint sigma_conic(const PlanePoint& centre, const ConicPoint& z);
PlanePoint sigma_plane(const PlanePoint& centre, const PlanePoint& r);

}  // namespace pascaline
