#include "pascaline/conic.hpp"

namespace pascaline {

ConicPoint::ConicPoint(const BinaryForm& linear) : u_(linear) {
  if (u_.order() != 1) throw contract_error("conic point needs a linear form");
}

ConicPoint ConicPoint::from_affine(const AffineCoord& a) {
  if (a.is_infinity()) return ConicPoint(BinaryForm{Rat(0), Rat(1)});
  return ConicPoint(BinaryForm{Rat(1), -a.value()});
}

AffineCoord ConicPoint::affine() const {
  const BinaryForm& u = u_.form();
  if (is_zero(u[0])) return AffineCoord::infinity();
  Rat a = -u[1] / u[0];
  a.canonicalize();
  return AffineCoord(a);
}

PlanePoint::PlanePoint(const BinaryForm& quadratic) : q_(quadratic) {
  if (q_.order() != 2) throw contract_error("plane point needs a quadratic form");
}

PlanePoint::PlanePoint(ProjectiveForm q) : q_(std::move(q)) {
  if (q_.order() != 2) throw contract_error("plane point needs a quadratic form");
}

PlanePoint veronese(const ConicPoint& z) {
  const BinaryForm& u = z.form().form();
  return PlanePoint(u * u);
}

bool on_conic(const PlanePoint& p) {
  return transvectant(p.form().form(), p.form().form(), 2).is_zero();
}

Line polar(const PlanePoint& p) { return Line(p); }

PlanePoint pole(const Line& l) { return l.pole(); }

Line join(const PlanePoint& p, const PlanePoint& r) {
  BinaryForm t = transvectant(p.form().form(), r.form().form(), 1);
  if (t.is_zero()) throw degenerate_error("join of coincident points");
  return Line(PlanePoint(t));
}

PlanePoint meet(const Line& l1, const Line& l2) {
  BinaryForm t = transvectant(l1.pole().form().form(), l2.pole().form().form(), 1);
  if (t.is_zero()) throw degenerate_error("meet of coincident lines");
  return PlanePoint(t);
}

bool incident(const PlanePoint& p, const Line& l) {
  return transvectant(p.form().form(), l.pole().form().form(), 2).is_zero();
}

Line chord(const ConicPoint& z1, const ConicPoint& z2) {
  if (z1 == z2) throw degenerate_error("chord through a repeated point; use tangent");
  return Line(PlanePoint(z1.form().form() * z2.form().form()));
}

Line tangent(const ConicPoint& z) {
  return Line(PlanePoint(z.form().form() * z.form().form()));
}

Line chord_or_tangent(const ConicPoint& z1, const ConicPoint& z2) {
  return z1 == z2 ? tangent(z1) : chord(z1, z2);
}

namespace {

// [zi,zj] = ui0*uj1 - ui1*uj0; equals ai - aj for finite affine coordinates.
Rat bracket(const ConicPoint& zi, const ConicPoint& zj) {
  const BinaryForm& u = zi.form().form();
  const BinaryForm& v = zj.form().form();
  return u[0] * v[1] - u[1] * v[0];
}

}  // namespace

AffineCoord cross_ratio(const ConicPoint& z1, const ConicPoint& z2,
                        const ConicPoint& z3, const ConicPoint& z4) {
  if (is_zero(bracket(z1, z2)) || is_zero(bracket(z1, z3)) || is_zero(bracket(z2, z3)))
    throw degenerate_error("cross ratio needs z1, z2, z3 pairwise distinct");
  Rat num = bracket(z1, z3) * bracket(z2, z4);
  Rat den = bracket(z1, z4) * bracket(z2, z3);
  if (is_zero(den)) return AffineCoord::infinity();
  Rat v = num / den;
  v.canonicalize();
  return AffineCoord(v);
}

bool harmonic_pairs(const PlanePoint& q1, const PlanePoint& q2) {
  return transvectant(q1.form().form(), q2.form().form(), 2).is_zero();
}

ConicPoint sigma_conic(const PlanePoint& centre, const ConicPoint& z) {
  if (on_conic(centre)) throw degenerate_error("involution centre lies on the conic");
  BinaryForm t = transvectant(centre.form().form(), z.form().form(), 1);
  if (t.is_zero()) throw contract_error("(Q,u)_1 vanished for a centre off the conic");
  return ConicPoint(t);
}

PlanePoint sigma_plane(const PlanePoint& centre, const PlanePoint& r) {
  if (on_conic(centre)) throw degenerate_error("involution centre lies on the conic");
  const BinaryForm& q = centre.form().form();
  const BinaryForm& rf = r.form().form();
  Rat qq = transvectant(q, q, 2)[0];
  Rat qr = transvectant(q, rf, 2)[0];
  BinaryForm img = qq * rf - (Rat(2) * qr) * q;
  if (img.is_zero()) throw contract_error("sigma_plane produced the zero form");
  return PlanePoint(img);
}

}  // namespace pascaline
