#include "pascaline/configurations.hpp"

#include <set>

namespace pascaline {

namespace {

void require_distinct(const std::array<ConicPoint, 6>& pts, const char* what) {
  std::set<ProjectiveForm> seen;
  for (const ConicPoint& p : pts) seen.insert(p.form());
  if (seen.size() != 6) throw degenerate_error(std::string(what) + ": points collide");
}

Line pascal_of_label(const Hexad& h, const Label& s) {
  return pascal_of_array(h, array_of_label(s));
}

}  // namespace

Hexad make_involution(const PlanePoint& centre, const ConicPoint& z1,
                      const ConicPoint& z2, const ConicPoint& z3) {
  if (on_conic(centre)) throw degenerate_error("involution centre lies on the conic");
  ConicPoint f = sigma_conic(centre, z1);
  ConicPoint e = sigma_conic(centre, z2);
  ConicPoint d = sigma_conic(centre, z3);
  std::array<ConicPoint, 6> pts = {z1, z2, z3, d, e, f};
  require_distinct(pts, "involution hexad");
  Hexad h(pts);
  Line pol = polar(centre);
  for (int r : {0, 3, 4, 5})
    if (pascal_of_label(h, Label(r, Duad(1, 2))) != pol)
      throw contract_error("involution Pascals missed the polar of the centre");
  return h;
}

RicochetData make_ricochet(const ConicPoint& a, const ConicPoint& b,
                           const ConicPoint& c, const ConicPoint& d) {
  std::set<ProjectiveForm> start = {a.form(), b.form(), c.form(), d.form()};
  if (start.size() != 4) throw degenerate_error("ricochet start points collide");

  PlanePoint v = meet(tangent(a), tangent(c));
  ConicPoint f = sigma_conic(v, d);
  Line af = chord(a, f);  // f != a since sigma_v fixes exactly a and c
  Line cd = chord(c, d);
  if (af == cd) throw degenerate_error("ricochet: AF and CD coincide");
  PlanePoint w = meet(af, cd);
  ConicPoint z = sigma_conic(v, b);
  if (on_conic(w)) throw degenerate_error("ricochet: W fell on the conic");
  ConicPoint e = sigma_conic(w, z);

  std::array<ConicPoint, 6> pts = {a, b, c, d, e, f};
  require_distinct(pts, "ricochet hexad");
  Hexad h(pts);

  Line vw = join(v, w);
  Line p1 = pascal_of_label(h, Label(0, Duad(1, 2)));
  Line p2 = pascal_of_label(h, Label(0, Duad(3, 4)));
  if (p1 != p2 || p1 != vw)
    throw contract_error("ricochet Pascals missed the line VW");
  return RicochetData{h, v, w, z, p1};
}

TripleSymmetricData make_triple_symmetric(const Rat& p) {
  if (is_zero(p) || p == 1)
    throw degenerate_error("triple-symmetric parameter must avoid 0 and 1");
  Rat q = (p - 1) / p;
  Rat r = Rat(1) / (1 - p);
  q.canonicalize();
  r.canonicalize();

  std::array<ConicPoint, 6> pts = {
      ConicPoint::from_affine(AffineCoord(Rat(0))),
      ConicPoint::from_affine(AffineCoord(Rat(1))),
      ConicPoint::from_affine(AffineCoord::infinity()),
      ConicPoint::from_affine(AffineCoord(p)),
      ConicPoint::from_affine(AffineCoord(q)),
      ConicPoint::from_affine(AffineCoord(r))};
  require_distinct(pts, "triple-symmetric hexad");
  Hexad h(pts);

  PlanePoint t(BinaryForm{Rat(1), Rat(-1), Rat(1)});
  Rat alpha = p - 1, beta = 1, gamma = -p;
  PlanePoint q6(BinaryForm{alpha, 2 * beta, gamma});
  PlanePoint q4(BinaryForm{beta, 2 * gamma, alpha});
  PlanePoint q5(BinaryForm{gamma, 2 * alpha, beta});

  // AD,BE,CF meet in Q6; AE,CD,BF in Q4; AF,CE,BD in Q5.
  struct Check {
    const PlanePoint& q;
    std::array<std::array<int, 2>, 3> pairs;
  };
  const std::array<Check, 3> checks = {
      Check{q6, {{{0, 3}, {1, 4}, {2, 5}}}},
      Check{q4, {{{0, 4}, {2, 3}, {1, 5}}}},
      Check{q5, {{{0, 5}, {2, 4}, {1, 3}}}},
  };
  for (const Check& ck : checks)
    for (const auto& pr : ck.pairs)
      if (!incident(ck.q, chord(h.at(pr[0]), h.at(pr[1]))))
        throw contract_error("triple-symmetric centre misses its chords");

  return TripleSymmetricData{h, t, q6, q4, q5, polar(t)};
}

ParamTriple solution_family(int case_tag, const std::vector<Rat>& params) {
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw contract_error("solution_family: wrong number of parameters");
  };
  auto guard = [](const Rat& den) {
    if (is_zero(den)) throw degenerate_error("solution family parameter excluded");
  };
  ParamTriple out;
  switch (case_tag) {
    case 1: {
      need(1);
      const Rat& p = params[0];
      guard(1 + p);
      out = {p, p * (1 - p) / (1 + p), -p};
      break;
    }
    case 4: {
      need(1);
      const Rat& p = params[0];
      guard((p + 1) * (1 - p * p));
      out = {p, p / (p + 1), p / (1 - p * p)};
      break;
    }
    case 5: {
      need(1);
      const Rat& p = params[0];
      guard(p * (1 - p));
      out = {p, (p - 1) / p, Rat(1) / (1 - p)};
      break;
    }
    case 9: {
      need(2);
      const Rat& p = params[0];
      const Rat& r = params[1];
      guard(p - 1);
      out = {p, p * (r - 1) / (p - 1), r};
      break;
    }
    default:
      throw contract_error("solution_family: no family for this case");
  }
  out.p.canonicalize();
  out.q.canonicalize();
  out.r.canonicalize();
  hexad_from_params(out);  // collision check
  return out;
}

Hexad hexad_from_params(const ParamTriple& pqr) {
  std::array<ConicPoint, 6> pts = {
      ConicPoint::from_affine(AffineCoord(Rat(0))),
      ConicPoint::from_affine(AffineCoord(Rat(1))),
      ConicPoint::from_affine(AffineCoord::infinity()),
      ConicPoint::from_affine(AffineCoord(pqr.p)),
      ConicPoint::from_affine(AffineCoord(pqr.q)),
      ConicPoint::from_affine(AffineCoord(pqr.r))};
  require_distinct(pts, "parameter hexad");
  return Hexad(pts);
}

BinaryForm ricochet_family_form(const Rat& p) {
  BinaryForm g = {Rat(1), Rat(0)};
  g = g * BinaryForm{Rat(1), Rat(-1)};
  g = g * BinaryForm{Rat(0), Rat(1)};
  g = g * BinaryForm{Rat(1), -p};
  g = g * BinaryForm{Rat(1) + p, -p * (Rat(1) - p)};
  g = g * BinaryForm{Rat(1), p};
  return g;
}

Rat ricochet_invariant_value(const Rat& p) {
  Rat p2 = p * p;
  Rat v = 1;
  for (int k = 0; k < 18; ++k) v *= p;
  v *= (p2 + 3) * (3 * p2 + 1) * (p2 + 1);
  v *= (p2 + p + 1) * (p2 - p + 1);
  Rat f1 = p2 + 2 * p - 1, f2 = p2 - 2 * p - 1;
  v *= f1 * f1 * f2 * f2;
  Rat g1 = p - 1, g2 = p + 1;
  v *= g1 * g1 * g1 * g2 * g2 * g2;
  v.canonicalize();
  return v;
}

}  // namespace pascaline
