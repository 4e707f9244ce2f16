#pragma once

#include <array>
#include <vector>

#include "pascaline/conic.hpp"
#include "pascaline/pascal_engine.hpp"

namespace pascaline {

// Synthetic generators for the coincidence configurations, with their
// auxiliary witnesses, and the closed-form parameter families of the case
// analysis on the hexad (0, 1, inf, p, q, r).

// Hexad with sigma_Q(z1)=F, sigma_Q(z2)=E, sigma_Q(z3)=D; the four Pascals
// k(r,23) then all equal the polar of the centre.
Hexad make_involution(const PlanePoint& centre, const ConicPoint& z1,
                      const ConicPoint& z2, const ConicPoint& z3);

// Ricochet: V = tangent(A) ^ tangent(C); F with V,D,F collinear;
// W = AF ^ CD; Z with V,B,Z collinear; E with W,Z,E collinear. The two
// Pascals k(1,23) and k(1,45) coincide with the line VW.
struct RicochetData {
  Hexad hexad;
  PlanePoint v;
  PlanePoint w;
  ConicPoint z;
  Line pascal;
};

RicochetData make_ricochet(const ConicPoint& a, const ConicPoint& b,
                           const ConicPoint& c, const ConicPoint& d);

// Triple symmetry: the hexad {0, 1, inf, p, (p-1)/p, 1/(1-p)} carries three
// involution centres on a common line, cycled by x1 -> x1 - x2, x2 -> x1.
struct TripleSymmetricData {
  Hexad hexad;
  PlanePoint t;        // pole of the common line of the centres
  PlanePoint q6;       // AD, BE, CF concurrent here
  PlanePoint q4;       // AE, CD, BF
  PlanePoint q5;       // AF, CE, BD
  Line common_line;    // polar of t; equals the Pascal k(1,23)
};

TripleSymmetricData make_triple_symmetric(const Rat& p);

struct ParamTriple {
  Rat p, q, r;
};

// The parametric solutions of the coincidence cases that are nonempty:
//   1: q = p(1-p)/(1+p), r = -p            (ricochet pair)
//   4: q = p/(p+1),      r = p/(1-p^2)     (pair plus forced quadruple)
//   5: q = (p-1)/p,      r = 1/(1-p)       (triple symmetry)
//   9: q = p(r-1)/(p-1)                    (plain involution)
// params carries (p) for cases 1, 4, 5 and (p, r) for case 9. Parameter
// values that collapse two of the six points raise degenerate_error.
ParamTriple solution_family(int case_tag, const std::vector<Rat>& params);

// Hexad (0, 1, inf, p, q, r); requires the six points distinct.
Hexad hexad_from_params(const ParamTriple& pqr);

// The invariant value on the ricochet family:
// p^18 (p^2+3)(3p^2+1)(p^2+1)(p^2+p+1)(p^2-p+1)(p^2+2p-1)^2(p^2-2p-1)^2(p-1)^3(p+1)^3.
Rat ricochet_invariant_value(const Rat& p);

// The ricochet-family sextic with the q denominator cleared:
// x1 (x1-x2) x2 (x1 - p x2) ((1+p) x1 - p(1-p) x2) (x1 + p x2).
// theta_15_0 of this form is one fixed rational multiple of
// ricochet_invariant_value(p), independent of p.
BinaryForm ricochet_family_form(const Rat& p);

}  // namespace pascaline
