#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pascaline/labels.hpp"
#include "pascaline/multipoly.hpp"

namespace pascaline {

// Symbolic re-derivation of the case analysis on the hexad
// (A,B,C,D,E,F) = (0, 1, inf, p, q, r): Pascal poles as exact polynomials,
// the minor systems expressing coincidence of two Pascals, identical-
// vanishing verification of the parametric solution families, and
// exhaustive finite-field scans as completeness evidence.

// Pole quadratic of the Pascal with label s, computed by the same cross-hair
// pipeline as the geometric engine, run over Q[p,q,r] and reduced to a
// primitive integer triple (extraneous polynomial content removed).
std::array<MultiPoly, 3> symbolic_pascal(const Label& s);

// Coefficient rows of two symbolic Pascals and the three 2x2 minors of the
// stacked 2x3 matrix; the Pascals coincide exactly where all minors vanish.
struct MinorSystem {
  Label s, t;
  std::array<MultiPoly, 3> row_s, row_t;
  std::array<MultiPoly, 3> minors;
};

MinorSystem minor_system(const Label& s, const Label& t);

// Parametric solution of one nonempty case, as substitutions
// q = q_num/q_den, r = r_num/r_den over the parameter variables
// (p for cases 1, 4, 5; p and r for case 9).
struct SolutionFamily {
  int case_tag;
  int param_count;
  MultiPoly q_num, q_den;
  MultiPoly r_num, r_den;
};

SolutionFamily family_for_case(int tag);  // tags 1, 4, 5, 9

// Substitutes the family into all three minors, clears denominators, and
// returns true iff every one vanishes identically. The family's case tag
// must match the interference pattern of (s,t).
bool verify_family(const MinorSystem& sys, const SolutionFamily& fam);

// Exhaustive scan of F_P^3. Every common zero of the minors is classified:
// illegal (two of the six points collide), family (satisfies the defining
// relations of the known parametrization, transported to (s,t)), or
// unexplained. Counts partition the solution set; illegal wins ties.
struct ScanReport {
  Label s, t;
  unsigned prime = 0;
  int case_tag = 0;       // interference pattern of (s,t)
  bool has_family = false;
  std::int64_t total = 0;
  std::int64_t illegal = 0;
  std::int64_t family = 0;
  std::int64_t unexplained = 0;
  std::vector<std::array<unsigned, 3>> unexplained_triples;  // ascending

  std::string to_text() const;
};

// Evidence, not proof: emptiness mod P does not by itself decide emptiness
// in characteristic zero. The report text carries this caveat.
ScanReport finite_field_scan(const Label& s, const Label& t, unsigned prime);

}  // namespace pascaline
