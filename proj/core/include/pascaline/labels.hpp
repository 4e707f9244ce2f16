#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pascaline/errors.hpp"

namespace pascaline {

// Sylvester's pairing of the fifteen letter duads on {A..F} with the fifteen
// number synthemes on {1..6}. The table induces the k(a,bc) naming of the 60
// Pascal lines and the outer automorphism of S6. Letters and numbers are
// both 0-based internally; printing converts (letters to A..F, numbers to
// 1..6).

inline char letter_char(int i) { return static_cast<char>('A' + i); }

// Unordered pair of distinct elements of {0..5}.
struct Duad {
  int lo, hi;

  Duad(int a, int b) : lo(a < b ? a : b), hi(a < b ? b : a) {
    if (a == b || a < 0 || b < 0 || a > 5 || b > 5)
      throw contract_error("duad needs two distinct elements of a six-element set");
  }

  bool contains(int x) const { return x == lo || x == hi; }
  int other(int x) const {
    if (x == lo) return hi;
    if (x == hi) return lo;
    throw contract_error("element not in duad");
  }

  friend bool operator==(const Duad& a, const Duad& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
  friend bool operator!=(const Duad& a, const Duad& b) { return !(a == b); }
  friend bool operator<(const Duad& a, const Duad& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  }

  std::string str_numbers() const;  // "23"
  std::string str_letters() const;  // "BC"
};

// Partition of a six-element set into three duads, kept sorted.
struct Syntheme {
  std::array<Duad, 3> duads;

  explicit Syntheme(std::array<Duad, 3> d);

  bool contains(const Duad& d) const;
  // The duad containing x.
  const Duad& duad_of(int x) const;

  friend bool operator==(const Syntheme& a, const Syntheme& b) { return a.duads == b.duads; }
  friend bool operator<(const Syntheme& a, const Syntheme& b) { return a.duads < b.duads; }

  std::string str_numbers() const;  // "15.26.34"
  std::string str_letters() const;  // "AF.BE.CD"
};

// Table lookups. Both directions are bijections between 15-element sets;
// the table data is validated once at first use.
const Syntheme& syntheme_of_letter_duad(const Duad& letters);
const Syntheme& letter_syntheme_of_number_duad(const Duad& numbers);

// Pascal label k(a,bc): a in {0..5}, bc a duad avoiding a. Exactly 60 exist.
struct Label {
  int apex;
  Duad pair;

  Label(int a, Duad bc) : apex(a), pair(bc) {
    if (bc.contains(a)) throw contract_error("label apex inside its duad");
  }

  friend bool operator==(const Label& a, const Label& b) {
    return a.apex == b.apex && a.pair == b.pair;
  }
  friend bool operator!=(const Label& a, const Label& b) { return !(a == b); }
  friend bool operator<(const Label& a, const Label& b) {
    return a.apex != b.apex ? a.apex < b.apex : a.pair < b.pair;
  }

  std::string str() const;  // "k(1,23)"
};

const std::vector<Label>& all_labels();   // the 60, sorted
int label_index(const Label& s);          // position in all_labels()
Label parse_label(const std::string& s);  // "k(1,23)" or "1,23"

// 2x3 arrangement of the six letters naming a Pascal; stored as given,
// compared through the canonical representative under row swap and column
// permutation (the hexagon symmetries).
class HexArray {
 public:
  HexArray(std::array<int, 3> top, std::array<int, 3> bottom);

  int at(int row, int col) const { return cells_[row][col]; }

  // Lexicographically least flattening over the 12 symmetries.
  std::array<int, 6> canonical_key() const;

  friend bool operator==(const HexArray& a, const HexArray& b) {
    return a.canonical_key() == b.canonical_key();
  }
  friend bool operator!=(const HexArray& a, const HexArray& b) { return !(a == b); }

  std::string str() const;  // "(A B C / F E D)"

 private:
  std::array<std::array<int, 3>, 2> cells_;
};

// Label <-> array dictionary. label_of_array extracts the common duads of
// the two opposite-side syntheme triples; array_of_label rebuilds the
// hexagon from the letter synthemes of the duads {a,b} and {a,c}.
Label label_of_array(const HexArray& m);
HexArray array_of_label(const Label& s);

// Permutations of {0..5}: perm[i] is the image of i; compose(a,b) applies b
// first.
using Perm = std::array<int, 6>;

Perm perm_identity();
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& p);
Perm perm_from_cycles(const std::vector<std::vector<int>>& cycles);
const std::vector<Perm>& all_perms();  // all 720
std::string perm_cycle_str(const Perm& p);

// The outer automorphism: a transposition (i j) maps to the product of the
// three transpositions in the syntheme of the duad ij, extended
// multiplicatively.
Perm omega(const Perm& p);
// Inverse of omega (omega composed with itself is inner but not trivial).
Perm omega_inverse(const Perm& p);

// Entrywise action on labels and letterwise action on arrays.
Label apply_perm(const Perm& numbers, const Label& s);
HexArray apply_letters(const Perm& letters, const HexArray& m);

// Interference matrix of two labels: intersection cardinalities of
// {apex} and pair parts.
struct InterferenceMatrix {
  std::array<std::array<int, 2>, 2> m;

  friend bool operator==(const InterferenceMatrix& a, const InterferenceMatrix& b) {
    return a.m == b.m;
  }
  InterferenceMatrix transpose() const {
    InterferenceMatrix t;
    t.m[0][0] = m[0][0];
    t.m[0][1] = m[1][0];
    t.m[1][0] = m[0][1];
    t.m[1][1] = m[1][1];
    return t;
  }
  std::string str() const;  // "[0 0 / 1 1]"
};

InterferenceMatrix interference(const Label& s, const Label& t);

// Identification with the nine representative patterns. For distinct labels
// the matrix is always one of the nine or the transpose of cases 3 or 4.
struct InterferenceCase {
  int tag;          // 1..9
  bool transposed;  // matrix equals the transpose of the representative
};
std::optional<InterferenceCase> interference_case(const InterferenceMatrix& m);

// Representative pair (s0, t_j) with s0 = k(1,23) for each case tag.
Label canonical_s();
Label case_representative_t(int tag);

}  // namespace pascaline
