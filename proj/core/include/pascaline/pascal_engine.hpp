#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pascaline/binary_form.hpp"
#include "pascaline/conic.hpp"
#include "pascaline/labels.hpp"

namespace pascaline {

// Assignment of the letters A..F to conic points. The strict engine wants
// six distinct points; one coincident pair is tolerated (the Pascals stay
// well-defined, with the repeated chord read as a tangent). A triple point
// or two coincident pairs are outside the engine's domain.
class Hexad {
 public:
  explicit Hexad(std::array<ConicPoint, 6> pts) : pts_(std::move(pts)) {}
  static Hexad from_affine(const std::array<AffineCoord, 6>& coords);

  const ConicPoint& at(int letter) const { return pts_.at(static_cast<std::size_t>(letter)); }
  const std::array<ConicPoint, 6>& points() const { return pts_; }

  // Multiset shape of the six points: number of distinct values and the
  // largest multiplicity.
  int distinct_count() const;
  int max_multiplicity() const;
  bool all_distinct() const { return distinct_count() == 6; }

  std::string str() const;

 private:
  std::array<ConicPoint, 6> pts_;
};

// Unordered sextuple of conic points with its order-6 form (the product of
// the six linear forms, up to scale).
class Sextuple {
 public:
  explicit Sextuple(std::vector<ConicPoint> pts);
  static Sextuple from_affine(const std::vector<AffineCoord>& coords);

  const std::vector<ConicPoint>& points() const { return pts_; }  // sorted
  BinaryForm sextic() const;

  int distinct_count() const;
  int max_multiplicity() const;
  bool squarefree() const { return distinct_count() == 6; }

  Hexad as_hexad() const;  // letters in sorted point order

 private:
  std::vector<ConicPoint> pts_;
};

// Pascal pole of an array over any coefficient ring: the three cross-hair
// meets, an exact collinearity check, and the join. Coincident letters fall
// back to the tangent. Throws degenerate_error when the Pascal is undefined
// (a cross-hair pair of sides coincides, or all three cross-hairs collapse
// to one point).
template <typename K>
BinaryFormT<K> pascal_pole_generic(const std::array<BinaryFormT<K>, 6>& u,
                                   const HexArray& arr) {
  auto side = [&](int x, int y) -> BinaryFormT<K> {
    if (proportional(u[static_cast<std::size_t>(x)], u[static_cast<std::size_t>(y)]))
      return u[static_cast<std::size_t>(x)] * u[static_cast<std::size_t>(x)];
    return u[static_cast<std::size_t>(x)] * u[static_cast<std::size_t>(y)];
  };
  // Opposite-side pairs over the columns of the array.
  const std::array<std::array<int, 4>, 3> pairs = {{
      {arr.at(0, 0), arr.at(1, 1), arr.at(0, 1), arr.at(1, 0)},
      {arr.at(0, 0), arr.at(1, 2), arr.at(0, 2), arr.at(1, 0)},
      {arr.at(0, 1), arr.at(1, 2), arr.at(0, 2), arr.at(1, 1)},
  }};
  std::array<BinaryFormT<K>, 3> cross = {BinaryFormT<K>(2), BinaryFormT<K>(2),
                                         BinaryFormT<K>(2)};
  for (int k = 0; k < 3; ++k) {
    BinaryFormT<K> l1 = side(pairs[k][0], pairs[k][1]);
    BinaryFormT<K> l2 = side(pairs[k][2], pairs[k][3]);
    if (proportional(l1, l2))
      throw degenerate_error("Pascal undefined: a pair of opposite sides coincides");
    cross[k] = transvectant(l1, l2, 1);
  }
  int a = -1, b = -1;
  for (int i = 0; i < 3 && a < 0; ++i)
    for (int j = i + 1; j < 3 && a < 0; ++j)
      if (!proportional(cross[i], cross[j])) {
        a = i;
        b = j;
      }
  if (a < 0)
    throw degenerate_error("Pascal undefined: all cross-hair intersections coincide");
  BinaryFormT<K> pole = transvectant(cross[a], cross[b], 1);
  int c = 3 - a - b;
  if (!transvectant(cross[c], pole, 2).is_zero())
    throw contract_error("cross-hair intersections are not collinear");
  return pole;
}

// Pascal line of the points named by the array (uses the arrangement as
// given; row and column permutations cannot change the result).
Line pascal_of_array(const Hexad& h, const HexArray& arr);

// Grouping of the 60 Pascals of a hexad into classes of equal lines.
struct CoincidencePartition {
  std::vector<std::pair<Label, Line>> lines;  // label order, all 60
  std::vector<std::vector<Label>> classes;    // ordered by least label

  const Line& line_of(const Label& s) const;
  // size -> number of classes of that size
  std::map<int, int> size_census() const;
};

CoincidencePartition all_pascals(const Hexad& h);

// Predicted partition of the labels when A and B coincide: 4 classes of 6,
// 3 of 4, and 12 of 2, built combinatorially from the table.
std::vector<std::vector<Label>> degenerate_classes();

enum class SextupleKind {
  DegenerateBad,
  Degenerate19,
  Generic60,
  Involutive,
  TripleSymmetric,
  Ricochet,
  RicochetAndInvolutive,
};

std::string kind_name(SextupleKind k);

struct Classification {
  SextupleKind kind;
  std::optional<PlanePoint> centre;  // Involutive / RicochetAndInvolutive
  std::vector<PlanePoint> centres;   // TripleSymmetric: the three centres
  std::string str() const;
};

// Decision procedure: multiplicity census, then the coincidence pattern of
// the 60 Pascals, then the sextic covariants, then the interference pattern
// of the coincident pairs.
Classification classify_sextuple(const Sextuple& gamma);

// Common point of the three chords pairing the hexad by the letter syntheme
// of a number duad; empty when the chords are not concurrent.
std::optional<PlanePoint> pairing_concurrency(const Hexad& h, const Duad& numbers);

}  // namespace pascaline
