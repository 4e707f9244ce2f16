#include <doctest.h>

#include "pascaline/binary_form.hpp"
#include "testutil.hpp"

using namespace pascaline;
using testutil::Rng;
using testutil::transvectant_oracle;

TEST_CASE("transvectant matches the dense-grid oracle") {
  Rng rng(0xb10f001);
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n)
      for (int r = 0; r <= std::min(m, n); ++r) {
        BinaryForm u = rng.form(m);
        BinaryForm v = rng.form(n);
        CHECK(transvectant(u, v, r) == transvectant_oracle(u, v, r));
      }
}

TEST_CASE("transvectant pinned values") {
  BinaryForm x1 = {Rat(1), Rat(0)};
  BinaryForm x2 = {Rat(0), Rat(1)};
  CHECK(transvectant(x1, x2, 0) == BinaryForm{Rat(0), Rat(1), Rat(0)});

  // (Q,Q)_2 = -1/2 (a1^2 - 4 a0 a2)
  Rng rng(0x5eed);
  for (int k = 0; k < 12; ++k) {
    BinaryForm q = rng.form(2);
    BinaryForm t = transvectant(q, q, 2);
    REQUIRE(t.order() == 0);
    CHECK(t[0] == make_rat(-1, 2) * (q[1] * q[1] - Rat(4) * q[0] * q[2]));
  }

  // (x1 x2, x1 - a x2)_1 = -1/2 (x1 + a x2), and the mirrored sign.
  for (long a : {5L, -3L, 0L, 7L}) {
    BinaryForm q = {Rat(0), Rat(1), Rat(0)};
    BinaryForm u = {Rat(1), Rat(-a)};
    CHECK(transvectant(q, u, 1) == BinaryForm{make_rat(-1, 2), make_rat(-a, 2)});
    BinaryForm u2 = {Rat(1), Rat(a)};
    CHECK(transvectant(q, u2, 1) == BinaryForm{make_rat(-1, 2), make_rat(a, 2)});
  }

  // (x1^2, x2^2)_1 = x1 x2
  BinaryForm x1sq = {Rat(1), Rat(0), Rat(0)};
  BinaryForm x2sq = {Rat(0), Rat(0), Rat(1)};
  CHECK(transvectant(x1sq, x2sq, 1) == BinaryForm{Rat(0), Rat(1), Rat(0)});
}

TEST_CASE("transvectant index range") {
  Rng rng(7);
  BinaryForm u = rng.form(3), v = rng.form(2);
  CHECK_THROWS_AS(transvectant(u, v, 3), std::out_of_range);
  CHECK_THROWS_AS(transvectant(u, v, -1), std::out_of_range);
}

TEST_CASE("transvectant bilinearity and order-2 symmetry") {
  Rng rng(0xabcd);
  for (int k = 0; k < 10; ++k) {
    BinaryForm u = rng.form(4), u2 = rng.form(4), v = rng.form(3);
    Rat a = rng.rat(), b = rng.rat();
    for (int r = 0; r <= 3; ++r) {
      BinaryForm lhs = transvectant(a * u + b * u2, v, r);
      BinaryForm rhs = a * transvectant(u, v, r) + b * transvectant(u2, v, r);
      CHECK(lhs == rhs);
    }
    BinaryForm q = rng.form(2), s = rng.form(2);
    CHECK(transvectant(q, s, 2) == transvectant(s, q, 2));
  }
}

TEST_CASE("transvectant equivariance under unimodular substitution") {
  Rng rng(0xe11e);
  for (int k = 0; k < 8; ++k) {
    Mat2 g = rng.unimodular();
    REQUIRE(g.det() == 1);
    BinaryForm u = rng.form(4), v = rng.form(3);
    for (int r = 0; r <= 3; ++r)
      CHECK(transvectant(substitute(u, g), substitute(v, g), r) ==
            substitute(transvectant(u, v, r), g));
  }
}

TEST_CASE("substitute pinned values") {
  BinaryForm x1sq = {Rat(1), Rat(0), Rat(0)};
  CHECK(substitute(x1sq, Mat2::identity()) == x1sq);

  // x1 -> x1 - x2, x2 -> x1
  Mat2 sigma{1, -1, 1, 0};
  BinaryForm x1x2 = {Rat(0), Rat(1), Rat(0)};
  CHECK(substitute(x1x2, sigma) == BinaryForm{Rat(1), Rat(-1), Rat(0)});
  BinaryForm t = {Rat(1), Rat(-1), Rat(1)};
  CHECK(substitute(t, sigma) == t);

  // Singular substitutions are allowed and may collapse the form.
  Mat2 rank1{1, 0, 0, 0};
  CHECK(substitute(x1x2, rank1).is_zero());
}

TEST_CASE("canonicalize") {
  CHECK(ProjectiveForm(BinaryForm{Rat(-12), Rat(44), Rat(-56)}).form() ==
        BinaryForm{Rat(3), Rat(-11), Rat(14)});
  CHECK(ProjectiveForm(BinaryForm{Rat(1), Rat(0), Rat(4)}).form() ==
        BinaryForm{Rat(1), Rat(0), Rat(4)});
  CHECK(ProjectiveForm(BinaryForm{Rat(0), make_rat(1, 2), Rat(0)}).form() ==
        BinaryForm{Rat(0), Rat(1), Rat(0)});
  CHECK_THROWS_AS(ProjectiveForm(BinaryForm(2)), degenerate_error);

  Rng rng(0xcafe);
  for (int k = 0; k < 20; ++k) {
    BinaryForm f = rng.nonzero_form(rng.ilong(0, 5) % 6);
    ProjectiveForm p(f);
    // Idempotent, and stable under rescaling.
    CHECK(ProjectiveForm(p.form()) == p);
    Rat s = rng.nonzero_rat();
    CHECK(ProjectiveForm(s * f) == p);
  }
}

TEST_CASE("form arithmetic basics") {
  BinaryForm a = {Rat(1), Rat(2)};
  BinaryForm b = {Rat(3), Rat(-1)};
  CHECK(a * b == BinaryForm{Rat(3), Rat(5), Rat(-2)});
  CHECK((a + b) == BinaryForm{Rat(4), Rat(1)});
  CHECK(BinaryForm(3).is_zero());
  CHECK_THROWS_AS((a + BinaryForm{Rat(1), Rat(0), Rat(0)}), contract_error);
  CHECK(pow_form(a, 0) == BinaryForm{Rat(1)});
  CHECK(pow_form(a, 2) == a * a);
}
