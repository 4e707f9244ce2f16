#pragma once

#include <optional>

#include "pascaline/binary_form.hpp"
#include "pascaline/conic.hpp"

namespace pascaline {

// Covariants of a binary sextic relevant to involution detection, computed
// by literal transvectant composition:
//
//   theta_2_4  = (G, G)_4
//   theta_3_2  = (G, theta_2_4)_4
//   theta_8_2  = (theta_2_4, theta_3_2^2)_3
//   theta_15_0 = ((G, theta_2_4)_1, theta_3_2^4)_8
//
// A sextuple is in involution iff theta_15_0 vanishes; theta_8_2 then names
// the centre when it is unique, and vanishes identically when there are
// several.

// Nonzero form of order exactly six.
class SexticForm {
 public:
  explicit SexticForm(BinaryForm f) : f_(std::move(f)) {
    if (f_.order() != 6) throw contract_error("sextic form needs order 6");
    if (f_.is_zero()) throw degenerate_error("zero sextic form");
  }
  const BinaryForm& form() const { return f_; }

 private:
  BinaryForm f_;
};

// Covariant of declared degree-order (m,q): coefficients are degree-m forms
// in the coefficients of G, and the value has order q.
struct CovariantValue {
  int degree;
  int order;
  BinaryForm form;
};

CovariantValue theta_2_4(const SexticForm& g);
CovariantValue theta_3_2(const SexticForm& g);
CovariantValue theta_8_2(const SexticForm& g);
CovariantValue theta_15_0(const SexticForm& g);

// theta_15_0(G) = 0. Callers are responsible for G squarefree; on the
// discriminant locus the vanishing has no involution meaning.
bool is_involutive(const SexticForm& g);

// [theta_8_2(G)] when nonzero, nullopt when it vanishes identically
// (multiple centres). Calling this on a non-involutive form is a contract
// violation.
std::optional<PlanePoint> involution_centre(const SexticForm& g);

}  // namespace pascaline
