#include "pascaline/covariants.hpp"

namespace pascaline {

CovariantValue theta_2_4(const SexticForm& g) {
  return {2, 4, transvectant(g.form(), g.form(), 4)};
}

CovariantValue theta_3_2(const SexticForm& g) {
  return {3, 2, transvectant(g.form(), theta_2_4(g).form, 4)};
}

CovariantValue theta_8_2(const SexticForm& g) {
  BinaryForm t24 = theta_2_4(g).form;
  BinaryForm t32 = theta_3_2(g).form;
  return {8, 2, transvectant(t24, t32 * t32, 3)};
}

CovariantValue theta_15_0(const SexticForm& g) {
  BinaryForm t24 = theta_2_4(g).form;
  BinaryForm t32 = theta_3_2(g).form;
  BinaryForm left = transvectant(g.form(), t24, 1);
  BinaryForm t32_4 = (t32 * t32) * (t32 * t32);
  return {15, 0, transvectant(left, t32_4, 8)};
}

bool is_involutive(const SexticForm& g) { return theta_15_0(g).form.is_zero(); }

std::optional<PlanePoint> involution_centre(const SexticForm& g) {
  if (!is_involutive(g))
    throw contract_error("involution_centre called on a non-involutive sextic");
  BinaryForm t82 = theta_8_2(g).form;
  if (t82.is_zero()) return std::nullopt;
  return PlanePoint(t82);
}

}  // namespace pascaline
