#include "pascaline/rational.hpp"

#include <cctype>

namespace pascaline {

Int factorial(unsigned n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Int binomial(unsigned n, unsigned k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

namespace {

bool looks_like_rational(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[i] == '-' || s[i] == '+') ++i;
  if (i == s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  bool seen_slash = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '/') {
      if (seen_slash || i + 1 == s.size()) return false;
      seen_slash = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(const std::string& token) {
  if (!looks_like_rational(token))
    throw std::invalid_argument("not a rational: '" + token + "'");
  std::string body = token[0] == '+' ? token.substr(1) : token;
  Rat x;
  if (x.set_str(body, 10) != 0)
    throw std::invalid_argument("not a rational: '" + token + "'");
  if (sgn(Rat(x.get_den())) == 0)
    throw std::invalid_argument("zero denominator: '" + token + "'");
  x.canonicalize();
  return x;
}

AffineCoord parse_coord(const std::string& token) {
  if (token == "inf") return AffineCoord::infinity();
  return AffineCoord(parse_rat(token));
}

}  // namespace pascaline
