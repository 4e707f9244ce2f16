#include "pascaline/solver.hpp"

#include <algorithm>
#include <sstream>

#include "pascaline/binary_form.hpp"
#include "pascaline/pascal_engine.hpp"

namespace pascaline {

namespace {

// Joint normalization of a pole triple: divide out the common polynomial
// content, scale to integer coefficients with overall content 1, and give
// the first nonzero entry a positive leading coefficient.
std::array<MultiPoly, 3> primitive_triple(std::array<MultiPoly, 3> v) {
  if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero())
    throw contract_error("zero symbolic pole triple");
  MultiPoly g = gcd(gcd(v[0], v[1]), v[2]);
  for (MultiPoly& e : v) {
    auto q = MultiPoly::divide_exact(e, g);
    if (!q) throw contract_error("pole content failed to divide an entry");
    e = *q;
  }
  Int den_lcm = 1;
  for (const MultiPoly& e : v)
    for (const auto& [ex, c] : e.terms())
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Int num_gcd = 0;
  for (const MultiPoly& e : v)
    for (const auto& [ex, c] : e.terms()) {
      Rat s = c * Rat(den_lcm);
      s.canonicalize();
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), s.get_num().get_mpz_t());
    }
  for (const MultiPoly& e : v) {
    if (e.is_zero()) continue;
    if (sgn(e.leading().second) < 0) num_gcd = -num_gcd;
    break;
  }
  Rat scale = Rat(den_lcm) / Rat(num_gcd);
  scale.canonicalize();
  MultiPoly sc(scale);
  for (MultiPoly& e : v) e = e * sc;
  return v;
}

}  // namespace

std::array<MultiPoly, 3> symbolic_pascal(const Label& s) {
  using Form = BinaryFormT<MultiPoly>;
  const MultiPoly one(1);
  const std::array<Form, 6> u = {
      Form{one, MultiPoly(0)},                     // A = 0
      Form{one, MultiPoly(-1)},                    // B = 1
      Form{MultiPoly(0), one},                     // C = inf
      Form{one, -MultiPoly::variable(0)},          // D = p
      Form{one, -MultiPoly::variable(1)},          // E = q
      Form{one, -MultiPoly::variable(2)},          // F = r
  };
  Form pole = pascal_pole_generic(u, array_of_label(s));
  return primitive_triple({pole[0], pole[1], pole[2]});
}

MinorSystem minor_system(const Label& s, const Label& t) {
  if (s == t) throw contract_error("minor system needs two distinct labels");
  MinorSystem sys{s, t, symbolic_pascal(s), symbolic_pascal(t), {}};
  sys.minors[0] = sys.row_s[0] * sys.row_t[1] - sys.row_s[1] * sys.row_t[0];
  sys.minors[1] = sys.row_s[0] * sys.row_t[2] - sys.row_s[2] * sys.row_t[0];
  sys.minors[2] = sys.row_s[1] * sys.row_t[2] - sys.row_s[2] * sys.row_t[1];
  return sys;
}

SolutionFamily family_for_case(int tag) {
  const MultiPoly p = MultiPoly::variable(0);
  const MultiPoly r = MultiPoly::variable(2);
  const MultiPoly one(1);
  switch (tag) {
    case 1:
      return {1, 1, p * (one - p), one + p, -p, one};
    case 4:
      return {4, 1, p, p + one, p, one - p * p};
    case 5:
      return {5, 1, p - one, p, one, one - p};
    case 9:
      return {9, 2, p * (r - one), p - one, r, one};
    default:
      throw contract_error("no solution family for this case tag");
  }
}

bool verify_family(const MinorSystem& sys, const SolutionFamily& fam) {
  auto c = interference_case(interference(sys.s, sys.t));
  if (!c || c->tag != fam.case_tag)
    throw contract_error("family case tag does not match the label pair");
  const std::array<std::pair<MultiPoly, MultiPoly>, 3> subs = {
      std::pair<MultiPoly, MultiPoly>{MultiPoly::variable(0), MultiPoly(1)},
      std::pair<MultiPoly, MultiPoly>{fam.q_num, fam.q_den},
      std::pair<MultiPoly, MultiPoly>{fam.r_num, fam.r_den},
  };
  for (const MultiPoly& m : sys.minors)
    if (!m.eval_fractions(subs).is_zero()) return false;
  return true;
}

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using U = std::uint64_t;

U pow_mod(U base, U exp, U mod) {
  U acc = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) acc = acc * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return acc;
}

U inv_mod(U a, U p) { return pow_mod(a, p - 2, p); }

// Dense cube of coefficients mod P, indexed [ep][eq][er].
struct CompiledPoly {
  int dp = 0, dq = 0, dr = 0;
  std::vector<U> c;  // (dp+1)*(dq+1)*(dr+1)
  U& at(int ep, int eq, int er) {
    return c[static_cast<std::size_t>((ep * (dq + 1) + eq) * (dr + 1) + er)];
  }
  U at(int ep, int eq, int er) const {
    return c[static_cast<std::size_t>((ep * (dq + 1) + eq) * (dr + 1) + er)];
  }
};

CompiledPoly compile_mod(const MultiPoly& f, unsigned prime) {
  CompiledPoly out;
  out.dp = f.degree(0);
  out.dq = f.degree(1);
  out.dr = f.degree(2);
  out.c.assign(static_cast<std::size_t>((out.dp + 1) * (out.dq + 1) * (out.dr + 1)), 0);
  for (const auto& [e, coef] : f.terms()) {
    if (coef.get_den() != 1)
      throw contract_error("scan polynomial must have integer coefficients");
    U m = mpz_fdiv_ui(coef.get_num().get_mpz_t(), prime);
    out.at(e[0], e[1], e[2]) = m;
  }
  return out;
}

// Projective value over F_P: n/d with infinity = (1,0).
struct PP {
  U n, d;
};

U proj_diff(const PP& x, const PP& y, U p) {
  return (x.n * y.d % p + p - y.n * x.d % p) % p;
}

// Family relations in the normalized coordinates, mod P.
bool family_relations(int tag, U pt, U qt, U rt, U p) {
  auto mul = [p](U a, U b) { return a * b % p; };
  auto sub = [p](U a, U b) { return (a + p - b % p) % p; };
  switch (tag) {
    case 1:  // q(1+p) = p(1-p), r = -p
      return mul(qt, (1 + pt) % p) == mul(pt, sub(1, pt)) && rt == (p - pt) % p;
    case 4:  // q(p+1) = p, r(1-p^2) = p
      return mul(qt, (pt + 1) % p) == pt && mul(rt, sub(1, mul(pt, pt))) == pt;
    case 5:  // q*p = p-1, r(1-p) = 1
      return mul(qt, pt) == sub(pt, 1) && mul(rt, sub(1, pt)) == 1;
    case 9:  // q(p-1) = p(r-1)
      return mul(qt, sub(pt, 1)) == mul(pt, sub(rt, 1));
    default:
      return false;
  }
}

}  // namespace

ScanReport finite_field_scan(const Label& s, const Label& t, unsigned prime) {
  if (s == t) throw contract_error("scan needs two distinct labels");
  if (prime < 5 || !is_prime(prime))
    throw std::invalid_argument("scan modulus must be a prime >= 5");
  if (prime > 311)
    throw std::invalid_argument("scan modulus above 311 is impractically slow");

  ScanReport rep{s, t};
  rep.prime = prime;

  auto c = interference_case(interference(s, t));
  if (!c) throw contract_error("label pair without an interference pattern");
  rep.case_tag = c->tag;
  rep.has_family = c->tag == 1 || c->tag == 4 || c->tag == 5 || c->tag == 9;

  // Transport (s,t) to the representative pair: a number permutation pi with
  // pi(S) = k(1,23) and pi(T) = t_case, letters moved by omega^{-1}(pi).
  Label big_s = c->transposed ? t : s;
  Label big_t = c->transposed ? s : t;
  const Label s0 = canonical_s();
  const Label t0 = case_representative_t(c->tag);
  Perm transport = perm_identity();
  bool found = false;
  for (const Perm& pi : all_perms())
    if (apply_perm(pi, big_s) == s0 && apply_perm(pi, big_t) == t0) {
      transport = pi;
      found = true;
      break;
    }
  if (!found) throw contract_error("no permutation carries the pair to its representative");
  const Perm letters_inv = perm_inverse(omega_inverse(transport));

  const std::array<MultiPoly, 3> rs = symbolic_pascal(s);
  const std::array<MultiPoly, 3> rt = symbolic_pascal(t);
  std::array<CompiledPoly, 6> rows;
  for (int k = 0; k < 3; ++k) {
    rows[static_cast<std::size_t>(k)] = compile_mod(rs[static_cast<std::size_t>(k)], prime);
    rows[static_cast<std::size_t>(k + 3)] = compile_mod(rt[static_cast<std::size_t>(k)], prime);
  }

  const U P = prime;
  int max_dr = 0, max_dp = 0, max_dq = 0;
  for (const CompiledPoly& cp : rows) {
    max_dr = std::max(max_dr, cp.dr);
    max_dp = std::max(max_dp, cp.dp);
    max_dq = std::max(max_dq, cp.dq);
  }

  std::vector<U> powp(static_cast<std::size_t>(max_dp) + 1, 1);
  std::vector<U> powq(static_cast<std::size_t>(max_dq) + 1, 1);
  std::array<std::vector<U>, 6> uni;
  for (auto& u : uni) u.assign(static_cast<std::size_t>(max_dr) + 1, 0);

  for (U pv = 0; pv < P; ++pv) {
    for (std::size_t k = 1; k < powp.size(); ++k) powp[k] = powp[k - 1] * pv % P;
    for (U qv = 0; qv < P; ++qv) {
      for (std::size_t k = 1; k < powq.size(); ++k) powq[k] = powq[k - 1] * qv % P;
      // Specialize every row entry to a univariate polynomial in r.
      for (int e = 0; e < 6; ++e) {
        const CompiledPoly& cp = rows[static_cast<std::size_t>(e)];
        std::vector<U>& u = uni[static_cast<std::size_t>(e)];
        std::fill(u.begin(), u.end(), 0);
        for (int ep = 0; ep <= cp.dp; ++ep)
          for (int eq = 0; eq <= cp.dq; ++eq) {
            U w = powp[static_cast<std::size_t>(ep)] * powq[static_cast<std::size_t>(eq)] % P;
            if (!w) continue;
            for (int er = 0; er <= cp.dr; ++er) {
              U coef = cp.at(ep, eq, er);
              if (coef) u[static_cast<std::size_t>(er)] = (u[static_cast<std::size_t>(er)] + w * coef) % P;
            }
          }
      }
      for (U rv = 0; rv < P; ++rv) {
        U val[6];
        for (int e = 0; e < 6; ++e) {
          const std::vector<U>& u = uni[static_cast<std::size_t>(e)];
          U acc = 0;
          for (std::size_t k = u.size(); k-- > 0;) acc = (acc * rv + u[k]) % P;
          val[e] = acc;
        }
        U m01 = (val[0] * val[4] + P * P - val[1] * val[3]) % P;
        U m02 = (val[0] * val[5] + P * P - val[2] * val[3]) % P;
        U m12 = (val[1] * val[5] + P * P - val[2] * val[4]) % P;
        if (m01 | m02 | m12) continue;

        ++rep.total;
        bool illegal = pv <= 1 || qv <= 1 || rv <= 1 || pv == qv || pv == rv || qv == rv;
        if (illegal) {
          ++rep.illegal;
          continue;
        }
        bool in_family = false;
        if (rep.has_family) {
          const PP values[6] = {{0, 1}, {1, 1}, {1, 0}, {pv, 1}, {qv, 1}, {rv, 1}};
          PP a = values[letters_inv[0]], b = values[letters_inv[1]],
             cc = values[letters_inv[2]], d = values[letters_inv[3]],
             e = values[letters_inv[4]], f = values[letters_inv[5]];
          U scale_n = proj_diff(b, cc, P);
          U scale_d = proj_diff(b, a, P);
          auto moebius = [&](const PP& z) {
            U num = proj_diff(z, a, P) * scale_n % P;
            U den = proj_diff(z, cc, P) * scale_d % P;
            return num * inv_mod(den, P) % P;
          };
          in_family = family_relations(rep.case_tag, moebius(d), moebius(e), moebius(f), P);
        }
        if (in_family) {
          ++rep.family;
        } else {
          ++rep.unexplained;
          rep.unexplained_triples.push_back(
              {static_cast<unsigned>(pv), static_cast<unsigned>(qv), static_cast<unsigned>(rv)});
        }
      }
    }
  }
  return rep;
}

std::string ScanReport::to_text() const {
  std::ostringstream os;
  os << "finite-field scan: s=" << s.str() << " t=" << t.str() << " prime=" << prime
     << " pattern=I(" << case_tag << ") family=" << (has_family ? "yes" : "none") << "\n";
  os << "  common zeros: " << total << "  illegal: " << illegal << "  family: " << family
     << "  unexplained: " << unexplained << "\n";
  os << "  unexplained triples:";
  if (unexplained_triples.empty()) {
    os << " (none)\n";
  } else {
    os << "\n";
    for (const auto& tr : unexplained_triples)
      os << "    (" << tr[0] << "," << tr[1] << "," << tr[2] << ")\n";
  }
  os << "  note: mod-p scan is completeness evidence only; it cannot by itself\n"
        "  decide emptiness in characteristic zero.\n";
  return os.str();
}

}  // namespace pascaline
