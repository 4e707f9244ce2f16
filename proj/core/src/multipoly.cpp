#include "pascaline/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace pascaline {

MultiPoly MultiPoly::constant(const Rat& c) {
  MultiPoly f;
  if (sgn(c) != 0) f.t_[{0, 0, 0}] = c;
  return f;
}

MultiPoly MultiPoly::variable(int var) {
  if (var < 0 || var > 2) throw contract_error("variable index out of range");
  Exps e{0, 0, 0};
  e[static_cast<std::size_t>(var)] = 1;
  return monomial(e, Rat(1));
}

MultiPoly MultiPoly::monomial(const Exps& e, const Rat& c) {
  MultiPoly f;
  if (sgn(c) != 0) f.t_[e] = c;
  return f;
}

bool MultiPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exps{0, 0, 0});
}

Rat MultiPoly::constant_value() const {
  auto it = t_.find({0, 0, 0});
  return it == t_.end() ? Rat(0) : it->second;
}

int MultiPoly::degree(int var) const {
  int d = 0;
  for (const auto& [e, c] : t_) d = std::max(d, e[static_cast<std::size_t>(var)]);
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : t_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

std::pair<MultiPoly::Exps, Rat> MultiPoly::leading() const {
  if (t_.empty()) throw contract_error("leading term of the zero polynomial");
  auto it = t_.rbegin();
  return {it->first, it->second};
}

void MultiPoly::trim() {
  for (auto it = t_.begin(); it != t_.end();) {
    if (sgn(it->second) == 0)
      it = t_.erase(it);
    else
      ++it;
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [e, c] : t_) r.t_[e] = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.t_) {
    auto [it, fresh] = t_.emplace(e, c);
    if (!fresh) it->second += c;
  }
  trim();
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.t_) {
    auto [it, fresh] = t_.emplace(e, -c);
    if (!fresh) it->second -= c;
  }
  trim();
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) {
      MultiPoly::Exps e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      auto [it, fresh] = r.t_.emplace(e, ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  r.trim();
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw contract_error("negative polynomial power");
  MultiPoly r = constant(Rat(1));
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

Rat MultiPoly::eval(const Rat& p, const Rat& q, const Rat& r) const {
  auto powv = [](const Rat& x, int e) {
    Rat v(1);
    for (int k = 0; k < e; ++k) v *= x;
    return v;
  };
  Rat acc(0);
  for (const auto& [e, c] : t_) acc += c * powv(p, e[0]) * powv(q, e[1]) * powv(r, e[2]);
  acc.canonicalize();
  return acc;
}

MultiPoly MultiPoly::eval_fractions(
    const std::array<std::pair<MultiPoly, MultiPoly>, 3>& subs) const {
  const std::array<int, 3> caps = {degree(0), degree(1), degree(2)};
  std::array<std::vector<MultiPoly>, 3> num_pow, den_pow;
  for (std::size_t v = 0; v < 3; ++v) {
    num_pow[v].push_back(MultiPoly(1));
    den_pow[v].push_back(MultiPoly(1));
    for (int k = 1; k <= caps[v]; ++k) {
      num_pow[v].push_back(num_pow[v].back() * subs[v].first);
      den_pow[v].push_back(den_pow[v].back() * subs[v].second);
    }
  }
  MultiPoly acc;
  for (const auto& [e, c] : t_) {
    MultiPoly term = MultiPoly(c);
    for (std::size_t v = 0; v < 3; ++v) {
      term = term * num_pow[v][static_cast<std::size_t>(e[v])];
      term = term * den_pow[v][static_cast<std::size_t>(caps[v] - e[v])];
    }
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::primitive_integer() const {
  if (t_.empty()) return MultiPoly();
  Int den_lcm = 1;
  for (const auto& [e, c] : t_)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Int num_gcd = 0;
  for (const auto& [e, c] : t_) {
    Rat v = c * Rat(den_lcm);
    v.canonicalize();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
  }
  if (sgn(leading().second) < 0) num_gcd = -num_gcd;
  Rat scale = Rat(den_lcm) / Rat(num_gcd);
  scale.canonicalize();
  MultiPoly out;
  for (const auto& [e, c] : t_) {
    Rat v = c * scale;
    v.canonicalize();
    out.t_[e] = v;
  }
  return out;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) return std::nullopt;
  MultiPoly rem = a, quot;
  auto [be, bc] = b.leading();
  while (!rem.is_zero()) {
    auto [re, rc] = rem.leading();
    Exps d{re[0] - be[0], re[1] - be[1], re[2] - be[2]};
    if (d[0] < 0 || d[1] < 0 || d[2] < 0) return std::nullopt;
    Rat c = rc / bc;
    c.canonicalize();
    MultiPoly t = monomial(d, c);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

std::string MultiPoly::str() const {
  if (t_.empty()) return "0";
  std::vector<std::pair<Exps, Rat>> terms(t_.begin(), t_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = a.first[0] + a.first[1] + a.first[2];
    int db = b.first[0] + b.first[1] + b.first[2];
    if (da != db) return da > db;
    return a.first > b.first;
  });
  static const char* names[3] = {"p", "q", "r"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rat mag = c > 0 ? c : Rat(-c);
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_var = e[0] + e[1] + e[2] > 0;
    bool unit = mag == 1;
    if (!unit || !has_var) os << rat_str(mag);
    bool started = !unit || !has_var;
    for (int v = 0; v < 3; ++v) {
      int ev = e[static_cast<std::size_t>(v)];
      if (ev == 0) continue;
      if (started) os << '*';
      os << names[v];
      if (ev > 1) os << '^' << ev;
      started = true;
    }
  }
  return os.str();
}

namespace {

// Univariate view in one variable with MultiPoly coefficients.
std::map<int, MultiPoly> view_in(const MultiPoly& f, int v) {
  std::map<int, MultiPoly> out;
  for (const auto& [e, c] : f.terms()) {
    MultiPoly::Exps rest = e;
    int d = rest[static_cast<std::size_t>(v)];
    rest[static_cast<std::size_t>(v)] = 0;
    out[d] += MultiPoly::monomial(rest, c);
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

MultiPoly from_view(const std::map<int, MultiPoly>& view, int v) {
  MultiPoly acc;
  for (const auto& [d, c] : view)
    acc += c * MultiPoly::variable(v).pow(d);
  return acc;
}

int view_degree(const std::map<int, MultiPoly>& view) {
  return view.empty() ? -1 : view.rbegin()->first;
}

MultiPoly content_in(const MultiPoly& f, int v) {
  MultiPoly g;
  for (const auto& [d, c] : view_in(f, v)) g = gcd(g, c);
  return g;
}

// Pseudo-remainder of f by g with respect to v.
MultiPoly prem(const MultiPoly& f, const MultiPoly& g, int v) {
  std::map<int, MultiPoly> F = view_in(f, v);
  const std::map<int, MultiPoly> G = view_in(g, v);
  const int dg = view_degree(G);
  if (dg < 0) throw contract_error("pseudo-division by zero");
  const MultiPoly lg = G.rbegin()->second;
  while (view_degree(F) >= dg) {
    const int df = view_degree(F);
    const MultiPoly lf = F.rbegin()->second;
    // F = lg*F - lf * v^(df-dg) * G
    std::map<int, MultiPoly> next;
    for (const auto& [d, c] : F) next[d] = lg * c;
    for (const auto& [d, c] : G) {
      next[d + df - dg] -= lf * c;
    }
    for (auto it = next.begin(); it != next.end();) {
      if (it->second.is_zero())
        it = next.erase(it);
      else
        ++it;
    }
    F = std::move(next);
    if (view_degree(F) == df)
      throw contract_error("pseudo-division failed to reduce the degree");
  }
  return from_view(F, v);
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.primitive_integer();
  if (b.is_zero()) return a.primitive_integer();
  int v = -1;
  for (int k = 0; k < 3 && v < 0; ++k)
    if (a.degree(k) > 0 || b.degree(k) > 0) v = k;
  if (v < 0) return MultiPoly(1);  // nonzero constants

  MultiPoly ca = content_in(a, v), cb = content_in(b, v);
  MultiPoly pa = *MultiPoly::divide_exact(a, ca);
  MultiPoly pb = *MultiPoly::divide_exact(b, cb);
  MultiPoly cg = gcd(ca, cb);

  MultiPoly f = pa, g = pb;
  if (f.degree(v) < g.degree(v)) std::swap(f, g);
  for (;;) {
    MultiPoly rem = prem(f, g, v);
    if (rem.is_zero()) {
      MultiPoly pp = *MultiPoly::divide_exact(g, content_in(g, v));
      return (cg * pp).primitive_integer();
    }
    if (rem.degree(v) == 0) return cg.primitive_integer();
    f = g;
    g = *MultiPoly::divide_exact(rem, content_in(rem, v));
  }
}

}  // namespace pascaline
