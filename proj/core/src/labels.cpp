#include "pascaline/labels.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace pascaline {

std::string Duad::str_numbers() const {
  std::string s;
  s += static_cast<char>('1' + lo);
  s += static_cast<char>('1' + hi);
  return s;
}

std::string Duad::str_letters() const {
  std::string s;
  s += letter_char(lo);
  s += letter_char(hi);
  return s;
}

Syntheme::Syntheme(std::array<Duad, 3> d) : duads(d) {
  std::sort(duads.begin(), duads.end());
  bool seen[6] = {false, false, false, false, false, false};
  for (const Duad& x : duads) {
    if (seen[x.lo] || seen[x.hi]) throw contract_error("syntheme is not a partition");
    seen[x.lo] = seen[x.hi] = true;
  }
}

bool Syntheme::contains(const Duad& d) const {
  return duads[0] == d || duads[1] == d || duads[2] == d;
}

const Duad& Syntheme::duad_of(int x) const {
  for (const Duad& d : duads)
    if (d.contains(x)) return d;
  throw contract_error("element not covered by syntheme");
}

std::string Syntheme::str_numbers() const {
  return duads[0].str_numbers() + "." + duads[1].str_numbers() + "." +
         duads[2].str_numbers();
}

std::string Syntheme::str_letters() const {
  return duads[0].str_letters() + "." + duads[1].str_letters() + "." +
         duads[2].str_letters();
}

namespace {

// Row-major upper triangle for letter duads (A,B),(A,C),...,(E,F).
constexpr const char* kTableEntries[15] = {
    "14.25.36", "16.24.35", "13.26.45", "12.34.56", "15.23.46",  // A row
    "15.26.34", "12.35.46", "16.23.45", "13.24.56",              // B row
    "14.23.56", "13.25.46", "12.36.45",                          // C row
    "15.24.36", "16.25.34",                                      // D row
    "14.26.35",                                                  // E row
};

Syntheme parse_syntheme(const std::string& s) {
  if (s.size() != 8 || s[2] != '.' || s[5] != '.')
    throw contract_error("malformed syntheme literal: " + s);
  auto digit = [&](std::size_t i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw contract_error("malformed syntheme literal: " + s);
    int v = s[i] - '1';
    if (v < 0 || v > 5) throw contract_error("syntheme element out of range: " + s);
    return v;
  };
  return Syntheme({Duad(digit(0), digit(1)), Duad(digit(3), digit(4)),
                   Duad(digit(6), digit(7))});
}

struct SylvesterTable {
  // syn[i][j] = number syntheme of letter duad {i,j}, i != j.
  std::vector<Syntheme> entries;
  int index[6][6];
  // ls[i][j] = letter syntheme of number duad {i,j}.
  std::vector<Syntheme> inverse_entries;
  int inverse_index[6][6];

  SylvesterTable() {
    int k = 0;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) {
        entries.push_back(parse_syntheme(kTableEntries[k]));
        index[i][j] = index[j][i] = k;
        ++k;
      }

    // Bijection LD -> NS: all fifteen synthemes distinct.
    std::set<Syntheme> distinct(entries.begin(), entries.end());
    if (distinct.size() != 15)
      throw contract_error("table is not a bijection onto number synthemes");

    // Inverse direction: the letter duads whose synthemes contain a given
    // number duad must partition the letters.
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) {
        Duad nd(a, b);
        std::vector<Duad> hosts;
        for (int i = 0; i < 6; ++i)
          for (int j = i + 1; j < 6; ++j)
            if (entries[index[i][j]].contains(nd)) hosts.push_back(Duad(i, j));
        if (hosts.size() != 3)
          throw contract_error("number duad not hosted by exactly three letter duads");
        inverse_index[a][b] = inverse_index[b][a] =
            static_cast<int>(inverse_entries.size());
        inverse_entries.push_back(Syntheme({hosts[0], hosts[1], hosts[2]}));
      }
  }
};

const SylvesterTable& table() {
  static const SylvesterTable t;
  return t;
}

}  // namespace

const Syntheme& syntheme_of_letter_duad(const Duad& letters) {
  const SylvesterTable& t = table();
  return t.entries[t.index[letters.lo][letters.hi]];
}

const Syntheme& letter_syntheme_of_number_duad(const Duad& numbers) {
  const SylvesterTable& t = table();
  return t.inverse_entries[t.inverse_index[numbers.lo][numbers.hi]];
}

std::string Label::str() const {
  std::ostringstream os;
  os << "k(" << apex + 1 << ',' << pair.str_numbers() << ')';
  return os.str();
}

const std::vector<Label>& all_labels() {
  static const std::vector<Label> labels = [] {
    std::vector<Label> v;
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        for (int c = b + 1; c < 6; ++c)
          if (b != a && c != a) v.push_back(Label(a, Duad(b, c)));
    std::sort(v.begin(), v.end());
    return v;
  }();
  return labels;
}

int label_index(const Label& s) {
  const std::vector<Label>& v = all_labels();
  auto it = std::lower_bound(v.begin(), v.end(), s);
  if (it == v.end() || *it != s) throw contract_error("unknown label");
  return static_cast<int>(it - v.begin());
}

Label parse_label(const std::string& s) {
  std::string body = s;
  if (body.size() >= 2 && (body[0] == 'k' || body[0] == 'K') && body[1] == '(') {
    if (body.back() != ')') throw std::invalid_argument("malformed label: '" + s + "'");
    body = body.substr(2, body.size() - 3);
  }
  // body is now "a,bc"
  if (body.size() != 4 || body[1] != ',')
    throw std::invalid_argument("malformed label: '" + s + "'");
  auto digit = [&](std::size_t i) {
    if (body[i] < '1' || body[i] > '6')
      throw std::invalid_argument("label element out of range: '" + s + "'");
    return body[i] - '1';
  };
  int a = digit(0), b = digit(2), c = digit(3);
  if (b == c || a == b || a == c)
    throw std::invalid_argument("label needs three distinct elements: '" + s + "'");
  return Label(a, Duad(b, c));
}

HexArray::HexArray(std::array<int, 3> top, std::array<int, 3> bottom)
    : cells_{top, bottom} {
  bool seen[6] = {false, false, false, false, false, false};
  for (const auto& row : cells_)
    for (int x : row) {
      if (x < 0 || x > 5 || seen[x])
        throw contract_error("array must contain each letter exactly once");
      seen[x] = true;
    }
}

std::array<int, 6> HexArray::canonical_key() const {
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::array<int, 6> best{7, 7, 7, 7, 7, 7};
  for (int swap = 0; swap < 2; ++swap)
    for (const auto& cp : perms) {
      std::array<int, 6> key{};
      for (int col = 0; col < 3; ++col) {
        key[col] = cells_[swap][cp[col]];
        key[col + 3] = cells_[1 - swap][cp[col]];
      }
      if (key < best) best = key;
    }
  return best;
}

std::string HexArray::str() const {
  std::ostringstream os;
  os << '(';
  for (int col = 0; col < 3; ++col) {
    if (col) os << ' ';
    os << letter_char(cells_[0][col]);
  }
  os << " / ";
  for (int col = 0; col < 3; ++col) {
    if (col) os << ' ';
    os << letter_char(cells_[1][col]);
  }
  os << ')';
  return os.str();
}

namespace {

// The three synthemes of a side triple share exactly one duad.
Duad common_duad(const Syntheme& s1, const Syntheme& s2, const Syntheme& s3) {
  std::optional<Duad> found;
  for (const Duad& d : s1.duads)
    if (s2.contains(d) && s3.contains(d)) {
      if (found) throw contract_error("side synthemes share more than one duad");
      found = d;
    }
  if (!found) throw contract_error("side synthemes share no duad");
  return *found;
}

}  // namespace

Label label_of_array(const HexArray& m) {
  // Opposite sides of the hexagon (R1,R2,R3 / S1,S2,S3) split into the two
  // alternating triples {R1S2, R3S1, R2S3} and {R1S3, R2S1, R3S2}.
  Duad d1 = common_duad(syntheme_of_letter_duad(Duad(m.at(0, 0), m.at(1, 1))),
                        syntheme_of_letter_duad(Duad(m.at(0, 2), m.at(1, 0))),
                        syntheme_of_letter_duad(Duad(m.at(0, 1), m.at(1, 2))));
  Duad d2 = common_duad(syntheme_of_letter_duad(Duad(m.at(0, 0), m.at(1, 2))),
                        syntheme_of_letter_duad(Duad(m.at(0, 1), m.at(1, 0))),
                        syntheme_of_letter_duad(Duad(m.at(0, 2), m.at(1, 1))));
  int a = -1;
  if (d2.contains(d1.lo)) a = d1.lo;
  if (d2.contains(d1.hi)) {
    if (a >= 0) throw contract_error("side duads share both elements");
    a = d1.hi;
  }
  if (a < 0) throw contract_error("side duads share no element");
  return Label(a, Duad(d1.other(a), d2.other(a)));
}

HexArray array_of_label(const Label& s) {
  const Syntheme& e1 = letter_syntheme_of_number_duad(Duad(s.apex, s.pair.lo));
  const Syntheme& e2 = letter_syntheme_of_number_duad(Duad(s.apex, s.pair.hi));
  // Walk the hexagon alternating between the two edge sets.
  std::array<int, 6> cyc{};
  cyc[0] = 0;
  for (int k = 1; k < 6; ++k) {
    const Syntheme& side = (k % 2 == 1) ? e1 : e2;
    cyc[k] = side.duad_of(cyc[k - 1]).other(cyc[k - 1]);
  }
  if (e2.duad_of(cyc[5]).other(cyc[5]) != cyc[0])
    throw contract_error("hexagon walk failed to close");
  return HexArray({cyc[0], cyc[4], cyc[2]}, {cyc[3], cyc[1], cyc[5]});
}

Perm perm_identity() { return {0, 1, 2, 3, 4, 5}; }

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r{};
  for (int i = 0; i < 6; ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r{};
  for (int i = 0; i < 6; ++i) r[p[i]] = i;
  return r;
}

Perm perm_from_cycles(const std::vector<std::vector<int>>& cycles) {
  Perm r = perm_identity();
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      int from = c[k];
      int to = c[(k + 1) % c.size()];
      if (from < 0 || from > 5 || to < 0 || to > 5)
        throw contract_error("cycle element out of range");
      r[from] = to;
    }
  }
  return r;
}

const std::vector<Perm>& all_perms() {
  static const std::vector<Perm> perms = [] {
    std::vector<Perm> v;
    Perm p = perm_identity();
    do {
      v.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return v;
  }();
  return perms;
}

std::string perm_cycle_str(const Perm& p) {
  std::ostringstream os;
  bool done[6] = {false, false, false, false, false, false};
  bool any = false;
  for (int i = 0; i < 6; ++i) {
    if (done[i] || p[i] == i) {
      done[i] = true;
      continue;
    }
    os << '(';
    int j = i;
    bool first = true;
    while (!done[j]) {
      if (!first) os << ' ';
      os << j + 1;
      done[j] = true;
      j = p[j];
      first = false;
    }
    os << ')';
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

namespace {

Perm omega_transposition(int i, int j) {
  const Syntheme& s = syntheme_of_letter_duad(Duad(i, j));
  Perm r = perm_identity();
  for (const Duad& d : s.duads) {
    r[d.lo] = d.hi;
    r[d.hi] = d.lo;
  }
  return r;
}

std::vector<std::pair<int, int>> transposition_list(const Perm& p) {
  std::vector<std::pair<int, int>> list;
  bool done[6] = {false, false, false, false, false, false};
  for (int i = 0; i < 6; ++i) {
    if (done[i]) continue;
    std::vector<int> cycle;
    int j = i;
    while (!done[j]) {
      cycle.push_back(j);
      done[j] = true;
      j = p[j];
    }
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k)
      list.emplace_back(cycle[k], cycle[k + 1]);
  }
  return list;
}

}  // namespace

Perm omega(const Perm& p) {
  Perm r = perm_identity();
  for (const auto& [i, j] : transposition_list(p))
    r = perm_compose(r, omega_transposition(i, j));
  return r;
}

Perm omega_inverse(const Perm& p) {
  static const std::map<Perm, Perm> inverse = [] {
    std::map<Perm, Perm> m;
    for (const Perm& q : all_perms()) m[omega(q)] = q;
    if (m.size() != 720) throw contract_error("omega is not a bijection");
    return m;
  }();
  auto it = inverse.find(p);
  if (it == inverse.end()) throw contract_error("omega_inverse: not in the image");
  return it->second;
}

Label apply_perm(const Perm& numbers, const Label& s) {
  return Label(numbers[s.apex], Duad(numbers[s.pair.lo], numbers[s.pair.hi]));
}

HexArray apply_letters(const Perm& letters, const HexArray& m) {
  return HexArray({letters[m.at(0, 0)], letters[m.at(0, 1)], letters[m.at(0, 2)]},
                  {letters[m.at(1, 0)], letters[m.at(1, 1)], letters[m.at(1, 2)]});
}

InterferenceMatrix interference(const Label& s, const Label& t) {
  auto card1 = [](int a, int b) { return a == b ? 1 : 0; };
  auto card12 = [](int a, const Duad& d) { return d.contains(a) ? 1 : 0; };
  auto card22 = [](const Duad& a, const Duad& b) {
    return (b.contains(a.lo) ? 1 : 0) + (b.contains(a.hi) ? 1 : 0);
  };
  InterferenceMatrix r;
  r.m[0][0] = card1(s.apex, t.apex);
  r.m[0][1] = card12(s.apex, t.pair);
  r.m[1][0] = card12(t.apex, s.pair);
  r.m[1][1] = card22(s.pair, t.pair);
  return r;
}

std::string InterferenceMatrix::str() const {
  std::ostringstream os;
  os << '[' << m[0][0] << ' ' << m[0][1] << " / " << m[1][0] << ' ' << m[1][1] << ']';
  return os.str();
}

namespace {

const InterferenceMatrix kCases[9] = {
    InterferenceMatrix{{{{1, 0}, {0, 0}}}}, InterferenceMatrix{{{{1, 0}, {0, 1}}}},
    InterferenceMatrix{{{{0, 0}, {1, 0}}}}, InterferenceMatrix{{{{0, 0}, {1, 1}}}},
    InterferenceMatrix{{{{0, 1}, {1, 1}}}}, InterferenceMatrix{{{{0, 1}, {1, 0}}}},
    InterferenceMatrix{{{{0, 0}, {0, 0}}}}, InterferenceMatrix{{{{0, 0}, {0, 1}}}},
    InterferenceMatrix{{{{0, 0}, {0, 2}}}},
};

}  // namespace

std::optional<InterferenceCase> interference_case(const InterferenceMatrix& m) {
  for (int j = 0; j < 9; ++j)
    if (m == kCases[j]) return InterferenceCase{j + 1, false};
  for (int j = 0; j < 9; ++j)
    if (m == kCases[j].transpose()) return InterferenceCase{j + 1, true};
  return std::nullopt;
}

Label canonical_s() { return Label(0, Duad(1, 2)); }

Label case_representative_t(int tag) {
  switch (tag) {
    case 1: return Label(0, Duad(3, 4));  // k(1,45)
    case 2: return Label(0, Duad(1, 3));  // k(1,24)
    case 3: return Label(1, Duad(3, 4));  // k(2,45)
    case 4: return Label(1, Duad(2, 3));  // k(2,34)
    case 5: return Label(1, Duad(0, 2));  // k(2,13)
    case 6: return Label(1, Duad(0, 3));  // k(2,14)
    case 7: return Label(3, Duad(4, 5));  // k(4,56)
    case 8: return Label(3, Duad(1, 4));  // k(4,25)
    case 9: return Label(3, Duad(1, 2));  // k(4,23)
    default: throw contract_error("interference case tag out of range");
  }
}

}  // namespace pascaline
