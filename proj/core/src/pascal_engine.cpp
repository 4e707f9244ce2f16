#include "pascaline/pascal_engine.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pascaline/covariants.hpp"

namespace pascaline {

Hexad Hexad::from_affine(const std::array<AffineCoord, 6>& coords) {
  return Hexad({ConicPoint::from_affine(coords[0]), ConicPoint::from_affine(coords[1]),
                ConicPoint::from_affine(coords[2]), ConicPoint::from_affine(coords[3]),
                ConicPoint::from_affine(coords[4]), ConicPoint::from_affine(coords[5])});
}

namespace {

std::map<ProjectiveForm, int> census_of(const std::vector<ConicPoint>& pts) {
  std::map<ProjectiveForm, int> m;
  for (const ConicPoint& p : pts) {
    auto [it, fresh] = m.emplace(p.form(), 0);
    ++it->second;
    (void)fresh;
  }
  return m;
}

}  // namespace

int Hexad::distinct_count() const {
  return static_cast<int>(census_of({pts_.begin(), pts_.end()}).size());
}

int Hexad::max_multiplicity() const {
  int mx = 0;
  for (const auto& [form, count] : census_of({pts_.begin(), pts_.end()}))
    mx = std::max(mx, count);
  return mx;
}

std::string Hexad::str() const {
  std::ostringstream os;
  for (int i = 0; i < 6; ++i) {
    if (i) os << ' ';
    os << letter_char(i) << '=' << pts_[static_cast<std::size_t>(i)].str();
  }
  return os.str();
}

Sextuple::Sextuple(std::vector<ConicPoint> pts) : pts_(std::move(pts)) {
  if (pts_.size() != 6) throw contract_error("sextuple needs six points");
  std::sort(pts_.begin(), pts_.end());
}

Sextuple Sextuple::from_affine(const std::vector<AffineCoord>& coords) {
  std::vector<ConicPoint> pts;
  pts.reserve(coords.size());
  for (const AffineCoord& c : coords) pts.push_back(ConicPoint::from_affine(c));
  return Sextuple(std::move(pts));
}

BinaryForm Sextuple::sextic() const {
  BinaryForm g = {Rat(1)};
  for (const ConicPoint& p : pts_) g = g * p.form().form();
  return g;
}

int Sextuple::distinct_count() const { return static_cast<int>(census_of(pts_).size()); }

int Sextuple::max_multiplicity() const {
  int mx = 0;
  for (const auto& [form, count] : census_of(pts_)) mx = std::max(mx, count);
  return mx;
}

Hexad Sextuple::as_hexad() const {
  return Hexad({pts_[0], pts_[1], pts_[2], pts_[3], pts_[4], pts_[5]});
}

Line pascal_of_array(const Hexad& h, const HexArray& arr) {
  std::array<BinaryForm, 6> u = {
      h.at(0).form().form(), h.at(1).form().form(), h.at(2).form().form(),
      h.at(3).form().form(), h.at(4).form().form(), h.at(5).form().form()};
  return Line(PlanePoint(pascal_pole_generic(u, arr)));
}

const Line& CoincidencePartition::line_of(const Label& s) const {
  return lines.at(static_cast<std::size_t>(label_index(s))).second;
}

std::map<int, int> CoincidencePartition::size_census() const {
  std::map<int, int> census;
  for (const auto& cls : classes) ++census[static_cast<int>(cls.size())];
  return census;
}

namespace {

const std::vector<HexArray>& label_arrays() {
  static const std::vector<HexArray> arrays = [] {
    std::vector<HexArray> v;
    for (const Label& s : all_labels()) v.push_back(array_of_label(s));
    return v;
  }();
  return arrays;
}

}  // namespace

CoincidencePartition all_pascals(const Hexad& h) {
  if (h.max_multiplicity() >= 3)
    throw degenerate_error("sextuple with a triple point has undefined Pascals");
  if (6 - h.distinct_count() >= 2)
    throw degenerate_error("sextuple with two coincident pairs has undefined Pascals");

  CoincidencePartition part;
  std::map<ProjectiveForm, std::vector<Label>> groups;
  const std::vector<Label>& labels = all_labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    Line l = pascal_of_array(h, label_arrays()[i]);
    groups[l.pole().form()].push_back(labels[i]);
    part.lines.emplace_back(labels[i], l);
  }
  part.classes.reserve(groups.size());
  for (auto& [key, cls] : groups) part.classes.push_back(cls);
  std::sort(part.classes.begin(), part.classes.end(),
            [](const std::vector<Label>& a, const std::vector<Label>& b) {
              return a.front() < b.front();
            });
  return part;
}

std::vector<std::vector<Label>> degenerate_classes() {
  std::vector<std::vector<Label>> classes;

  // Type I: the repeated letter pair {A,B} plus a third letter X. Labels come
  // from duad pairs, one from each of the synthemes of AX and BX, sharing an
  // element.
  for (int x = 2; x < 6; ++x) {
    const Syntheme& sa = syntheme_of_letter_duad(Duad(0, x));
    const Syntheme& sb = syntheme_of_letter_duad(Duad(1, x));
    std::vector<Label> cls;
    for (const Duad& d1 : sa.duads)
      for (const Duad& d2 : sb.duads) {
        int shared = -1, count = 0;
        for (int e : {d1.lo, d1.hi})
          if (d2.contains(e)) {
            shared = e;
            ++count;
          }
        if (count == 1) cls.push_back(Label(shared, Duad(d1.other(shared), d2.other(shared))));
      }
    if (cls.size() != 6) throw contract_error("type I class is not a sextet");
    std::sort(cls.begin(), cls.end());
    classes.push_back(cls);
  }

  const Syntheme& sab = syntheme_of_letter_duad(Duad(0, 1));

  // Type II: two disjoint duads out of the syntheme of AB combine into a
  // quadruple k(a,cd), k(b,cd), k(c,ab), k(d,ab).
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const Duad& ab = sab.duads[static_cast<std::size_t>(i)];
      const Duad& cd = sab.duads[static_cast<std::size_t>(j)];
      std::vector<Label> cls = {Label(ab.lo, cd), Label(ab.hi, cd), Label(cd.lo, ab),
                                Label(cd.hi, ab)};
      std::sort(cls.begin(), cls.end());
      classes.push_back(cls);
    }

  // Type III: an ordered pair of distinct duads (ab, cd) of the same
  // syntheme with chosen a and c pairs k(a,bc) with k(b,ad). The choices
  // (a,c) and (b,d) build the same class.
  std::set<std::vector<Label>> type3;
  for (const Duad& d1 : sab.duads)
    for (const Duad& d2 : sab.duads) {
      if (d1 == d2) continue;
      for (int a : {d1.lo, d1.hi})
        for (int c : {d2.lo, d2.hi}) {
          int b = d1.other(a), d = d2.other(c);
          std::vector<Label> cls = {Label(a, Duad(b, c)), Label(b, Duad(a, d))};
          std::sort(cls.begin(), cls.end());
          type3.insert(cls);
        }
    }
  if (type3.size() != 12) throw contract_error("type III classes are not twelve");
  classes.insert(classes.end(), type3.begin(), type3.end());

  std::set<Label> covered;
  for (const auto& cls : classes) covered.insert(cls.begin(), cls.end());
  if (classes.size() != 19 || covered.size() != 60)
    throw contract_error("degenerate classes do not partition the labels");
  std::sort(classes.begin(), classes.end(),
            [](const std::vector<Label>& a, const std::vector<Label>& b) {
              return a.front() < b.front();
            });
  return classes;
}

std::string kind_name(SextupleKind k) {
  switch (k) {
    case SextupleKind::DegenerateBad: return "DegenerateBad";
    case SextupleKind::Degenerate19: return "Degenerate19";
    case SextupleKind::Generic60: return "Generic60";
    case SextupleKind::Involutive: return "Involutive";
    case SextupleKind::TripleSymmetric: return "TripleSymmetric";
    case SextupleKind::Ricochet: return "Ricochet";
    case SextupleKind::RicochetAndInvolutive: return "RicochetAndInvolutive";
  }
  return "?";
}

std::string Classification::str() const {
  std::ostringstream os;
  os << kind_name(kind);
  if (centre) os << " centre=" << centre->str();
  if (!centres.empty()) {
    os << " centres=";
    for (std::size_t i = 0; i < centres.size(); ++i) {
      if (i) os << ',';
      os << centres[i].str();
    }
  }
  return os.str();
}

std::optional<PlanePoint> pairing_concurrency(const Hexad& h, const Duad& numbers) {
  const Syntheme& pairing = letter_syntheme_of_number_duad(numbers);
  std::array<Line, 3> chords = {
      chord_or_tangent(h.at(pairing.duads[0].lo), h.at(pairing.duads[0].hi)),
      chord_or_tangent(h.at(pairing.duads[1].lo), h.at(pairing.duads[1].hi)),
      chord_or_tangent(h.at(pairing.duads[2].lo), h.at(pairing.duads[2].hi))};
  if (chords[0] == chords[1] || chords[0] == chords[2] || chords[1] == chords[2])
    return std::nullopt;
  PlanePoint p = meet(chords[0], chords[1]);
  if (!incident(p, chords[2])) return std::nullopt;
  return p;
}

Classification classify_sextuple(const Sextuple& gamma) {
  if (gamma.max_multiplicity() >= 3 || 6 - gamma.distinct_count() >= 2)
    return Classification{SextupleKind::DegenerateBad, std::nullopt, {}};
  if (gamma.distinct_count() == 5)
    return Classification{SextupleKind::Degenerate19, std::nullopt, {}};

  Hexad h = gamma.as_hexad();
  CoincidencePartition part = all_pascals(h);
  if (part.classes.size() == 60)
    return Classification{SextupleKind::Generic60, std::nullopt, {}};

  SexticForm g(gamma.sextic());
  bool involutive = is_involutive(g);
  if (!involutive) return Classification{SextupleKind::Ricochet, std::nullopt, {}};

  std::optional<PlanePoint> centre = involution_centre(g);
  if (!centre) {
    // Multiple centres: recover them from the coincident quadruples, whose
    // shared duad names the pairing.
    std::vector<PlanePoint> centres;
    for (const auto& cls : part.classes) {
      if (cls.size() != 4) continue;
      const Duad& bc = cls.front().pair;
      bool uniform = true;
      for (const Label& s : cls) uniform = uniform && s.pair == bc;
      if (!uniform) continue;
      if (auto q = pairing_concurrency(h, bc)) centres.push_back(*q);
    }
    return Classification{SextupleKind::TripleSymmetric, std::nullopt, centres};
  }

  // Involutive; a coincident pair in the apex-sharing pattern signals a
  // ricochet on top of the involution.
  for (const auto& cls : part.classes) {
    if (cls.size() < 2) continue;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        auto c = interference_case(interference(cls[i], cls[j]));
        if (c && c->tag == 1)
          return Classification{SextupleKind::RicochetAndInvolutive, centre, {}};
      }
  }
  return Classification{SextupleKind::Involutive, centre, {}};
}

}  // namespace pascaline
