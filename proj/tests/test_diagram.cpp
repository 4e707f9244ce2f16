#include <doctest.h>

#include "pascaline/configurations.hpp"
#include "pascaline/diagram.hpp"
#include "testutil.hpp"

using namespace pascaline;
using testutil::cp;
using testutil::cp_inf;

namespace {

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0, pos = 0;
  while ((pos = hay.find(needle, pos)) != std::string::npos) {
    ++n;
    pos += needle.size();
  }
  return n;
}

DiagramSpec ricochet_spec() {
  RicochetData rd = make_ricochet(cp(0), cp(1), cp_inf(), cp(2));
  DiagramSpec spec;
  const Hexad& h = rd.hexad;
  const int sides[6][2] = {{0, 4}, {4, 2}, {2, 5}, {5, 1}, {1, 3}, {3, 0}};
  for (const auto& s : sides)
    spec.strokes.push_back({chord(h.at(s[0]), h.at(s[1])), "chord"});
  spec.strokes.push_back({rd.pascal, "pascal"});
  for (int i = 0; i < 6; ++i)
    spec.marks.push_back({std::string(1, letter_char(i)), veronese(h.at(i))});
  spec.marks.push_back({"V", rd.v});
  spec.marks.push_back({"W", rd.w});
  return spec;
}

}  // namespace

TEST_CASE("svg output is deterministic and structured") {
  DiagramSpec spec = ricochet_spec();
  SvgResult a = render_svg(spec);
  SvgResult b = render_svg(spec);
  CHECK(a.svg == b.svg);

  // Six hexad marks plus W; V has no finite chart position.
  CHECK(count_of(a.svg, "class=\"pt\"") == 7);
  CHECK(count_of(a.svg, "class=\"pascal\"") == 1);
  CHECK(count_of(a.svg, "class=\"chord\"") == 6);
  CHECK(count_of(a.svg, "class=\"conic\"") == 1);
  REQUIRE(a.warnings.size() == 1);
  CHECK(a.warnings[0].find("V") != std::string::npos);

  // All six letters appear as labels.
  for (char c = 'A'; c <= 'F'; ++c)
    CHECK(a.svg.find(">" + std::string(1, c) + "<") != std::string::npos);
}

TEST_CASE("points at the chart's line at infinity are skipped, lines drawn") {
  DiagramSpec spec;
  // Pole (1,0,-1) maps to chart denominator zero.
  spec.marks.push_back({"X", PlanePoint(BinaryForm{Rat(1), Rat(0), Rat(-1)})});
  // Its polar is still drawable.
  spec.strokes.push_back({polar(PlanePoint(BinaryForm{Rat(1), Rat(0), Rat(-1)})), "aux"});
  SvgResult r = render_svg(spec);
  CHECK(r.warnings.size() == 1);
  CHECK(count_of(r.svg, "class=\"pt\"") == 0);
  CHECK(count_of(r.svg, "class=\"aux\"") == 1);
}

TEST_CASE("conic points land on the unit circle") {
  DiagramSpec spec;
  spec.marks.push_back({"P", veronese(cp(0))});     // (1, 0)
  spec.marks.push_back({"Q", veronese(cp_inf())});  // (-1, 0)
  SvgResult r = render_svg(spec);
  // Window is [-2,2] mapped to 600px: (1,0) -> (450,300), (-1,0) -> (150,300).
  CHECK(r.svg.find("cx=\"450.00000\" cy=\"300.00000\"") != std::string::npos);
  CHECK(r.svg.find("cx=\"150.00000\" cy=\"300.00000\"") != std::string::npos);
}
