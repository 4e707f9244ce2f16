#include "pascaline/diagram.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

namespace pascaline {

namespace {

constexpr double kView = 2.0;    // chart window [-2,2]^2
constexpr int kCanvas = 600;     // pixels

struct XY {
  double x, y;
};

std::string num(double v) {
  char buf[32];
  // Avoid the negative-zero artefact so output is stable.
  if (v == 0.0) v = 0.0;
  std::snprintf(buf, sizeof buf, "%.5f", v);
  return buf;
}

// Chart coordinates of a plane point; nullopt on the chart's line at
// infinity.
std::optional<XY> chart_point(const PlanePoint& p) {
  const BinaryForm& f = p.form().form();
  Rat xr = f[0] - f[2];
  Rat yr = -f[1];
  Rat zr = f[0] + f[2];
  if (is_zero(zr)) return std::nullopt;
  Rat xa(xr / zr), ya(yr / zr);
  return XY{xa.get_d(), ya.get_d()};
}

// Chart line a*x + b*y + c = 0 for the line with the given pole.
struct ABC {
  double a, b, c;
  bool degenerate;
};

ABC chart_line(const Line& l) {
  const BinaryForm& f = l.pole().form().form();
  Rat a = f[2] - f[0];
  Rat b = f[1];
  Rat c = f[0] + f[2];
  return ABC{a.get_d(), b.get_d(), c.get_d(), is_zero(a) && is_zero(b)};
}

// Clip an infinite line to the viewport square; nullopt when it misses.
std::optional<std::pair<XY, XY>> clip_line(const ABC& l) {
  std::vector<XY> hits;
  auto push = [&](double x, double y) {
    for (const XY& h : hits)
      if (std::abs(h.x - x) < 1e-9 && std::abs(h.y - y) < 1e-9) return;
    hits.push_back(XY{x, y});
  };
  const double m = kView;
  if (std::abs(l.b) > 1e-12) {
    for (double x : {-m, m}) {
      double y = (-l.c - l.a * x) / l.b;
      if (y >= -m - 1e-9 && y <= m + 1e-9) push(x, y);
    }
  }
  if (std::abs(l.a) > 1e-12) {
    for (double y : {-m, m}) {
      double x = (-l.c - l.b * y) / l.a;
      if (x >= -m - 1e-9 && x <= m + 1e-9) push(x, y);
    }
  }
  if (hits.size() < 2) return std::nullopt;
  // Furthest pair, for numerical corner duplicates.
  std::size_t bi = 0, bj = 1;
  double best = -1;
  for (std::size_t i = 0; i < hits.size(); ++i)
    for (std::size_t j = i + 1; j < hits.size(); ++j) {
      double d = (hits[i].x - hits[j].x) * (hits[i].x - hits[j].x) +
                 (hits[i].y - hits[j].y) * (hits[i].y - hits[j].y);
      if (d > best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
  if (best < 1e-12) return std::nullopt;
  return std::make_pair(hits[bi], hits[bj]);
}

// Chart -> pixel; SVG y axis points down.
XY to_pixel(const XY& p) {
  double s = kCanvas / (2.0 * kView);
  return XY{(p.x + kView) * s, (kView - p.y) * s};
}

}  // namespace

SvgResult render_svg(const DiagramSpec& spec) {
  SvgResult out;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas
     << "\" height=\"" << kCanvas << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas
     << "\">\n";
  os << "<style>\n"
        ".conic{fill:none;stroke:#0661aa;stroke-width:2}\n"
        ".chord{stroke:#555555;stroke-width:1.2}\n"
        ".tangent{stroke:#2a8a5f;stroke-width:1.2;stroke-dasharray:7 3}\n"
        ".aux{stroke:#999999;stroke-width:1;stroke-dasharray:3 3}\n"
        ".pascal{stroke:#c0392b;stroke-width:2.5}\n"
        ".pt{fill:#111111}\n"
        ".lbl{font:14px sans-serif;fill:#111111}\n"
        "</style>\n";
  os << "<rect width=\"" << kCanvas << "\" height=\"" << kCanvas
     << "\" fill=\"#ffffff\"/>\n";

  if (spec.draw_conic) {
    XY c = to_pixel(XY{0, 0});
    double r = kCanvas / (2.0 * kView);
    os << "<circle class=\"conic\" cx=\"" << num(c.x) << "\" cy=\"" << num(c.y)
       << "\" r=\"" << num(r) << "\"/>\n";
  }

  for (const DiagramSpec::Stroke& st : spec.strokes) {
    ABC l = chart_line(st.line);
    if (l.degenerate) {
      out.warnings.push_back("line with pole " + st.line.pole().str() +
                             " has no finite chart position; skipped");
      continue;
    }
    auto seg = clip_line(l);
    if (!seg) continue;  // outside the window
    XY a = to_pixel(seg->first), b = to_pixel(seg->second);
    os << "<line class=\"" << st.style << "\" x1=\"" << num(a.x) << "\" y1=\""
       << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(b.y) << "\"/>\n";
  }

  for (const DiagramSpec::Mark& mk : spec.marks) {
    auto pos = chart_point(mk.point);
    if (!pos) {
      out.warnings.push_back("point " + mk.name +
                             " is at infinity in the drawing chart; mark skipped");
      continue;
    }
    XY c = to_pixel(*pos);
    os << "<circle class=\"pt\" cx=\"" << num(c.x) << "\" cy=\"" << num(c.y)
       << "\" r=\"3.5\"/>\n";
    os << "<text class=\"lbl\" x=\"" << num(c.x + 6) << "\" y=\"" << num(c.y - 6)
       << "\">" << mk.name << "</text>\n";
  }

  os << "</svg>\n";
  out.svg = os.str();
  return out;
}

}  // namespace pascaline
