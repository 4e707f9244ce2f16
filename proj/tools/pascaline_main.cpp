// Command line front end: Sylvester tables, Pascal lines and their
// coincidence classes, covariants, synthetic constructions, finite-field
// scans, and SVG diagrams. Exit codes: 0 ok, 2 parse error, 3 degenerate
// input.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pascaline/configurations.hpp"
#include "pascaline/covariants.hpp"
#include "pascaline/diagram.hpp"
#include "pascaline/labels.hpp"
#include "pascaline/pascal_engine.hpp"
#include "pascaline/solver.hpp"

namespace {

using json = nlohmann::json;
using namespace pascaline;

std::array<AffineCoord, 6> parse_six(const std::vector<std::string>& tokens) {
  if (tokens.size() != 6) throw std::invalid_argument("expected six point tokens");
  std::array<AffineCoord, 6> out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = parse_coord(tokens[i]);
  return out;
}

json pole_json(const ProjectiveForm& f) {
  json a = json::array();
  for (int i = 0; i <= f.order(); ++i) a.push_back(rat_str(f.form()[i]));
  return a;
}

json form_json(const BinaryForm& f) {
  json a = json::array();
  for (int i = 0; i <= f.order(); ++i) a.push_back(rat_str(f[i]));
  return a;
}

std::string form_tuple(const BinaryForm& f) {
  std::string s = "(";
  for (int i = 0; i <= f.order(); ++i) {
    if (i) s += ',';
    s += rat_str(f[i]);
  }
  return s + ")";
}

json hexad_json(const Hexad& h) {
  json o;
  for (int i = 0; i < 6; ++i) o[std::string(1, letter_char(i))] = h.at(i).str();
  return o;
}

int cmd_table() {
  std::cout << "Sylvester duad-syntheme table\n\n      ";
  for (int j = 0; j < 6; ++j) std::cout << "    " << letter_char(j) << "       ";
  std::cout << "\n";
  for (int i = 0; i < 6; ++i) {
    std::cout << "  " << letter_char(i) << "  ";
    for (int j = 0; j < 6; ++j) {
      if (i == j)
        std::cout << "    .       ";
      else
        std::cout << " " << syntheme_of_letter_duad(Duad(i, j)).str_numbers() << "   ";
    }
    std::cout << "\n";
  }
  bool symmetric = true;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      symmetric = symmetric && (syntheme_of_letter_duad(Duad(i, j)) ==
                                syntheme_of_letter_duad(Duad(j, i)));
  std::cout << "\nself-check: diagonally symmetric "
            << (symmetric ? "pass" : "FAIL") << ", 60 labels\n\n";
  for (const Label& s : all_labels())
    std::cout << s.str() << "  " << array_of_label(s).str() << "\n";
  return symmetric ? 0 : 1;
}

int cmd_pascals(const std::vector<std::string>& tokens, bool as_json) {
  Hexad h = Hexad::from_affine(parse_six(tokens));
  CoincidencePartition part = all_pascals(h);
  if (as_json) {
    json o;
    o["points"] = tokens;
    json lines = json::array();
    for (const auto& [label, line] : part.lines)
      lines.push_back({{"label", label.str()}, {"pole", pole_json(line.pole().form())}});
    o["lines"] = lines;
    json classes = json::array();
    for (const auto& cls : part.classes) {
      json c = json::array();
      for (const Label& s : cls) c.push_back(s.str());
      classes.push_back(c);
    }
    o["classes"] = classes;
    std::cout << o.dump(2) << "\n";
    return 0;
  }
  for (const auto& [label, line] : part.lines)
    std::cout << label.str() << ": " << line.pole().str() << "\n";
  std::cout << "classes: " << part.classes.size() << "\n";
  int k = 0;
  for (const auto& cls : part.classes) {
    std::cout << "class " << ++k << " [" << cls.size() << "]:";
    for (const Label& s : cls) std::cout << ' ' << s.str();
    std::cout << "\n";
  }
  return 0;
}

int cmd_classify(const std::vector<std::string>& tokens, bool as_json) {
  auto coords = parse_six(tokens);
  Classification c =
      classify_sextuple(Sextuple::from_affine({coords.begin(), coords.end()}));
  if (as_json) {
    json o;
    o["classification"] = kind_name(c.kind);
    if (c.centre) o["centre"] = pole_json(c.centre->form());
    if (!c.centres.empty()) {
      json cs = json::array();
      for (const PlanePoint& q : c.centres) cs.push_back(pole_json(q.form()));
      o["centres"] = cs;
    }
    std::cout << o.dump(2) << "\n";
    return 0;
  }
  std::cout << "classification: " << c.str() << "\n";
  return 0;
}

int cmd_covariants(const std::vector<std::string>& tokens, bool as_json) {
  auto coords = parse_six(tokens);
  Sextuple gamma = Sextuple::from_affine({coords.begin(), coords.end()});
  SexticForm g(gamma.sextic());
  CovariantValue t24 = theta_2_4(g), t32 = theta_3_2(g), t82 = theta_8_2(g),
                 t150 = theta_15_0(g);
  if (as_json) {
    json o;
    o["sextic"] = form_json(g.form());
    o["theta_2_4"] = form_json(t24.form);
    o["theta_3_2"] = form_json(t32.form);
    o["theta_8_2"] = form_json(t82.form);
    o["theta_15_0"] = rat_str(t150.form[0]);
    std::cout << o.dump(2) << "\n";
    return 0;
  }
  std::cout << "sextic:     " << form_tuple(g.form()) << "\n";
  std::cout << "theta_2_4:  " << form_tuple(t24.form) << "\n";
  std::cout << "theta_3_2:  " << form_tuple(t32.form) << "\n";
  std::cout << "theta_8_2:  " << form_tuple(t82.form) << "\n";
  std::cout << "theta_15_0: " << rat_str(t150.form[0]) << "\n";
  return 0;
}

int cmd_construct_involution(const std::vector<std::string>& args, bool as_json) {
  if (args.size() != 6)
    throw std::invalid_argument("construct involution needs a0 a1 a2 z1 z2 z3");
  PlanePoint centre(BinaryForm{parse_rat(args[0]), parse_rat(args[1]), parse_rat(args[2])});
  Hexad h = make_involution(centre, ConicPoint::from_affine(parse_coord(args[3])),
                            ConicPoint::from_affine(parse_coord(args[4])),
                            ConicPoint::from_affine(parse_coord(args[5])));
  Line pas = polar(centre);
  if (as_json) {
    json o;
    o["hexad"] = hexad_json(h);
    o["centre"] = pole_json(centre.form());
    o["pascal_pole"] = pole_json(pas.pole().form());
    o["pascal_labels"] = {"k(1,23)", "k(4,23)", "k(5,23)", "k(6,23)"};
    std::cout << o.dump(2) << "\n";
    return 0;
  }
  std::cout << h.str() << "\n";
  std::cout << "centre: " << centre.str() << "\n";
  std::cout << "pascal pole: " << pas.pole().str() << "\n";
  std::cout << "pascal labels: k(1,23) k(4,23) k(5,23) k(6,23)\n";
  return 0;
}

int cmd_construct_ricochet(const std::vector<std::string>& args, bool as_json) {
  if (args.size() != 4) throw std::invalid_argument("construct ricochet needs z1 z2 z3 z4");
  RicochetData rd = make_ricochet(ConicPoint::from_affine(parse_coord(args[0])),
                                  ConicPoint::from_affine(parse_coord(args[1])),
                                  ConicPoint::from_affine(parse_coord(args[2])),
                                  ConicPoint::from_affine(parse_coord(args[3])));
  if (as_json) {
    json o;
    o["hexad"] = hexad_json(rd.hexad);
    o["V"] = pole_json(rd.v.form());
    o["W"] = pole_json(rd.w.form());
    o["Z"] = rd.z.str();
    o["pascal_pole"] = pole_json(rd.pascal.pole().form());
    o["pascal_labels"] = {"k(1,23)", "k(1,45)"};
    std::cout << o.dump(2) << "\n";
    return 0;
  }
  std::cout << rd.hexad.str() << "\n";
  std::cout << "V: " << rd.v.str() << "\n";
  std::cout << "W: " << rd.w.str() << "\n";
  std::cout << "Z: " << rd.z.str() << "\n";
  std::cout << "pascal pole: " << rd.pascal.pole().str() << "\n";
  std::cout << "pascal labels: k(1,23) k(1,45)\n";
  return 0;
}

int cmd_construct_triple(const std::vector<std::string>& args, bool as_json) {
  if (args.size() != 1) throw std::invalid_argument("construct triple needs p");
  TripleSymmetricData td = make_triple_symmetric(parse_rat(args[0]));
  if (as_json) {
    json o;
    o["hexad"] = hexad_json(td.hexad);
    o["T"] = pole_json(td.t.form());
    o["Q6"] = pole_json(td.q6.form());
    o["Q4"] = pole_json(td.q4.form());
    o["Q5"] = pole_json(td.q5.form());
    o["pascal_pole"] = pole_json(td.common_line.pole().form());
    o["pascal_labels"] = {"k(1,23)", "k(2,13)", "k(3,12)"};
    std::cout << o.dump(2) << "\n";
    return 0;
  }
  std::cout << td.hexad.str() << "\n";
  std::cout << "T: " << td.t.str() << "\n";
  std::cout << "Q6: " << td.q6.str() << "  Q4: " << td.q4.str() << "  Q5: " << td.q5.str()
            << "\n";
  std::cout << "pascal pole (common line): " << td.common_line.pole().str() << "\n";
  std::cout << "pascal labels: k(1,23) k(2,13) k(3,12)\n";
  return 0;
}

int cmd_scan(const std::string& s_tok, const std::string& t_tok, unsigned prime,
             bool as_json) {
  Label s = parse_label(s_tok), t = parse_label(t_tok);
  ScanReport rep = finite_field_scan(s, t, prime);
  if (as_json) {
    json o;
    o["s"] = rep.s.str();
    o["t"] = rep.t.str();
    o["prime"] = rep.prime;
    o["pattern"] = rep.case_tag;
    o["has_family"] = rep.has_family;
    o["total"] = rep.total;
    o["illegal"] = rep.illegal;
    o["family"] = rep.family;
    o["unexplained"] = rep.unexplained;
    json tr = json::array();
    for (const auto& u : rep.unexplained_triples) tr.push_back({u[0], u[1], u[2]});
    o["unexplained_triples"] = tr;
    o["note"] =
        "mod-p scan is completeness evidence only; it cannot by itself decide "
        "emptiness in characteristic zero";
    std::cout << o.dump(2) << "\n";
    return 0;
  }
  std::cout << rep.to_text();
  return 0;
}

// Hexagon sides of the array naming a label, as letter pairs.
std::vector<std::array<int, 2>> hexagon_sides(const HexArray& m) {
  const int cyc[6] = {m.at(0, 0), m.at(1, 1), m.at(0, 2),
                      m.at(1, 0), m.at(0, 1), m.at(1, 2)};
  std::vector<std::array<int, 2>> sides;
  for (int k = 0; k < 6; ++k) sides.push_back({cyc[k], cyc[(k + 1) % 6]});
  return sides;
}

void add_hexagon(DiagramSpec& spec, const Hexad& h, const HexArray& m) {
  for (const auto& [x, y] : hexagon_sides(m))
    spec.strokes.push_back({chord_or_tangent(h.at(x), h.at(y)), "chord"});
}

void add_marks(DiagramSpec& spec, const Hexad& h) {
  for (int i = 0; i < 6; ++i)
    spec.marks.push_back({std::string(1, letter_char(i)), veronese(h.at(i))});
}

int emit_svg(const DiagramSpec& spec, const std::string& out_path) {
  SvgResult res = render_svg(spec);
  for (const std::string& w : res.warnings) std::cerr << "warning: " << w << "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << res.svg;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
  f << res.svg;
  return 0;
}

int cmd_svg(const std::string& kind, const std::vector<std::string>& args,
            const std::string& out_path) {
  DiagramSpec spec;
  if (kind == "hexad") {
    Hexad h = Hexad::from_affine(parse_six(args));
    HexArray arr = array_of_label(Label(0, Duad(1, 2)));
    add_hexagon(spec, h, arr);
    spec.strokes.push_back({pascal_of_array(h, arr), "pascal"});
    add_marks(spec, h);
  } else if (kind == "involution") {
    if (args.size() != 6)
      throw std::invalid_argument("svg involution needs a0 a1 a2 z1 z2 z3");
    PlanePoint centre(
        BinaryForm{parse_rat(args[0]), parse_rat(args[1]), parse_rat(args[2])});
    Hexad h = make_involution(centre, ConicPoint::from_affine(parse_coord(args[3])),
                              ConicPoint::from_affine(parse_coord(args[4])),
                              ConicPoint::from_affine(parse_coord(args[5])));
    // The three concurrent chords through the centre: AF, BE, CD.
    spec.strokes.push_back({chord(h.at(0), h.at(5)), "chord"});
    spec.strokes.push_back({chord(h.at(1), h.at(4)), "chord"});
    spec.strokes.push_back({chord(h.at(2), h.at(3)), "chord"});
    spec.strokes.push_back({polar(centre), "pascal"});
    add_marks(spec, h);
    spec.marks.push_back({"Q", centre});
  } else if (kind == "ricochet") {
    if (args.size() != 4) throw std::invalid_argument("svg ricochet needs z1 z2 z3 z4");
    RicochetData rd = make_ricochet(ConicPoint::from_affine(parse_coord(args[0])),
                                    ConicPoint::from_affine(parse_coord(args[1])),
                                    ConicPoint::from_affine(parse_coord(args[2])),
                                    ConicPoint::from_affine(parse_coord(args[3])));
    add_hexagon(spec, rd.hexad, array_of_label(Label(0, Duad(1, 2))));
    add_hexagon(spec, rd.hexad, array_of_label(Label(0, Duad(3, 4))));
    spec.strokes.push_back({tangent(rd.hexad.at(0)), "tangent"});
    spec.strokes.push_back({tangent(rd.hexad.at(2)), "tangent"});
    spec.strokes.push_back({rd.pascal, "pascal"});
    add_marks(spec, rd.hexad);
    spec.marks.push_back({"V", rd.v});
    spec.marks.push_back({"W", rd.w});
    spec.marks.push_back({"Z", veronese(rd.z)});
  } else if (kind == "triple") {
    if (args.size() != 1) throw std::invalid_argument("svg triple needs p");
    TripleSymmetricData td = make_triple_symmetric(parse_rat(args[0]));
    const Hexad& h = td.hexad;
    const std::array<std::array<int, 2>, 9> pairs = {{{0, 3},
                                                      {1, 4},
                                                      {2, 5},
                                                      {0, 4},
                                                      {2, 3},
                                                      {1, 5},
                                                      {0, 5},
                                                      {2, 4},
                                                      {1, 3}}};
    for (const auto& pr : pairs)
      spec.strokes.push_back({chord(h.at(pr[0]), h.at(pr[1])), "chord"});
    spec.strokes.push_back({td.common_line, "pascal"});
    add_marks(spec, h);
    spec.marks.push_back({"Q6", td.q6});
    spec.marks.push_back({"Q4", td.q4});
    spec.marks.push_back({"Q5", td.q5});
  } else {
    throw std::invalid_argument("svg kind must be hexad, involution, ricochet, or triple");
  }
  return emit_svg(spec, out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for the sixty Pascal lines of six points on a conic"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "structured JSON output");

  auto* table = app.add_subcommand("table", "print the Sylvester table and the 60 labels");

  std::vector<std::string> points;
  auto* pascals =
      app.add_subcommand("pascals", "Pascal poles and coincidence classes of six points");
  pascals->add_option("points", points, "six points (integer, a/b, or inf)")
      ->expected(6);

  std::vector<std::string> cl_points;
  auto* classify = app.add_subcommand("classify", "classify a sextuple");
  classify->add_option("points", cl_points, "six points")->expected(6);

  std::vector<std::string> cov_points;
  auto* covs = app.add_subcommand("covariants", "the four sextic covariants");
  covs->add_option("points", cov_points, "six points")->expected(6);

  std::string kind;
  std::vector<std::string> cons_args;
  auto* construct =
      app.add_subcommand("construct", "synthesize involution | ricochet | triple");
  construct->add_option("kind", kind, "involution | ricochet | triple")->required();
  construct->add_option("args", cons_args, "construction parameters");

  std::string s_tok, t_tok;
  unsigned prime = 31;
  auto* scan = app.add_subcommand("scan", "finite-field scan of a label pair");
  scan->add_option("s", s_tok, "first label, e.g. k(1,23)")->required();
  scan->add_option("t", t_tok, "second label")->required();
  scan->add_option("--prime", prime, "scan modulus (prime >= 5)");

  std::string svg_kind, out_path;
  std::vector<std::string> svg_args;
  auto* svg = app.add_subcommand("svg", "SVG diagram of a configuration");
  svg->add_option("kind", svg_kind, "hexad | involution | ricochet | triple")->required();
  svg->add_option("args", svg_args, "points / parameters");
  svg->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (table->parsed()) return cmd_table();
    if (pascals->parsed()) return cmd_pascals(points, as_json);
    if (classify->parsed()) return cmd_classify(cl_points, as_json);
    if (covs->parsed()) return cmd_covariants(cov_points, as_json);
    if (construct->parsed()) {
      if (kind == "involution") return cmd_construct_involution(cons_args, as_json);
      if (kind == "ricochet") return cmd_construct_ricochet(cons_args, as_json);
      if (kind == "triple") return cmd_construct_triple(cons_args, as_json);
      throw std::invalid_argument("construct kind must be involution, ricochet, or triple");
    }
    if (scan->parsed()) return cmd_scan(s_tok, t_tok, prime, as_json);
    if (svg->parsed()) return cmd_svg(svg_kind, svg_args, out_path);
  } catch (const degenerate_error& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
