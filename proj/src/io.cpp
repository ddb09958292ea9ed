#include "circpers/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace circpers {

namespace {

struct Token {
  std::string text;
  std::size_t line;
};

std::vector<std::vector<Token>> lines_of(const std::string& text) {
  std::vector<std::vector<Token>> out;
  std::istringstream in(text);
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<Token> toks;
    for (std::string w; words >> w;) toks.push_back({w, no});
    if (!toks.empty()) out.push_back(std::move(toks));
  }
  return out;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& msg) {
  throw InputError(source + ":" + std::to_string(line) + ": " + msg);
}

long parse_int(const Token& t, const std::string& source) {
  try {
    std::size_t used = 0;
    long v = std::stol(t.text, &used);
    if (used != t.text.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    fail(source, t.line, "expected an integer, got '" + t.text + "'");
  }
}

Scalar parse_value(const Token& t, const std::string& source) {
  try {
    return parse_fraction(t.text);
  } catch (const InputError& e) {
    fail(source, t.line, e.what());
  }
}

int parse_vertex(const Token& t, const SimplicialComplex& k, const std::string& source) {
  long v = parse_int(t, source);
  if (v < 0 || static_cast<std::size_t>(v) >= k.count(0)) fail(source, t.line, "unknown vertex " + t.text);
  return static_cast<int>(v);
}

std::string frac(const Scalar& x) { return fraction_string(x); }

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

SimplicialComplex parse_complex(const std::string& text, const std::string& source) {
  std::vector<std::vector<int>> tops;
  for (const auto& toks : lines_of(text)) {
    std::vector<int> s;
    for (const auto& t : toks) {
      long v = parse_int(t, source);
      if (v < 0) fail(source, t.line, "negative vertex index");
      s.push_back(static_cast<int>(v));
    }
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(source, toks[0].line, "repeated vertex in simplex");
    tops.push_back(std::move(s));
  }
  if (tops.empty()) throw InputError(source + ": no simplices");
  try {
    return build_complex(tops);
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

PLCircleMap parse_map(const std::string& text, const SimplicialComplex& k, const std::string& source,
                      std::vector<std::string>* warnings) {
  std::vector<std::optional<Scalar>> angles(k.count(0));
  std::map<std::pair<int, int>, Scalar> lifts;
  for (const auto& toks : lines_of(text)) {
    const std::size_t line = toks[0].line;
    if (toks[0].text == "v") {
      if (toks.size() != 3) fail(source, line, "expected 'v vertex p/q'");
      int v = parse_vertex(toks[1], k, source);
      if (angles[static_cast<std::size_t>(v)]) fail(source, line, "vertex " + toks[1].text + " given twice");
      angles[static_cast<std::size_t>(v)] = parse_value(toks[2], source);
    } else if (toks[0].text == "e") {
      if (toks.size() != 4) fail(source, line, "expected 'e u v p/q'");
      int u = parse_vertex(toks[1], k, source), v = parse_vertex(toks[2], k, source);
      if (!k.find(u < v ? Simplex{u, v} : Simplex{v, u})) fail(source, line, "no edge {" + toks[1].text + "," + toks[2].text + "}");
      if (!lifts.emplace(std::make_pair(u, v), parse_value(toks[3], source)).second) fail(source, line, "edge given twice");
    } else {
      fail(source, line, "unknown record '" + toks[0].text + "'");
    }
  }
  std::vector<Scalar> out;
  for (std::size_t v = 0; v < angles.size(); ++v) {
    if (!angles[v]) throw InputError(source + ": vertex " + std::to_string(v) + " has no angle");
    out.push_back(*angles[v]);
  }
  try {
    return PLCircleMap::create(k, std::move(out), lifts, warnings);
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

OneCocycle parse_cocycle(const std::string& text, const SimplicialComplex& k, const std::string& source) {
  std::map<std::pair<int, int>, Scalar> values;
  for (const auto& toks : lines_of(text)) {
    if (toks.size() != 3) fail(source, toks[0].line, "expected 'u v p/q'");
    int u = parse_vertex(toks[0], k, source), v = parse_vertex(toks[1], k, source);
    if (!k.find(u < v ? Simplex{u, v} : Simplex{v, u})) fail(source, toks[0].line, "no edge {" + toks[0].text + "," + toks[1].text + "}");
    if (!values.emplace(std::make_pair(u, v), parse_value(toks[2], source)).second)
      fail(source, toks[0].line, "edge given twice");
  }
  try {
    return OneCocycle::create(k, values);
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

std::map<int, CyclicQuiverRep> parse_representations(const std::string& text, const std::string& source) {
  std::vector<Token> toks;
  for (auto& line : lines_of(text))
    for (auto& t : line) toks.push_back(std::move(t));
  std::map<int, CyclicQuiverRep> out;
  std::size_t pos = 0;
  auto next = [&](const char* what) -> const Token& {
    if (pos >= toks.size()) throw InputError(source + ": unexpected end of input, expected " + what);
    return toks[pos++];
  };
  auto expect = [&](const char* word) {
    const Token& t = next(word);
    if (t.text != word) fail(source, t.line, std::string("expected '") + word + "', got '" + t.text + "'");
  };
  bool explicit_dims = false;
  while (pos < toks.size()) {
    int r = 0;
    if (toks[pos].text == "dim") {
      ++pos;
      const Token& t = next("a dimension");
      long v = parse_int(t, source);
      if (v < 0) fail(source, t.line, "negative dimension");
      r = static_cast<int>(v);
      explicit_dims = true;
    } else if (explicit_dims || !out.empty()) {
      fail(source, toks[pos].line, "expected 'dim' before another block");
    }
    if (out.count(r)) fail(source, toks[pos - 1].line, "dimension " + std::to_string(r) + " given twice");
    expect("m");
    const Token& mt = next("m");
    long m = parse_int(mt, source);
    if (m < 1) fail(source, mt.line, "m must be positive");
    expect("field");
    const Token& ft = next("a field spec");
    Field field = Field::rationals();
    try {
      field = Field::parse(ft.text);
    } catch (const InputError& e) {
      fail(source, ft.line, e.what());
    }
    expect("dims");
    CyclicQuiverRep rep = CyclicQuiverRep::zero(field, static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < rep.m; ++i) {
      for (auto* target : {&rep.n[i], &rep.d[i]}) {
        const Token& t = next("a dimension");
        long v = parse_int(t, source);
        if (v < 0) fail(source, t.line, "negative dimension");
        *target = static_cast<std::size_t>(v);
      }
    }
    auto read_matrix = [&](std::size_t rows, std::size_t cols) {
      FieldMatrix a(field, rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
          const Token& t = next("a matrix entry");
          Scalar v = parse_value(t, source);
          try {
            a.set(i, j, field.canon(v));
          } catch (const InputError& e) {
            fail(source, t.line, e.what());
          }
        }
      return a;
    };
    for (std::size_t i = 0; i < rep.m; ++i) rep.alpha[i] = read_matrix(rep.d[i], rep.n[i]);
    for (std::size_t i = 0; i < rep.m; ++i) rep.beta[i] = read_matrix(rep.d[i], rep.n[(i + 1) % rep.m]);
    try {
      rep.validate();
    } catch (const InputError& e) {
      throw InputError(source + ": " + e.what());
    }
    out.emplace(r, std::move(rep));
  }
  if (out.empty()) throw InputError(source + ": no representation");
  return out;
}

std::string complex_text(const SimplicialComplex& k) {
  std::ostringstream out;
  for (const auto& s : k.maximal_simplices()) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
  return out.str();
}

std::string map_text(const PLCircleMap& map) {
  std::ostringstream out;
  for (std::size_t v = 0; v < map.angles().size(); ++v) out << "v " << v << ' ' << frac(map.angles()[v]) << '\n';
  for (const auto& [e, l] : map.edge_lifts()) {
    if (l != shortest_arc(map.angle(e.first), map.angle(e.second)))
      out << "e " << e.first << ' ' << e.second << ' ' << frac(l) << '\n';
  }
  return out.str();
}

std::string cocycle_text(const OneCocycle& c) {
  std::ostringstream out;
  for (const auto& [e, v] : c.values()) out << e.first << ' ' << e.second << ' ' << frac(v) << '\n';
  return out.str();
}

std::string representation_text(const std::map<int, CyclicQuiverRep>& reps) {
  std::ostringstream out;
  auto write_matrix = [&](const FieldMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? " " : "") << a(i, j).get_str();
      out << '\n';
    }
  };
  for (const auto& [r, rep] : reps) {
    out << "dim " << r << "\nm " << rep.m << " field " << rep.field.spec() << "\ndims";
    for (std::size_t i = 0; i < rep.m; ++i) out << ' ' << rep.n[i] << ' ' << rep.d[i];
    out << '\n';
    for (const auto& a : rep.alpha) write_matrix(a);
    for (const auto& b : rep.beta) write_matrix(b);
  }
  return out.str();
}

std::string report_json(const InvariantsReport& report) {
  using nlohmann::json;
  json out = json::object();
  out["field"] = report.field.spec();
  json crit = json::array();
  for (const auto& s : report.critical) crit.push_back(frac(s));
  out["critical_angles"] = crit;

  std::vector<Scalar> samples;
  for (std::size_t i = 0; i < report.critical.size(); ++i)
    samples.push_back(i == 0 ? Scalar(report.critical[0] / 2) : Scalar((report.critical[i - 1] + report.critical[i]) / 2));

  json dims = json::object(), fiber = json::object(), total = json::object();
  for (const auto& [r, dec] : report.dims) {
    json bars = json::array(), jordan = json::array();
    for (const auto& b : dec.bars) {
      bars.push_back({{"i", b.i},
                      {"j", b.j},
                      {"wrap", b.k},
                      {"left", b.left_closed ? "closed" : "open"},
                      {"right", b.right_closed ? "closed" : "open"}});
    }
    for (const auto& c : dec.jordan)
      jordan.push_back({{"factor", c.factor.to_string()}, {"k", c.size}, {"split", c.split()}});
    const std::string key = std::to_string(r);
    dims[key] = {{"bars", bars}, {"jordan", jordan}};
    json per = json::array();
    for (const auto& t : samples) per.push_back({{"angle", frac(t)}, {"betti", betti_fiber(report, r, t)}});
    fiber[key] = per;
    total[key] = betti_total(report, r);
  }
  out["dims"] = dims;
  out["betti_fiber_samples"] = fiber;
  out["betti_total"] = total;

  json checks = json::object();
  for (const auto& c : report.checks) checks[c.name] = {{"pass", c.pass}, {"detail", c.detail}};
  out["checks"] = checks;
  return out.dump(2) + "\n";
}

std::string report_svg(const InvariantsReport& report) {
  constexpr double kCell = 160.0, kScale = 22.0, kPi = 3.14159265358979323846;
  std::size_t columns = 1;
  for (const auto& [r, dec] : report.dims) columns = std::max(columns, dec.bars.size());
  std::size_t jordan_lines = 0;
  for (const auto& [r, dec] : report.dims) jordan_lines += dec.jordan.size();
  const double width = kCell * static_cast<double>(columns) + 20;
  const double height = (kCell + 30) * static_cast<double>(std::max<std::size_t>(report.dims.size(), 1)) +
                        18.0 * static_cast<double>(jordan_lines + 2) + 20;

  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" font-family=\"monospace\" font-size=\"12\">\n";
  double y0 = 10;
  for (const auto& [r, dec] : report.dims) {
    out << "<text x=\"10\" y=\"" << y0 + 14 << "\">H" << r << " (" << report.field.spec() << ")</text>\n";
    for (std::size_t b = 0; b < dec.bars.size(); ++b) {
      const CircleBarCode& bar = dec.bars[b];
      const double cx = 10 + kCell * (static_cast<double>(b) + 0.5), cy = y0 + 30 + kCell / 2;
      out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << kScale << "\" fill=\"none\" stroke=\"#ccc\"/>\n";
      for (const auto& s : report.critical) {
        double a = 2 * kPi * s.get_d();
        out << "<line x1=\"" << cx + 0.8 * kScale * std::cos(a) << "\" y1=\"" << cy - 0.8 * kScale * std::sin(a) << "\" x2=\""
            << cx + 1.2 * kScale * std::cos(a) << "\" y2=\"" << cy - 1.2 * kScale * std::sin(a) << "\" stroke=\"#999\"/>\n";
      }
      auto pts = spiral_points(bar, report.critical, 96);
      out << "<polyline fill=\"none\" stroke=\"black\" points=\"";
      for (std::size_t p = 0; p < pts.size(); ++p)
        out << (p ? " " : "") << cx + kScale * pts[p].first << ',' << cy - kScale * pts[p].second;
      out << "\"/>\n";
      auto dot = [&](const std::pair<double, double>& p, bool closed) {
        out << "<circle cx=\"" << cx + kScale * p.first << "\" cy=\"" << cy - kScale * p.second << "\" r=\"3.5\" stroke=\"black\" fill=\""
            << (closed ? "black" : "white") << "\"/>\n";
      };
      if (!pts.empty()) {
        dot(pts.front(), bar.left_closed);
        dot(pts.back(), bar.right_closed);
      }
      out << "<text x=\"" << cx - kCell / 2 + 8 << "\" y=\"" << cy + kCell / 2 - 4 << "\">" << bar.to_string() << "</text>\n";
    }
    y0 += kCell + 30;
  }
  out << "<text x=\"10\" y=\"" << y0 + 14 << "\">Jordan cells</text>\n";
  y0 += 18;
  for (const auto& [r, dec] : report.dims) {
    for (const auto& c : dec.jordan) {
      out << "<text x=\"20\" y=\"" << y0 + 14 << "\">H" << r << ": (" << c.factor.to_string() << ", " << c.size << ")</text>\n";
      y0 += 18;
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace circpers
