#include "latbool/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "latbool/error.hpp"

namespace latbool {

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') {
      ++j;
    }
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Rational parse_number(const Token& t, int line, Coordinates coords) {
  const std::string& s = t.text;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  std::size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (!all_digits(s, start, s.size())) throw ParseError("expected a number, got '" + s + "'", line, t.column);
    return Rational(Integer(s[0] == '+' ? s.substr(1) : s));
  }
  if (!all_digits(s, start, slash) || !all_digits(s, slash + 1, s.size())) {
    throw ParseError("expected a number, got '" + s + "'", line, t.column);
  }
  if (coords == Coordinates::integer) {
    throw ParseError("non-integer coordinate '" + s + "' in an input region", line, t.column);
  }
  Integer den(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + s + "'", line, t.column);
  Rational q(Integer(s.substr(start, slash - start)), den);
  q.canonicalize();
  if (s[0] == '-') q = -q;
  return q;
}

std::size_t parse_count(const Token& t, int line) {
  if (!all_digits(t.text, 0, t.text.size()) || t.text.size() > 9) {
    throw ParseError("expected a vertex count, got '" + t.text + "'", line, t.column);
  }
  return std::stoul(t.text);
}

std::vector<Ring> sorted_rings(const Region& r) {
  std::vector<Ring> rings;
  for (const auto& ring : r.rings) rings.push_back(canonical_ring(ring, true));
  std::sort(rings.begin(), rings.end(), [](const Ring& a, const Ring& b) {
    return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                                        b.vertices.end(), LexLess{});
  });
  return rings;
}

// Fixed three-decimal rendering of q without going through floating point.
std::string decimal(const Rational& q) {
  Integer num = q.get_num() * 2000 + q.get_den();
  Integer den = q.get_den() * 2;
  Integer scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  Integer whole = scaled / 1000;
  Integer frac = scaled % 1000;
  std::string f = frac.get_str();
  while (f.size() < 3) f = "0" + f;
  while (!f.empty() && f.back() == '0') f.pop_back();
  std::string out = (negative ? "-" : "") + whole.get_str();
  return f.empty() ? out : out + "." + f;
}

struct Style {
  const char* cls;
  const char* fill;
  const char* fill_opacity;
  const char* stroke;
  const char* extra;
};

constexpr Style kStyles[] = {
    {"exact", "#4a90d9", "0.35", "#1f5fa8", ""},
    {"inner", "#3cb371", "0.45", "#1e7b46", ""},
    {"outer", "none", "0", "#d9534f", " stroke-dasharray=\"6 3\""},
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

Region parse_region(const std::string& text, Coordinates coords) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header = false, done = false;
  std::vector<Ring> rings;
  int last_line = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    last_line = lineno;
    const Token& kw = toks[0];
    if (done) throw ParseError("content after 'end'", lineno, kw.column);
    if (!header) {
      if (kw.text != "region" || toks.size() != 1) {
        throw ParseError("expected 'region' header", lineno, kw.column);
      }
      header = true;
      continue;
    }
    if (kw.text == "end") {
      if (toks.size() != 1) throw ParseError("unexpected token after 'end'", lineno, toks[1].column);
      done = true;
      continue;
    }
    if (kw.text != "poly" && kw.text != "hole") {
      throw ParseError("expected 'poly', 'hole' or 'end', got '" + kw.text + "'", lineno, kw.column);
    }
    if (toks.size() < 2) {
      throw ParseError("missing vertex count", lineno, static_cast<int>(line.size()) + 1);
    }
    std::size_t n = parse_count(toks[1], lineno);
    if (n < 3) throw ParseError("a ring needs at least 3 vertices", lineno, toks[1].column);
    if (toks.size() < 2 + 2 * n) {
      throw ParseError("expected " + std::to_string(2 * n) + " coordinates, got " +
                           std::to_string(toks.size() - 2),
                       lineno, static_cast<int>(line.size()) + 1);
    }
    if (toks.size() > 2 + 2 * n) {
      throw ParseError("too many coordinates", lineno, toks[2 + 2 * n].column);
    }
    Ring ring;
    for (std::size_t i = 0; i < n; ++i) {
      Rational x = parse_number(toks[2 + 2 * i], lineno, coords);
      Rational y = parse_number(toks[3 + 2 * i], lineno, coords);
      ring.vertices.emplace_back(x, y);
    }
    Rational a2 = signed_area2(ring);
    if (kw.text == "poly" && a2 <= 0) {
      throw ParseError("'poly' ring must be counter-clockwise", lineno, kw.column);
    }
    if (kw.text == "hole" && a2 >= 0) {
      throw ParseError("'hole' ring must be clockwise", lineno, kw.column);
    }
    rings.push_back(std::move(ring));
  }
  if (!header) throw ParseError("missing 'region' header", lineno + 1, 1);
  if (!done) throw ParseError("missing 'end'", last_line + 1, 1);
  // Validate the rings as written, before canonicalization can hide defects.
  Region raw;
  raw.rings = rings;
  raw.parent = compute_nesting(rings);
  require_valid(raw, "region file");
  return make_region(std::move(rings));
}

Region read_region_file(const std::string& path, Coordinates coords) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_region(ss.str(), coords);
  } catch (const ParseError& e) {
    throw ParseError(e.message() + " in " + path, e.line(), e.column());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string write_region(const Region& r) {
  std::ostringstream os;
  os << "region\n";
  for (const auto& ring : sorted_rings(r)) {
    os << (signed_area2(ring) >= 0 ? "poly " : "hole ") << ring.size();
    for (const auto& v : ring.vertices) os << ' ' << to_string(v.x) << ' ' << to_string(v.y);
    os << '\n';
  }
  os << "end\n";
  return os.str();
}

void write_region_file(const std::string& path, const Region& r) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << write_region(r);
  if (!out) throw Error("cannot write " + path);
}

std::string render_svg(const std::vector<SvgLayer>& layers) {
  constexpr long kScale = 20;
  bool any = false;
  Rational x0 = 0, y0 = 0, x1 = 1, y1 = 1;
  for (const auto& layer : layers) {
    for (const auto& ring : layer.region.rings) {
      for (const auto& v : ring.vertices) {
        if (!any) {
          x0 = x1 = v.x;
          y0 = y1 = v.y;
          any = true;
        }
        x0 = std::min(x0, v.x);
        y0 = std::min(y0, v.y);
        x1 = std::max(x1, v.x);
        y1 = std::max(y1, v.y);
      }
    }
  }
  Integer gx0 = floor_of(x0) - 1, gy0 = floor_of(y0) - 1;
  Integer gx1 = ceil_of(x1) + 1, gy1 = ceil_of(y1) + 1;
  auto sx = [&](const Rational& x) { return decimal((x - Rational(gx0)) * kScale); };
  auto sy = [&](const Rational& y) { return decimal((Rational(gy1) - y) * kScale); };
  Integer width = (gx1 - gx0) * kScale, height = (gy1 - gy0) * kScale;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<g class=\"grid\" stroke=\"#d0d0d0\" stroke-width=\"0.5\">\n";
  for (Integer x = gx0; x <= gx1; ++x) {
    os << "<line x1=\"" << sx(Rational(x)) << "\" y1=\"0\" x2=\"" << sx(Rational(x))
       << "\" y2=\"" << height << "\"/>\n";
  }
  for (Integer y = gy0; y <= gy1; ++y) {
    os << "<line x1=\"0\" y1=\"" << sy(Rational(y)) << "\" x2=\"" << width << "\" y2=\""
       << sy(Rational(y)) << "\"/>\n";
  }
  os << "</g>\n";
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const auto& layer = layers[i];
    if (layer.region.empty()) continue;
    const Style& st = kStyles[i % std::size(kStyles)];
    os << "<g class=\"layer " << st.cls << "\" id=\"layer-" << i << "\" data-name=\""
       << escape(layer.name) << "\">\n<path fill=\"" << st.fill << "\" fill-opacity=\""
       << st.fill_opacity << "\" fill-rule=\"evenodd\" stroke=\"" << st.stroke
       << "\" stroke-width=\"1.5\"" << st.extra << " d=\"";
    for (const auto& ring : layer.region.rings) {
      for (std::size_t j = 0; j < ring.size(); ++j) {
        os << (j == 0 ? "M" : " L") << sx(ring[j].x) << ' ' << sy(ring[j].y);
      }
      os << " Z ";
    }
    os << "\"/>\n</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace latbool
