#include "gdist/emit.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace gdist {

using nlohmann::json;

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "tsv") return Format::tsv;
  throw EmitError("unsupported format: " + s);
}

json poly_json(const LaurentPoly& p, bool allow_zero) {
  if (p.is_zero() && !allow_zero) throw EmitError("refusing to emit the zero polynomial as a distribution");
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(json::array({e, to_string(c)}));
  return json{{"terms", terms}};
}

LaurentPoly poly_from_json(const json& j) {
  const json& terms = j.is_array() ? j : j.at("terms");
  std::map<int, Rational> m;
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2) throw EmitError("poly term must be [exp, \"num/den\"]");
    const int e = t[0].get<int>();
    Rational c = t[1].is_string() ? parse_rational(t[1].get<std::string>()) : Rational(t[1].get<long>());
    m[e] += c;
  }
  return LaurentPoly::from_terms(m);
}

std::string poly_tsv(const LaurentPoly& p, bool allow_zero) {
  if (p.is_zero() && !allow_zero) throw EmitError("refusing to emit the zero polynomial as a distribution");
  std::ostringstream os;
  for (const auto& [e, c] : p.terms()) os << e << '\t' << to_string(c) << '\n';
  return os.str();
}

std::string emit_poly(const LaurentPoly& p, Format f, bool allow_zero) {
  switch (f) {
    case Format::json: return poly_json(p, allow_zero).dump() + "\n";
    case Format::tsv: return poly_tsv(p, allow_zero);
    case Format::text:
      if (p.is_zero() && !allow_zero) throw EmitError("refusing to emit the zero polynomial as a distribution");
      return p.str() + "\n";
  }
  throw EmitError("unsupported format");
}

json bivar_json(const BivarPoly& p) {
  json out = json::array();
  for (int k = 0; k <= p.degree(); ++k)
    if (!p[static_cast<std::size_t>(k)].is_zero())
      out.push_back(json::array({k, poly_json(p[static_cast<std::size_t>(k)])["terms"]}));
  return out;
}

BivarPoly bivar_from_json(const json& j) {
  BivarPoly p;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != 2) throw EmitError("bivariate row must be [k, terms]");
    p.set(row[0].get<int>(), poly_from_json(row[1]));
  }
  return p;
}

std::string gf_text(const RationalGF& gf, const std::string& tvar) {
  return "(" + gf.num().str(tvar) + ")/(" + gf.den().str(tvar) + ")";
}

RationalGF parse_gf(const std::string& text, const std::string& tvar) {
  // Split at the first top-level '/' that follows a closing bracket.
  int depth = 0;
  std::size_t cut = std::string::npos;
  char last = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == '/' && depth == 0 && (last == ')' || last == ']')) {
      cut = i;
      break;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) last = c;
  }
  auto clean = [](std::string s) {
    for (char& c : s)
      if (c == '[') c = '(';
      else if (c == ']') c = ')';
    return s;
  };
  if (cut == std::string::npos) return RationalGF(parse_bivar(clean(text), tvar), BivarPoly::constant(LaurentPoly(1)));
  return RationalGF(parse_bivar(clean(text.substr(0, cut)), tvar), parse_bivar(clean(text.substr(cut + 1)), tvar));
}

json gf_json(const RationalGF& gf) {
  return json{{"num", bivar_json(gf.num())}, {"den", bivar_json(gf.den())}, {"text", gf_text(gf)}};
}

RationalGF gf_from_json(const json& j) {
  return RationalGF(bivar_from_json(j.at("num")), bivar_from_json(j.at("den")));
}

json series_json(const SeriesPrefix& s, int first_index) {
  json out = json::array();
  for (std::size_t i = 0; i < s.size(); ++i)
    out.push_back(json{{"n", first_index + static_cast<int>(i)}, {"poly", poly_json(s[i], true)}});
  return out;
}

}  // namespace gdist
