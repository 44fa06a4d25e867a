#pragma once

#include "gdist/bivar.hpp"
#include "gdist/laurent.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace gdist {

enum class Format { text, json, tsv };

struct EmitError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Format parse_format(const std::string& s);  // throws EmitError

// {"terms":[[exp,"num/den"],...]} in ascending exponent order. A zero polynomial
// is rejected unless allow_zero is set (distributions are never zero).
nlohmann::json poly_json(const LaurentPoly& p, bool allow_zero = false);
LaurentPoly poly_from_json(const nlohmann::json& j);
// "exp<TAB>coeff" lines, ascending.
std::string poly_tsv(const LaurentPoly& p, bool allow_zero = false);
std::string emit_poly(const LaurentPoly& p, Format f, bool allow_zero = false);

// Bivariate: [[k, <poly_json of the t^k coefficient>], ...] for nonzero k.
nlohmann::json bivar_json(const BivarPoly& p);
BivarPoly bivar_from_json(const nlohmann::json& j);

// "(num)/(den)" with '*' and '^'; parse_gf reads it back (and also "[num] / [den]").
std::string gf_text(const RationalGF& gf, const std::string& tvar = "t");
RationalGF parse_gf(const std::string& text, const std::string& tvar = "t");
nlohmann::json gf_json(const RationalGF& gf);
RationalGF gf_from_json(const nlohmann::json& j);

nlohmann::json series_json(const SeriesPrefix& s, int first_index = 1);

}  // namespace gdist
