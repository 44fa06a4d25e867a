#pragma once

#include "gdist/laurent.hpp"

#include <ostream>

namespace gdist {
inline void PrintTo(const LaurentPoly& p, std::ostream* os) { *os << p.str(); }
inline void PrintTo(const Rational& q, std::ostream* os) { *os << to_string(q); }
}  // namespace gdist
