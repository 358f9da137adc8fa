#pragma once

#include <ostream>
#include <string>

#include "negaring/ring.hpp"

namespace negaring {

// Grammar:
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := number ['^' exp] | 'x' ['^' exp] | '(' poly ')' ['^' exp]
// Coefficients are reduced mod p. Errors carry the offending position.
FpPoly parse_poly(const std::string& text, const PrimeField& field);

// "f0;f1;f2;f3" with each part a poly; missing trailing parts default to 0.
RPoly parse_rpoly(const std::string& text, const PrimeField& field, const Modulus& mod);

// Ascending-term form: "0", "1+2x+x^3", "4x", ...
std::string to_string(const FpPoly& f);
// Always four parts: "f0;f1;f2;f3".
std::string to_string(const RPoly& f);

std::ostream& operator<<(std::ostream& os, const FpPoly& f);
std::ostream& operator<<(std::ostream& os, const RPoly& f);

} // namespace negaring
