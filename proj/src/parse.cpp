#include "negaring/parse.hpp"

#include <cctype>

namespace negaring {

namespace {

class PolyParser {
public:
  PolyParser(const std::string& text, const PrimeField& field) : s_(text), F_(field) {}

  FpPoly parse() {
    FpPoly result = parse_sum();
    skip_ws();
    if (pos_ != s_.size()) err("unexpected trailing input");
    return result;
  }

private:
  const std::string& s_;
  const PrimeField& F_;
  size_t pos_ = 0;

  [[noreturn]] void err(const std::string& what) {
    fail(errc::parse_error, what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  uint64_t parse_number() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) err("expected a number");
    uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<uint64_t>(s_[pos_] - '0');
      if (v > 1000000000ull) err("number too large");
      ++pos_;
    }
    return v;
  }

  uint64_t parse_exponent() {
    // caller consumed '^'
    uint64_t e = parse_number();
    if (e > 100000ull) err("exponent too large");
    return e;
  }

  FpPoly parse_factor() {
    skip_ws();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      uint64_t v = parse_number();
      int64_t base = F_.reduce(static_cast<int64_t>(v % static_cast<uint64_t>(F_.p())));
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        base = F_.pow(base, static_cast<int64_t>(parse_exponent()));
      }
      return FpPoly(F_, {base});
    }
    if (c == 'x') {
      ++pos_;
      skip_ws();
      uint64_t e = 1;
      if (peek() == '^') {
        ++pos_;
        e = parse_exponent();
      }
      return FpPoly::monomial(F_, e);
    }
    if (c == '(') {
      ++pos_;
      FpPoly inner = parse_sum();
      skip_ws();
      if (peek() != ')') err("expected ')'");
      ++pos_;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        return poly_pow(inner, parse_exponent());
      }
      return inner;
    }
    if (c == '\0') err("unexpected end of input");
    err(std::string("unexpected character '") + c + "'");
  }

  FpPoly parse_term() {
    FpPoly f = parse_factor();
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        ++pos_;
        f = f * parse_factor();
      } else if (c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
        f = f * parse_factor(); // juxtaposition, e.g. "2x", "3(x+1)^2"
      } else {
        break;
      }
    }
    return f;
  }

  FpPoly parse_sum() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    FpPoly acc = parse_term();
    if (neg) acc = -acc;
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + parse_term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - parse_term();
      } else {
        break;
      }
    }
    return acc;
  }
};

} // namespace

FpPoly parse_poly(const std::string& text, const PrimeField& field) {
  return PolyParser(text, field).parse();
}

RPoly parse_rpoly(const std::string& text, const PrimeField& field, const Modulus& mod) {
  std::array<FpPoly, 4> comps{FpPoly(field), FpPoly(field), FpPoly(field), FpPoly(field)};
  size_t start = 0;
  size_t k = 0;
  while (true) {
    size_t sep = text.find(';', start);
    std::string part = text.substr(start, sep == std::string::npos ? std::string::npos : sep - start);
    if (k >= 4) fail(errc::parse_error, "more than four ';'-separated components in \"" + text + "\"");
    bool blank = part.find_first_not_of(" \t") == std::string::npos;
    comps[k++] = blank ? FpPoly(field) : parse_poly(part, field);
    if (sep == std::string::npos) break;
    start = sep + 1;
  }
  return RPoly(field, mod, std::move(comps));
}

std::string to_string(const FpPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < f.coeffs().size(); ++i) {
    int64_t c = f.coeffs()[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::string to_string(const RPoly& f) {
  return to_string(f.comp(0)) + ";" + to_string(f.comp(1)) + ";" +
         to_string(f.comp(2)) + ";" + to_string(f.comp(3));
}

std::ostream& operator<<(std::ostream& os, const FpPoly& f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, const RPoly& f) { return os << to_string(f); }

} // namespace negaring
