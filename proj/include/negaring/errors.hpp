#pragma once

#include <stdexcept>
#include <string>

namespace negaring {

enum class errc {
  not_invertible,
  division_by_zero,
  undefined_gcd,
  budget_exceeded,
  field_mismatch,
  modulus_mismatch,
  odd_length_required,
  not_regular,
  not_free,
  not_coprime,
  zero_code,
  out_of_range,
  not_applicable,
  parse_error,
  invalid_argument,
  internal_invariant,
};

class error : public std::runtime_error {
public:
  error(errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  errc kind() const { return kind_; }

private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg) {
  throw error(kind, msg);
}

} // namespace negaring
