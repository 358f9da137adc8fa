#pragma once

#include <utility>

#include "negaring/errors.hpp"

template <typename Fn>
bool throws_kind(negaring::errc kind, Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
  } catch (const negaring::error& e) {
    return e.kind() == kind;
  } catch (...) {
    return false;
  }
  return false;
}
