#pragma once

#include <optional>

#include "stab/error.hpp"

/// Code of the stab::Error thrown by f, or nullopt if it returns normally.
template <class F>
std::optional<stab::ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const stab::Error& e) {
    return e.code();
  }
  return std::nullopt;
}
