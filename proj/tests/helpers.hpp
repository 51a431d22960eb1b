#pragma once

#include <functional>
#include <string>

#include "pentagon/errors.hpp"

namespace testutil {

/// True when f throws a pentagon::error of exactly this category.
inline bool throws_with(pentagon::errc code, const std::function<void()>& f) {
  try {
    f();
  } catch (const pentagon::error& e) {
    return e.code() == code;
  }
  return false;
}

inline std::string data_path(const std::string& rel) {
  return std::string{PENTAGON_DATA_DIR} + "/" + rel;
}

}  // namespace testutil
