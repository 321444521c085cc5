#pragma once

#include <necklace/linear_combination.hpp>

#include <nlohmann/json.hpp>

namespace necklace {

/// Machine integers stay numbers; anything wider is written as a string.
inline nlohmann::json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

}  // namespace necklace
