#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include <json.hpp>

namespace rnagell {

// JSON consumers lose precision past 2^53, so larger integers travel as
// decimal strings.
inline nlohmann::ordered_json json_int(const mpz_class& v) {
  static const mpz_class limit = mpz_class(1) << 53;
  if (abs(v) <= limit) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

inline mpz_class int_from_json(const nlohmann::ordered_json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  return mpz_class(std::to_string(j.get<std::int64_t>()));
}

}  // namespace rnagell
