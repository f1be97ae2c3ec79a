#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "shadowlab/set_family.hpp"

namespace shadowlab {

/// Malformed or schema-violating input. `what()` carries a location such as
/// "byte 17" or "A.sets[3][1]".
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A (A, B, k) configuration as read from or written to a configuration file.
struct Configuration {
  unsigned k = 0;
  SetFamily a;
  SetFamily b;
};

/// {"r": 3, "sets": [[1,2,3],[1,2,4]]}: sets ascending, family in colex order.
std::string family_to_json(const SetFamily& f);

/// {"k": 3, "A": <family>, "B": <family>}
std::string configuration_to_json(const Configuration& cfg);

SetFamily family_from_json(const nlohmann::json& j, const std::string& where = "");
Configuration configuration_from_json(const nlohmann::json& j);

/// Parses text, converting parser errors into FormatError with a byte offset.
nlohmann::json parse_json_text(std::string_view text);

Configuration load_configuration(const std::string& path);

}  // namespace shadowlab
