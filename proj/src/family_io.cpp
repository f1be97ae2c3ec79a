#include "shadowlab/family_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace shadowlab {

std::string family_to_json(const SetFamily& f) {
  std::string out = "{\"r\": " + std::to_string(f.member_size()) + ", \"sets\": [";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += '[';
    const KSet& s = f[i];
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(s[j]);
    }
    out += ']';
  }
  return out + "]}";
}

std::string configuration_to_json(const Configuration& cfg) {
  return "{\"k\": " + std::to_string(cfg.k) + ", \"A\": " + family_to_json(cfg.a) +
         ", \"B\": " + family_to_json(cfg.b) + "}";
}

namespace {

std::string at(const std::string& where, const std::string& key) {
  return where.empty() ? key : where + "." + key;
}

unsigned read_unsigned(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0 ||
      j.get<long long>() > std::numeric_limits<unsigned>::max())
    throw FormatError(where + ": expected a non-negative integer");
  return j.get<unsigned>();
}

}  // namespace

SetFamily family_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_object()) throw FormatError((where.empty() ? "family" : where) + ": expected an object");
  if (!j.contains("r")) throw FormatError(at(where, "r") + ": missing");
  if (!j.contains("sets")) throw FormatError(at(where, "sets") + ": missing");
  const unsigned r = read_unsigned(j.at("r"), at(where, "r"));
  const nlohmann::json& sets = j.at("sets");
  const std::string sets_at = at(where, "sets");
  if (!sets.is_array()) throw FormatError(sets_at + ": expected an array");

  std::vector<KSet> out;
  out.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::string set_at = sets_at + "[" + std::to_string(i) + "]";
    if (!sets[i].is_array()) throw FormatError(set_at + ": expected an array");
    std::vector<Element> elems;
    for (std::size_t e = 0; e < sets[i].size(); ++e) {
      const std::string el_at = set_at + "[" + std::to_string(e) + "]";
      const unsigned v = read_unsigned(sets[i][e], el_at);
      if (v == 0) throw FormatError(el_at + ": elements must be positive");
      elems.push_back(v);
    }
    if (elems.size() != r)
      throw FormatError(set_at + ": has " + std::to_string(elems.size()) + " elements, r is " +
                        std::to_string(r));
    try {
      out.emplace_back(std::move(elems));
    } catch (const std::invalid_argument& e) {
      throw FormatError(set_at + ": " + e.what());
    }
  }
  return SetFamily(r, std::move(out));
}

Configuration configuration_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FormatError("configuration: expected an object");
  for (const char* key : {"k", "A", "B"})
    if (!j.contains(key)) throw FormatError(std::string(key) + ": missing");
  Configuration cfg;
  cfg.k = read_unsigned(j.at("k"), "k");
  cfg.a = family_from_json(j.at("A"), "A");
  cfg.b = family_from_json(j.at("B"), "B");
  return cfg;
}

nlohmann::json parse_json_text(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Configuration load_configuration(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return configuration_from_json(parse_json_text(ss.str()));
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace shadowlab
