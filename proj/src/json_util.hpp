#pragma once

#include <json.hpp>
#include <string>

#include "fgc/error.hpp"

namespace fgc::detail {

using json = nlohmann::json;

// Parses text strictly, reporting failures as "line L, column C".
inline json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t line = 1, col = 1;
    size_t end = e.byte > 0 ? std::min(e.byte - 1, text.size()) : 0;
    for (size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::Parse, what + ": line " + std::to_string(line) + ", column " +
                                      std::to_string(col) + ": " + e.what());
  }
}

inline const json& require(const json& obj, const char* key, const std::string& what) {
  if (!obj.is_object() || !obj.contains(key))
    throw Error(ErrorCode::Parse, what + ": missing key '" + key + "'");
  return obj.at(key);
}

}  // namespace fgc::detail

namespace fgc {
class Triangulation;
Triangulation surface_from_json_value(const nlohmann::json& j);
nlohmann::json surface_to_json_value(const Triangulation& T);
}  // namespace fgc
