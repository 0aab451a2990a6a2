#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <json.hpp>

#include "duet/errors.hpp"

namespace duet::detail {

using ojson = nlohmann::ordered_json;

inline std::size_t line_of(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < text.size() && i < byte; ++i) {
        if (text[i] == '\n') ++line;
    }
    return line;
}

inline ojson parse_text(std::string_view text) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann reports the byte just past the offending token.
        const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
        throw ParseError(line_of(text, byte), "", e.what());
    }
}

inline const ojson& member(const ojson& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) throw ParseError(0, path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(0, path.empty() ? key : path + "." + key, "missing field");
    return *it;
}

inline std::string child(const std::string& path, const char* key) { return path.empty() ? key : path + "." + key; }
inline std::string child(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

inline double number(const ojson& obj, const char* key, const std::string& path) {
    const auto& v = member(obj, key, path);
    if (!v.is_number()) throw ParseError(0, child(path, key), "expected a number");
    return v.get<double>();
}

inline long long integer(const ojson& obj, const char* key, const std::string& path) {
    const auto& v = member(obj, key, path);
    if (!v.is_number_integer()) throw ParseError(0, child(path, key), "expected an integer");
    return v.get<long long>();
}

inline bool boolean(const ojson& obj, const char* key, const std::string& path) {
    const auto& v = member(obj, key, path);
    if (!v.is_boolean()) throw ParseError(0, child(path, key), "expected true or false");
    return v.get<bool>();
}

inline const ojson& array(const ojson& obj, const char* key, const std::string& path) {
    const auto& v = member(obj, key, path);
    if (!v.is_array()) throw ParseError(0, child(path, key), "expected an array");
    return v;
}

}  // namespace duet::detail
