#pragma once

#include <utility>
#include <vector>

#include "opd/presentation.hpp"

namespace opd {

// Presentation sources shipped with the library (embedded at build time).
inline const std::vector<std::pair<std::string, std::string>>& builtin_sources() {
    static const std::vector<std::pair<std::string, std::string>> sources = {
#include "opd/builtin_data.inc"
    };
    return sources;
}

inline std::vector<std::string> builtin_names() {
    std::vector<std::string> names;
    for (const auto& [name, text] : builtin_sources()) names.push_back(name);
    return names;
}

inline const std::string* builtin_source(const std::string& name) {
    for (const auto& [n, text] : builtin_sources())
        if (n == name) return &text;
    return nullptr;
}

inline Presentation builtin(const std::string& name) {
    const std::string* src = builtin_source(name);
    if (!src) throw std::invalid_argument("unknown built-in presentation: " + name);
    return parse_presentation(*src);
}

}  // namespace opd
