#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mmmnum {

// Which family of characteristic classes an expansion or number vector
// refers to: Pontryagin classes p_i of a real tangent bundle, or Chern
// classes c_i of a complex one.
enum class Flavor { pontryagin, chern };

inline std::string_view flavor_name(Flavor f) {
    return f == Flavor::pontryagin ? "pontryagin" : "chern";
}

inline Flavor parse_flavor(std::string_view s) {
    if (s == "pontryagin") return Flavor::pontryagin;
    if (s == "chern") return Flavor::chern;
    throw std::invalid_argument("unknown flavor: " + std::string(s));
}

// Presentation-layer variable stem: p for Pontryagin, c for Chern.
inline char flavor_stem(Flavor f) { return f == Flavor::pontryagin ? 'p' : 'c'; }

}  // namespace mmmnum
