#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

namespace opd {

// Exact arbitrary-precision rationals. cpp_rational keeps values reduced
// with a positive denominator, which is the canonical form we rely on.
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Parses "p", "-p" or "p/q" (q > 0). Throws std::invalid_argument on
// malformed input or a zero denominator.
inline Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(boost::multiprecision::cpp_int(text));
        }
        boost::multiprecision::cpp_int num(text.substr(0, slash));
        boost::multiprecision::cpp_int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + text);
    }
}

}  // namespace opd
