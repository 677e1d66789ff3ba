#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "parachern/errors.hpp"

namespace parachern {

// All arithmetic in this library is exact. Rationals are arbitrary-precision;
// no floating point is used anywhere.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline Rat rat(long long num, long long den = 1) {
    if (den == 0) throw DataError("rational with zero denominator");
    return Rat(Int(num), Int(den));
}

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

inline long long to_int64(const Rat& q, const char* what = "value") {
    if (!is_integer(q)) throw DataError(std::string(what) + " is not an integer: " + q.str());
    return numerator(q).convert_to<long long>();
}

// Renders in lowest terms: integers as "n", everything else as "p/q".
inline std::string rat_to_string(const Rat& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "p", "-p", "p/q", "-p/q" with decimal digits; anything else is a
// ParseError. A zero denominator is rejected.
inline Rat rat_from_string(const std::string& s) {
    const auto bad = [&]() -> ParseError {
        return ParseError("invalid rational literal: \"" + s + "\" (expected \"p\" or \"p/q\")");
    };
    if (s.empty()) throw bad();
    std::size_t i = 0;
    if (s[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
    if (digits == 0) throw bad();
    Int num(s.substr(0, i));
    Int den(1);
    if (i < s.size()) {
        if (s[i] != '/') throw bad();
        ++i;
        std::size_t den_start = i, den_digits = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++den_digits; }
        if (den_digits == 0 || i != s.size()) throw bad();
        den = Int(s.substr(den_start));
        if (den == 0) throw ParseError("invalid rational literal: \"" + s + "\" (zero denominator)");
    }
    return Rat(num, den);
}

} // namespace parachern
