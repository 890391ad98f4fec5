#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace gapq {

// All form evaluations are exact. Rat is arbitrary-precision so that sums of
// many fractions never overflow; Int covers every cell value and count that
// occurs at desk scale (|values| < a*b).
using Int = long long;
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Canonical text form: "p" for integers, "p/q" otherwise, always lowest terms
// (cpp_rational normalizes on construction).
inline std::string rat_to_string(const Rat& r)
{
    BigInt den = rat_den(r);
    std::string s = rat_num(r).str();
    if (den != 1)
        s += "/" + den.str();
    return s;
}

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on anything else.
inline Rat rat_from_string(const std::string& text)
{
    auto parse_int = [](const std::string& t) -> BigInt {
        if (t.empty())
            throw std::invalid_argument("malformed rational: empty component");
        std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (start == t.size())
            throw std::invalid_argument("malformed rational: sign without digits");
        for (std::size_t i = start; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                throw std::invalid_argument("malformed rational: '" + t + "'");
        return BigInt(t);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rat(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("malformed rational: zero denominator in '" + text + "'");
    return Rat(num, den);
}

} // namespace gapq
