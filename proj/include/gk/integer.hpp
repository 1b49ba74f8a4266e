#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace gk {

/// Exact arbitrary-precision integer. Every quantity in this library is
/// computed over these; no floating point is used anywhere.
using Integer = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::pow;
using boost::multiprecision::powm;

/// Sign choice, written epsilon (or tau) throughout the torus tables.
enum class Sign : int { plus = 1, minus = -1 };

inline int sign_value(Sign s) { return static_cast<int>(s); }
inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

inline Sign sign_from_char(char c) {
    if (c == '+') return Sign::plus;
    if (c == '-') return Sign::minus;
    throw std::domain_error(std::string("not a sign: ") + c);
}

/// Mathematical (non-negative) remainder of a mod m, m > 0.
inline Integer mod(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace gk
