/*
 * rational.hpp
 * ------------
 * Exact rational arithmetic used throughout the library.
 *
 * All cohomology and rank statements are made over a field of
 * characteristic zero; the rationals suffice, and no floating point
 * enters any algebraic computation.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rht {

using Integer = boost::multiprecision::cpp_int;
// Always stored reduced to lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

inline std::string rat_to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

// Parses "p", "-p", or "p/q".  Throws std::runtime_error on bad syntax.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::runtime_error("zero denominator in rational literal");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::runtime_error("bad rational literal: " + s);
    }
}

}  // namespace rht
