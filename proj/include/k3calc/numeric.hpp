#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace k3calc {

// All arithmetic in this library is exact. Int is an arbitrary-precision
// integer, Rat an arbitrary-precision rational; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Library-wide error type. The CLI maps these to usage-error exits.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string to_string(const Int& x) { return x.str(); }

// Rationals print as "p/q" in lowest terms, or just "p" when q = 1.
inline std::string to_string(const Rat& x) {
    Int num = boost::multiprecision::numerator(x);
    Int den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Extended gcd: returns g = gcd(a,b) >= 0 and x,y with a*x + b*y = g.
struct Egcd {
    Int g, x, y;
};

inline Egcd extended_gcd(Int a, Int b) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Int q = a / b;  // truncated division is fine: invariants hold for any q
        Int r = a - q * b;
        a = b;
        b = r;
        Int x2 = x0 - q * x1, y2 = y0 - q * y1;
        x0 = x1;
        y0 = y1;
        x1 = x2;
        y1 = y2;
    }
    if (a < 0) return {-a, -x0, -y0};
    return {a, x0, y0};
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

}  // namespace k3calc
