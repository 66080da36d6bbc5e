#ifndef SURJ_RATIONAL_HPP
#define SURJ_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace surj {

// Exact arithmetic lives on GMP. Rational is always canonical:
// gcd(|num|, den) = 1, den >= 1, zero is 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

using Point = std::vector<Rational>;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct ring_mismatch : error {
    using error::error;
};

struct resource_limit : error {
    using error::error;
};

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "123", "-5", "3/4", "-7/2".
inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw error("invalid rational literal: '" + text + "'");
    if (q.get_den() == 0) throw error("rational with zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline std::string to_string(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ", ";
        s += p[i].get_str();
    }
    return s + ")";
}

}  // namespace surj

#endif
