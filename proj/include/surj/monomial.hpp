#ifndef SURJ_MONOMIAL_HPP
#define SURJ_MONOMIAL_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "surj/rational.hpp"

namespace surj {

// Dense exponent vector, length fixed by the ring context.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    std::size_t nvars() const { return e.size(); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

// b / a, valid only when divides(a, b).
inline Monomial quotient(const Monomial& b, const Monomial& a) {
    Monomial r(b.e.size());
    for (std::size_t i = 0; i < b.e.size(); ++i) r.e[i] = b.e[i] - a.e[i];
    return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

// Total well-orders on monomials. block_elim(k) eliminates the first k
// variables: graded reverse lexicographic within the leading block, ties
// broken graded reverse lexicographic on the rest.
struct MonomialOrder {
    enum class Kind { lex, grevlex, block_elim };
    Kind kind = Kind::grevlex;
    int block = 0;

    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
    static MonomialOrder block_elim(int first_block_size) {
        return {Kind::block_elim, first_block_size};
    }

    // -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case Kind::lex:
                return cmp_lex(a, b, 0, a.e.size());
            case Kind::grevlex:
                return cmp_grevlex(a, b, 0, a.e.size());
            case Kind::block_elim: {
                std::size_t k = static_cast<std::size_t>(block);
                int c = cmp_grevlex(a, b, 0, k);
                if (c != 0) return c;
                return cmp_grevlex(a, b, k, a.e.size());
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && (kind != Kind::block_elim || block == o.block);
    }

   private:
    static int cmp_lex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        }
        return 0;
    }
    static int cmp_grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
        int da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a.e[i];
            db += b.e[i];
        }
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = hi; i-- > lo;) {
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        }
        return 0;
    }
};

}  // namespace surj

#endif
