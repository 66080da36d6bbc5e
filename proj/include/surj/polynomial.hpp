#ifndef SURJ_POLYNOMIAL_HPP
#define SURJ_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "surj/monomial.hpp"
#include "surj/ring.hpp"

namespace surj {

struct Term {
    Monomial mono;
    Rational coeff;
};

namespace detail {

// Sort descending under `ord`, merge equal monomials, drop zeros.
inline void normalize_terms(std::vector<Term>& ts, const MonomialOrder& ord) {
    std::sort(ts.begin(), ts.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    std::vector<Term> out;
    out.reserve(ts.size());
    for (auto& t : ts) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
    }
    ts = std::move(out);
}

// a + c * m * b for term vectors sorted descending under `ord`.
inline std::vector<Term> add_scaled(const std::vector<Term>& a, const Rational& c,
                                    const Monomial& m, const std::vector<Term>& b,
                                    const MonomialOrder& ord) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        Monomial bm = b[j].mono * m;
        int cmp = ord.compare(a[i].mono, bm);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            Rational v = c * b[j].coeff;
            if (v != 0) out.push_back({std::move(bm), std::move(v)});
            ++j;
        } else {
            Rational v = a[i].coeff + c * b[j].coeff;
            if (v != 0) out.push_back({std::move(bm), std::move(v)});
            ++i;
            ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) {
        Rational v = c * b[j].coeff;
        if (v != 0) out.push_back({b[j].mono * m, std::move(v)});
        ++j;
    }
    return out;
}

}  // namespace detail

// Immutable exact multivariate polynomial over Q. Terms are kept sorted
// descending under the lexicographic order of the ring context; equality is
// structural on this normal form.
class Polynomial {
   public:
    Polynomial() = default;
    Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
        for (const auto& t : terms)
            if (t.mono.nvars() != ring_->size()) throw error("monomial arity mismatch");
        detail::normalize_terms(terms, canonical_order());
        terms_ = std::move(terms);
    }

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }
    static Polynomial constant(RingPtr ring, Rational c) {
        std::vector<Term> ts;
        if (c != 0) ts.push_back({Monomial(ring->size()), std::move(c)});
        return Polynomial(std::move(ring), std::move(ts));
    }
    static Polynomial variable(RingPtr ring, const std::string& name) {
        int i = ring->index_of(name);
        if (i < 0) throw error("unknown variable: " + name);
        return variable(std::move(ring), static_cast<std::size_t>(i));
    }
    static Polynomial variable(RingPtr ring, std::size_t index) {
        Monomial m(ring->size());
        m.e[index] = 1;
        return Polynomial(std::move(ring), {{std::move(m), Rational(1)}});
    }

    static MonomialOrder canonical_order() { return MonomialOrder::lex(); }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].mono.is_one(); }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw error("not a constant polynomial");
        return terms_[0].coeff;
    }
    int total_degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;  // -1 for the zero polynomial
    }
    int degree_in(std::size_t var) const {
        int d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.e[var]);
        return d;
    }
    bool uses_var(std::size_t var) const {
        for (const auto& t : terms_)
            if (t.mono.e[var] > 0) return true;
        return false;
    }

    bool operator==(const Polynomial& o) const {
        if (!same_ring(ring_, o.ring_)) return false;
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator-() const {
        std::vector<Term> ts = terms_;
        for (auto& t : ts) t.coeff = -t.coeff;
        Polynomial r;
        r.ring_ = ring_;
        r.terms_ = std::move(ts);
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        Polynomial r;
        r.ring_ = a.ring_;
        r.terms_ = detail::add_scaled(a.terms_, Rational(1), Monomial(a.ring_->size()),
                                      b.terms_, canonical_order());
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        Polynomial r;
        r.ring_ = a.ring_;
        r.terms_ = detail::add_scaled(a.terms_, Rational(-1), Monomial(a.ring_->size()),
                                      b.terms_, canonical_order());
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        std::vector<Term> acc;
        for (const auto& ta : a.terms_)
            acc = detail::add_scaled(acc, ta.coeff, ta.mono, b.terms_, canonical_order());
        Polynomial r;
        r.ring_ = a.ring_;
        r.terms_ = std::move(acc);
        return r;
    }
    friend Polynomial operator*(const Rational& c, const Polynomial& a) {
        if (c == 0) return Polynomial::zero(a.ring_);
        std::vector<Term> ts = a.terms_;
        for (auto& t : ts) t.coeff *= c;
        Polynomial r;
        r.ring_ = a.ring_;
        r.terms_ = std::move(ts);
        return r;
    }

    Polynomial pow(int n) const {
        if (n < 0) throw error("negative exponent");
        Polynomial acc = Polynomial::constant(ring_, Rational(1));
        Polynomial base = *this;
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    Rational evaluate(const Point& point) const {
        if (point.size() != ring_->size()) throw error("point length mismatch");
        Rational acc(0);
        for (const auto& t : terms_) {
            Rational v = t.coeff;
            for (std::size_t i = 0; i < point.size(); ++i)
                for (int k = 0; k < t.mono.e[i]; ++k) v *= point[i];
            acc += v;
        }
        return acc;
    }

    // Formal partial derivative.
    Polynomial derivative(std::size_t var) const {
        std::vector<Term> ts;
        for (const auto& t : terms_) {
            if (t.mono.e[var] == 0) continue;
            Term d = t;
            d.coeff *= t.mono.e[var];
            d.mono.e[var] -= 1;
            ts.push_back(std::move(d));
        }
        return Polynomial(ring_, std::move(ts));
    }

   private:
    RingPtr ring_;
    std::vector<Term> terms_;

    friend class PolyBuilder;
};

// Substitute every variable of p by the polynomial given for it; all images
// live in `target`. A variable without an image maps to the variable of the
// same name in the target ring (error if absent).
inline Polynomial substitute(const Polynomial& p,
                             const std::map<std::string, Polynomial>& assignment,
                             const RingPtr& target) {
    const Ring& src = *p.ring();
    std::vector<Polynomial> images(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        auto it = assignment.find(src.vars[i]);
        if (it != assignment.end()) {
            require_same_ring(it->second.ring(), target);
            images[i] = it->second;
        } else {
            if (!p.uses_var(i)) {
                images[i] = Polynomial::zero(target);
                continue;
            }
            int j = target->index_of(src.vars[i]);
            if (j < 0) throw error("unassigned variable not in target ring: " + src.vars[i]);
            images[i] = Polynomial::variable(target, static_cast<std::size_t>(j));
        }
    }
    // Cache powers per variable up to the needed exponent.
    std::vector<std::vector<Polynomial>> powers(src.size());
    for (std::size_t i = 0; i < src.size(); ++i)
        powers[i].push_back(Polynomial::constant(target, Rational(1)));
    auto power = [&](std::size_t i, int k) -> const Polynomial& {
        while (static_cast<int>(powers[i].size()) <= k)
            powers[i].push_back(powers[i].back() * images[i]);
        return powers[i][k];
    };
    Polynomial acc = Polynomial::zero(target);
    for (const auto& t : p.terms()) {
        Polynomial term = Polynomial::constant(target, t.coeff);
        for (std::size_t i = 0; i < src.size(); ++i)
            if (t.mono.e[i] > 0) term = term * power(i, t.mono.e[i]);
        acc = acc + term;
    }
    return acc;
}

// Re-express p in `target` by matching variable names; every variable used
// by p must exist in the target ring. Handles extension, restriction and
// permutation of ring contexts.
inline Polynomial map_to_ring(const Polynomial& p, const RingPtr& target) {
    if (same_ring(p.ring(), target)) {
        if (p.ring() == target) return p;
        Polynomial q = p;  // rebind to the shared context
        return Polynomial(target, std::vector<Term>(q.terms()));
    }
    const Ring& src = *p.ring();
    std::vector<int> where(src.size(), -1);
    for (std::size_t i = 0; i < src.size(); ++i) where[i] = target->index_of(src.vars[i]);
    std::vector<Term> ts;
    ts.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Monomial m(target->size());
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (t.mono.e[i] == 0) continue;
            if (where[i] < 0)
                throw error("variable " + src.vars[i] + " not present in target ring");
            m.e[where[i]] = t.mono.e[i];
        }
        ts.push_back({std::move(m), t.coeff});
    }
    return Polynomial(target, std::move(ts));
}

// Homogenize with respect to the variables selected by `mask` (true = graded),
// using the variable at `hvar` (mask[hvar] must be false) as the homogenizer.
inline Polynomial homogenize_masked(const Polynomial& p, const std::vector<bool>& mask,
                                    std::size_t hvar) {
    int d = 0;
    auto masked_deg = [&](const Monomial& m) {
        int s = 0;
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (mask[i]) s += m.e[i];
        return s;
    };
    for (const auto& t : p.terms()) d = std::max(d, masked_deg(t.mono));
    std::vector<Term> ts = p.terms();
    for (auto& t : ts) t.mono.e[hvar] += d - masked_deg(t.mono);
    return Polynomial(p.ring(), std::move(ts));
}

// Standard homogenization: appends `new_var` to the ring context.
inline Polynomial homogenize(const Polynomial& p, const std::string& new_var) {
    if (p.ring()->index_of(new_var) >= 0) throw error("homogenizer name collision: " + new_var);
    std::vector<std::string> vars = p.ring()->vars;
    vars.push_back(new_var);
    RingPtr ext = make_ring(std::move(vars));
    Polynomial q = map_to_ring(p, ext);
    std::vector<bool> mask(ext->size(), true);
    mask[ext->size() - 1] = false;
    return homogenize_masked(q, mask, ext->size() - 1);
}

inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const Ring& ring = *p.ring();
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        std::vector<std::string> factors;
        if (c != 1 || t.mono.is_one()) factors.push_back(c.get_str());
        for (std::size_t i = 0; i < ring.size(); ++i) {
            if (t.mono.e[i] == 0) continue;
            std::string f = ring.vars[i];
            if (t.mono.e[i] > 1) f += "^" + std::to_string(t.mono.e[i]);
            factors.push_back(std::move(f));
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) os << "*";
            os << factors[i];
        }
    }
    return os.str();
}

}  // namespace surj

#endif
