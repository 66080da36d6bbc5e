#ifndef SURJ_IDEAL_HPP
#define SURJ_IDEAL_HPP

#include <set>
#include <string>
#include <vector>

#include "surj/groebner.hpp"
#include "surj/parser.hpp"

namespace surj {

struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> gens;  // zero generators dropped; empty list = (0)

    Ideal() = default;
    Ideal(RingPtr r, std::vector<Polynomial> g) : ring(std::move(r)) {
        for (auto& p : g) {
            require_same_ring(p.ring(), ring);
            if (!p.is_zero()) gens.push_back(std::move(p));
        }
    }
    bool is_zero_ideal() const { return gens.empty(); }
};

inline Ideal make_ideal(RingPtr ring, const std::vector<std::string>& texts) {
    std::vector<Polynomial> gens;
    for (const auto& t : texts) gens.push_back(parse_polynomial(t, ring));
    return Ideal(std::move(ring), std::move(gens));
}

inline GroebnerBasis groebner_basis(const Ideal& I, const MonomialOrder& order,
                                    const GroebnerOptions& opts = {}) {
    return groebner_basis_of(I.ring, I.gens, order, opts);
}

// p in I, decided through a (cached or fresh) basis of I.
inline bool ideal_contains(const GroebnerBasis& G, const Polynomial& p) {
    return normal_form(p, G).is_zero();
}

// Equality of ideals by mutual normal-form containment.
inline bool ideal_equal(const Ideal& A, const Ideal& B, const GroebnerOptions& opts = {}) {
    require_same_ring(A.ring, B.ring);
    GroebnerBasis GA = groebner_basis(A, MonomialOrder::grevlex(), opts);
    GroebnerBasis GB = groebner_basis(B, MonomialOrder::grevlex(), opts);
    for (const auto& g : A.gens)
        if (!ideal_contains(GB, g)) return false;
    for (const auto& g : B.gens)
        if (!ideal_contains(GA, g)) return false;
    return true;
}

// Generators of I intersected with the subring omitting `drop`. The dropped
// variables are moved to the leading block of a block-elimination order; the
// result lives in the ring of the kept variables in their original order.
inline Ideal eliminate(const Ideal& I, const std::set<std::string>& drop,
                       const GroebnerOptions& opts = {}) {
    const Ring& ring = *I.ring;
    std::vector<std::string> dropped, kept;
    for (const auto& v : ring.vars) {
        if (drop.count(v))
            dropped.push_back(v);
        else
            kept.push_back(v);
    }
    for (const auto& d : drop)
        if (ring.index_of(d) < 0) throw error("eliminate: unknown variable " + d);
    RingPtr kept_ring = make_ring(kept);
    if (dropped.empty()) {
        std::vector<Polynomial> gens;
        for (const auto& g : I.gens) gens.push_back(map_to_ring(g, kept_ring));
        return Ideal(kept_ring, std::move(gens));
    }
    std::vector<std::string> permuted = dropped;
    permuted.insert(permuted.end(), kept.begin(), kept.end());
    RingPtr work_ring = make_ring(permuted);
    std::vector<Polynomial> work_gens;
    for (const auto& g : I.gens) work_gens.push_back(map_to_ring(g, work_ring));
    GroebnerBasis G = groebner_basis_of(
        work_ring, work_gens, MonomialOrder::block_elim(static_cast<int>(dropped.size())), opts);
    std::vector<Polynomial> out;
    for (const auto& g : G.elements()) {
        bool pure = true;
        for (std::size_t i = 0; i < dropped.size(); ++i)
            if (g.uses_var(i)) {
                pure = false;
                break;
            }
        if (pure) out.push_back(map_to_ring(g, kept_ring));
    }
    return Ideal(kept_ring, std::move(out));
}

// I : g^infinity by the extra-variable method: adjoin u, add u*g - 1,
// eliminate u.
inline Ideal saturate(const Ideal& I, const Polynomial& g, const GroebnerOptions& opts = {}) {
    require_same_ring(g.ring(), I.ring);
    if (g.is_zero()) throw error("saturate: zero divisor polynomial");
    if (g.is_constant()) return I;  // unit: saturation is I itself
    std::string u = fresh_var(*I.ring, "_u");
    std::vector<std::string> vars = I.ring->vars;
    vars.push_back(u);
    RingPtr ext = make_ring(vars);
    std::vector<Polynomial> gens;
    for (const auto& p : I.gens) gens.push_back(map_to_ring(p, ext));
    Polynomial ug = map_to_ring(g, ext) * Polynomial::variable(ext, ext->size() - 1);
    gens.push_back(ug - Polynomial::constant(ext, Rational(1)));
    Ideal J(ext, std::move(gens));
    Ideal elim = eliminate(J, {u}, opts);
    // eliminate() returns the kept ring with the original variable order.
    std::vector<Polynomial> out;
    for (const auto& p : elim.gens) out.push_back(map_to_ring(p, I.ring));
    return Ideal(I.ring, std::move(out));
}

// True iff p vanishes on V(I) over the algebraic closure (Rabinowitsch).
inline bool radical_membership(const Polynomial& p, const Ideal& I,
                               const GroebnerOptions& opts = {}) {
    require_same_ring(p.ring(), I.ring);
    if (p.is_zero()) return true;
    std::string t = fresh_var(*I.ring, "_t");
    std::vector<std::string> vars = I.ring->vars;
    vars.push_back(t);
    RingPtr ext = make_ring(vars);
    std::vector<Polynomial> gens;
    for (const auto& q : I.gens) gens.push_back(map_to_ring(q, ext));
    Polynomial tp = map_to_ring(p, ext) * Polynomial::variable(ext, ext->size() - 1);
    gens.push_back(Polynomial::constant(ext, Rational(1)) - tp);
    GroebnerBasis G = groebner_basis_of(ext, gens, MonomialOrder::grevlex(), opts);
    return G.contains_one();
}

// Krull dimension of the vanishing set of a basis, via maximal variable
// subsets independent modulo the leading-term ideal. -1 for the empty set.
inline int dimension_of_basis(const GroebnerBasis& G) {
    std::size_t n = G.ring()->size();
    if (n > 24) throw error("dimension: too many variables");
    if (G.contains_one()) return -1;
    if (G.empty()) return static_cast<int>(n);
    std::vector<unsigned> supports;
    for (const auto& g : G.elements()) {
        const Monomial* best = nullptr;
        for (const auto& t : g.terms())
            if (!best || G.order().greater(t.mono, *best)) best = &t.mono;
        unsigned m = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (best->e[i] > 0) m |= 1u << i;
        supports.push_back(m);
    }
    int best_dim = 0;
    for (unsigned s = 0; s < (1u << n); ++s) {
        bool independent = true;
        for (unsigned m : supports) {
            if ((m & s) == m) {  // support contained in s
                independent = false;
                break;
            }
        }
        if (independent) best_dim = std::max(best_dim, __builtin_popcount(s));
    }
    return best_dim;
}

inline int dimension(const Ideal& I, const GroebnerOptions& opts = {}) {
    if (I.is_zero_ideal()) return static_cast<int>(I.ring->size());
    return dimension_of_basis(groebner_basis(I, MonomialOrder::grevlex(), opts));
}

// Re-express an ideal in a ring with the same arity, matching variables by
// position.
inline Ideal rename_ideal(const Ideal& I, const RingPtr& target) {
    if (I.ring->size() != target->size()) throw error("rename_ideal: arity mismatch");
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens)
        gens.push_back(Polynomial(target, std::vector<Term>(g.terms())));
    return Ideal(target, std::move(gens));
}

// Minimal primes of a squarefree monomial ideal: inclusion-minimal
// transversals of the generator supports, as sets of variable indices.
inline std::vector<std::vector<int>> monomial_minimal_primes(const Ideal& I) {
    std::size_t n = I.ring->size();
    if (n > 24) throw error("monomial_minimal_primes: too many variables");
    std::vector<unsigned> supports;
    for (const auto& g : I.gens) {
        if (g.terms().size() != 1 || g.terms()[0].coeff != 1)
            throw error("monomial_minimal_primes: generator is not a monic monomial: " +
                        to_string(g));
        unsigned m = 0;
        for (std::size_t i = 0; i < n; ++i) {
            int e = g.terms()[0].mono.e[i];
            if (e > 1) throw error("monomial_minimal_primes: non-squarefree generator: " +
                                   to_string(g));
            if (e == 1) m |= 1u << i;
        }
        if (m == 0) throw error("monomial_minimal_primes: unit generator");
        supports.push_back(m);
    }
    if (supports.empty()) return {};  // zero ideal: V is everything, no primes to list
    std::vector<unsigned> masks;
    for (unsigned s = 0; s < (1u << n); ++s) masks.push_back(s);
    std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    std::vector<unsigned> found;
    for (unsigned s : masks) {
        bool hits_all = true;
        for (unsigned m : supports)
            if ((m & s) == 0) {
                hits_all = false;
                break;
            }
        if (!hits_all) continue;
        bool minimal = true;
        for (unsigned f : found)
            if ((f & s) == f) {
                minimal = false;
                break;
            }
        if (minimal) found.push_back(s);
    }
    std::vector<std::vector<int>> out;
    for (unsigned f : found) {
        std::vector<int> set;
        for (std::size_t i = 0; i < n; ++i)
            if (f & (1u << i)) set.push_back(static_cast<int>(i));
        out.push_back(std::move(set));
    }
    return out;
}

}  // namespace surj

#endif
