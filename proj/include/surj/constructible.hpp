#ifndef SURJ_CONSTRUCTIBLE_HPP
#define SURJ_CONSTRUCTIBLE_HPP

#include <optional>
#include <vector>

#include "surj/ideal.hpp"

namespace surj {

// One locally closed piece V(I) \ V(g); g = 1 encodes a closed piece.
// The representation is not canonical; emptiness is g in rad(I).
struct Piece {
    Ideal equations;
    Polynomial inequation;

    Piece(Ideal eq, Polynomial ineq)
        : equations(std::move(eq)), inequation(std::move(ineq)) {
        require_same_ring(equations.ring, inequation.ring());
    }

    static Piece closed(Ideal eq) {
        Polynomial one = Polynomial::constant(eq.ring, Rational(1));
        return Piece(std::move(eq), std::move(one));
    }
};

inline bool piece_is_empty(const Piece& p, const GroebnerOptions& opts = {}) {
    if (p.inequation.is_zero()) return true;
    if (p.equations.is_zero_ideal()) return false;  // nonzero g on affine space
    if (p.inequation.is_constant())
        return groebner_basis(p.equations, MonomialOrder::grevlex(), opts).contains_one();
    return radical_membership(p.inequation, p.equations, opts);
}

inline bool piece_contains(const Piece& p, const Point& q) {
    for (const auto& g : p.equations.gens)
        if (g.evaluate(q) != 0) return false;
    return p.inequation.evaluate(q) != 0;
}

// Finite union of locally closed pieces over a fixed ambient ring; semantics
// are over the algebraic closure. No canonical form: equality is mutual
// containment.
class ConstructibleSet {
   public:
    explicit ConstructibleSet(RingPtr ring) : ring_(std::move(ring)) {}
    ConstructibleSet(RingPtr ring, std::vector<Piece> pieces)
        : ring_(std::move(ring)), pieces_(std::move(pieces)) {
        for (const auto& p : pieces_) require_same_ring(p.equations.ring, ring_);
    }

    static ConstructibleSet empty_set(RingPtr ring) { return ConstructibleSet(std::move(ring)); }
    static ConstructibleSet full_space(RingPtr ring) {
        Piece all = Piece::closed(Ideal(ring, {}));
        return ConstructibleSet(std::move(ring), {std::move(all)});
    }
    static ConstructibleSet single_point(RingPtr ring, const Point& q) {
        if (q.size() != ring->size()) throw error("point length mismatch");
        std::vector<Polynomial> gens;
        for (std::size_t i = 0; i < q.size(); ++i)
            gens.push_back(Polynomial::variable(ring, i) - Polynomial::constant(ring, q[i]));
        Piece pt = Piece::closed(Ideal(ring, std::move(gens)));
        return ConstructibleSet(std::move(ring), {std::move(pt)});
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    bool no_pieces() const { return pieces_.empty(); }

    void add_piece(Piece p) {
        require_same_ring(p.equations.ring, ring_);
        pieces_.push_back(std::move(p));
    }

   private:
    RingPtr ring_;
    std::vector<Piece> pieces_;
};

inline bool membership(const ConstructibleSet& S, const Point& q) {
    if (q.size() != S.ring()->size()) throw error("point length mismatch");
    for (const auto& p : S.pieces())
        if (piece_contains(p, q)) return true;
    return false;
}

inline ConstructibleSet set_union(const ConstructibleSet& S, const ConstructibleSet& T) {
    require_same_ring(S.ring(), T.ring());
    ConstructibleSet out(S.ring(), S.pieces());
    for (const auto& p : T.pieces()) out.add_piece(p);
    return out;
}

namespace detail {

inline Piece intersect_pieces(const Piece& a, const Piece& b) {
    std::vector<Polynomial> gens = a.equations.gens;
    gens.insert(gens.end(), b.equations.gens.begin(), b.equations.gens.end());
    Ideal I(a.equations.ring, std::move(gens));
    return Piece(std::move(I), a.inequation * b.inequation);
}

// Complement of one piece: points failing an equation, plus the closed part
// where the inequation also vanishes.
inline std::vector<Piece> complement_piece(const Piece& p) {
    const RingPtr& ring = p.equations.ring;
    std::vector<Piece> out;
    for (const auto& f : p.equations.gens)
        out.push_back(Piece(Ideal(ring, {}), f));
    std::vector<Polynomial> gens = p.equations.gens;
    gens.push_back(p.inequation);
    out.push_back(Piece::closed(Ideal(ring, std::move(gens))));
    return out;
}

}  // namespace detail

inline ConstructibleSet set_intersect(const ConstructibleSet& S, const ConstructibleSet& T,
                                      const GroebnerOptions& opts = {}) {
    require_same_ring(S.ring(), T.ring());
    ConstructibleSet out(S.ring());
    for (const auto& a : S.pieces())
        for (const auto& b : T.pieces()) {
            Piece c = detail::intersect_pieces(a, b);
            if (!piece_is_empty(c, opts)) out.add_piece(std::move(c));
        }
    return out;
}

inline ConstructibleSet complement(const ConstructibleSet& S, const GroebnerOptions& opts = {}) {
    ConstructibleSet acc = ConstructibleSet::full_space(S.ring());
    for (const auto& p : S.pieces()) {
        ConstructibleSet comp_p(S.ring());
        for (auto& piece : detail::complement_piece(p))
            if (!piece_is_empty(piece, opts)) comp_p.add_piece(std::move(piece));
        acc = set_intersect(acc, comp_p, opts);
        if (acc.no_pieces()) return acc;
    }
    return acc;
}

inline ConstructibleSet set_difference(const ConstructibleSet& S, const ConstructibleSet& T,
                                       const GroebnerOptions& opts = {}) {
    require_same_ring(S.ring(), T.ring());
    ConstructibleSet acc(S.ring());
    for (const auto& p : S.pieces())
        if (!piece_is_empty(p, opts)) acc.add_piece(p);
    for (const auto& t : T.pieces()) {
        if (acc.no_pieces()) return acc;
        ConstructibleSet comp_t(S.ring());
        for (auto& piece : detail::complement_piece(t))
            if (!piece_is_empty(piece, opts)) comp_t.add_piece(std::move(piece));
        acc = set_intersect(acc, comp_t, opts);
    }
    return acc;
}

inline bool is_empty(const ConstructibleSet& S, const GroebnerOptions& opts = {}) {
    for (const auto& p : S.pieces())
        if (!piece_is_empty(p, opts)) return false;
    return true;
}

inline bool is_subset(const ConstructibleSet& S, const ConstructibleSet& T,
                      const GroebnerOptions& opts = {}) {
    return is_empty(set_difference(S, T, opts), opts);
}

inline bool set_equal(const ConstructibleSet& S, const ConstructibleSet& T,
                      const GroebnerOptions& opts = {}) {
    return is_subset(S, T, opts) && is_subset(T, S, opts);
}

// Ideal of the Zariski closure: intersection over pieces of I : g^infinity.
inline Ideal closure_of(const ConstructibleSet& S, const GroebnerOptions& opts = {}) {
    std::vector<Ideal> closures;
    for (const auto& p : S.pieces()) {
        if (piece_is_empty(p, opts)) continue;
        closures.push_back(saturate(p.equations, p.inequation, opts));
    }
    if (closures.empty())
        return make_ideal(S.ring(), {"1"});  // empty set: the unit ideal
    // Fold pairwise via the t-trick: A cap B = (t*A + (1-t)*B) cap k[x].
    Ideal acc = closures[0];
    for (std::size_t k = 1; k < closures.size(); ++k) {
        const Ideal& B = closures[k];
        std::string t = fresh_var(*S.ring(), "_t");
        std::vector<std::string> vars = S.ring()->vars;
        vars.push_back(t);
        RingPtr ext = make_ring(vars);
        Polynomial tv = Polynomial::variable(ext, ext->size() - 1);
        Polynomial one_minus_t = Polynomial::constant(ext, Rational(1)) - tv;
        std::vector<Polynomial> gens;
        for (const auto& g : acc.gens) gens.push_back(tv * map_to_ring(g, ext));
        for (const auto& g : B.gens) gens.push_back(one_minus_t * map_to_ring(g, ext));
        Ideal J(ext, std::move(gens));
        Ideal E = eliminate(J, {t}, opts);
        std::vector<Polynomial> back;
        for (const auto& g : E.gens) back.push_back(map_to_ring(g, S.ring()));
        acc = Ideal(S.ring(), std::move(back));
    }
    return acc;
}

}  // namespace surj

#endif
