#ifndef SURJ_GROEBNER_HPP
#define SURJ_GROEBNER_HPP

#include <algorithm>
#include <tuple>
#include <vector>

#include "surj/polynomial.hpp"

namespace surj {

// Hard resource caps; exceeding one throws resource_limit, never truncates.
struct GroebnerOptions {
    long max_pairs = 200000;
    int max_degree = 0;  // 0 = unlimited
};

namespace detail {

// Engine-internal polynomial: term vector sorted descending under the
// working order, with sugar degree tracked through reductions.
struct WPoly {
    std::vector<Term> t;
    int sugar = 0;

    bool zero() const { return t.empty(); }
    const Monomial& lm() const { return t.front().mono; }
    const Rational& lc() const { return t.front().coeff; }
};

inline WPoly to_working(const Polynomial& p, const MonomialOrder& ord) {
    WPoly w;
    w.t = p.terms();
    std::sort(w.t.begin(), w.t.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    w.sugar = std::max(p.total_degree(), 0);
    return w;
}

inline Polynomial from_working(const WPoly& w, const RingPtr& ring) {
    return Polynomial(ring, std::vector<Term>(w.t));
}

inline void make_monic(WPoly& w) {
    if (w.zero()) return;
    Rational c = w.lc();
    if (c == 1) return;
    for (auto& term : w.t) term.coeff /= c;
}

inline std::vector<Term> add_scaled_span(const Term* a, const Term* a_end, const Rational& c,
                                         const Monomial& m, const std::vector<Term>& b,
                                         const MonomialOrder& ord) {
    std::vector<Term> out;
    out.reserve(static_cast<std::size_t>(a_end - a) + b.size());
    std::size_t j = 0;
    while (a != a_end && j < b.size()) {
        Monomial bm = b[j].mono * m;
        int cmp = ord.compare(a->mono, bm);
        if (cmp > 0) {
            out.push_back(*a++);
        } else if (cmp < 0) {
            Rational v = c * b[j].coeff;
            if (v != 0) out.push_back({std::move(bm), std::move(v)});
            ++j;
        } else {
            Rational v = a->coeff + c * b[j].coeff;
            if (v != 0) out.push_back({std::move(bm), std::move(v)});
            ++a;
            ++j;
        }
    }
    while (a != a_end) out.push_back(*a++);
    while (j < b.size()) {
        Rational v = c * b[j].coeff;
        if (v != 0) out.push_back({b[j].mono * m, std::move(v)});
        ++j;
    }
    return out;
}

// Full reduction (head and tail) modulo a list of monic reducers.
// Divisor choice is the first match in list order.
inline WPoly reduce_full(WPoly w, const std::vector<WPoly>& basis, const MonomialOrder& ord) {
    std::vector<Term> done;
    std::vector<Term> work = std::move(w.t);
    std::size_t start = 0;
    int sugar = w.sugar;
    while (start < work.size()) {
        const Term& head = work[start];
        const WPoly* red = nullptr;
        for (const auto& g : basis) {
            if (!g.zero() && divides(g.lm(), head.mono)) {
                red = &g;
                break;
            }
        }
        if (!red) {
            done.push_back(work[start++]);
            continue;
        }
        Monomial q = quotient(head.mono, red->lm());
        sugar = std::max(sugar, q.degree() + red->sugar);
        Rational c = -head.coeff;
        work = add_scaled_span(work.data() + start, work.data() + work.size(), c, q, red->t, ord);
        start = 0;
    }
    WPoly r;
    r.t = std::move(done);
    r.sugar = sugar;
    return r;
}

inline WPoly s_polynomial(const WPoly& f, const WPoly& g, const MonomialOrder& ord) {
    Monomial L = lcm(f.lm(), g.lm());
    Monomial u = quotient(L, f.lm());
    Monomial v = quotient(L, g.lm());
    // f and g monic: S = u*f - v*g.
    std::vector<Term> uf;
    uf.reserve(f.t.size());
    for (const auto& t : f.t) uf.push_back({t.mono * u, t.coeff});
    WPoly s;
    s.t = add_scaled_span(uf.data(), uf.data() + uf.size(), Rational(-1), v, g.t, ord);
    s.sugar = std::max(f.sugar + u.degree(), g.sugar + v.degree());
    return s;
}

}  // namespace detail

// Reduced Groebner basis: monic, auto-reduced, elements sorted ascending by
// leading monomial. Deterministic for fixed input and order.
class GroebnerBasis {
   public:
    GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> elems)
        : ring_(std::move(ring)), order_(order), elems_(std::move(elems)) {
        for (const auto& g : elems_) working_.push_back(detail::to_working(g, order_));
    }

    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Polynomial>& elements() const { return elems_; }
    bool empty() const { return elems_.empty(); }

    // True iff the basis is {1}, i.e. the ideal is the whole ring.
    bool contains_one() const {
        return elems_.size() == 1 && elems_[0].is_constant() && !elems_[0].is_zero();
    }

    const std::vector<detail::WPoly>& working() const { return working_; }

   private:
    RingPtr ring_;
    MonomialOrder order_;
    std::vector<Polynomial> elems_;
    std::vector<detail::WPoly> working_;
};

// Remainder of exact multivariate division by the basis; zero iff the
// polynomial lies in the ideal the basis generates.
inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G) {
    require_same_ring(p.ring(), G.ring());
    if (G.empty()) return p;
    detail::WPoly w = detail::to_working(p, G.order());
    w = detail::reduce_full(std::move(w), G.working(), G.order());
    return detail::from_working(w, p.ring());
}

struct DivisionResult {
    Polynomial remainder;
    std::vector<Polynomial> quotients;  // p = sum quotients[i]*divisors[i] + remainder
};

// Division with explicit cofactors; divisor choice is first-in-list.
inline DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& divisors,
                             const MonomialOrder& ord) {
    std::vector<detail::WPoly> ds;
    for (const auto& d : divisors) ds.push_back(detail::to_working(d, ord));
    std::vector<std::vector<Term>> quot(divisors.size());
    std::vector<Term> done;
    detail::WPoly w = detail::to_working(p, ord);
    std::vector<Term> work = std::move(w.t);
    std::size_t start = 0;
    while (start < work.size()) {
        const Term& head = work[start];
        int which = -1;
        for (std::size_t k = 0; k < ds.size(); ++k) {
            if (!ds[k].zero() && divides(ds[k].lm(), head.mono)) {
                which = static_cast<int>(k);
                break;
            }
        }
        if (which < 0) {
            done.push_back(work[start++]);
            continue;
        }
        Monomial q = quotient(head.mono, ds[which].lm());
        Rational c = head.coeff / ds[which].lc();
        quot[which].push_back({q, c});
        work = detail::add_scaled_span(work.data() + start, work.data() + work.size(), -c, q,
                                       ds[which].t, ord);
        start = 0;
    }
    DivisionResult res{Polynomial(p.ring(), std::move(done)), {}};
    for (auto& qt : quot) res.quotients.push_back(Polynomial(p.ring(), std::move(qt)));
    return res;
}

// Buchberger with the Gebauer-Moeller installation of the product and chain
// criteria and sugar-based pair selection. Ties break on (sugar, lcm degree,
// i, j), generators are installed in input order.
inline GroebnerBasis groebner_basis_of(const RingPtr& ring,
                                       const std::vector<Polynomial>& generators,
                                       const MonomialOrder& order,
                                       const GroebnerOptions& opts = {}) {
    using detail::WPoly;

    struct Pair {
        int i, j;
        Monomial l;
        int deg;
        int sugar;
    };

    std::vector<WPoly> G;
    std::vector<Pair> P;

    auto make_pair_entry = [&](int i, int j) {
        Monomial l = lcm(G[i].lm(), G[j].lm());
        int deg = l.degree();
        int sug = std::max(G[i].sugar + deg - G[i].lm().degree(),
                           G[j].sugar + deg - G[j].lm().degree());
        return Pair{i, j, std::move(l), deg, sug};
    };

    auto install = [&](WPoly w) {
        detail::make_monic(w);
        int t = static_cast<int>(G.size());
        G.push_back(std::move(w));
        std::vector<Pair> D;
        for (int i = 0; i < t; ++i) D.push_back(make_pair_entry(i, t));
        // Keep (i,t) only if no other new pair's lcm properly divides its lcm.
        std::vector<char> keep(D.size(), 1);
        for (std::size_t a = 0; a < D.size(); ++a) {
            for (std::size_t b = 0; b < D.size(); ++b) {
                if (a == b || !keep[a]) continue;
                if (D[b].l != D[a].l && divides(D[b].l, D[a].l)) keep[a] = 0;
            }
        }
        // Among equal lcms keep a single representative, unless some member
        // has coprime leading monomials, in which case the class dies.
        for (std::size_t a = 0; a < D.size(); ++a) {
            if (!keep[a]) continue;
            bool class_coprime = coprime(G[D[a].i].lm(), G[t].lm());
            std::size_t rep = a;
            for (std::size_t b = a + 1; b < D.size(); ++b) {
                if (!keep[b] || D[b].l != D[a].l) continue;
                keep[b] = 0;
                if (coprime(G[D[b].i].lm(), G[t].lm())) class_coprime = true;
                if (D[b].i < D[rep].i) rep = b;
            }
            if (class_coprime) {
                keep[a] = 0;
            } else if (rep != a) {
                std::swap(D[a], D[rep]);
            }
        }
        // Chain criterion on surviving old pairs.
        std::vector<Pair> P2;
        P2.reserve(P.size());
        for (auto& pr : P) {
            bool drop = divides(G[t].lm(), pr.l) && lcm(G[pr.i].lm(), G[t].lm()) != pr.l &&
                        lcm(G[pr.j].lm(), G[t].lm()) != pr.l;
            if (!drop) P2.push_back(std::move(pr));
        }
        P = std::move(P2);
        for (std::size_t a = 0; a < D.size(); ++a)
            if (keep[a]) P.push_back(std::move(D[a]));
    };

    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        require_same_ring(g.ring(), ring);
        WPoly w = detail::to_working(g, order);
        w = detail::reduce_full(std::move(w), G, order);
        if (w.zero()) continue;
        if (w.lm().is_one())
            return GroebnerBasis(ring, order, {Polynomial::constant(ring, Rational(1))});
        install(std::move(w));
    }

    long pairs_done = 0;
    while (!P.empty()) {
        // Deterministic selection: min (sugar, lcm degree, i, j).
        std::size_t best = 0;
        for (std::size_t k = 1; k < P.size(); ++k) {
            const Pair &a = P[k], &b = P[best];
            if (std::tie(a.sugar, a.deg, a.i, a.j) < std::tie(b.sugar, b.deg, b.i, b.j)) best = k;
        }
        Pair pr = std::move(P[best]);
        P.erase(P.begin() + static_cast<long>(best));

        if (++pairs_done > opts.max_pairs)
            throw resource_limit("groebner basis: pair limit exceeded (" +
                                 std::to_string(opts.max_pairs) + ")");

        WPoly s = detail::s_polynomial(G[pr.i], G[pr.j], order);
        WPoly h = detail::reduce_full(std::move(s), G, order);
        if (h.zero()) continue;
        if (opts.max_degree > 0 && h.lm().degree() > opts.max_degree)
            throw resource_limit("groebner basis: degree limit exceeded (" +
                                 std::to_string(opts.max_degree) + ")");
        if (h.lm().is_one()) {
            // Unit ideal: short-circuit to the canonical basis {1}.
            return GroebnerBasis(ring, order,
                                 {Polynomial::constant(ring, Rational(1))});
        }
        install(std::move(h));
    }

    // Minimalize: drop elements whose leading monomial another one divides.
    std::vector<int> idx(G.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = static_cast<int>(k);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        int c = order.compare(G[a].lm(), G[b].lm());
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<int> kept;
    for (int k : idx) {
        bool redundant = false;
        for (int m : kept) {
            if (divides(G[m].lm(), G[k].lm())) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(k);
    }
    // Interreduce tails.
    std::vector<WPoly> minimal;
    for (int k : kept) minimal.push_back(G[k]);
    std::vector<WPoly> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<WPoly> others;
        for (std::size_t m = 0; m < minimal.size(); ++m)
            if (m != k) others.push_back(minimal[m]);
        WPoly r = detail::reduce_full(minimal[k], others, order);
        detail::make_monic(r);
        reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const WPoly& a, const WPoly& b) { return order.less(a.lm(), b.lm()); });
    std::vector<Polynomial> out;
    for (const auto& w : reduced) out.push_back(detail::from_working(w, ring));
    return GroebnerBasis(ring, order, std::move(out));
}

}  // namespace surj

#endif
