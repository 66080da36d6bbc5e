#ifndef SURJ_IMAGE_HPP
#define SURJ_IMAGE_HPP

#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "surj/polymap.hpp"

namespace surj {

struct EngineOptions {
    unsigned long long seed = 0;
    int max_retries = 8;
    int samples = 100;
    bool trace = false;  // stage timings on stderr
    GroebnerOptions gb;
};

// Pointwise ground truth: q lies in the image iff some source piece has a
// nonempty fiber over q, i.e. the fiber ideal is proper.
inline bool fiber_membership_oracle(const PolynomialMap& phi, const Point& q,
                                    const EngineOptions& opts = {}) {
    if (q.size() != phi.target->size()) throw error("point length mismatch");
    for (const auto& piece : phi.domain.pieces()) {
        std::vector<Polynomial> gens = piece.equations.gens;
        for (std::size_t i = 0; i < phi.components.size(); ++i)
            gens.push_back(phi.components[i] - Polynomial::constant(phi.source, q[i]));
        const Polynomial& g = piece.inequation;
        if (g.is_zero()) continue;
        if (g.is_constant()) {
            GroebnerBasis G = groebner_basis_of(phi.source, gens, MonomialOrder::grevlex(),
                                                opts.gb);
            if (!G.contains_one()) return true;
            continue;
        }
        std::string w = fresh_var(*phi.source, "_w");
        std::vector<std::string> vars = phi.source->vars;
        vars.push_back(w);
        RingPtr ext = make_ring(vars);
        std::vector<Polynomial> egens;
        for (const auto& p : gens) egens.push_back(map_to_ring(p, ext));
        egens.push_back(map_to_ring(g, ext) * Polynomial::variable(ext, ext->size() - 1) -
                        Polynomial::constant(ext, Rational(1)));
        GroebnerBasis G = groebner_basis_of(ext, egens, MonomialOrder::grevlex(), opts.gb);
        if (!G.contains_one()) return true;
    }
    return false;
}

namespace detail {

// Deterministic small-coordinate candidates followed by seeded random ones;
// used to extract rational witness points from nonempty sets.
template <typename Pred>
std::optional<Point> search_point(std::size_t n, Pred&& good, const EngineOptions& opts) {
    std::vector<Rational> base = {Rational(0), Rational(1), Rational(-1), Rational(2),
                                  Rational(-2)};
    if (n <= 5) {
        std::vector<std::size_t> idx(n, 0);
        for (;;) {
            Point p;
            for (std::size_t i = 0; i < n; ++i) p.push_back(base[idx[i]]);
            if (good(p)) return p;
            std::size_t k = 0;
            while (k < n && ++idx[k] == base.size()) idx[k++] = 0;
            if (k == n) break;
        }
    }
    std::mt19937_64 rng(opts.seed + 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<int> num(-7, 7);
    std::uniform_int_distribution<int> den(1, 2);
    for (int i = 0; i < opts.samples * 10; ++i) {
        Point p;
        for (std::size_t k = 0; k < n; ++k) p.push_back(make_rational(num(rng), den(rng)));
        if (good(p)) return p;
    }
    return std::nullopt;
}

// Constructible image of a polynomial map restricted to an affine source
// V(I), by slicing to finite generic fibers and peeling the boundary where
// fibers escape to infinity. Randomness is Las Vegas: every random choice is
// verified and retried, exactness is never at risk.
class ImageEngine {
   public:
    ImageEngine(const PolynomialMap& phi, const EngineOptions& opts)
        : phi_(phi), opts_(opts), rng_(opts.seed) {}

    ConstructibleSet run() {
        ConstructibleSet result(phi_.target);
        for (const auto& piece : phi_.domain.pieces()) {
            if (piece.inequation.is_zero()) continue;
            RingPtr xring = phi_.source;
            Ideal I = piece.equations;
            std::vector<Polynomial> comps = phi_.components;
            if (!piece.inequation.is_constant()) {
                // Rabinowitsch: make the locally closed piece affine.
                std::string u = fresh_var(*phi_.source, "_r");
                std::vector<std::string> vars = phi_.source->vars;
                vars.push_back(u);
                xring = make_ring(vars);
                std::vector<Polynomial> gens;
                for (const auto& g : I.gens) gens.push_back(map_to_ring(g, xring));
                gens.push_back(map_to_ring(piece.inequation, xring) *
                                   Polynomial::variable(xring, xring->size() - 1) -
                               Polynomial::constant(xring, Rational(1)));
                I = Ideal(xring, std::move(gens));
                std::vector<Polynomial> lifted;
                for (const auto& f : comps) lifted.push_back(map_to_ring(f, xring));
                comps = std::move(lifted);
            }
            result = set_union(result,
                               image_affine(xring, I, comps,
                                            static_cast<int>(phi_.target->size()) + 1));
        }
        return result;
    }

   private:
    const PolynomialMap& phi_;
    EngineOptions opts_;
    std::mt19937_64 rng_;

    // Affine-linear cut with coefficients from [-100, 100]. Early attempts
    // keep the form sparse so downstream bases stay small; the verification
    // loop densifies on retry.
    Polynomial random_affine_form(const RingPtr& xring, int attempt) {
        std::uniform_int_distribution<int> coeff(-100, 100);
        std::size_t m = xring->size();
        std::size_t support = std::min(m, static_cast<std::size_t>(2 + attempt));
        std::vector<std::size_t> vars(m);
        for (std::size_t i = 0; i < m; ++i) vars[i] = i;
        std::shuffle(vars.begin(), vars.end(), rng_);
        for (;;) {
            Polynomial acc = Polynomial::constant(xring, Rational(coeff(rng_)));
            bool nontrivial = false;
            for (std::size_t k = 0; k < support; ++k) {
                int c = coeff(rng_);
                if (c == 0) continue;
                nontrivial = true;
                acc = acc + Rational(c) * Polynomial::variable(xring, vars[k]);
            }
            if (nontrivial) return acc;
        }
    }

    void trace(const std::string& msg, std::chrono::steady_clock::time_point t0) const {
        if (!opts_.trace) return;
        double dt = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        std::cerr << "[image] " << msg << ": " << dt << " ms\n";
    }

    ConstructibleSet image_affine(const RingPtr& xring, const Ideal& I,
                                  const std::vector<Polynomial>& comps, int parent_dim) {
        const std::size_t m = xring->size();
        const std::size_t n = phi_.target->size();
        ConstructibleSet empty(phi_.target);

        auto t0 = std::chrono::steady_clock::now();
        GroebnerBasis GI = groebner_basis_of(xring, I.gens, MonomialOrder::grevlex(), opts_.gb);
        trace("source basis (" + std::to_string(m) + " vars)", t0);
        if (GI.contains_one()) return empty;  // empty source piece
        int d_src = I.is_zero_ideal() ? static_cast<int>(m) : dimension_of_basis(GI);

        // Constant map short-circuit.
        {
            bool all_const = true;
            Point value;
            for (const auto& f : comps) {
                Polynomial r = normal_form(f, GI);
                if (!r.is_constant()) {
                    all_const = false;
                    break;
                }
                value.push_back(r.constant_value());
            }
            if (all_const) return ConstructibleSet::single_point(phi_.target, value);
        }

        // Graph ring: x-block first (eliminated), then fresh y-names.
        std::vector<std::string> gvars = xring->vars;
        std::vector<std::string> ynames;
        for (std::size_t j = 0; j < n; ++j) {
            Ring tmp;
            tmp.vars = gvars;
            std::string y = fresh_var(tmp, "_y" + std::to_string(j));
            ynames.push_back(y);
            gvars.push_back(y);
        }
        RingPtr gring = make_ring(gvars);
        std::vector<Polynomial> graph_gens;
        for (const auto& g : I.gens) graph_gens.push_back(map_to_ring(g, gring));
        for (std::size_t j = 0; j < n; ++j)
            graph_gens.push_back(Polynomial::variable(gring, m + j) -
                                 map_to_ring(comps[j], gring));
        Ideal J(gring, graph_gens);

        std::set<std::string> xset(xring->vars.begin(), xring->vars.end());
        t0 = std::chrono::steady_clock::now();
        Ideal JY = rename_ideal(eliminate(J, xset, opts_.gb), phi_.target);
        trace("closure elimination", t0);
        GroebnerBasis GY = groebner_basis_of(phi_.target, JY.gens, MonomialOrder::grevlex(),
                                             opts_.gb);
        int dY = JY.is_zero_ideal() ? static_cast<int>(n) : dimension_of_basis(GY);
        if (dY < 0) return empty;
        if (dY >= parent_dim)
            throw error("image engine: recursion failed to decrease the closure dimension");
        // A constructible set with finite closure is closed, so Y is the image.
        if (dY == 0) return ConstructibleSet(phi_.target, {Piece::closed(JY)});

        std::vector<Ideal> boundary;
        for (int attempt = 0;; ++attempt) {
            if (attempt >= opts_.max_retries)
                throw resource_limit("image engine: randomization retries exhausted");
            boundary.clear();

            std::vector<Polynomial> slice_gens = graph_gens;
            int nslices = d_src - dY;
            for (int s = 0; s < nslices; ++s)
                slice_gens.push_back(map_to_ring(random_affine_form(xring), gring));
            Ideal Jsl(gring, slice_gens);

            if (nslices > 0) {
                // The sliced image closure must still be all of Y.
                t0 = std::chrono::steady_clock::now();
                Ideal E = rename_ideal(eliminate(Jsl, xset, opts_.gb), phi_.target);
                trace("slice verification (" + std::to_string(nslices) + " cuts)", t0);
                bool preserved = true;
                for (const auto& h : E.gens)
                    if (!radical_membership(h, JY, opts_.gb)) {
                        preserved = false;
                        break;
                    }
                if (!preserved) continue;
            }

            // Projective closure of the sliced graph over the target. The
            // graph ideal is homogeneous in the x-block once the homogenizer
            // joins it, so saturating by the homogenizer needs no extra
            // variable: with the homogenizer revlex-last inside the graded
            // block, a leading term divisible by it forces the whole element
            // to be divisible, and dividing out reaches the saturation.
            Ring tmp;
            tmp.vars = gring->vars;
            std::string h0 = fresh_var(tmp, "_h");
            std::vector<std::string> hvars(xring->vars);
            hvars.push_back(h0);
            for (std::size_t j = 0; j < n; ++j) hvars.push_back(gring->vars[m + j]);
            RingPtr hring = make_ring(hvars);
            const std::size_t hidx = m;  // homogenizer position
            std::vector<bool> mask(hring->size(), false);
            for (std::size_t i = 0; i <= m; ++i) mask[i] = true;
            std::vector<Polynomial> hgens;
            for (const auto& g : Jsl.gens)
                hgens.push_back(homogenize_masked(map_to_ring(g, hring), mask, hidx));
            MonomialOrder hord = MonomialOrder::block_elim(static_cast<int>(m + 1));
            t0 = std::chrono::steady_clock::now();
            for (;;) {
                GroebnerBasis Gh = groebner_basis_of(hring, hgens, MonomialOrder(hord),
                                                     opts_.gb);
                bool divided = false;
                std::vector<Polynomial> next;
                for (const auto& g : Gh.elements()) {
                    int v = g.total_degree() + 1;
                    for (const auto& t : g.terms()) v = std::min(v, t.mono.e[hidx]);
                    if (v > 0) {
                        divided = true;
                        std::vector<Term> ts = g.terms();
                        for (auto& t : ts) t.mono.e[hidx] -= v;
                        next.push_back(Polynomial(hring, std::move(ts)));
                    } else {
                        next.push_back(g);
                    }
                }
                hgens = std::move(next);
                if (!divided) break;
            }
            trace("projective saturation", t0);
            t0 = std::chrono::steady_clock::now();

            // Part at infinity, then its projection chart by chart.
            RingPtr xyring = gring;
            std::vector<Polynomial> inf_gens;
            for (const auto& g : hgens)
                inf_gens.push_back(substitute(g, {{h0, Polynomial::zero(xyring)}}, xyring));
            Ideal Jinf(xyring, std::move(inf_gens));

            bool dims_ok = true;
            for (std::size_t j = 0; j < m; ++j) {
                std::vector<std::string> cvars;
                for (std::size_t i = 0; i < xyring->size(); ++i)
                    if (i != j) cvars.push_back(xyring->vars[i]);
                RingPtr cring = make_ring(cvars);
                std::vector<Polynomial> cgens;
                for (const auto& g : Jinf.gens)
                    cgens.push_back(substitute(
                        g, {{xring->vars[j], Polynomial::constant(cring, Rational(1))}}, cring));
                std::set<std::string> cxset;
                for (std::size_t i = 0; i < m; ++i)
                    if (i != j) cxset.insert(xring->vars[i]);
                Ideal Rj = rename_ideal(eliminate(Ideal(cring, std::move(cgens)), cxset,
                                                  opts_.gb),
                                        phi_.target);
                GroebnerBasis GRj = groebner_basis_of(phi_.target, Rj.gens,
                                                      MonomialOrder::grevlex(), opts_.gb);
                if (GRj.contains_one()) continue;  // this chart contributes nothing
                int dR = Rj.is_zero_ideal() ? static_cast<int>(n) : dimension_of_basis(GRj);
                if (dR >= dY) {
                    dims_ok = false;
                    break;
                }
                boundary.push_back(std::move(Rj));
            }
            trace("boundary charts", t0);
            if (dims_ok) break;
        }

        // Y minus the boundary is inside the image by properness.
        ConstructibleSet Yset(phi_.target, {Piece::closed(JY)});
        ConstructibleSet Rset(phi_.target);
        for (const auto& Rj : boundary) Rset.add_piece(Piece::closed(Rj));
        ConstructibleSet result = set_difference(Yset, Rset, opts_.gb);

        // Recurse on the full preimage of each boundary component.
        for (const auto& Rj : boundary) {
            std::vector<Polynomial> rec_gens = I.gens;
            for (const auto& r : Rj.gens) {
                std::map<std::string, Polynomial> pullback;
                for (std::size_t j = 0; j < n; ++j)
                    pullback.emplace(phi_.target->vars[j], comps[j]);
                rec_gens.push_back(substitute(r, pullback, xring));
            }
            result = set_union(result,
                               image_affine(xring, Ideal(xring, rec_gens), comps, dY));
        }
        return result;
    }
};

}  // namespace detail

// Exact image over the algebraic closure, as a finite union of locally
// closed pieces in the target.
inline ConstructibleSet image_of_map(const PolynomialMap& phi, const EngineOptions& opts = {}) {
    detail::ImageEngine eng(phi, opts);
    return eng.run();
}

}  // namespace surj

#endif
