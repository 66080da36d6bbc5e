#ifndef SURJ_BUILDERS_HPP
#define SURJ_BUILDERS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "surj/image.hpp"
#include "surj/lnd.hpp"

namespace surj {

// The two pilot surjections: A^1 onto the Cox chart of the line through
// x -> (1+x^2, x), and A^2 onto the punctured plane.
inline PolynomialMap example_map(const std::string& name) {
    if (name == "example1") return make_map({"x"}, {"1 + x^2", "x"});
    if (name == "example2") return make_map({"x", "y"}, {"1 + x*y", "x + y^2 + x*y^3"});
    throw error("unknown example map: " + name);
}

// phi1 x phi2 on disjoint copies of the source and target coordinates;
// colliding names get a numeric suffix.
inline PolynomialMap product_map(const PolynomialMap& phi1, const PolynomialMap& phi2) {
    Ring acc;
    auto take = [&](const std::string& name) {
        std::string fresh = fresh_var(acc, name);
        acc.vars.push_back(fresh);
        return fresh;
    };
    std::vector<std::string> svars;
    for (const auto& v : phi1.source->vars) svars.push_back(take(v));
    for (const auto& v : phi2.source->vars) svars.push_back(take(v));
    RingPtr src = make_ring(svars);

    acc.vars.clear();
    std::vector<std::string> tvars;
    for (const auto& v : phi1.target->vars) tvars.push_back(take(v));
    for (const auto& v : phi2.target->vars) tvars.push_back(take(v));
    RingPtr tgt = make_ring(tvars);

    const std::size_t m1 = phi1.source->size();
    auto lift = [&](const Polynomial& p, std::size_t offset) {
        std::vector<Term> ts;
        for (const auto& t : p.terms()) {
            Monomial m(src->size());
            for (std::size_t i = 0; i < t.mono.e.size(); ++i) m.e[offset + i] = t.mono.e[i];
            ts.push_back({std::move(m), t.coeff});
        }
        return Polynomial(src, std::move(ts));
    };
    std::vector<Polynomial> comps;
    for (const auto& f : phi1.components) comps.push_back(lift(f, 0));
    for (const auto& f : phi2.components) comps.push_back(lift(f, m1));

    ConstructibleSet dom(src);
    for (const auto& a : phi1.domain.pieces())
        for (const auto& b : phi2.domain.pieces()) {
            std::vector<Polynomial> gens;
            for (const auto& g : a.equations.gens) gens.push_back(lift(g, 0));
            for (const auto& g : b.equations.gens) gens.push_back(lift(g, m1));
            dom.add_piece(Piece(Ideal(src, std::move(gens)),
                                lift(a.inequation, 0) * lift(b.inequation, m1)));
        }
    return PolynomialMap(src, tgt, std::move(comps), std::move(dom));
}

// psi after phi by componentwise substitution; coordinates are matched by
// position, so the target of phi only needs the arity of psi's source.
// Whether image(phi) lands in psi's domain is certify_surjection's business.
inline PolynomialMap compose_map(const PolynomialMap& psi, const PolynomialMap& phi) {
    if (psi.source->size() != phi.target->size())
        throw ring_mismatch("compose: source/target arities differ");
    std::vector<Polynomial> comps;
    for (const auto& f : psi.components) {
        std::map<std::string, Polynomial> assign;
        for (std::size_t i = 0; i < psi.source->size(); ++i)
            assign.emplace(psi.source->vars[i], phi.components[i]);
        comps.push_back(substitute(f, assign, phi.source));
    }
    return PolynomialMap(phi.source, psi.target, std::move(comps), phi.domain);
}

// Word of one-parameter unipotent automorphisms applied to a base point.
struct GaWord {
    std::vector<Lnd> derivations;
    Point base_point;
};

// (t_1, ..., t_m) -> h_1 h_2 ... h_m . x with h_k = exp(t_k D_k) and h_m
// acting on the base point first. At t = 0 this returns the base point.
inline PolynomialMap ga_word_map(const GaWord& W, const std::string& param_prefix = "t") {
    if (W.derivations.empty()) throw error("empty word");
    const RingPtr& xring = W.derivations[0].ring();
    for (const auto& D : W.derivations) require_same_ring(D.ring(), xring);
    if (W.base_point.size() != xring->size()) throw error("base point length mismatch");
    const std::size_t m = W.derivations.size();
    std::vector<std::string> tvars;
    for (std::size_t k = 0; k < m; ++k)
        tvars.push_back(param_prefix + std::to_string(k + 1));
    RingPtr tring = make_ring(tvars);

    std::vector<Polynomial> current;
    for (const auto& c : W.base_point) current.push_back(Polynomial::constant(tring, c));
    std::string s = fresh_var(*xring, "_s");
    for (std::size_t k = m; k-- > 0;) {
        std::vector<Polynomial> exps = exp_lnd(W.derivations[k], s);
        std::map<std::string, Polynomial> assign;
        for (std::size_t i = 0; i < xring->size(); ++i)
            assign.emplace(xring->vars[i], current[i]);
        assign.emplace(s, Polynomial::variable(tring, k));
        std::vector<Polynomial> next;
        for (const auto& e : exps) next.push_back(substitute(e, assign, tring));
        current = std::move(next);
    }
    return PolynomialMap(tring, xring, std::move(current));
}

// Word in elementary transvection positions; parameters multiply
// E_{i,j}(t_k) left to right.
struct ElementaryWord {
    int n = 0;
    std::vector<std::pair<int, int>> letters;  // 1-based (row, col), row != col

    void validate() const {
        if (n < 2) throw error("elementary word: matrix size must be at least 2");
        for (const auto& [i, j] : letters) {
            if (i < 1 || j < 1 || i > n || j > n) throw error("elementary word: position range");
            if (i == j) throw error("elementary word: diagonal position");
        }
    }
};

namespace detail {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

inline PolyMatrix poly_identity(const RingPtr& ring, int n) {
    PolyMatrix M(n, std::vector<Polynomial>(n, Polynomial::zero(ring)));
    for (int i = 0; i < n; ++i) M[i][i] = Polynomial::constant(ring, Rational(1));
    return M;
}

inline PolyMatrix poly_mul(const PolyMatrix& A, const PolyMatrix& B) {
    const std::size_t n = A.size();
    PolyMatrix C(n, std::vector<Polynomial>(n, Polynomial::zero(A[0][0].ring())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (A[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) C[i][j] = C[i][j] + A[i][k] * B[k][j];
        }
    return C;
}

inline Polynomial poly_det(const PolyMatrix& M) {
    const std::size_t n = M.size();
    if (n == 1) return M[0][0];
    Polynomial acc = Polynomial::zero(M[0][0].ring());
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
        PolyMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(M[i][k]);
            minor.push_back(std::move(row));
        }
        Polynomial term = M[0][j] * poly_det(minor);
        acc = sign > 0 ? acc + term : acc - term;
        sign = -sign;
    }
    return acc;
}

}  // namespace detail

// Matrix entry names for the induced map into A^{n^2}.
inline std::vector<std::string> matrix_entry_names(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            names.push_back("m" + std::to_string(i) + "_" + std::to_string(j));
    return names;
}

inline PolynomialMap elementary_word_map(const ElementaryWord& W,
                                         const std::string& param_prefix = "t") {
    W.validate();
    std::vector<std::string> tvars;
    for (std::size_t k = 0; k < W.letters.size(); ++k)
        tvars.push_back(param_prefix + std::to_string(k + 1));
    if (tvars.empty()) tvars.push_back(param_prefix + "1");  // constant identity map
    RingPtr tring = make_ring(tvars);
    detail::PolyMatrix M = detail::poly_identity(tring, W.n);
    for (std::size_t k = 0; k < W.letters.size(); ++k) {
        detail::PolyMatrix E = detail::poly_identity(tring, W.n);
        E[W.letters[k].first - 1][W.letters[k].second - 1] = Polynomial::variable(tring, k);
        M = detail::poly_mul(M, E);
    }
    RingPtr tgt = make_ring(matrix_entry_names(W.n));
    std::vector<Polynomial> comps;
    for (int i = 0; i < W.n; ++i)
        for (int j = 0; j < W.n; ++j) comps.push_back(M[i][j]);
    return PolynomialMap(tring, tgt, std::move(comps));
}

// Determinant of the matrix of component polynomials of an elementary word
// map; identically 1 for every word.
inline Polynomial elementary_word_det(const ElementaryWord& W, const PolynomialMap& map) {
    detail::PolyMatrix M(W.n, std::vector<Polynomial>(W.n, Polynomial::zero(map.source)));
    for (int i = 0; i < W.n; ++i)
        for (int j = 0; j < W.n; ++j) M[i][j] = map.components[i * W.n + j];
    return detail::poly_det(M);
}

using QMatrix = std::vector<std::vector<Rational>>;

inline Rational rational_det(QMatrix M) {
    const std::size_t n = M.size();
    Rational d(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && M[piv][k] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != k) {
            std::swap(M[piv], M[k]);
            d = -d;
        }
        d *= M[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (M[i][k] == 0) continue;
            Rational f = M[i][k] / M[k][k];
            for (std::size_t j = k; j < n; ++j) M[i][j] -= f * M[k][j];
        }
    }
    return d;
}

struct SlFactorization {
    ElementaryWord word;
    std::vector<Rational> parameters;
};

inline QMatrix multiply_elementary(const SlFactorization& F) {
    QMatrix M(F.word.n, std::vector<Rational>(F.word.n, Rational(0)));
    for (int i = 0; i < F.word.n; ++i) M[i][i] = 1;
    for (std::size_t k = 0; k < F.word.letters.size(); ++k) {
        // right-multiply by E_{i,j}(t): column j += t * column i
        int i = F.word.letters[k].first - 1;
        int j = F.word.letters[k].second - 1;
        for (int row = 0; row < F.word.n; ++row) M[row][j] += F.parameters[k] * M[row][i];
    }
    return M;
}

// Exact factorization of a determinant-one matrix into elementary
// transvections. For n = 2 the word length is at most 4: three letters when
// the lower-left entry is nonzero, one extra preparatory letter otherwise.
inline SlFactorization sl_factorize(const QMatrix& A, int n) {
    if (static_cast<int>(A.size()) != n) throw error("sl_factorize: shape mismatch");
    for (const auto& row : A)
        if (static_cast<int>(row.size()) != n) throw error("sl_factorize: shape mismatch");
    if (rational_det(A) != 1) throw error("sl_factorize: determinant is not 1");

    SlFactorization F;
    F.word.n = n;
    auto push = [&](int i, int j, const Rational& t) {
        if (t == 0) return;
        F.word.letters.emplace_back(i, j);
        F.parameters.push_back(t);
    };

    if (n == 2) {
        const Rational &a = A[0][0], &d = A[1][1];
        const Rational& c = A[1][0];
        if (c != 0) {
            push(1, 2, (a - 1) / c);
            push(2, 1, c);
            push(1, 2, (d - 1) / c);
        } else if (a != 1) {
            // prepare a nonzero lower-left entry, then the three-letter form
            // A = E21(-1) * B with B = E21(1) * A
            Rational cb = a;  // B[1][0]
            Rational ab = a;
            Rational db = A[0][1] + d;
            push(2, 1, Rational(-1));
            push(1, 2, (ab - 1) / cb);
            push(2, 1, cb);
            push(1, 2, (db - 1) / cb);
        } else {
            // a = d = 1: a single upper triangular letter
            push(1, 2, A[0][1]);
        }
        return F;
    }

    // General case: row reduce to the identity with transvections on the
    // left, then invert the op list.
    QMatrix M = A;
    std::vector<std::pair<std::pair<int, int>, Rational>> ops;  // applied first to last
    auto row_op = [&](int dst, int src, const Rational& t) {
        if (t == 0) return;
        for (int j = 0; j < n; ++j) M[dst][j] += t * M[src][j];
        ops.push_back({{dst + 1, src + 1}, t});
    };
    for (int c = 0; c < n; ++c) {
        if (M[c][c] != 1) {
            int k = -1;
            for (int i = c + 1; i < n; ++i)
                if (M[i][c] != 0) {
                    k = i;
                    break;
                }
            if (k < 0 && c + 1 < n) {
                // manufacture a pivot helper below
                row_op(c + 1, c, Rational(1));
                k = c + 1;
            }
            if (k >= 0) row_op(c, k, (Rational(1) - M[c][c]) / M[k][c]);
        }
        if (M[c][c] != 1) throw error("sl_factorize: internal pivot failure");
        for (int i = 0; i < n; ++i) {
            if (i == c || M[i][c] == 0) continue;
            row_op(i, c, -M[i][c]);
        }
    }
    for (const auto& [pos, t] : ops) {
        F.word.letters.push_back(pos);
        F.parameters.push_back(-t);
    }
    return F;
}

// Lagrange interpolation through the given points at parameters 0, 1, ...,
// k-1; the resulting morphism from the line hits every input point.
inline PolynomialMap curve_through_points(const std::vector<Point>& points,
                                          const std::vector<std::string>& target_vars = {}) {
    if (points.empty()) throw error("curve: no points");
    const std::size_t n = points[0].size();
    for (const auto& p : points)
        if (p.size() != n) throw error("curve: points of mixed arity");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw error("curve: duplicate points");

    RingPtr src = make_ring({"t"});
    Polynomial t = Polynomial::variable(src, 0);
    std::vector<Polynomial> comps(n, Polynomial::zero(src));
    const std::size_t k = points.size();
    for (std::size_t i = 0; i < k; ++i) {
        Polynomial num = Polynomial::constant(src, Rational(1));
        Rational den(1);
        for (std::size_t l = 0; l < k; ++l) {
            if (l == i) continue;
            num = num * (t - Polynomial::constant(src, Rational(static_cast<long>(l))));
            den *= Rational(static_cast<long>(i)) - Rational(static_cast<long>(l));
        }
        Polynomial basis = (Rational(1) / den) * num;
        for (std::size_t c = 0; c < n; ++c)
            comps[c] = comps[c] + points[i][c] * basis;
    }
    std::vector<std::string> tv = target_vars;
    if (tv.empty())
        for (std::size_t c = 0; c < n; ++c) tv.push_back("y" + std::to_string(c + 1));
    return PolynomialMap(src, make_ring(tv), std::move(comps));
}

// The affine surface x1^2 - x2^k x3 - 1 = 0 with its two plane charts and
// the disjoint divisors they miss.
struct ACoveredSurface {
    int k = 1;
    RingPtr ambient;        // x1, x2, x3
    Ideal surface;          // the defining equation
    PolynomialMap chart_plus;
    PolynomialMap chart_minus;
    Ideal divisor_plus;     // x1 = 1,  x2 = 0
    Ideal divisor_minus;    // x1 = -1, x2 = 0
};

inline ACoveredSurface acovered_surface(int k) {
    if (k < 1) throw error("surface: k must be at least 1");
    RingPtr ambient = make_ring({"x1", "x2", "x3"});
    std::string kpow = "x2^" + std::to_string(k);
    Ideal surface = make_ideal(ambient, {"x1^2 - " + kpow + "*x3 - 1"});

    RingPtr chart = make_ring({"u", "v"});
    std::string uk = "u^" + std::to_string(k);
    auto mk_chart = [&](const std::string& sign1, const std::string& sign2) {
        std::vector<Polynomial> comps = {
            parse_polynomial(uk + "*v " + sign1 + " 1", chart),
            parse_polynomial("u", chart),
            parse_polynomial("(" + uk + "*v " + sign2 + " 2)*v", chart)};
        return PolynomialMap(chart, ambient, std::move(comps));
    };
    return ACoveredSurface{k,
                           ambient,
                           surface,
                           mk_chart("-", "-"),
                           mk_chart("+", "+"),
                           make_ideal(ambient, {"x1 - 1", "x2"}),
                           make_ideal(ambient, {"x1 + 1", "x2"})};
}

enum class SurjectivityVerdict { surjective, not_surjective, not_into_target };

struct CertifyResult {
    SurjectivityVerdict verdict;
    std::optional<Point> witness;      // rational witness when one was found
    std::optional<Piece> witness_piece;  // symbolic evidence otherwise
    ConstructibleSet image;
};

// One-call certifier: compute the image and compare against the target set
// by symbolic containment, extracting a rational witness when possible.
inline CertifyResult certify_surjection(const PolynomialMap& phi, const ConstructibleSet& target,
                                        const EngineOptions& opts = {}) {
    require_same_ring(phi.target, target.ring());
    ConstructibleSet S = image_of_map(phi, opts);

    auto witness_of = [&](const ConstructibleSet& D) {
        return detail::search_point(
            phi.target->size(), [&](const Point& p) { return membership(D, p); }, opts);
    };

    ConstructibleSet overflow = set_difference(S, target, opts.gb);
    if (!is_empty(overflow, opts.gb)) {
        CertifyResult res{SurjectivityVerdict::not_into_target, witness_of(overflow),
                          std::nullopt, S};
        if (!res.witness) res.witness_piece = overflow.pieces().front();
        return res;
    }
    ConstructibleSet missed = set_difference(target, S, opts.gb);
    if (is_empty(missed, opts.gb))
        return CertifyResult{SurjectivityVerdict::surjective, std::nullopt, std::nullopt, S};
    CertifyResult res{SurjectivityVerdict::not_surjective, witness_of(missed), std::nullopt, S};
    if (!res.witness) res.witness_piece = missed.pieces().front();
    return res;
}

}  // namespace surj

#endif
