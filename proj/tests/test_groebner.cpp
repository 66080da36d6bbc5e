#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "surj/ideal.hpp"

using namespace surj;

namespace {

Polynomial rnd_poly(const RingPtr& ring, std::mt19937_64& rng, int max_terms = 4,
                    int max_deg = 2, int coeff_range = 5) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> expo(0, max_deg);
    std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
    std::vector<Term> ts;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m(ring->size());
        for (std::size_t i = 0; i < ring->size(); ++i) m.e[i] = expo(rng);
        ts.push_back({std::move(m), Rational(coeff(rng))});
    }
    return Polynomial(ring, std::move(ts));
}

bool basis_has(const GroebnerBasis& G, const Polynomial& p) {
    for (const auto& g : G.elements())
        if (g == p) return true;
    return false;
}

// Re-check the Buchberger criterion and auto-reduction on a returned basis.
void check_reduced_basis(const GroebnerBasis& G) {
    const auto& W = G.working();
    for (std::size_t i = 0; i < W.size(); ++i) {
        REQUIRE(W[i].lc() == 1);
        for (std::size_t j = i + 1; j < W.size(); ++j) {
            auto s = detail::s_polynomial(W[i], W[j], G.order());
            auto r = detail::reduce_full(std::move(s), W, G.order());
            REQUIRE(r.zero());
            REQUIRE(!divides(W[i].lm(), W[j].lm()));
            REQUIRE(!divides(W[j].lm(), W[i].lm()));
        }
        // tails reduced: no non-leading monomial divisible by another lm
        for (std::size_t k = 1; k < W[i].t.size(); ++k)
            for (std::size_t j = 0; j < W.size(); ++j)
                REQUIRE(!divides(W[j].lm(), W[i].t[k].mono));
    }
}

}  // namespace

TEST_CASE("groebner basis goldens") {
    auto R = make_ring({"x", "y"});
    SECTION("coordinate ideal under lex") {
        auto G = groebner_basis(make_ideal(R, {"x", "y"}), MonomialOrder::lex());
        REQUIRE(G.elements().size() == 2);
        REQUIRE(basis_has(G, parse_polynomial("x", R)));
        REQUIRE(basis_has(G, parse_polynomial("y", R)));
    }
    SECTION("circle and diagonal eliminate x") {
        auto G = groebner_basis(make_ideal(R, {"x^2 + y^2 - 1", "x - y"}), MonomialOrder::lex());
        REQUIRE(basis_has(G, parse_polynomial("y^2 - 1/2", R)));  // monic form of 2y^2-1
        check_reduced_basis(G);
    }
    SECTION("principal ideal 1+xy") {
        auto G = groebner_basis(make_ideal(R, {"1 + x*y"}), MonomialOrder::lex());
        REQUIRE(G.elements().size() == 1);
        REQUIRE(basis_has(G, parse_polynomial("x*y + 1", R)));
        REQUIRE(!G.contains_one());
    }
    SECTION("unit ideal") {
        auto G = groebner_basis(make_ideal(R, {"x", "x - 1"}), MonomialOrder::grevlex());
        REQUIRE(G.contains_one());
    }
}

TEST_CASE("normal form") {
    auto R = make_ring({"x", "y"});
    auto G = groebner_basis(make_ideal(R, {"x", "y"}), MonomialOrder::lex());
    REQUIRE(normal_form(parse_polynomial("x", R), G).is_zero());
    REQUIRE(normal_form(parse_polynomial("1", R), G) == Polynomial::constant(R, Rational(1)));

    // idempotence and cofactor accounting on random instances
    std::mt19937_64 rng(5);
    for (int round = 0; round < 15; ++round) {
        std::vector<Polynomial> gens = {rnd_poly(R, rng), rnd_poly(R, rng)};
        auto Gb = groebner_basis_of(R, gens, MonomialOrder::grevlex());
        auto p = rnd_poly(R, rng, 5, 3);
        auto r = normal_form(p, Gb);
        REQUIRE(normal_form(r, Gb) == r);
        auto div = divide(p, Gb.elements(), MonomialOrder::grevlex());
        REQUIRE(div.remainder == r);
        Polynomial acc = div.remainder;
        for (std::size_t i = 0; i < Gb.elements().size(); ++i)
            acc = acc + div.quotients[i] * Gb.elements()[i];
        REQUIRE(acc == p);
        REQUIRE((normal_form(p, Gb).is_zero() == ideal_contains(Gb, p)));
    }
}

TEST_CASE("buchberger criterion holds on random bases") {
    std::mt19937_64 rng(17);
    auto R = make_ring({"x", "y", "z"});
    for (int round = 0; round < 10; ++round) {
        std::vector<Polynomial> gens = {rnd_poly(R, rng), rnd_poly(R, rng), rnd_poly(R, rng)};
        auto G = groebner_basis_of(R, gens, MonomialOrder::grevlex());
        if (G.contains_one()) continue;
        check_reduced_basis(G);
        for (const auto& g : gens) REQUIRE(normal_form(g, G).is_zero());
    }
}

TEST_CASE("elimination") {
    SECTION("parabola dominates the line") {
        auto R = make_ring({"x", "y"});
        auto E = eliminate(make_ideal(R, {"y - x^2"}), {"x"});
        REQUIRE(E.is_zero_ideal());
        // independent oracle: fibers over y = -1, 0, 1 are nonempty over the closure
        for (int y0 : {-1, 0, 1}) {
            auto Rx = make_ring({"x"});
            auto fiber = make_ideal(Rx, {"x^2 - (" + std::to_string(y0) + ")"});
            auto G = groebner_basis(fiber, MonomialOrder::lex());
            REQUIRE(!G.contains_one());
        }
    }
    SECTION("hyperbola dominates") {
        auto R = make_ring({"x", "y"});
        REQUIRE(eliminate(make_ideal(R, {"x*y - 1"}), {"x"}).is_zero_ideal());
    }
    SECTION("block order golden") {
        auto R = make_ring({"x", "y"});
        auto E = eliminate(make_ideal(R, {"x^2 + y^2 - 1", "x - y"}), {"x"});
        REQUIRE(E.gens.size() == 1);
        REQUIRE(E.gens[0] == parse_polynomial("y^2 - 1/2", E.ring));
    }
    SECTION("eliminate respects points") {
        std::mt19937_64 rng(23);
        auto R = make_ring({"t", "a", "b"});
        for (int round = 0; round < 10; ++round) {
            auto Rt = make_ring({"t"});
            auto f1 = rnd_poly(Rt, rng, 3, 3);
            auto f2 = rnd_poly(Rt, rng, 3, 3);
            Ideal I(R, {Polynomial::variable(R, "a") - map_to_ring(f1, R),
                        Polynomial::variable(R, "b") - map_to_ring(f2, R)});
            auto E = eliminate(I, {"t"});
            std::uniform_int_distribution<int> samp(-4, 4);
            Rational t0(samp(rng));
            Point img = {f1.evaluate({t0}), f2.evaluate({t0})};
            for (const auto& g : E.gens) REQUIRE(g.evaluate(img) == 0);
        }
    }
}

TEST_CASE("saturation") {
    auto R = make_ring({"x", "y"});
    SECTION("xy by x gives y") {
        auto S = saturate(make_ideal(R, {"x*y"}), parse_polynomial("x", R));
        REQUIRE(ideal_equal(S, make_ideal(R, {"y"})));
    }
    SECTION("x^2, xy by x gives the unit ideal") {
        auto S = saturate(make_ideal(R, {"x^2", "x*y"}), parse_polynomial("x", R));
        REQUIRE(groebner_basis(S, MonomialOrder::grevlex()).contains_one());
    }
    SECTION("saturation by a unit is the identity") {
        auto I = make_ideal(R, {"x^2 - y"});
        auto S = saturate(I, Polynomial::constant(R, Rational(1)));
        REQUIRE(ideal_equal(S, I));
    }
    SECTION("idempotent") {
        std::mt19937_64 rng(31);
        for (int round = 0; round < 8; ++round) {
            auto I = Ideal(R, {rnd_poly(R, rng), rnd_poly(R, rng)});
            auto g = rnd_poly(R, rng, 2, 2);
            if (g.is_zero()) continue;
            auto S1 = saturate(I, g);
            auto S2 = saturate(S1, g);
            REQUIRE(ideal_equal(S1, S2));
        }
    }
}

TEST_CASE("radical membership") {
    auto R = make_ring({"x", "y"});
    REQUIRE(radical_membership(parse_polynomial("x", R), make_ideal(R, {"x^2"})));
    REQUIRE(!radical_membership(parse_polynomial("1", R), make_ideal(R, {"x"})));
    REQUIRE(radical_membership(parse_polynomial("x^2 + y^2", R), make_ideal(R, {"x", "y"})));
}

TEST_CASE("dimension") {
    auto R = make_ring({"x", "y"});
    REQUIRE(dimension(Ideal(R, {})) == 2);
    REQUIRE(dimension(make_ideal(R, {"x"})) == 1);
    REQUIRE(dimension(make_ideal(R, {"1"})) == -1);
    SECTION("monotone under adding generators") {
        std::mt19937_64 rng(37);
        auto R3 = make_ring({"x", "y", "z"});
        for (int round = 0; round < 8; ++round) {
            auto a = rnd_poly(R3, rng);
            auto b = rnd_poly(R3, rng);
            int d1 = dimension(Ideal(R3, {a}));
            int d2 = dimension(Ideal(R3, {a, b}));
            REQUIRE(d2 <= d1);
        }
    }
}

TEST_CASE("minimal primes of squarefree monomial ideals") {
    SECTION("xy splits into the two axes") {
        auto R = make_ring({"x", "y"});
        auto mp = monomial_minimal_primes(make_ideal(R, {"x*y"}));
        REQUIRE(mp == std::vector<std::vector<int>>{{0}, {1}});
    }
    SECTION("irrelevant ideal of the projective plane") {
        auto R = make_ring({"x", "y", "z"});
        auto mp = monomial_minimal_primes(make_ideal(R, {"x", "y", "z"}));
        REQUIRE(mp == std::vector<std::vector<int>>{{0, 1, 2}});
    }
    SECTION("product of two lines") {
        auto R = make_ring({"x1", "x2", "x3", "x4"});
        auto mp = monomial_minimal_primes(
            make_ideal(R, {"x2*x4", "x2*x3", "x1*x4", "x1*x3"}));
        REQUIRE(mp == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    }
    SECTION("rejects non-squarefree input") {
        auto R = make_ring({"x", "y"});
        REQUIRE_THROWS_AS(monomial_minimal_primes(make_ideal(R, {"x^2"})), error);
        REQUIRE_THROWS_AS(monomial_minimal_primes(make_ideal(R, {"x + y"})), error);
    }
}

TEST_CASE("resource caps fail loudly") {
    auto R = make_ring({"x", "y", "z"});
    GroebnerOptions tight;
    tight.max_pairs = 1;
    REQUIRE_THROWS_AS(
        groebner_basis(make_ideal(R, {"x^2 + y*z - 1", "y^2 + x*z - 1", "z^2 + x*y - 1"}),
                       MonomialOrder::grevlex(), tight),
        resource_limit);
}

TEST_CASE("determinism") {
    auto R = make_ring({"x", "y", "z"});
    auto I = make_ideal(R, {"x^2 + y*z - 1", "y^2 + x*z - 1", "z^2 + x*y - 1"});
    auto G1 = groebner_basis(I, MonomialOrder::grevlex());
    auto G2 = groebner_basis(I, MonomialOrder::grevlex());
    REQUIRE(G1.elements().size() == G2.elements().size());
    for (std::size_t i = 0; i < G1.elements().size(); ++i)
        REQUIRE(G1.elements()[i] == G2.elements()[i]);
}
