#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "surj/builders.hpp"

using namespace surj;

namespace {

ConstructibleSet plane_minus_origin(const RingPtr& R) {
    ConstructibleSet S(R);
    S.add_piece(Piece(Ideal(R, {}), Polynomial::variable(R, 0)));
    S.add_piece(Piece(Ideal(R, {Polynomial::variable(R, 0)}), Polynomial::variable(R, 1)));
    return S;
}

GaWord flag_word() {
    auto R = make_ring({"x", "y"});
    GaWord W;
    W.derivations.push_back(make_lnd(R, {"0", "x"}));  // x d/dy
    W.derivations.push_back(make_lnd(R, {"y", "0"}));  // y d/dx
    W.derivations.push_back(make_lnd(R, {"0", "x"}));
    W.base_point = {Rational(1), Rational(0)};
    return W;
}

QMatrix rnd_sl(int n, std::mt19937_64& rng, int letters = 5) {
    std::uniform_int_distribution<int> pos(1, n);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    SlFactorization F;
    F.word.n = n;
    for (int k = 0; k < letters; ++k) {
        int i = pos(rng), j = pos(rng);
        if (i == j) continue;
        F.word.letters.emplace_back(i, j);
        F.parameters.push_back(make_rational(num(rng), den(rng)));
    }
    return multiply_elementary(F);
}

}  // namespace

TEST_CASE("example maps") {
    auto e2 = example_map("example2");
    REQUIRE(e2.evaluate({Rational(0), Rational(0)}) == Point{Rational(1), Rational(0)});
    REQUIRE(!fiber_membership_oracle(e2, {Rational(0), Rational(0)}));

    auto e1 = example_map("example1");
    REQUIRE(e1.evaluate({Rational(0)}) == Point{Rational(1), Rational(0)});
    REQUIRE_THROWS_AS(example_map("example3"), error);
}

TEST_CASE("product maps") {
    SECTION("values split componentwise") {
        auto e2 = example_map("example2");
        auto prod = product_map(e2, e2);
        REQUIRE(prod.source->size() == 4);
        REQUIRE(prod.target->size() == 4);
        Point p = {Rational(1), Rational(2), Rational(-1), Rational(3)};
        Point lhs = prod.evaluate(p);
        Point f1 = e2.evaluate({p[0], p[1]});
        Point f2 = e2.evaluate({p[2], p[3]});
        REQUIRE(lhs == Point{f1[0], f1[1], f2[0], f2[1]});
    }
    SECTION("identity times identity is the identity") {
        auto id = make_map({"x"}, {"x"});
        auto prod = product_map(id, id);
        auto img = image_of_map(prod);
        REQUIRE(is_subset(ConstructibleSet::full_space(prod.target), img));
    }
    SECTION("cylinder over a constant factor") {
        auto sq = make_map({"x"}, {"x^2"});
        auto cst = make_map({"s"}, {"3"});
        auto prod = product_map(sq, cst);
        auto img = image_of_map(prod);
        // image is the line b = 3
        ConstructibleSet hand(prod.target);
        hand.add_piece(Piece::closed(Ideal(
            prod.target, {Polynomial::variable(prod.target, 1) -
                          Polynomial::constant(prod.target, Rational(3))})));
        REQUIRE(is_subset(img, hand));
        REQUIRE(is_subset(hand, img));
    }
}

TEST_CASE("composition") {
    auto e2 = example_map("example2");
    SECTION("projection picks a component") {
        auto proj = make_map({"a", "b"}, {"a"});
        auto comp = compose_map(proj, e2);
        REQUIRE(comp.components[0] == parse_polynomial("1 + x*y", e2.source));
    }
    SECTION("identity laws") {
        auto idt = make_map({"a", "b"}, {"a", "b"});
        auto comp = compose_map(idt, e2);
        REQUIRE(comp.components[0] == e2.components[0]);
        REQUIRE(comp.components[1] == e2.components[1]);
    }
    SECTION("matrix word composed with the first-column projection") {
        ElementaryWord W;
        W.n = 2;
        W.letters = {{2, 1}, {1, 2}, {2, 1}};
        auto word_map = elementary_word_map(W);
        auto proj = make_map(matrix_entry_names(2), {"m1_1", "m2_1"});
        auto orbit = compose_map(proj, word_map);
        auto ga = ga_word_map(flag_word());
        REQUIRE(orbit.components[0] == ga.components[0]);
        REQUIRE(orbit.components[1] == ga.components[1]);
    }
}

TEST_CASE("exponentials of derivations") {
    auto R = make_ring({"x", "y"});
    SECTION("shear") {
        auto D = make_lnd(R, {"y", "0"});
        auto E = exp_lnd(D, "t");
        REQUIRE(E[0] == parse_polynomial("x + t*y", E[0].ring()));
        REQUIRE(E[1] == parse_polynomial("y", E[1].ring()));
    }
    SECTION("translation") {
        auto D = make_lnd(R, {"1", "0"});
        auto E = exp_lnd(D, "t");
        REQUIRE(E[0] == parse_polynomial("x + t", E[0].ring()));
    }
    SECTION("non-nilpotent input is rejected at construction") {
        REQUIRE_THROWS_AS(make_lnd(R, {"x", "0"}), not_locally_nilpotent);
    }
    SECTION("group law exp(sD) exp(tD) = exp((s+t)D)") {
        std::mt19937_64 rng(91);
        std::uniform_int_distribution<int> c(-3, 3);
        for (int round = 0; round < 10; ++round) {
            // triangular derivation: D(x) = f(y), D(y) = const
            auto y = Polynomial::variable(R, "y");
            Polynomial f = Polynomial::constant(R, Rational(c(rng))) +
                           Rational(c(rng)) * y + Rational(c(rng)) * (y * y);
            auto D = Lnd(R, {f, Polynomial::constant(R, Rational(c(rng)))});
            auto Es = exp_lnd(D, "s");
            auto Et = exp_lnd(D, "t");
            auto Eu = exp_lnd(D, "u");
            auto big = make_ring({"x", "y", "s", "t"});
            std::map<std::string, Polynomial> inner;
            inner.emplace("x", map_to_ring(Et[0], big));
            inner.emplace("y", map_to_ring(Et[1], big));
            std::map<std::string, Polynomial> sum_sub;
            sum_sub.emplace("u", parse_polynomial("s + t", big));
            for (std::size_t i = 0; i < 2; ++i) {
                Polynomial lhs = substitute(map_to_ring(Es[i], make_ring({"x", "y", "s"})),
                                            inner, big);
                Polynomial rhs = substitute(Eu[i], sum_sub, big);
                REQUIRE(lhs == rhs);
            }
        }
    }
}

TEST_CASE("ga word maps") {
    SECTION("golden composite") {
        auto phi = ga_word_map(flag_word());
        REQUIRE(phi.components[0] == parse_polynomial("1 + t2*t3", phi.source));
        REQUIRE(phi.components[1] ==
                parse_polynomial("t3 + t1*(1 + t2*t3)", phi.source));
    }
    SECTION("word at zero returns the base point") {
        auto phi = ga_word_map(flag_word());
        REQUIRE(phi.evaluate({Rational(0), Rational(0), Rational(0)}) ==
                Point{Rational(1), Rational(0)});
    }
    SECTION("image is the punctured plane") {
        auto phi = ga_word_map(flag_word());
        auto img = image_of_map(phi);
        auto hand = plane_minus_origin(phi.target);
        REQUIRE(is_subset(img, hand));
        REQUIRE(is_subset(hand, img));
        REQUIRE(!fiber_membership_oracle(phi, {Rational(0), Rational(0)}));
        REQUIRE(fiber_membership_oracle(phi, {Rational(0), Rational(2)}));
    }
}

TEST_CASE("elementary word maps") {
    SECTION("single letter") {
        ElementaryWord W{2, {{1, 2}}};
        auto phi = elementary_word_map(W);
        REQUIRE(phi.evaluate({Rational(5)}) ==
                Point{Rational(1), Rational(5), Rational(0), Rational(1)});
    }
    SECTION("three letter rotation") {
        ElementaryWord W{2, {{1, 2}, {2, 1}, {1, 2}}};
        auto phi = elementary_word_map(W);
        REQUIRE(phi.evaluate({Rational(1), Rational(-1), Rational(1)}) ==
                Point{Rational(0), Rational(1), Rational(-1), Rational(0)});
    }
    SECTION("empty word is the constant identity") {
        ElementaryWord W{2, {}};
        auto phi = elementary_word_map(W);
        REQUIRE(phi.evaluate({Rational(7)}) ==
                Point{Rational(1), Rational(0), Rational(0), Rational(1)});
    }
    SECTION("determinant is identically one") {
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<int> nsize(2, 3);
        std::uniform_int_distribution<int> len(0, 5);
        std::uniform_int_distribution<int> pos(1, 3);
        for (int round = 0; round < 10; ++round) {
            ElementaryWord W;
            W.n = nsize(rng);
            int L = len(rng);
            for (int k = 0; k < L; ++k) {
                int i = 1 + pos(rng) % W.n, j = 1 + pos(rng) % W.n;
                if (i == j) continue;
                W.letters.emplace_back(i, j);
            }
            auto phi = elementary_word_map(W);
            auto d = elementary_word_det(W, phi);
            REQUIRE(d == Polynomial::constant(phi.source, Rational(1)));
        }
    }
}

TEST_CASE("factorization into transvections") {
    SECTION("identity factors as the empty word") {
        QMatrix I = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
        auto F = sl_factorize(I, 2);
        REQUIRE(F.word.letters.empty());
    }
    SECTION("quarter turn golden") {
        QMatrix A = {{Rational(0), Rational(1)}, {Rational(-1), Rational(0)}};
        auto F = sl_factorize(A, 2);
        REQUIRE(F.word.letters ==
                std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {1, 2}});
        REQUIRE(F.parameters == std::vector<Rational>{Rational(1), Rational(-1), Rational(1)});
        REQUIRE(multiply_elementary(F) == A);
    }
    SECTION("random SL2 matrices round trip within four letters") {
        std::mt19937_64 rng(23);
        for (int round = 0; round < 50; ++round) {
            QMatrix A = rnd_sl(2, rng);
            auto F = sl_factorize(A, 2);
            REQUIRE(F.word.letters.size() <= 4);
            REQUIRE(multiply_elementary(F) == A);
        }
    }
    SECTION("random SL3 matrices round trip") {
        std::mt19937_64 rng(29);
        for (int round = 0; round < 20; ++round) {
            QMatrix A = rnd_sl(3, rng, 7);
            auto F = sl_factorize(A, 3);
            REQUIRE(multiply_elementary(F) == A);
        }
    }
    SECTION("rejects determinant other than one") {
        QMatrix A = {{Rational(2), Rational(0)}, {Rational(0), Rational(1)}};
        REQUIRE_THROWS_AS(sl_factorize(A, 2), error);
    }
}

TEST_CASE("curves through points") {
    SECTION("diagonal") {
        auto phi = curve_through_points({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}});
        REQUIRE(phi.components[0] == parse_polynomial("t", phi.source));
        REQUIRE(phi.components[1] == parse_polynomial("t", phi.source));
    }
    SECTION("single point gives a constant map") {
        auto phi = curve_through_points({{Rational(4), Rational(-2)}});
        REQUIRE(phi.evaluate({Rational(17)}) == Point{Rational(4), Rational(-2)});
    }
    SECTION("three point golden") {
        auto phi = curve_through_points(
            {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
        REQUIRE(phi.components[0] == parse_polynomial("t*(2 - t)", phi.source));
        REQUIRE(phi.components[1] == parse_polynomial("t*(t - 1)*1/2", phi.source));
    }
    SECTION("hits every node exactly") {
        std::mt19937_64 rng(31);
        std::uniform_int_distribution<int> c(-6, 6);
        for (int round = 0; round < 10; ++round) {
            std::vector<Point> pts;
            for (int i = 0; i < 4; ++i) pts.push_back({Rational(c(rng)), Rational(c(rng)), Rational(c(rng))});
            bool dup = false;
            for (std::size_t i = 0; i < pts.size() && !dup; ++i)
                for (std::size_t j = i + 1; j < pts.size(); ++j)
                    if (pts[i] == pts[j]) dup = true;
            if (dup) continue;
            auto phi = curve_through_points(pts);
            for (std::size_t i = 0; i < pts.size(); ++i)
                REQUIRE(phi.evaluate({Rational(static_cast<long>(i))}) == pts[i]);
        }
    }
    SECTION("duplicate points rejected") {
        REQUIRE_THROWS_AS(
            curve_through_points({{Rational(1)}, {Rational(1)}}), error);
    }
}

TEST_CASE("the chart-covered surface") {
    SECTION("chart identities are zero polynomials") {
        for (int k = 1; k <= 3; ++k) {
            auto S = acovered_surface(k);
            const Polynomial& f = S.surface.gens[0];
            for (const auto* chart : {&S.chart_plus, &S.chart_minus}) {
                std::map<std::string, Polynomial> assign;
                for (std::size_t i = 0; i < 3; ++i)
                    assign.emplace(S.ambient->vars[i], chart->components[i]);
                REQUIRE(substitute(f, assign, chart->source).is_zero());
            }
        }
    }
    SECTION("the u = 0 line covers the far divisor and misses the near one") {
        auto S = acovered_surface(1);
        Point p = S.chart_plus.evaluate({Rational(0), Rational(1)});
        REQUIRE(p == Point{Rational(-1), Rational(0), Rational(-2)});
        for (const auto& g : S.divisor_minus.gens) REQUIRE(g.evaluate(p) == 0);
        bool on_plus = true;
        for (const auto& g : S.divisor_plus.gens)
            if (g.evaluate(p) != 0) on_plus = false;
        REQUIRE(!on_plus);
    }
    SECTION("chart image is the surface minus its divisor, k = 1") {
        auto S = acovered_surface(1);
        auto img = image_of_map(S.chart_plus);
        ConstructibleSet hand(S.ambient);
        hand.add_piece(Piece(S.surface, parse_polynomial("x1 - 1", S.ambient)));
        hand.add_piece(Piece(S.surface, parse_polynomial("x2", S.ambient)));
        REQUIRE(is_subset(img, hand));
        REQUIRE(is_subset(hand, img));
        REQUIRE(is_empty(set_intersect(
            img, ConstructibleSet(S.ambient, {Piece::closed(S.divisor_plus)}))));
    }
    SECTION("divisors are disjoint") {
        auto S = acovered_surface(2);
        std::vector<Polynomial> gens = S.divisor_plus.gens;
        gens.insert(gens.end(), S.divisor_minus.gens.begin(), S.divisor_minus.gens.end());
        auto G = groebner_basis_of(S.ambient, gens, MonomialOrder::grevlex());
        REQUIRE(G.contains_one());
    }
    SECTION("k below one is rejected") {
        REQUIRE_THROWS_AS(acovered_surface(0), error);
    }
}

TEST_CASE("surjection certification") {
    auto e2 = example_map("example2");
    auto target = plane_minus_origin(e2.target);
    SECTION("the flagship assertion") {
        auto res = certify_surjection(e2, target);
        REQUIRE(res.verdict == SurjectivityVerdict::surjective);
    }
    SECTION("identity map leaks outside the punctured plane") {
        auto idt = make_map({"x", "y"}, {"x", "y"});
        auto res = certify_surjection(idt, plane_minus_origin(idt.target));
        REQUIRE(res.verdict == SurjectivityVerdict::not_into_target);
        REQUIRE(res.witness == Point{Rational(0), Rational(0)});
    }
    SECTION("ga word map certifies too") {
        auto phi = ga_word_map(flag_word());
        auto res = certify_surjection(phi, plane_minus_origin(phi.target));
        REQUIRE(res.verdict == SurjectivityVerdict::surjective);
    }
    SECTION("a proper closed image is reported with a witness") {
        auto par = make_map({"x"}, {"x", "x^2"});
        auto res = certify_surjection(par, ConstructibleSet::full_space(par.target));
        REQUIRE(res.verdict == SurjectivityVerdict::not_surjective);
        REQUIRE(res.witness.has_value());
    }
}
