#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "surj/cox.hpp"

using namespace surj;

namespace {

Fan p1_fan() { return Fan{1, {{1}, {-1}}, {{0}, {1}}}; }
Fan p2_fan() { return Fan{2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}}; }
Fan p1xp1_fan() {
    return Fan{2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}};
}
Fan weighted_121_fan() { return Fan{2, {{1, 0}, {0, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {0, 2}}}; }

void check_snf_invariants(const IntMatrix& A) {
    auto s = smith_normal_form(A);
    REQUIRE(s.u * A * s.v == s.d);
    Integer du = det(s.u), dv = det(s.v);
    REQUIRE((du == 1 || du == -1));
    REQUIRE((dv == 1 || dv == -1));
    auto diag = s.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        REQUIRE(diag[i] >= 0);
        if (diag[i] == 0)
            REQUIRE(diag[i + 1] == 0);
        else
            REQUIRE(diag[i + 1] % diag[i] == 0);
    }
    for (std::size_t i = 0; i < s.d.rows; ++i)
        for (std::size_t j = 0; j < s.d.cols; ++j)
            if (i != j) REQUIRE(s.d.at(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form goldens") {
    SECTION("identity") {
        auto s = smith_normal_form(IntMatrix::identity(2));
        REQUIRE(s.diagonal() == std::vector<Integer>{Integer(1), Integer(1)});
    }
    SECTION("diag(2,3) has chain diag(1,6)") {
        auto s = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}}));
        REQUIRE(s.diagonal() == std::vector<Integer>{Integer(1), Integer(6)});
        check_snf_invariants(IntMatrix::from_rows({{2, 0}, {0, 3}}));
    }
    SECTION("projective plane ray matrix has cokernel Z") {
        auto P = IntMatrix::from_rows({{1, 0}, {0, 1}, {-1, -1}});
        auto s = smith_normal_form(P);
        REQUIRE(s.rank() == 2);
        REQUIRE(s.diagonal() == std::vector<Integer>{Integer(1), Integer(1)});
        check_snf_invariants(P);
    }
}

TEST_CASE("snf invariants on random matrices") {
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<int> val(-9, 9);
    for (int round = 0; round < 25; ++round) {
        IntMatrix A(dim(rng), dim(rng));
        for (auto& x : A.a) x = val(rng);
        check_snf_invariants(A);
    }
}

TEST_CASE("fan validation") {
    REQUIRE(validate_fan(p1_fan()).valid);
    REQUIRE(validate_fan(p2_fan()).valid);
    REQUIRE(validate_fan(p1xp1_fan()).valid);

    SECTION("non-primitive ray") {
        Fan bad{2, {{2, 0}}, {{0}}};
        auto rep = validate_fan(bad);
        REQUIRE(!rep.valid);
    }
    SECTION("uncovered ray") {
        Fan bad{1, {{1}, {-1}}, {{0}}};
        REQUIRE(!validate_fan(bad).valid);
    }
    SECTION("non-simplicial cone") {
        Fan bad{2, {{1, 0}, {-1, 0}}, {{0, 1}}};
        REQUIRE(!validate_fan(bad).valid);
    }
    SECTION("duplicate ray") {
        Fan bad{1, {{1}, {1}}, {{0}, {1}}};
        REQUIRE(!validate_fan(bad).valid);
    }
}

TEST_CASE("degeneracy is rank deficiency of the rays") {
    Fan single{2, {{1, 0}}, {{0}}};
    REQUIRE(is_degenerate(single));
    REQUIRE(!is_degenerate(p1_fan()));
    REQUIRE(!is_degenerate(p2_fan()));
    REQUIRE(!is_degenerate(p1xp1_fan()));
    REQUIRE_THROWS_AS(cox_presentation(single), degenerate_fan_error);
}

TEST_CASE("cox presentation goldens") {
    SECTION("projective plane") {
        auto C = cox_presentation(p2_fan());
        REQUIRE(C.ray_count == 3);
        REQUIRE(C.free_rank == 1);
        REQUIRE(C.torsion_orders.empty());
        for (const auto& d : C.degrees) REQUIRE(d.free == std::vector<long>{1});
        REQUIRE(C.z_pieces == std::vector<std::vector<int>>{{0, 1, 2}});
        REQUIRE(C.codim_z == 3);
        REQUIRE(ideal_equal(C.irrelevant, make_ideal(C.cox_ring, {"x1", "x2", "x3"})));
    }
    SECTION("product of two lines") {
        auto C = cox_presentation(p1xp1_fan());
        REQUIRE(C.free_rank == 2);
        REQUIRE(C.torsion_orders.empty());
        REQUIRE(C.degrees[0].free == std::vector<long>{1, 0});
        REQUIRE(C.degrees[1].free == std::vector<long>{1, 0});
        REQUIRE(C.degrees[2].free == std::vector<long>{0, 1});
        REQUIRE(C.degrees[3].free == std::vector<long>{0, 1});
        REQUIRE(C.z_pieces == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
        REQUIRE(C.codim_z == 2);
    }
    SECTION("weighted plane with weights 1,2,1") {
        auto C = cox_presentation(weighted_121_fan());
        REQUIRE(C.free_rank == 1);
        REQUIRE(C.torsion_orders.empty());
        REQUIRE(C.degrees[0].free == std::vector<long>{1});
        REQUIRE(C.degrees[1].free == std::vector<long>{2});
        REQUIRE(C.degrees[2].free == std::vector<long>{1});
    }
    SECTION("projective line") {
        auto C = cox_presentation(p1_fan());
        REQUIRE(C.free_rank == 1);
        REQUIRE(C.degrees[0].free == std::vector<long>{1});
        REQUIRE(C.degrees[1].free == std::vector<long>{1});
        REQUIRE(C.codim_z == 2);
        REQUIRE(C.geometric_quotient);
    }
    SECTION("quadric cone quotient has torsion Z/2") {
        Fan quad{2, {{1, 1}, {1, -1}}, {{0, 1}}};
        auto C = cox_presentation(quad);
        REQUIRE(C.free_rank == 0);
        REQUIRE(C.torsion_orders == std::vector<long>{2});
        REQUIRE(C.degrees[0].torsion == std::vector<long>{1});
        REQUIRE(C.degrees[1].torsion == std::vector<long>{1});
        REQUIRE(C.z_pieces.empty());  // affine chart: nothing removed
    }
    SECTION("hirzebruch surface passes the internal degree relation") {
        Fan hirz{2, {{1, 0}, {0, 1}, {-1, 2}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
        auto C = cox_presentation(hirz);
        REQUIRE(C.free_rank == 2);
        REQUIRE(C.codim_z == 2);
    }
}

TEST_CASE("quotient surjectivity checks") {
    auto C = cox_presentation(p1_fan());
    SECTION("parabola parametrization covers the line") {
        auto phi = make_map({"x"}, {"1 + x^2", "x"});
        auto res = quotient_surjectivity_check(phi, C);
        REQUIRE(res.verdict == QuotientVerdict::certified);
    }
    SECTION("a constant first coordinate misses the far point") {
        auto phi = make_map({"x"}, {"1", "x"});
        auto res = quotient_surjectivity_check(phi, C);
        REQUIRE(res.verdict == QuotientVerdict::not_surjective);
        REQUIRE(res.witness.has_value());
        REQUIRE(*res.witness == Point{Rational(0), Rational(1)});
    }
    SECTION("image meeting the irrelevant locus is rejected") {
        auto phi = make_map({"x"}, {"x", "x"});
        REQUIRE_THROWS_AS(quotient_surjectivity_check(phi, C), image_meets_irrelevant_locus);
    }
    SECTION("target arity must match") {
        auto phi = make_map({"x"}, {"x"});
        REQUIRE_THROWS_AS(quotient_surjectivity_check(phi, C), error);
    }
}
