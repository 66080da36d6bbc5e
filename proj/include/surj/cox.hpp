#ifndef SURJ_COX_HPP
#define SURJ_COX_HPP

#include <optional>
#include <string>
#include <vector>

#include "surj/fan.hpp"
#include "surj/group_action.hpp"

namespace surj {

struct degenerate_fan_error : error {
    degenerate_fan_error()
        : error("fan is degenerate (the variety carries a non-constant invertible regular "
                "function); it has no quotient presentation of this form") {}
};

struct image_meets_irrelevant_locus : error {
    std::optional<Point> witness;
    explicit image_meets_irrelevant_locus(std::optional<Point> w)
        : error("the map's image meets the irrelevant locus, so it does not descend to the "
                "quotient" +
                (w ? std::string(" (witness ") + to_string(*w) + ")" : std::string())),
          witness(std::move(w)) {}
};

// Quotient presentation of a non-degenerate simplicial toric variety:
// grading of the Cox variables by the divisor class group, irrelevant ideal,
// removed coordinate planes, and the induced quasi-torus action.
struct CoxData {
    int ray_count = 0;                  // one Cox variable per ray
    int free_rank = 0;                  // s in Cl = Z^s + sum Z/d_j
    std::vector<long> torsion_orders;   // the d_j, each >= 2

    struct Degree {
        std::vector<long> free;     // length = free_rank
        std::vector<long> torsion;  // residues, length = torsion count
    };
    std::vector<Degree> degrees;  // per Cox variable

    RingPtr cox_ring;                          // x1..xr
    Ideal irrelevant;                          // one monomial per maximal cone
    std::vector<std::vector<int>> z_pieces;    // coordinate planes of Z (variable index sets)
    int codim_z = 0;                           // ray_count + 1 when Z is empty
    GroupAction action;
    bool geometric_quotient = false;  // simplicial fan: finite stabilizers off Z
};

inline CoxData cox_presentation(const Fan& F, const GroebnerOptions& opts = {}) {
    require_valid_fan(F);
    if (is_degenerate(F)) throw degenerate_fan_error();

    CoxData C;
    const std::size_t r = F.rays.size();
    const std::size_t n = static_cast<std::size_t>(F.rank);
    C.ray_count = static_cast<int>(r);

    // Class group = coker(Z^n -> Z^r), the character-to-divisor map whose
    // matrix has the rays as rows.
    IntMatrix P = IntMatrix::from_rows(F.rays);
    SmithNormalForm snf = smith_normal_form(P);
    const std::size_t rank = snf.rank();
    C.free_rank = static_cast<int>(r - rank);
    std::vector<std::size_t> torsion_rows;
    for (std::size_t j = 0; j < rank; ++j) {
        if (snf.d.at(j, j) > 1) {
            torsion_rows.push_back(j);
            if (!snf.d.at(j, j).fits_slong_p()) throw error("torsion order overflow");
            C.torsion_orders.push_back(snf.d.at(j, j).get_si());
        }
    }

    // Degree of x_i = class of e_i, read off through U; the free block is
    // put in Hermite form so the coordinates on Z^s are canonical.
    IntMatrix freeM(static_cast<std::size_t>(C.free_rank), r);
    for (std::size_t k = 0; k < static_cast<std::size_t>(C.free_rank); ++k)
        for (std::size_t i = 0; i < r; ++i) freeM.at(k, i) = snf.u.at(rank + k, i);
    freeM = hermite_rows(std::move(freeM));
    C.degrees.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < static_cast<std::size_t>(C.free_rank); ++k) {
            if (!freeM.at(k, i).fits_slong_p()) throw error("degree overflow");
            C.degrees[i].free.push_back(freeM.at(k, i).get_si());
        }
        for (std::size_t t = 0; t < torsion_rows.size(); ++t) {
            Integer d(C.torsion_orders[t]);
            Integer res;
            mpz_fdiv_r(res.get_mpz_t(), snf.u.at(torsion_rows[t], i).get_mpz_t(),
                       d.get_mpz_t());
            C.degrees[i].torsion.push_back(res.get_si());
        }
    }

    // Degree relation: sum_i <e_k, v_i> deg(x_i) = 0 in the class group.
    for (std::size_t k = 0; k < n; ++k) {
        for (int f = 0; f < C.free_rank; ++f) {
            long acc = 0;
            for (std::size_t i = 0; i < r; ++i) acc += F.rays[i][k] * C.degrees[i].free[f];
            if (acc != 0) throw error("internal: free degree relation violated");
        }
        for (std::size_t t = 0; t < C.torsion_orders.size(); ++t) {
            long acc = 0;
            for (std::size_t i = 0; i < r; ++i) acc += F.rays[i][k] * C.degrees[i].torsion[t];
            if (acc % C.torsion_orders[t] != 0)
                throw error("internal: torsion degree relation violated");
        }
    }

    std::vector<std::string> vars;
    for (std::size_t i = 0; i < r; ++i) vars.push_back("x" + std::to_string(i + 1));
    C.cox_ring = make_ring(vars);

    // Irrelevant ideal: per maximal cone, the product of the variables whose
    // rays lie outside the cone.
    std::vector<Polynomial> bgens;
    bool unit = false;
    for (const auto& cone : F.max_cones) {
        std::vector<char> in(r, 0);
        for (int idx : cone) in[idx] = 1;
        Monomial m(r);
        for (std::size_t i = 0; i < r; ++i)
            if (!in[i]) m.e[i] = 1;
        if (m.is_one()) unit = true;
        bgens.push_back(Polynomial(C.cox_ring, {{std::move(m), Rational(1)}}));
    }
    C.irrelevant = Ideal(C.cox_ring, bgens);
    if (unit) {
        C.z_pieces.clear();
        C.codim_z = static_cast<int>(r) + 1;  // nothing removed
    } else {
        C.z_pieces = monomial_minimal_primes(C.irrelevant);
        C.codim_z = static_cast<int>(r) + 1;
        for (const auto& p : C.z_pieces)
            C.codim_z = std::min(C.codim_z, static_cast<int>(p.size()));
    }
    // Singleton rays are cones of the fan, so no removed plane can be a
    // hyperplane.
    if (C.codim_z < 2) throw error("internal: irrelevant locus of codimension < 2");

    C.action.coordinates = static_cast<int>(r);
    for (int k = 0; k < C.free_rank; ++k) {
        std::vector<long> row(r);
        for (std::size_t i = 0; i < r; ++i) row[i] = C.degrees[i].free[k];
        C.action.free_weights.push_back(std::move(row));
    }
    for (std::size_t t = 0; t < C.torsion_orders.size(); ++t) {
        GroupAction::Torsion tor;
        tor.order = C.torsion_orders[t];
        tor.weights.resize(r);
        for (std::size_t i = 0; i < r; ++i) tor.weights[i] = C.degrees[i].torsion[t];
        C.action.torsion.push_back(std::move(tor));
    }
    C.geometric_quotient = true;  // fans here are simplicial by validation
    (void)opts;
    return C;
}

inline ConstructibleSet irrelevant_locus(const CoxData& C) {
    ConstructibleSet Z(C.cox_ring);
    for (const auto& piece : C.z_pieces) {
        std::vector<Polynomial> gens;
        for (int i : piece) gens.push_back(Polynomial::variable(C.cox_ring, i));
        Z.add_piece(Piece::closed(Ideal(C.cox_ring, std::move(gens))));
    }
    return Z;
}

enum class QuotientVerdict { certified, not_surjective, inconclusive };

struct QuotientCheckResult {
    QuotientVerdict verdict = QuotientVerdict::inconclusive;
    std::optional<Point> witness;   // class missed by the map, when rational
    ConstructibleSet image;         // computed image upstairs
    ConstructibleSet saturation;    // its orbit saturation
};

// Certifies that a map to the Cox chart space descends to a surjection onto
// the toric variety: the image must avoid the irrelevant locus, and its
// orbit saturation must cover everything outside it. "certified" is exact;
// a non-surjectivity witness is only issued for geometric quotients.
inline QuotientCheckResult quotient_surjectivity_check(const PolynomialMap& phi,
                                                       const CoxData& C,
                                                       const EngineOptions& opts = {}) {
    if (phi.target->size() != static_cast<std::size_t>(C.ray_count))
        throw error("map target arity does not match the Cox chart space");
    PolynomialMap lifted(phi.source, C.cox_ring, phi.components, phi.domain);

    ConstructibleSet S = image_of_map(lifted, opts);
    ConstructibleSet Z = irrelevant_locus(C);
    ConstructibleSet bad = set_intersect(S, Z, opts.gb);
    if (!is_empty(bad, opts.gb)) {
        auto witness = detail::search_point(
            C.cox_ring->size(), [&](const Point& p) { return membership(bad, p); }, opts);
        throw image_meets_irrelevant_locus(witness);
    }

    ConstructibleSet T = group_saturation(S, C.action, opts);
    ConstructibleSet U = set_difference(ConstructibleSet::full_space(C.cox_ring), Z, opts.gb);

    QuotientCheckResult res{QuotientVerdict::inconclusive, std::nullopt, S, T};
    if (is_subset(U, T, opts.gb)) {
        res.verdict = QuotientVerdict::certified;
        return res;
    }
    auto witness = detail::search_point(
        C.cox_ring->size(),
        [&](const Point& p) { return membership(U, p) && !membership(T, p); }, opts);
    if (witness && C.geometric_quotient) {
        res.verdict = QuotientVerdict::not_surjective;
        res.witness = witness;
        return res;
    }
    res.verdict = QuotientVerdict::inconclusive;
    return res;
}

}  // namespace surj

#endif
