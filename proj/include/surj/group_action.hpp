#ifndef SURJ_GROUP_ACTION_HPP
#define SURJ_GROUP_ACTION_HPP

#include <vector>

#include "surj/image.hpp"

namespace surj {

// Diagonalizable group acting on A^r by characters: s free K^x parameters
// with integer weights, plus cyclic factors of order d_j >= 2.
struct GroupAction {
    int coordinates = 0;                           // r
    std::vector<std::vector<long>> free_weights;   // [parameter][coordinate]
    struct Torsion {
        long order;                  // d_j >= 2
        std::vector<long> weights;   // per coordinate
    };
    std::vector<Torsion> torsion;

    void validate() const {
        for (const auto& w : free_weights)
            if (static_cast<int>(w.size()) != coordinates)
                throw error("group action: free weight row length mismatch");
        for (const auto& t : torsion) {
            if (t.order < 2) throw error("group action: torsion order must be >= 2");
            if (static_cast<int>(t.weights.size()) != coordinates)
                throw error("group action: torsion weight row length mismatch");
        }
    }
};

// Orbit saturation H.S: the image of (x, l, l', z) -> (x_i * prod l^w * z^w)
// over {l_k l'_k = 1, z_j^{d_j} = 1} x S. Contains S and is idempotent.
inline ConstructibleSet group_saturation(const ConstructibleSet& S, const GroupAction& A,
                                         const EngineOptions& opts = {}) {
    A.validate();
    const RingPtr& ambient = S.ring();
    if (static_cast<int>(ambient->size()) != A.coordinates)
        throw error("group saturation: ambient arity mismatch");
    const std::size_t r = ambient->size();
    const std::size_t s = A.free_weights.size();
    const std::size_t q = A.torsion.size();

    std::vector<std::string> svars = ambient->vars;
    Ring probe;
    probe.vars = svars;
    std::vector<std::string> lnames, linames, znames;
    for (std::size_t k = 0; k < s; ++k) {
        lnames.push_back(fresh_var(probe, "_l" + std::to_string(k)));
        probe.vars.push_back(lnames.back());
        linames.push_back(fresh_var(probe, "_li" + std::to_string(k)));
        probe.vars.push_back(linames.back());
    }
    for (std::size_t j = 0; j < q; ++j) {
        znames.push_back(fresh_var(probe, "_z" + std::to_string(j)));
        probe.vars.push_back(znames.back());
    }
    RingPtr src = make_ring(probe.vars);

    std::vector<Polynomial> torus_rels;
    for (std::size_t k = 0; k < s; ++k)
        torus_rels.push_back(Polynomial::variable(src, r + 2 * k) *
                                 Polynomial::variable(src, r + 2 * k + 1) -
                             Polynomial::constant(src, Rational(1)));
    for (std::size_t j = 0; j < q; ++j)
        torus_rels.push_back(
            Polynomial::variable(src, r + 2 * s + j).pow(static_cast<int>(A.torsion[j].order)) -
            Polynomial::constant(src, Rational(1)));

    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < r; ++i) {
        Polynomial f = Polynomial::variable(src, i);
        for (std::size_t k = 0; k < s; ++k) {
            long w = A.free_weights[k][i];
            if (w > 0)
                f = f * Polynomial::variable(src, r + 2 * k).pow(static_cast<int>(w));
            else if (w < 0)
                f = f * Polynomial::variable(src, r + 2 * k + 1).pow(static_cast<int>(-w));
        }
        for (std::size_t j = 0; j < q; ++j) {
            long w = A.torsion[j].weights[i] % A.torsion[j].order;
            if (w < 0) w += A.torsion[j].order;
            if (w > 0)
                f = f * Polynomial::variable(src, r + 2 * s + j).pow(static_cast<int>(w));
        }
        comps.push_back(std::move(f));
    }

    ConstructibleSet domain(src);
    for (const auto& piece : S.pieces()) {
        std::vector<Polynomial> gens;
        for (const auto& g : piece.equations.gens) gens.push_back(map_to_ring(g, src));
        gens.insert(gens.end(), torus_rels.begin(), torus_rels.end());
        domain.add_piece(Piece(Ideal(src, std::move(gens)), map_to_ring(piece.inequation, src)));
    }

    PolynomialMap orbit_map(src, ambient, std::move(comps), std::move(domain));
    return image_of_map(orbit_map, opts);
}

}  // namespace surj

#endif
