#ifndef SURJ_FAN_HPP
#define SURJ_FAN_HPP

#include <numeric>
#include <string>
#include <vector>

#include "surj/snf.hpp"

namespace surj {

// Simplicial fan data: lattice rank, primitive rays, maximal cones as
// 0-based ray index sets.
struct Fan {
    int rank = 0;
    std::vector<std::vector<long>> rays;
    std::vector<std::vector<int>> max_cones;
};

struct FanReport {
    bool valid = true;
    std::vector<std::string> violations;

    void flag(std::string msg) {
        valid = false;
        violations.push_back(std::move(msg));
    }
};

inline FanReport validate_fan(const Fan& F) {
    FanReport rep;
    if (F.rank < 1) rep.flag("lattice rank must be at least 1");
    for (std::size_t i = 0; i < F.rays.size(); ++i) {
        const auto& v = F.rays[i];
        if (static_cast<int>(v.size()) != F.rank) {
            rep.flag("ray " + std::to_string(i) + " has wrong length");
            continue;
        }
        long g = 0;
        for (long x : v) g = std::gcd(g, x < 0 ? -x : x);
        if (g == 0)
            rep.flag("ray " + std::to_string(i) + " is zero");
        else if (g != 1)
            rep.flag("ray " + std::to_string(i) + " is not primitive");
        for (std::size_t j = i + 1; j < F.rays.size(); ++j)
            if (F.rays[j] == v) rep.flag("rays " + std::to_string(i) + " and " +
                                         std::to_string(j) + " coincide");
    }
    std::vector<char> covered(F.rays.size(), 0);
    for (std::size_t c = 0; c < F.max_cones.size(); ++c) {
        const auto& cone = F.max_cones[c];
        bool ok = true;
        for (int idx : cone) {
            if (idx < 0 || idx >= static_cast<int>(F.rays.size())) {
                rep.flag("cone " + std::to_string(c) + " has an out-of-range ray index");
                ok = false;
            }
        }
        if (!ok) continue;
        for (std::size_t a = 0; a < cone.size(); ++a)
            for (std::size_t b = a + 1; b < cone.size(); ++b)
                if (cone[a] == cone[b]) {
                    rep.flag("cone " + std::to_string(c) + " repeats a ray index");
                    ok = false;
                }
        if (!ok) continue;
        for (int idx : cone) covered[idx] = 1;
        if (!rep.valid) continue;  // ray-level defects make the rank test moot
        std::vector<std::vector<long>> sub;
        for (int idx : cone) sub.push_back(F.rays[idx]);
        if (!sub.empty() && integer_rank(IntMatrix::from_rows(sub)) != sub.size())
            rep.flag("cone " + std::to_string(c) + " is not simplicial");
    }
    for (std::size_t i = 0; i < F.rays.size(); ++i)
        if (!covered[i]) rep.flag("ray " + std::to_string(i) + " lies in no maximal cone");
    return rep;
}

inline void require_valid_fan(const Fan& F) {
    FanReport rep = validate_fan(F);
    if (!rep.valid) {
        std::string msg = "invalid fan:";
        for (const auto& v : rep.violations) msg += " " + v + ";";
        throw error(msg);
    }
}

// The variety splits off a torus factor (equivalently carries a non-constant
// invertible regular function) exactly when the rays fail to span Q^n.
inline bool is_degenerate(const Fan& F) {
    require_valid_fan(F);
    if (F.rays.empty()) return F.rank > 0;
    return integer_rank(IntMatrix::from_rows(F.rays)) < static_cast<std::size_t>(F.rank);
}

}  // namespace surj

#endif
