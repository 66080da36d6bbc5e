#ifndef SURJ_RING_HPP
#define SURJ_RING_HPP

#include <algorithm>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "surj/rational.hpp"

namespace surj {

// A ring context is just the ordered list of variable names. Polynomials
// carry a shared pointer to theirs; two contexts are interchangeable when
// the name lists agree.
struct Ring {
    std::vector<std::string> vars;

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }
    std::size_t size() const { return vars.size(); }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars) {
    std::unordered_set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw error("empty variable name");
        if (!seen.insert(v).second) throw error("duplicate variable name: " + v);
    }
    auto r = std::make_shared<Ring>();
    r->vars = std::move(vars);
    return r;
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && a->vars == b->vars);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw ring_mismatch("ring mismatch");
}

// A name not present in the ring, derived from `base` by suffixing an index.
inline std::string fresh_var(const Ring& ring, const std::string& base) {
    if (ring.index_of(base) < 0) return base;
    for (int i = 0;; ++i) {
        std::string cand = base + std::to_string(i);
        if (ring.index_of(cand) < 0) return cand;
    }
}

}  // namespace surj

#endif
