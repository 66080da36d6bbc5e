#ifndef SURJ_POLYMAP_HPP
#define SURJ_POLYMAP_HPP

#include <vector>

#include "surj/constructible.hpp"

namespace surj {

// A polynomial map A^m -> A^n, optionally restricted to a constructible
// source domain (default: all of A^m).
struct PolynomialMap {
    RingPtr source;
    RingPtr target;
    std::vector<Polynomial> components;  // live in the source ring
    ConstructibleSet domain;

    PolynomialMap(RingPtr src, RingPtr tgt, std::vector<Polynomial> comps)
        : source(std::move(src)),
          target(std::move(tgt)),
          components(std::move(comps)),
          domain(ConstructibleSet::full_space(source)) {
        validate();
    }
    PolynomialMap(RingPtr src, RingPtr tgt, std::vector<Polynomial> comps, ConstructibleSet dom)
        : source(std::move(src)),
          target(std::move(tgt)),
          components(std::move(comps)),
          domain(std::move(dom)) {
        validate();
        require_same_ring(domain.ring(), source);
    }

    std::size_t source_dim() const { return source->size(); }
    std::size_t target_dim() const { return target->size(); }

    Point evaluate(const Point& p) const {
        if (p.size() != source->size()) throw error("point length mismatch");
        Point out;
        for (const auto& f : components) out.push_back(f.evaluate(p));
        return out;
    }

   private:
    void validate() const {
        if (components.empty()) throw error("polynomial map needs at least one component");
        if (components.size() != target->size())
            throw error("component count does not match target ring");
        for (const auto& f : components) require_same_ring(f.ring(), source);
    }
};

inline PolynomialMap make_map(const std::vector<std::string>& source_vars,
                              const std::vector<std::string>& component_texts,
                              const std::vector<std::string>& target_vars = {}) {
    RingPtr src = make_ring(source_vars);
    std::vector<std::string> tv = target_vars;
    if (tv.empty())
        for (std::size_t i = 0; i < component_texts.size(); ++i)
            tv.push_back("y" + std::to_string(i + 1));
    RingPtr tgt = make_ring(tv);
    std::vector<Polynomial> comps;
    for (const auto& t : component_texts) comps.push_back(parse_polynomial(t, src));
    return PolynomialMap(std::move(src), std::move(tgt), std::move(comps));
}

}  // namespace surj

#endif
