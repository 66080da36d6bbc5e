#ifndef SURJ_LND_HPP
#define SURJ_LND_HPP

#include <string>
#include <vector>

#include "surj/polynomial.hpp"

namespace surj {

struct not_locally_nilpotent : error {
    using error::error;
};

// A derivation of the polynomial ring given by its values on the
// coordinates. Construction validates local nilpotency by iterating the
// derivation on every coordinate up to the cap.
class Lnd {
   public:
    Lnd(RingPtr ring, std::vector<Polynomial> images, int nilpotency_cap = 64)
        : ring_(std::move(ring)), images_(std::move(images)), cap_(nilpotency_cap) {
        if (images_.size() != ring_->size())
            throw error("derivation needs one value per coordinate");
        for (const auto& p : images_) require_same_ring(p.ring(), ring_);
        if (cap_ < 1) throw error("nilpotency cap must be positive");
        for (std::size_t i = 0; i < ring_->size(); ++i) {
            Polynomial p = Polynomial::variable(ring_, i);
            int steps = 0;
            while (!p.is_zero()) {
                if (++steps > cap_)
                    throw not_locally_nilpotent(
                        "derivation is not locally nilpotent within " + std::to_string(cap_) +
                        " steps on " + ring_->vars[i]);
                p = apply(p);
            }
        }
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& images() const { return images_; }

    Polynomial apply(const Polynomial& p) const {
        require_same_ring(p.ring(), ring_);
        Polynomial acc = Polynomial::zero(ring_);
        for (std::size_t i = 0; i < ring_->size(); ++i) {
            if (images_[i].is_zero()) continue;
            acc = acc + p.derivative(i) * images_[i];
        }
        return acc;
    }

   private:
    RingPtr ring_;
    std::vector<Polynomial> images_;
    int cap_;
};

// Convenience constructor from component texts ("0" for untouched
// coordinates).
inline Lnd make_lnd(const RingPtr& ring, const std::vector<std::string>& image_texts,
                    int cap = 64) {
    std::vector<Polynomial> images;
    for (const auto& t : image_texts) images.push_back(parse_polynomial(t, ring));
    return Lnd(ring, std::move(images), cap);
}

// Coordinates of the automorphism exp(t D): x_i -> sum_k t^k D^k(x_i) / k!,
// a finite sum by nilpotency. Lives in the ring extended by the parameter.
inline std::vector<Polynomial> exp_lnd(const Lnd& D, const std::string& param) {
    if (D.ring()->index_of(param) >= 0) throw error("parameter name collides: " + param);
    std::vector<std::string> vars = D.ring()->vars;
    vars.push_back(param);
    RingPtr ext = make_ring(vars);
    Polynomial t = Polynomial::variable(ext, ext->size() - 1);
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < D.ring()->size(); ++i) {
        Polynomial acc = Polynomial::zero(ext);
        Polynomial dk = Polynomial::variable(D.ring(), i);
        Rational factorial(1);
        Polynomial tk = Polynomial::constant(ext, Rational(1));
        for (int k = 0; !dk.is_zero(); ++k) {
            if (k > 0) {
                factorial *= k;
                tk = tk * t;
            }
            acc = acc + (Rational(1) / factorial) * (tk * map_to_ring(dk, ext));
            dk = D.apply(dk);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace surj

#endif
