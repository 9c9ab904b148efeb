#pragma once

#include <optional>
#include <vector>

#include "sing/standard_basis.hpp"

namespace sing {

/// An ideal with its generator list and an eagerly cached standard basis
/// under a chosen order. Values are immutable after construction; all
/// operations are pure, so Ideal values may be shared across threads.
class Ideal {
public:
    Ideal(std::vector<Polynomial> gens, const MonomialOrder& ord);

    const std::vector<Polynomial>& gens() const { return gens_; }
    const MonomialOrder& ord() const { return ord_; }
    const StandardBasis& basis() const { return basis_; }
    int nvars() const { return ord_.nvars; }

    bool contains(const Polynomial& f) const;
    bool is_unit_ideal() const;
    bool is_zero_ideal() const;

private:
    std::vector<Polynomial> gens_;
    MonomialOrder ord_;
    StandardBasis basis_;
};

inline constexpr unsigned kDefaultPowerCap = 8;

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
/// k-fold product of generators; throws PowerCapExceeded when k > cap.
Ideal ideal_power(const Ideal& I, unsigned k, unsigned cap = kDefaultPowerCap);

/// I : f = { g : g*f in I } over the ring determined by I's order,
/// computed from the first coordinates of the syzygies of (f, gens(I)).
Ideal colon_element(const Ideal& I, const Polynomial& f);

/// I : J, the intersection over generators g of J of (I : g).
Ideal colon_ideal(const Ideal& I, const Ideal& J);

Ideal ideal_intersect(const Ideal& I, const Ideal& J);

bool ideal_contains(const Ideal& I, const Ideal& J);  // J subset of I
bool ideal_equal(const Ideal& I, const Ideal& J);

/// lambda(R/I) over the localization at the origin (requires a local
/// order); INFINITE when I is not m-primary.
Length local_colength(const Ideal& I);

}  // namespace sing
