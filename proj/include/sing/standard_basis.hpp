#pragma once

#include <vector>

#include "sing/length.hpp"
#include "sing/polynomial.hpp"

namespace sing {

/// A standard basis of an ideal under a global or local order. Every
/// S-polynomial of basis pairs has weak normal form 0; generators are
/// monic; no leading monomial divides another. Under a global order the
/// basis is additionally tail-interreduced (the reduced Groebner basis).
struct StandardBasis {
    std::vector<Polynomial> gens;
    MonomialOrder ord;
    bool reduced = false;

    int nvars() const { return ord.nvars; }
};

/// Minimal monomial generators of the ideal of leading monomials.
struct LeadingIdeal {
    int nvars = 0;
    std::vector<Monomial> monomials;  // no generator divides another
};

/// Mora weak normal form (plain division when ord is global): returns r
/// with u*f = sum q_i*g_i + r for a unit u of the ring determined by ord
/// (u = 1 when ord is global), r fully reduced (no term of r divisible by
/// a leading monomial of G). r = 0 exactly when f lies in the ideal
/// generated by G whenever G is a standard basis.
Polynomial weak_normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                            const MonomialOrder& ord);

/// Buchberger/Mora completion with the normal pair-selection strategy
/// (minimal lcm under ord, ties by index) and the chain and product
/// criteria. Deterministic for fixed input.
StandardBasis std_basis(const std::vector<Polynomial>& gens, const MonomialOrder& ord);

/// Ideal membership in the ring determined by I.ord.
bool is_member(const Polynomial& f, const StandardBasis& I);

LeadingIdeal leading_ideal(const StandardBasis& I);

/// Number of monomials not divisible by any generator of L; INFINITE
/// exactly when some variable has no pure power in L.
Length colength(const LeadingIdeal& L);

}  // namespace sing
