#include "sing/standard_basis.hpp"

#include "engine.hpp"
#include "sing/errors.hpp"

namespace sing {

using detail::EPoly;
using detail::ModOrder;

namespace {

ModOrder ring_order(const MonomialOrder& ord) { return ModOrder{ord, 0}; }

std::vector<EPoly> to_eps(const std::vector<Polynomial>& G, const ModOrder& mo) {
    std::vector<EPoly> eps;
    eps.reserve(G.size());
    for (const auto& g : G) eps.push_back(detail::ep_from_poly(g, 0, mo));
    return eps;
}

}  // namespace

Polynomial weak_normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                            const MonomialOrder& ord) {
    if (f.nvars() != ord.nvars) throw DimensionMismatch("polynomial arity does not match order");
    for (const auto& g : G)
        if (g.nvars() != ord.nvars)
            throw DimensionMismatch("generator arity does not match order");
    ModOrder mo = ring_order(ord);
    EPoly r = detail::nf_full(detail::ep_from_poly(f, 0, mo), to_eps(G, mo), mo);
    return detail::ep_to_poly(r, ord.nvars);
}

StandardBasis std_basis(const std::vector<Polynomial>& gens, const MonomialOrder& ord) {
    ModOrder mo = ring_order(ord);
    std::vector<EPoly> basis = detail::std_basis_engine(to_eps(gens, mo), mo, /*rank_one=*/true);
    StandardBasis sb{{}, ord, ord.is_global()};
    sb.gens.reserve(basis.size());
    for (const auto& g : basis) sb.gens.push_back(detail::ep_to_poly(g, ord.nvars));
    return sb;
}

bool is_member(const Polynomial& f, const StandardBasis& I) {
    if (f.is_zero()) return true;
    ModOrder mo = ring_order(I.ord);
    EPoly r = detail::weak_nf_head(detail::ep_from_poly(f, 0, mo), to_eps(I.gens, mo), mo);
    return r.is_zero();
}

LeadingIdeal leading_ideal(const StandardBasis& I) {
    ModOrder mo = ring_order(I.ord);
    detail::MonModule M = detail::leading_module(to_eps(I.gens, mo), 1);
    return LeadingIdeal{I.ord.nvars, M.comp_gens[0]};
}

Length colength(const LeadingIdeal& L) { return detail::colength_box(L.monomials, L.nvars); }

}  // namespace sing
