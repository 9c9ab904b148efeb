#pragma once

// Shared reduction engine: Mora weak normal form, Buchberger/Mora
// completion and syzygy extraction over free modules, for both global and
// local orders. Library-internal.

#include <vector>

#include "sing/length.hpp"
#include "sing/monomial.hpp"
#include "sing/polynomial.hpp"

namespace sing::detail {

struct ETerm {
    Monomial mon;
    int comp;
    Rat c;
};

/// Term-over-position extension of a ring order, position (lower index)
/// as final tie-break. Components below `elim` dominate all others; the
/// elimination block carries the generators during syzygy extraction.
///
/// When `homog` is set, monomials carry one extra trailing exponent (the
/// homogenizing variable) and the ring comparison becomes the t-graded
/// well-order of Lazard's method: full total degree first, then the local
/// comparison on the x-part. Local completions run under this order.
struct ModOrder {
    MonomialOrder ring;
    int elim = 0;
    bool homog = false;

    /// true when plain division (no Mora stash) terminates
    bool division_ready() const { return homog || ring.is_global(); }

    int ring_cmp(const Monomial& a, const Monomial& b) const {
        if (!homog) return ring.compare(a, b);
        int da = a.degree(), db = b.degree();
        if (da != db) return da > db ? 1 : -1;
        const int n = ring.nvars;  // x-part arity; exponent n is t
        int xa = da - a.e[n], xb = db - b.e[n];
        if (xa != xb) return xa < xb ? 1 : -1;  // local: lower x-degree wins
        for (int i = n - 1; i >= 0; --i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        return 0;
    }

    int cmp(const Monomial& am, int ac, const Monomial& bm, int bc) const {
        if (elim > 0) {
            bool ae = ac < elim, be = bc < elim;
            if (ae != be) return ae ? 1 : -1;
        }
        int c = ring_cmp(am, bm);
        if (c != 0) return c;
        if (ac != bc) return ac < bc ? 1 : -1;
        return 0;
    }
    int cmp(const ETerm& a, const ETerm& b) const { return cmp(a.mon, a.comp, b.mon, b.comp); }
};

/// Terms sorted strictly descending under the active ModOrder.
struct EPoly {
    std::vector<ETerm> t;

    bool is_zero() const { return t.empty(); }
    const ETerm& lt() const { return t.front(); }
};

/// ecart = max total degree of the tail minus degree of the leading
/// monomial; drives Mora's reducer choice. Only terms in the leading
/// term's elimination block count: during syzygy extraction the tracking
/// block must not distort the ring-level reduction, or Mora's stash rule
/// stops firing and local reduction no longer terminates.
int ecart(const EPoly& p, const ModOrder& mo);

EPoly ep_normalize(std::vector<ETerm> terms, const ModOrder& mo);
EPoly ep_from_poly(const Polynomial& f, int comp, const ModOrder& mo);
EPoly ep_from_columns(const std::vector<Polynomial>& coords, const ModOrder& mo);
Polynomial ep_to_poly(const EPoly& p, int nvars);
std::vector<Polynomial> ep_to_columns(const EPoly& p, int rank, int nvars);
EPoly ep_monic(EPoly p);
/// a + c * x^m * b
EPoly ep_add_scaled(const EPoly& a, const Rat& c, const Monomial& m, const EPoly& b,
                    const ModOrder& mo);

/// Mora weak normal form (plain division for global ring orders): reduces
/// until the leading term is not divisible by any LM(G). Terminates for
/// arbitrary orders; guarded by a strict leading-term-decrease assertion.
EPoly weak_nf_head(const EPoly& f, const std::vector<EPoly>& G, const ModOrder& mo);

/// Fully reduced weak normal form: every term of the result is standard
/// for the leading module of G.
EPoly nf_full(const EPoly& f, const std::vector<EPoly>& G, const ModOrder& mo);

/// Completion to a monic, leading-term-minimalized standard basis.
/// Pair selection: minimal lcm under the order, ties by index; chain
/// pruning always, product criterion in the rank-one case. Tails are
/// interreduced when the ring order is global. Deterministic.
std::vector<EPoly> std_basis_engine(std::vector<EPoly> gens, const ModOrder& mo,
                                    bool rank_one = false);

/// First syzygies of gens (elements of R^rank), expressed on the original
/// generator list; columns are EPolys over components 0..gens.size()-1.
std::vector<EPoly> syzygies_engine(const std::vector<EPoly>& gens, int rank,
                                   const MonomialOrder& ring);

/// Minimal monomial generators of a monomial submodule, per component.
struct MonModule {
    std::vector<std::vector<Monomial>> comp_gens;

    bool contains(const Monomial& m, int comp) const {
        for (const auto& g : comp_gens[comp])
            if (g.divides(m)) return true;
        return false;
    }
};

MonModule leading_module(const std::vector<EPoly>& G, int rank);

/// Standard-monomial count of a monomial ideal: INFINITE iff some
/// variable has no pure power among the generators.
Length colength_box(const std::vector<Monomial>& lead, int nvars);

/// True iff the cone mu*Mon(x) eventually lies in the monomial ideal
/// generated by Bi in every coordinate direction.
bool cone_finite(const Monomial& mu, const std::vector<Monomial>& Bi, int nvars);

/// |L(A) \ L(B)| for monomial modules B inside A; throws NotFiniteLength
/// when infinite.
Length quotient_count(const MonModule& A, const MonModule& B, int nvars);

}  // namespace sing::detail
