#include "engine.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <set>

#include "sing/errors.hpp"

namespace sing::detail {

namespace {
constexpr long kReductionGuard = 4000000;
constexpr std::size_t kCompletionGuard = 100000;
constexpr std::size_t kWalkGuard = 4000000;
}  // namespace

int ecart(const EPoly& p, const ModOrder& mo) {
    const ETerm& lead = p.lt();
    const bool lead_upper = mo.elim > 0 && lead.comp < mo.elim;
    int maxd = lead.mon.degree();
    for (const auto& tm : p.t) {
        if (mo.elim > 0 && (tm.comp < mo.elim) != lead_upper) continue;
        maxd = std::max(maxd, tm.mon.degree());
    }
    return maxd - lead.mon.degree();
}

EPoly ep_normalize(std::vector<ETerm> terms, const ModOrder& mo) {
    std::sort(terms.begin(), terms.end(),
              [&](const ETerm& a, const ETerm& b) { return mo.cmp(a, b) > 0; });
    EPoly p;
    p.t.reserve(terms.size());
    for (auto& tm : terms) {
        if (!p.t.empty() && p.t.back().comp == tm.comp && p.t.back().mon == tm.mon) {
            p.t.back().c += tm.c;
            if (p.t.back().c == 0) p.t.pop_back();
        } else if (tm.c != 0) {
            p.t.push_back(std::move(tm));
        }
    }
    return p;
}

EPoly ep_from_poly(const Polynomial& f, int comp, const ModOrder& mo) {
    std::vector<ETerm> ts;
    ts.reserve(f.term_count());
    for (const auto& [m, c] : f.terms()) ts.push_back({m, comp, c});
    return ep_normalize(std::move(ts), mo);
}

EPoly ep_from_columns(const std::vector<Polynomial>& coords, const ModOrder& mo) {
    std::vector<ETerm> ts;
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (const auto& [m, c] : coords[i].terms())
            ts.push_back({m, static_cast<int>(i), c});
    return ep_normalize(std::move(ts), mo);
}

Polynomial ep_to_poly(const EPoly& p, int nvars) {
    std::vector<Polynomial::Term> ts;
    ts.reserve(p.t.size());
    for (const auto& tm : p.t) ts.emplace_back(tm.mon, tm.c);
    return Polynomial::from_terms(nvars, std::move(ts));
}

std::vector<Polynomial> ep_to_columns(const EPoly& p, int rank, int nvars) {
    std::vector<std::vector<Polynomial::Term>> parts(rank);
    for (const auto& tm : p.t) parts[tm.comp].emplace_back(tm.mon, tm.c);
    std::vector<Polynomial> cols;
    cols.reserve(rank);
    for (int i = 0; i < rank; ++i) cols.push_back(Polynomial::from_terms(nvars, std::move(parts[i])));
    return cols;
}

EPoly ep_monic(EPoly p) {
    if (p.is_zero() || p.t.front().c == 1) return p;
    Rat inv = 1 / p.t.front().c;
    for (auto& tm : p.t) tm.c *= inv;
    return p;
}

EPoly ep_add_scaled(const EPoly& a, const Rat& c, const Monomial& m, const EPoly& b,
                    const ModOrder& mo) {
    EPoly out;
    out.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        ETerm bt{b.t[j].mon * m, b.t[j].comp, b.t[j].c * c};
        int cv = mo.cmp(a.t[i], bt);
        if (cv > 0) {
            out.t.push_back(a.t[i++]);
        } else if (cv < 0) {
            out.t.push_back(std::move(bt));
            ++j;
        } else {
            Rat s = a.t[i].c + bt.c;
            if (s != 0) out.t.push_back({a.t[i].mon, a.t[i].comp, std::move(s)});
            ++i;
            ++j;
        }
    }
    while (i < a.t.size()) out.t.push_back(a.t[i++]);
    while (j < b.t.size()) {
        out.t.push_back({b.t[j].mon * m, b.t[j].comp, b.t[j].c * c});
        ++j;
    }
    return out;
}

namespace {

bool lt_divides(const ETerm& g, const ETerm& h) {
    return g.comp == h.comp && g.mon.divides(h.mon);
}

// ca*a + cb*x^m*b
EPoly ep_combine(const EPoly& a, const Rat& ca, const EPoly& b, const Rat& cb,
                 const Monomial& m, const ModOrder& mo) {
    EPoly out;
    out.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        ETerm bt{b.t[j].mon * m, b.t[j].comp, b.t[j].c * cb};
        int cv = mo.cmp(a.t[i], bt);
        if (cv > 0) {
            out.t.push_back({a.t[i].mon, a.t[i].comp, a.t[i].c * ca});
            ++i;
        } else if (cv < 0) {
            out.t.push_back(std::move(bt));
            ++j;
        } else {
            Rat s = a.t[i].c * ca + bt.c;
            if (s != 0) out.t.push_back({a.t[i].mon, a.t[i].comp, std::move(s)});
            ++i;
            ++j;
        }
    }
    while (i < a.t.size()) {
        out.t.push_back({a.t[i].mon, a.t[i].comp, a.t[i].c * ca});
        ++i;
    }
    while (j < b.t.size()) {
        out.t.push_back({b.t[j].mon * m, b.t[j].comp, b.t[j].c * cb});
        ++j;
    }
    return out;
}

bool ep_equal(const EPoly& a, const EPoly& b) {
    if (a.t.size() != b.t.size()) return false;
    for (std::size_t i = 0; i < a.t.size(); ++i) {
        const ETerm &x = a.t[i], &y = b.t[i];
        if (x.comp != y.comp || x.mon != y.mon || x.c != y.c) return false;
    }
    return true;
}

// Rescale to coprime integer coefficients. Scaling by a nonzero constant
// is a unit and keeps every weak-normal-form property; it stops the
// coefficient blowup along Mora reduction chains.
void ep_make_primitive(EPoly& p) {
    if (p.is_zero()) return;
    mpz_class g(0), l(1);
    for (const auto& tm : p.t) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), tm.c.get_num().get_mpz_t());
        mpz_class d = tm.c.get_den();
        mpz_class gg;
        mpz_gcd(gg.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        l = l / gg * d;
    }
    if (g == 0) return;
    Rat s(l, g);
    s.canonicalize();
    if (s == 1) return;
    for (auto& tm : p.t) {
        tm.c *= s;
        tm.c.canonicalize();
    }
}

/// One reduction step cancelling the leading term. Exact mode divides by
/// the reducer's leading coefficient (the division algorithm, u = 1);
/// fraction-free mode cross-multiplies and renormalizes to primitive
/// integer coefficients, which keeps arithmetic from blowing up along
/// Mora chains.
EPoly reduce_step(const EPoly& h, const EPoly& g, const ModOrder& mo, bool exact) {
    const ETerm& lh = h.lt();
    const ETerm& lg = g.lt();
    Monomial q = lh.mon.divide(lg.mon);
    if (exact) {
        Rat c = -lh.c / lg.c;
        return ep_add_scaled(h, c, q, g, mo);
    }
    EPoly out = ep_combine(h, lg.c, g, -lh.c, q, mo);
    ep_make_primitive(out);
    return out;
}

}  // namespace

EPoly weak_nf_head_mode(const EPoly& f, const std::vector<EPoly>& G, const ModOrder& mo,
                        bool exact) {
    if (f.is_zero()) return f;
    EPoly h = f;
    const bool global = mo.division_ready();
    if (exact && !global) throw EngineError("exact reduction requires a division-ready order");
    std::vector<EPoly> stash;  // Mora's intermediate reducers (local only)
    long guard = 0;
    for (;;) {
        if (h.is_zero()) return h;
        if (++guard > kReductionGuard)
            throw EngineError("normal-form loop exceeded the iteration guard");
        bool found = false, from_stash = false;
        std::size_t red_idx = 0;
        if (global) {
            for (std::size_t i = 0; i < G.size(); ++i)
                if (!G[i].is_zero() && lt_divides(G[i].lt(), h.lt())) {
                    found = true;
                    red_idx = i;
                    break;
                }
        } else {
            int best_ecart = 0;
            for (std::size_t i = 0; i < G.size(); ++i)
                if (!G[i].is_zero() && lt_divides(G[i].lt(), h.lt())) {
                    int e = ecart(G[i], mo);
                    if (!found || e < best_ecart) {
                        found = true;
                        from_stash = false;
                        red_idx = i;
                        best_ecart = e;
                    }
                }
            for (std::size_t i = 0; i < stash.size(); ++i)
                if (lt_divides(stash[i].lt(), h.lt())) {
                    int e = ecart(stash[i], mo);
                    if (!found || e < best_ecart) {
                        found = true;
                        from_stash = true;
                        red_idx = i;
                        best_ecart = e;
                    }
                }
            if (found && best_ecart > ecart(h, mo)) stash.push_back(h);
        }
        if (!found) return h;
        const EPoly& red = from_stash ? stash[red_idx] : G[red_idx];
        EPoly next = reduce_step(h, red, mo, exact);
        // leading terms cancel exactly, so the lead strictly decreases
        if (!next.is_zero() && mo.cmp(next.lt(), h.lt()) >= 0)
            throw EngineError("reduction step failed to decrease the leading term");
        h = std::move(next);
    }
}

EPoly weak_nf_head(const EPoly& f, const std::vector<EPoly>& G, const ModOrder& mo) {
    return weak_nf_head_mode(f, G, mo, false);
}

EPoly nf_full_mode(const EPoly& f, const std::vector<EPoly>& G, const ModOrder& mo,
                   bool exact) {
    EPoly r;
    EPoly h = f;
    for (;;) {
        h = weak_nf_head_mode(h, G, mo, exact);
        if (h.is_zero()) break;
        r.t.push_back(h.t.front());
        h.t.erase(h.t.begin());
    }
    return r;  // stripped leads strictly decrease, so r is sorted
}

EPoly nf_full(const EPoly& f, const std::vector<EPoly>& G, const ModOrder& mo) {
    return nf_full_mode(f, G, mo, mo.ring.is_global());
}

namespace {

struct Pair {
    int i, j;
    Monomial lcm;
    int comp;
};

struct Completion {
    const ModOrder& mo;
    bool rank_one;
    std::vector<EPoly> G;
    std::vector<Pair> pending;

    explicit Completion(const ModOrder& m, bool r1) : mo(m), rank_one(r1) {}

    // Normal strategy: lowest lcm first (ascending total degree, ring
    // order as tie-break); completion only ever runs under division-ready
    // orders, where this is "minimal lcm under the order".
    std::size_t pick() const {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k) {
            const Pair &a = pending[k], &b = pending[best];
            int da = a.lcm.degree(), db = b.lcm.degree();
            if (da != db) {
                if (da < db) best = k;
                continue;
            }
            int c = mo.ring_cmp(a.lcm, b.lcm);
            if (c > 0) continue;
            if (c < 0 || a.comp < b.comp ||
                (a.comp == b.comp && (a.i < b.i || (a.i == b.i && a.j < b.j))))
                best = k;
        }
        return best;
    }

    void add_pairs_for(int t) {
        const ETerm& lt = G[t].lt();
        // chain pruning: drop pending pairs whose lcm is strictly
        // absorbed by the new leading term
        std::vector<Pair> kept;
        kept.reserve(pending.size());
        for (auto& p : pending) {
            if (p.comp == lt.comp && lt.mon.divides(p.lcm) &&
                Monomial::lcm(G[p.i].lt().mon, lt.mon) != p.lcm &&
                Monomial::lcm(G[p.j].lt().mon, lt.mon) != p.lcm) {
                continue;
            }
            kept.push_back(std::move(p));
        }
        pending = std::move(kept);
        for (int i = 0; i < t; ++i) {
            if (G[i].is_zero()) continue;
            const ETerm& li = G[i].lt();
            if (li.comp != lt.comp) continue;
            Monomial l = Monomial::lcm(li.mon, lt.mon);
            if (rank_one && l == li.mon * lt.mon) continue;  // product criterion
            pending.push_back({i, t, std::move(l), lt.comp});
        }
    }

    void run() {
        for (std::size_t i = 0; i < G.size(); ++i) add_pairs_for(static_cast<int>(i));
        std::size_t guard = 0;
        const bool trace = std::getenv("SING_TRACE") != nullptr;
        while (!pending.empty()) {
            if (++guard > kCompletionGuard)
                throw EngineError("standard-basis completion exceeded the iteration guard");
            if (trace && guard % 200 == 0) {
                std::size_t maxterms = 0, maxbits = 0;
                for (const auto& g : G) {
                    maxterms = std::max(maxterms, g.t.size());
                    for (const auto& tm : g.t)
                        maxbits = std::max(maxbits,
                            mpz_sizeinbase(tm.c.get_num().get_mpz_t(), 2));
                }
                std::fprintf(stderr, "[c] it=%zu G=%zu pend=%zu mt=%zu mb=%zu\n",
                             guard, G.size(), pending.size(), maxterms, maxbits);
            }
            std::size_t k = pick();
            Pair p = std::move(pending[k]);
            pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(k));
            const EPoly &gi = G[p.i], &gj = G[p.j];
            // spoly: lc_j x^{lcm/lmi} gi - lc_i x^{lcm/lmj} gj
            EPoly zero;
            EPoly a = ep_add_scaled(zero, gj.lt().c, p.lcm.divide(gi.lt().mon), gi, mo);
            EPoly b = ep_add_scaled(a, -gi.lt().c, p.lcm.divide(gj.lt().mon), gj, mo);
            ep_make_primitive(b);
            EPoly r = weak_nf_head(b, G, mo);
            if (!r.is_zero()) {
                G.push_back(std::move(r));
                add_pairs_for(static_cast<int>(G.size()) - 1);
            }
        }
    }
};

}  // namespace

namespace {

std::vector<EPoly> minimalize_and_sort(std::vector<EPoly> G, const ModOrder& mo) {
    std::vector<bool> keep(G.size(), true);
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (!keep[i]) continue;
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j || !keep[j]) continue;
            if (lt_divides(G[j].lt(), G[i].lt()) &&
                !(G[j].lt().mon == G[i].lt().mon && j > i)) {
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<EPoly> out;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (keep[i]) out.push_back(ep_monic(std::move(G[i])));
    std::sort(out.begin(), out.end(),
              [&](const EPoly& a, const EPoly& b) { return mo.cmp(a.lt(), b.lt()) > 0; });
    return out;
}

/// Lazard's method for local orders: homogenize, complete under the
/// t-graded well-order (plain Buchberger), dehomogenize. The result is a
/// standard basis for the local order; Mora reduction against it is then
/// only needed for membership tests.
std::vector<EPoly> lazard_std_basis(std::vector<EPoly> gens, const ModOrder& mo,
                                    bool rank_one) {
    ModOrder moH{mo.ring, mo.elim, true};
    std::vector<EPoly> hom;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        int D = 0;
        for (const auto& tm : g.t) D = std::max(D, tm.mon.degree());
        std::vector<ETerm> ts;
        ts.reserve(g.t.size());
        for (const auto& tm : g.t) {
            std::vector<int> e = tm.mon.e;
            e.push_back(D - tm.mon.degree());
            ts.push_back({Monomial(std::move(e)), tm.comp, tm.c});
        }
        hom.push_back(ep_normalize(std::move(ts), moH));
    }
    if (hom.empty()) throw std::invalid_argument("standard basis of the zero ideal requested");
    std::vector<EPoly> basisH = std_basis_engine(std::move(hom), moH, rank_one);
    std::vector<EPoly> out;
    out.reserve(basisH.size());
    for (const auto& g : basisH) {
        std::vector<ETerm> ts;
        ts.reserve(g.t.size());
        for (const auto& tm : g.t) {
            std::vector<int> e = tm.mon.e;
            e.pop_back();
            ts.push_back({Monomial(std::move(e)), tm.comp, tm.c});
        }
        out.push_back(ep_normalize(std::move(ts), mo));
    }
    return minimalize_and_sort(std::move(out), mo);
}

}  // namespace

std::vector<EPoly> std_basis_engine(std::vector<EPoly> gens, const ModOrder& mo, bool rank_one) {
    if (!mo.division_ready()) return lazard_std_basis(std::move(gens), mo, rank_one);
    Completion c(mo, rank_one);
    for (auto& g : gens)
        if (!g.is_zero()) {
            ep_make_primitive(g);
            c.G.push_back(std::move(g));
        }
    if (c.G.empty()) throw std::invalid_argument("standard basis of the zero ideal requested");
    c.run();

    std::vector<EPoly> out = minimalize_and_sort(std::move(c.G), mo);

    if (mo.ring.is_global() && !mo.homog) {
        // tail interreduction to the unique reduced basis
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t i = 0; i < out.size(); ++i) {
                std::vector<EPoly> others;
                others.reserve(out.size() - 1);
                for (std::size_t j = 0; j < out.size(); ++j)
                    if (j != i) others.push_back(out[j]);
                EPoly red = nf_full_mode(out[i], others, mo, /*exact=*/true);
                if (!ep_equal(red, out[i])) {
                    out[i] = std::move(red);
                    changed = true;
                }
            }
        }
    }
    return out;
}

std::vector<EPoly> syzygies_engine(const std::vector<EPoly>& gens, int rank,
                                   const MonomialOrder& ring) {
    const int k = static_cast<int>(gens.size());
    ModOrder mo{ring, rank};
    std::vector<EPoly> lifted;
    lifted.reserve(gens.size());
    for (int i = 0; i < k; ++i) {
        std::vector<ETerm> ts = gens[i].t;
        ts.push_back({Monomial::one(ring.nvars), rank + i, Rat(1)});
        lifted.push_back(ep_normalize(std::move(ts), mo));
    }
    std::vector<EPoly> basis = std_basis_engine(std::move(lifted), mo, false);
    std::vector<EPoly> syz;
    for (auto& g : basis) {
        bool lower = true;
        for (const auto& tm : g.t)
            if (tm.comp < rank) {
                lower = false;
                break;
            }
        if (!lower) continue;
        EPoly s;
        s.t = std::move(g.t);
        for (auto& tm : s.t) tm.comp -= rank;
        syz.push_back(std::move(s));
    }
    return syz;
}

MonModule leading_module(const std::vector<EPoly>& G, int rank) {
    MonModule M;
    M.comp_gens.assign(rank, {});
    for (const auto& g : G)
        if (!g.is_zero()) M.comp_gens[g.lt().comp].push_back(g.lt().mon);
    for (auto& gens : M.comp_gens) {
        std::vector<Monomial> minimal;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
                if (i == j) continue;
                if (gens[j].divides(gens[i]) && !(gens[j] == gens[i] && j > i)) redundant = true;
            }
            if (!redundant) minimal.push_back(gens[i]);
        }
        gens = std::move(minimal);
    }
    return M;
}

Length colength_box(const std::vector<Monomial>& lead, int nvars) {
    for (const auto& m : lead)
        if (m.is_one()) return Length::of(0);
    std::vector<int> bound(nvars, -1);
    for (const auto& m : lead) {
        int var = -1;
        bool pure = true;
        for (int i = 0; i < nvars; ++i) {
            if (m.e[i] > 0) {
                if (var >= 0) {
                    pure = false;
                    break;
                }
                var = i;
            }
        }
        if (pure && var >= 0 && (bound[var] < 0 || m.e[var] < bound[var])) bound[var] = m.e[var];
    }
    for (int i = 0; i < nvars; ++i)
        if (bound[i] < 0) return Length::infinite();

    std::uint64_t count = 0;
    Monomial cur = Monomial::one(nvars);
    // walk the bounded box, counting monomials not divisible by any generator
    auto divisible = [&](const Monomial& m) {
        for (const auto& g : lead)
            if (g.divides(m)) return true;
        return false;
    };
    std::vector<int> idx(nvars, 0);
    for (;;) {
        Monomial m(idx);
        if (!divisible(m)) ++count;
        int i = 0;
        for (; i < nvars; ++i) {
            if (++idx[i] < bound[i]) break;
            idx[i] = 0;
        }
        if (i == nvars) break;
    }
    return Length::of(count);
}

bool cone_finite(const Monomial& mu, const std::vector<Monomial>& Bi, int nvars) {
    for (int l = 0; l < nvars; ++l) {
        bool ok = false;
        for (const auto& b : Bi) {
            bool pure = true;
            for (int v = 0; v < nvars && pure; ++v)
                if (v != l && b.e[v] > mu.e[v]) pure = false;
            if (pure) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

Length quotient_count(const MonModule& A, const MonModule& B, int nvars) {
    std::uint64_t total = 0;
    for (std::size_t comp = 0; comp < A.comp_gens.size(); ++comp) {
        const auto& Bi = B.comp_gens[comp];
        std::vector<Monomial> starts;
        for (const auto& mu : A.comp_gens[comp]) {
            bool inB = false;
            for (const auto& b : Bi)
                if (b.divides(mu)) {
                    inB = true;
                    break;
                }
            if (inB) continue;
            if (!cone_finite(mu, Bi, nvars))
                throw NotFiniteLength("module quotient has infinite length");
            starts.push_back(mu);
        }
        std::set<std::vector<int>> visited;
        std::vector<Monomial> queue = starts;
        for (const auto& s : queue) visited.insert(s.e);
        while (!queue.empty()) {
            if (visited.size() > kWalkGuard)
                throw EngineError("lattice walk exceeded the size guard");
            Monomial m = std::move(queue.back());
            queue.pop_back();
            for (int l = 0; l < nvars; ++l) {
                Monomial next = m;
                next.e[l] += 1;
                bool inB = false;
                for (const auto& b : Bi)
                    if (b.divides(next)) {
                        inB = true;
                        break;
                    }
                if (inB) continue;
                if (visited.insert(next.e).second) queue.push_back(next);
            }
        }
        total += visited.size();
    }
    return Length::of(total);
}

}  // namespace sing::detail
