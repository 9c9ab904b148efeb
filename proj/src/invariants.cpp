#include "sing/invariants.hpp"

#include <algorithm>
#include <cstdlib>

#include "sing/derlog.hpp"
#include "sing/errors.hpp"
#include "sing/module_syzygy.hpp"
#include "sing/parser.hpp"

namespace sing {

namespace {

MonomialOrder local_ord(const Polynomial& f) { return MonomialOrder::local(f.nvars()); }

std::vector<Polynomial> gradient(const Polynomial& f) {
    std::vector<Polynomial> out;
    for (int i = 0; i < f.nvars(); ++i) out.push_back(f.differentiate(i));
    return out;
}

Length require_isolated(const Polynomial& f) {
    Length mu = milnor_number(f);
    if (!mu.is_finite())
        throw NotIsolated("the singularity at the origin is not isolated (mu infinite)");
    return mu;
}

bool gradient_vanishes_at_origin(const Polynomial& f) {
    for (int i = 0; i < f.nvars(); ++i)
        if (f.differentiate(i).constant_part() != 0) return false;
    return true;
}

}  // namespace

Ideal jacobian_ideal(const Polynomial& f) { return Ideal(gradient(f), local_ord(f)); }

Ideal tjurina_ideal(const Polynomial& f) {
    std::vector<Polynomial> gens = gradient(f);
    gens.insert(gens.begin(), f);
    return Ideal(std::move(gens), local_ord(f));
}

Length milnor_number(const Polynomial& f) { return local_colength(jacobian_ideal(f)); }

Length tjurina_number(const Polynomial& f) { return local_colength(tjurina_ideal(f)); }

bool saito_membership(const Polynomial& f) {
    require_isolated(f);
    return jacobian_ideal(f).contains(f);
}

bool syzygy_corank_test(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw std::invalid_argument("empty generator list");
    const int n = gens.front().nvars();
    SyzygyMatrix Z = syzygies(gens, MonomialOrder::local(n));
    int rank = rational_rank(evaluate_at_zero(Z));
    return rank >= static_cast<int>(gens.size()) - n;
}

bool syzygy_rank_test(const Polynomial& f) {
    require_isolated(f);
    std::vector<Polynomial> gens = gradient(f);
    gens.push_back(f);
    return syzygy_corank_test(gens);
}

namespace {

// ---- exact affine solve + Fourier-Motzkin box search for find_weights ----

struct AffineSolution {
    bool consistent = false;
    std::vector<Rat> particular;            // one solution
    std::vector<std::vector<Rat>> nullspace;  // basis of homogeneous solutions
};

AffineSolution solve_affine(std::vector<std::vector<Rat>> A, std::vector<Rat> b, int nvars) {
    const std::size_t rows = A.size();
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (int c = 0; c < nvars && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && A[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(A[piv], A[r]);
        std::swap(b[piv], b[r]);
        Rat inv = 1 / A[r][c];
        for (int j = 0; j < nvars; ++j) A[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rat fct = A[i][c];
            for (int j = 0; j < nvars; ++j) A[i][j] -= fct * A[r][j];
            b[i] -= fct * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    AffineSolution sol;
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return sol;  // inconsistent
    sol.consistent = true;
    sol.particular.assign(nvars, Rat(0));
    std::vector<bool> is_pivot(nvars, false);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
        sol.particular[pivot_col[i]] = b[i];
        is_pivot[pivot_col[i]] = true;
    }
    for (int fcol = 0; fcol < nvars; ++fcol) {
        if (is_pivot[fcol]) continue;
        std::vector<Rat> dir(nvars, Rat(0));
        dir[fcol] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) dir[pivot_col[i]] = -A[i][fcol];
        sol.nullspace.push_back(std::move(dir));
    }
    return sol;
}

struct Inequality {
    std::vector<Rat> a;  // sum a_j t_j
    Rat b;
    bool strict;  // a*t < b (else <=)
};

/// Finds t with all constraints satisfied, by Fourier-Motzkin elimination;
/// dimensions here are tiny (at most nvars).
std::optional<std::vector<Rat>> fm_feasible(std::vector<Inequality> cons, int dim) {
    std::vector<std::vector<Inequality>> stages;
    for (int v = dim - 1; v >= 0; --v) {
        stages.push_back(cons);
        std::vector<Inequality> next;
        std::vector<const Inequality*> lower, upper;
        for (const auto& c : cons) {
            if (c.a[v] > 0)
                upper.push_back(&c);
            else if (c.a[v] < 0)
                lower.push_back(&c);
            else
                next.push_back(c);
        }
        for (const auto* lo : lower) {
            for (const auto* up : upper) {
                // (b_lo - rest_lo)/a_lo <= t <= (b_up - rest_up)/a_up
                Inequality comb;
                comb.a.assign(dim, Rat(0));
                Rat alo = -lo->a[v], aup = up->a[v];
                for (int j = 0; j < dim; ++j) comb.a[j] = lo->a[j] * aup + up->a[j] * alo;
                comb.b = lo->b * aup + up->b * alo;
                comb.strict = lo->strict || up->strict;
                next.push_back(std::move(comb));
            }
        }
        cons = std::move(next);
    }
    for (const auto& c : cons) {
        bool zero = std::all_of(c.a.begin(), c.a.end(), [](const Rat& x) { return x == 0; });
        if (!zero) continue;
        if (c.strict ? !(0 < c.b) : !(0 <= c.b)) return std::nullopt;
    }
    // back-substitute, innermost variable first
    std::vector<Rat> t(dim, Rat(0));
    for (int v = 0; v < dim; ++v) {
        const auto& stage = stages[static_cast<std::size_t>(dim - 1 - v)];
        bool has_lo = false, has_up = false, lo_strict = false, up_strict = false;
        Rat lo, up;
        for (const auto& c : stage) {
            if (c.a[v] == 0) continue;
            Rat rest = c.b;
            for (int j = v + 1; j < dim; ++j) rest -= c.a[j] * t[j];
            Rat bound = rest / c.a[v];
            if (c.a[v] > 0) {
                if (!has_up || bound < up || (bound == up && c.strict)) {
                    up = bound;
                    up_strict = c.strict;
                }
                has_up = true;
            } else {
                if (!has_lo || bound > lo || (bound == lo && c.strict)) {
                    lo = bound;
                    lo_strict = c.strict;
                }
                has_lo = true;
            }
        }
        if (has_lo && has_up) {
            if (lo == up) {
                if (lo_strict || up_strict) return std::nullopt;
                t[v] = lo;
            } else {
                t[v] = (lo + up) / 2;
            }
        } else if (has_lo) {
            t[v] = lo + 1;
        } else if (has_up) {
            t[v] = up - 1;
        }
    }
    return t;
}

}  // namespace

std::optional<std::vector<Rat>> find_weights(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("find_weights of the zero polynomial");
    const int n = f.nvars();
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    for (const auto& [m, c] : f.terms()) {
        std::vector<Rat> row;
        row.reserve(n);
        for (int i = 0; i < n; ++i) row.emplace_back(m.e[i]);
        A.push_back(std::move(row));
        b.emplace_back(1);
    }
    AffineSolution sol = solve_affine(std::move(A), std::move(b), n);
    if (!sol.consistent) return std::nullopt;
    const int k = static_cast<int>(sol.nullspace.size());
    // r_i(t) = particular_i + sum_j nullspace[j][i] t_j; require 0 < r_i <= 1/2
    std::vector<Inequality> cons;
    for (int i = 0; i < n; ++i) {
        Inequality pos;  // -r_i < 0
        pos.a.assign(k, Rat(0));
        for (int j = 0; j < k; ++j) pos.a[j] = -sol.nullspace[j][i];
        pos.b = sol.particular[i];
        pos.strict = true;
        cons.push_back(std::move(pos));
        Inequality cap;  // r_i <= 1/2
        cap.a.assign(k, Rat(0));
        for (int j = 0; j < k; ++j) cap.a[j] = sol.nullspace[j][i];
        cap.b = Rat(1, 2) - sol.particular[i];
        cap.strict = false;
        cons.push_back(std::move(cap));
    }
    auto t = fm_feasible(std::move(cons), k);
    if (!t) return std::nullopt;
    std::vector<Rat> r = sol.particular;
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) r[i] += sol.nullspace[j][i] * (*t)[j];
    for (const auto& ri : r)
        if (!(0 < ri && ri <= Rat(1, 2))) throw EngineError("weight witness outside the box");
    return r;
}

int briancon_skoda_exponent(const Polynomial& f) {
    require_isolated(f);
    const Ideal J = jacobian_ideal(f);
    Polynomial p = f;
    for (int d = 1; d <= f.nvars(); ++d) {
        if (J.contains(p)) return d;
        p = p * f;
    }
    throw EngineError("Briancon-Skoda bound violated: no f^d in J_f for d <= n");
}

namespace {

Ideal colon_chain_ideal(const Ideal& J, const Polynomial& f, int i) {
    // <J : f^i, f>
    if (i == 0) {
        std::vector<Polynomial> gens = J.gens();
        gens.insert(gens.begin(), f);
        return Ideal(std::move(gens), J.ord());
    }
    Ideal colon = colon_element(J, f.pow(static_cast<unsigned>(i)));
    std::vector<Polynomial> gens = colon.basis().gens;
    gens.insert(gens.begin(), f);
    return Ideal(std::move(gens), J.ord());
}

}  // namespace

std::optional<int> beta_invariant(const Polynomial& f) {
    if (saito_membership(f)) return std::nullopt;  // QH sentinel
    const Ideal J = jacobian_ideal(f);
    const Ideal I = tjurina_ideal(f);
    const int e = briancon_skoda_exponent(f);
    int beta = 0;
    for (int i = 1; i <= e - 1; ++i) {
        if (!ideal_contains(I, colon_chain_ideal(J, f, i))) break;
        beta = i;
    }
    if (beta > e - 2)
        throw EngineError("beta exceeds e^BS - 2 on a non-quasihomogeneous input");
    return beta;
}

std::vector<std::uint64_t> chain_lengths(const Polynomial& f) {
    Length mu = require_isolated(f);
    const Ideal J = jacobian_ideal(f);
    const int e = briancon_skoda_exponent(f);
    std::vector<std::uint64_t> out;
    out.push_back(local_colength(tjurina_ideal(f)).get());
    for (int i = 1; i <= e - 2; ++i)
        out.push_back(local_colength(colon_chain_ideal(J, f, i)).get());
    if (e >= 2)
        out.push_back(
            local_colength(colon_element(J, f.pow(static_cast<unsigned>(e - 1)))).get());
    std::uint64_t sum = 0;
    for (auto v : out) sum += v;
    if (sum != mu.get()) throw EngineError("telescoping chain lengths do not sum to mu");
    return out;
}

std::uint64_t delta_length(const Polynomial& f) {
    require_isolated(f);
    const Ideal I = tjurina_ideal(f);
    std::uint64_t tau = local_colength(I).get();
    std::uint64_t l2 = local_colength(ideal_power(I, 2)).get();
    std::uint64_t n = static_cast<std::uint64_t>(f.nvars());
    if (l2 < (n + 1) * tau) throw EngineError("negative syzygetic defect");
    return l2 - (n + 1) * tau;
}

std::uint64_t i2ji_length(const Polynomial& f) {
    require_isolated(f);
    const Ideal I = tjurina_ideal(f);
    const Ideal J = jacobian_ideal(f);
    std::uint64_t lji = local_colength(ideal_product(J, I)).get();
    std::uint64_t l2 = local_colength(ideal_power(I, 2)).get();
    if (lji < l2) throw EngineError("negative I^2/JI length");
    return lji - l2;
}

std::optional<int> reduction_number(const Polynomial& f, unsigned cap) {
    require_isolated(f);
    const Ideal J = jacobian_ideal(f);
    const Ideal I = tjurina_ideal(f);
    std::vector<Ideal> pow{I};  // pow[m] = I^{m+1}
    auto ipow = [&](unsigned m) -> const Ideal& {
        while (pow.size() < m) pow.push_back(ideal_product(pow.back(), I));
        return pow[m - 1];
    };
    for (unsigned t = 0; t <= cap; ++t) {
        const Ideal& jit = (t == 0) ? J : ideal_product(J, ipow(t));
        if (!ideal_equal(jit, ipow(t + 1))) continue;
        if (ideal_equal(ideal_product(J, ipow(t + 1)), ipow(t + 2)))
            return static_cast<int>(t);
    }
    return std::nullopt;
}

namespace {

std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// e0 and e1 by exact finite differences over the window ending at `end`
/// (1-based exponents m in values).
std::pair<std::int64_t, std::int64_t> fit_window(const std::vector<std::uint64_t>& values,
                                                 int n, int end) {
    auto lam = [&](int m) { return static_cast<std::int64_t>(values[m - 1]); };
    std::int64_t e0 = 0;
    for (int j = 0; j <= n; ++j) {
        std::int64_t sign = ((n - j) % 2 == 0) ? 1 : -1;
        e0 += sign * binom(n, j) * lam(end - n + j);
    }
    auto q = [&](int m) { return lam(m) - e0 * binom(m + n - 1, n); };
    std::int64_t d = 0;
    for (int j = 0; j <= n - 1; ++j) {
        std::int64_t sign = ((n - 1 - j) % 2 == 0) ? 1 : -1;
        d += sign * binom(n - 1, j) * q(end - (n - 1) + j);
    }
    return {e0, -d};
}

}  // namespace

HilbertFit hilbert_samuel_fit(const Polynomial& f, unsigned mmax) {
    require_isolated(f);
    const int n = f.nvars();
    if (mmax == 0) mmax = static_cast<unsigned>(n) + 3;
    if (mmax < static_cast<unsigned>(n) + 2)
        throw std::invalid_argument("hilbert_samuel_fit needs mmax >= n+2");
    const Ideal I = tjurina_ideal(f);
    HilbertFit fit;
    Ideal Im = I;
    for (unsigned m = 1; m <= mmax; ++m) {
        if (m > 1) Im = ideal_product(Im, I);
        fit.values.push_back(local_colength(Im).get());
    }
    auto top = fit_window(fit.values, n, static_cast<int>(mmax));
    auto prev = fit_window(fit.values, n, static_cast<int>(mmax) - 1);
    fit.e0 = top.first;
    fit.e1 = top.second;
    fit.stable = (top == prev);
    return fit;
}

Length koszul_h1_length(const Polynomial& f) {
    std::vector<Polynomial> gens = gradient(f);
    gens.insert(gens.begin(), f);
    MonomialOrder ord = local_ord(f);
    SyzygyMatrix Z = syzygies(gens, ord);
    SyzygyMatrix B = koszul_boundaries(gens);
    return module_quotient_length(Z, B, ord);
}

std::map<std::string, bool> identity_checks(const Polynomial& f) {
    const std::uint64_t mu = require_isolated(f).get();
    const int n = f.nvars();
    const Ideal J = jacobian_ideal(f);
    const Ideal I = tjurina_ideal(f);
    const std::uint64_t tau = local_colength(I).get();
    const bool qh = J.contains(f);
    const int e = briancon_skoda_exponent(f);
    const std::uint64_t dl = delta_length(f);
    const std::uint64_t ij = i2ji_length(f);
    const std::uint64_t lji = local_colength(ideal_product(J, I)).get();
    const std::vector<std::uint64_t> chain = chain_lengths(f);
    const HilbertFit fit = hilbert_samuel_fit(f);
    const Length h1 = koszul_h1_length(f);

    const bool conj = ideal_contains(I, colon_element(J, f));  // J:f subset I ?
    std::vector<Polynomial> jf2 = J.gens();
    jf2.push_back(f.pow(2));
    const std::uint64_t ljf2 = local_colength(Ideal(std::move(jf2), J.ord())).get();
    const bool p39ii = (ljf2 == 2 * tau);
    const bool p39iii = ideal_equal(colon_ideal(ideal_power(I, 2), I), I);

    std::map<std::string, bool> out;
    out["MT-identity"] = (mu - tau == ij + dl);
    out["eq31"] = (lji == mu + static_cast<std::uint64_t>(n) * tau);
    out["telescope"] = [&] {
        std::uint64_t s = 0;
        for (auto v : chain) s += v;
        return s == mu;
    }();
    out["h1-tau"] = (h1 == tau);
    out["e0-mu"] = (fit.e0 == static_cast<std::int64_t>(mu));
    out["northcott"] = (fit.e1 >= fit.e0 - static_cast<std::int64_t>(tau));
    out["ebs-bound"] = (e <= n);
    out["conjecture"] = conj;
    out["p39-i"] = conj;
    out["p39-ii"] = p39ii;
    out["p39-iii"] = p39iii;
    out["thm32ii"] = ((dl == 0) == qh);
    out["thm32iii"] = (mu - tau != 1) || (ij == 0);
    out["prop31"] = (ij != 0) || (fit.e1 == static_cast<std::int64_t>(mu - tau));

    if (!qh) {
        const int beta = beta_invariant(f).value();
        const std::int64_t mu_s = static_cast<std::int64_t>(mu);
        const std::int64_t tau_s = static_cast<std::int64_t>(tau);
        out["p39-agree"] = (conj == p39ii) && (p39ii == p39iii);
        out["eq35"] = [&] {
            for (int i = 0; i <= beta && i < static_cast<int>(chain.size()); ++i)
                if (chain[static_cast<std::size_t>(i)] != tau) return false;
            return true;
        }();
        out["bound-i"] = (beta <= e - 2);
        out["bound-ii"] = (mu_s <= e * tau_s - (e - beta - 1)) && (mu_s <= e * tau_s - 1) &&
                          (mu_s < n * tau_s);
        const std::int64_t low = (beta + 1) * tau_s + 2 * (e - beta - 2) + 1;
        out["bound-iii"] = (mu_s >= low) && (low >= tau_s + 1);
        out["bound-iv"] = (tau_s < mu_s) && (mu_s < e * tau_s);
        // Corollary 3.6 small-difference implications
        const std::int64_t diff = mu_s - tau_s;
        bool small = true;
        if (diff <= 2) small = small && (e == 2);
        if (diff <= e - 1) small = small && (e == 2);
        if (diff == 3)
            small = small && (e <= 3) && ((beta == 1 && tau_s == 2) || beta == 0);
        if (diff == 4)
            small = small && (e <= 3) &&
                    ((beta == 1 && e == 3 && (tau_s == 3 || tau_s == 2)) || beta == 0);
        out["smalldiff"] = small;
    }
    return out;
}

CheckSet CheckSet::all() {
    CheckSet c;
    c.mu = c.tau = c.quasihomogeneity = c.ebs = c.beta = c.delta = c.hilbert = c.derlog =
        c.identities = true;
    return c;
}

CheckSet CheckSet::parse(const std::string& csv) {
    CheckSet c;
    std::size_t pos = 0;
    bool any = false;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        std::string name = csv.substr(pos, comma == std::string::npos ? csv.size() - pos
                                                                      : comma - pos);
        pos = comma == std::string::npos ? csv.size() + 1 : comma + 1;
        if (name.empty()) continue;
        any = true;
        if (name == "all")
            c = all();
        else if (name == "mu")
            c.mu = true;
        else if (name == "tau")
            c.tau = true;
        else if (name == "quasihomogeneity")
            c.quasihomogeneity = true;
        else if (name == "ebs")
            c.ebs = true;
        else if (name == "beta")
            c.beta = true;
        else if (name == "delta")
            c.delta = true;
        else if (name == "hilbert")
            c.hilbert = true;
        else if (name == "derlog")
            c.derlog = true;
        else if (name == "identities")
            c.identities = true;
        else
            throw std::invalid_argument("unknown check name: " + name);
    }
    if (!any) throw std::invalid_argument("empty check list");
    return c;
}

SingularityReport analyze(const Polynomial& f, const std::vector<std::string>& vars,
                          const CheckSet& checks) {
    SingularityReport rep;
    rep.vars = vars;
    rep.poly_text = f.to_string(vars);

    if (f.constant_part() != 0 || !gradient_vanishes_at_origin(f)) {
        rep.smooth = true;
        rep.mu = Length::of(0);
        rep.tau = Length::of(0);
        return rep;
    }

    rep.mu = milnor_number(f);
    rep.tau = tjurina_number(f);
    if (!rep.mu.is_finite()) {
        rep.error = "NotIsolated";
        return rep;
    }

    if (checks.quasihomogeneity) {
        QuasihomogeneityVerdict q;
        q.saito = saito_membership(f);
        q.syzygy_rank = syzygy_rank_test(f);
        q.weights = find_weights(f);
        rep.quasihomogeneous = q;
    }
    if (checks.ebs) rep.ebs = briancon_skoda_exponent(f);
    if (checks.beta) {
        rep.beta = beta_invariant(f);
        rep.chains = chain_lengths(f);
    }
    if (checks.delta) {
        rep.delta_len = delta_length(f);
        rep.i2ji_len = i2ji_length(f);
    }
    if (checks.hilbert) {
        rep.hilbert = hilbert_samuel_fit(f);
        rep.reduction_num = reduction_number(f);
    }
    if (checks.derlog) {
        rep.derlog_min_gens = essential_min_gens(f);
        std::vector<std::string> printed;
        for (const auto& d : derlog_generators(f)) printed.push_back(derivation_to_string(d, vars));
        rep.derlog_gens_printed = printed;
    }
    if (checks.identities) rep.identities = identity_checks(f);
    return rep;
}

}  // namespace sing
