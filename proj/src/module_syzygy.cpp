#include "sing/module_syzygy.hpp"

#include <algorithm>

#include "engine.hpp"
#include "sing/errors.hpp"

namespace sing {

using detail::EPoly;
using detail::ModOrder;

namespace {

int common_nvars(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw std::invalid_argument("empty generator list");
    int n = gens.front().nvars();
    for (const auto& g : gens)
        if (g.nvars() != n) throw DimensionMismatch("generator arity mismatch");
    return n;
}

std::vector<EPoly> columns_to_eps(const SyzygyMatrix& M, const ModOrder& mo) {
    std::vector<EPoly> eps;
    eps.reserve(M.columns.size());
    for (const auto& col : M.columns) eps.push_back(detail::ep_from_columns(col, mo));
    return eps;
}

void assert_exact_syzygy(const ModuleElement& col, const std::vector<Polynomial>& gens) {
    Polynomial acc(gens.front().nvars());
    for (std::size_t i = 0; i < gens.size(); ++i) acc = acc + col[i] * gens[i];
    if (!acc.is_zero()) throw EngineError("syzygy column does not annihilate its generators");
}

}  // namespace

SyzygyMatrix syzygies(const std::vector<Polynomial>& gens, const MonomialOrder& ord) {
    int n = common_nvars(gens);
    if (n != ord.nvars) throw DimensionMismatch("generator arity does not match order");
    ModOrder ring{ord, 0};
    std::vector<EPoly> eps;
    eps.reserve(gens.size());
    for (const auto& g : gens) eps.push_back(detail::ep_from_poly(g, 0, ring));
    std::vector<EPoly> syz = detail::syzygies_engine(eps, 1, ord);
    SyzygyMatrix M{{}, gens};
    const int k = static_cast<int>(gens.size());
    for (const auto& s : syz) {
        ModuleElement col = detail::ep_to_columns(s, k, n);
        assert_exact_syzygy(col, gens);
        M.columns.push_back(std::move(col));
    }
    return M;
}

SyzygyMatrix koszul_boundaries(const std::vector<Polynomial>& gens) {
    int n = common_nvars(gens);
    const int k = static_cast<int>(gens.size());
    SyzygyMatrix M{{}, gens};
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            ModuleElement col(k, Polynomial::zero(n));
            col[i] = gens[j];
            col[j] = -gens[i];
            M.columns.push_back(std::move(col));
        }
    }
    return M;
}

bool module_membership(const ModuleElement& v, const SyzygyMatrix& M, const MonomialOrder& ord) {
    if (M.columns.empty()) {
        for (const auto& c : v)
            if (!c.is_zero()) return false;
        return true;
    }
    const std::size_t rank = M.columns.front().size();
    if (v.size() != rank) throw DimensionMismatch("module element rank mismatch");
    ModOrder mo{ord, 0};
    EPoly target = detail::ep_from_columns(v, mo);
    if (target.is_zero()) return true;
    std::vector<EPoly> basis = detail::std_basis_engine(columns_to_eps(M, mo), mo, false);
    return detail::weak_nf_head(target, basis, mo).is_zero();
}

int min_gens_finite_length(const SyzygyMatrix& num, const SyzygyMatrix& den,
                           const MonomialOrder& ord) {
    if (ord.is_global())
        throw std::invalid_argument("Nakayama counts require a local order");
    if (num.columns.empty()) return 0;
    const int rank = static_cast<int>(num.columns.front().size());
    const int n = ord.nvars;
    ModOrder mo{ord, 0};

    std::vector<EPoly> gn = detail::std_basis_engine(columns_to_eps(num, mo), mo, false);
    detail::MonModule LN = detail::leading_module(gn, rank);

    // finite-length detection for num/den via the cones of L(num) over L(den)
    std::vector<EPoly> den_eps = columns_to_eps(den, mo);
    detail::MonModule LB;
    if (std::any_of(den_eps.begin(), den_eps.end(),
                    [](const EPoly& p) { return !p.is_zero(); })) {
        std::vector<EPoly> gb = detail::std_basis_engine(std::move(den_eps), mo, false);
        LB = detail::leading_module(gb, rank);
    } else {
        LB.comp_gens.assign(rank, {});
    }
    for (int c = 0; c < rank; ++c) {
        for (const auto& mu : LN.comp_gens[c]) {
            if (LB.contains(mu, c)) continue;
            if (!detail::cone_finite(mu, LB.comp_gens[c], n))
                throw NotFiniteLength("quotient module has infinite length");
        }
    }

    // W = den + m*num; nu = #{minimal generators of L(num) outside L(W)}
    std::vector<EPoly> wgens = columns_to_eps(den, mo);
    for (const auto& col : num.columns) {
        for (int l = 0; l < n; ++l) {
            Monomial xl = Monomial::one(n);
            xl.e[l] = 1;
            ModuleElement scaled;
            scaled.reserve(col.size());
            for (const auto& c : col) scaled.push_back(c.mul_term(xl, Rat(1)));
            wgens.push_back(detail::ep_from_columns(scaled, mo));
        }
    }
    std::vector<EPoly> gw = detail::std_basis_engine(std::move(wgens), mo, false);
    detail::MonModule LW = detail::leading_module(gw, rank);

    int nu = 0;
    for (int c = 0; c < rank; ++c)
        for (const auto& mu : LN.comp_gens[c])
            if (!LW.contains(mu, c)) ++nu;
    return nu;
}

Length module_quotient_length(const SyzygyMatrix& num, const SyzygyMatrix& den,
                              const MonomialOrder& ord) {
    if (num.columns.empty()) return Length::of(0);
    const int rank = static_cast<int>(num.columns.front().size());
    ModOrder mo{ord, 0};
    std::vector<EPoly> gn = detail::std_basis_engine(columns_to_eps(num, mo), mo, false);
    detail::MonModule LN = detail::leading_module(gn, rank);
    detail::MonModule LB;
    std::vector<EPoly> den_eps = columns_to_eps(den, mo);
    if (std::any_of(den_eps.begin(), den_eps.end(),
                    [](const EPoly& p) { return !p.is_zero(); })) {
        std::vector<EPoly> gb = detail::std_basis_engine(std::move(den_eps), mo, false);
        LB = detail::leading_module(gb, rank);
    } else {
        LB.comp_gens.assign(rank, {});
    }
    return detail::quotient_count(LN, LB, ord.nvars);
}

std::vector<std::vector<Rat>> evaluate_at_zero(const SyzygyMatrix& M) {
    std::vector<std::vector<Rat>> out;
    if (M.columns.empty()) return out;
    const std::size_t rank = M.columns.front().size();
    out.assign(rank, std::vector<Rat>(M.columns.size(), Rat(0)));
    for (std::size_t j = 0; j < M.columns.size(); ++j)
        for (std::size_t i = 0; i < rank; ++i) out[i][j] = M.columns[j][i].constant_part();
    return out;
}

int rational_rank(const std::vector<std::vector<Rat>>& M) {
    if (M.empty() || M.front().empty()) return 0;
    // clear denominators row-wise, then fraction-free (Bareiss) elimination
    std::vector<std::vector<mpz_class>> A;
    A.reserve(M.size());
    for (const auto& row : M) {
        mpz_class l(1);
        for (const auto& x : row) {
            mpz_class d = x.get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
            l = l / g * d;
        }
        std::vector<mpz_class> r;
        r.reserve(row.size());
        for (const auto& x : row) r.push_back(x.get_num() * (l / x.get_den()));
        A.push_back(std::move(r));
    }
    const std::size_t rows = A.size(), cols = A.front().size();
    mpz_class prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && A[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(A[piv], A[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                A[i][j] = (A[r][c] * A[i][j] - A[i][c] * A[r][j]) / prev;
            A[i][c] = 0;
        }
        prev = A[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

SyzygyMatrix minimalize_columns(const SyzygyMatrix& M, const MonomialOrder& ord) {
    SyzygyMatrix out{M.columns, M.target_gens};
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < out.columns.size(); ++i) {
            SyzygyMatrix rest{{}, out.target_gens};
            for (std::size_t j = 0; j < out.columns.size(); ++j)
                if (j != i) rest.columns.push_back(out.columns[j]);
            if (module_membership(out.columns[i], rest, ord)) {
                out.columns.erase(out.columns.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return out;
}

std::vector<int> two_generator_subset(const SyzygyMatrix& M, const MonomialOrder& ord) {
    const int k = static_cast<int>(M.columns.size());
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            SyzygyMatrix pair{{M.columns[i], M.columns[j]}, M.target_gens};
            bool all = true;
            for (int l = 0; l < k && all; ++l) {
                if (l == i || l == j) continue;
                all = module_membership(M.columns[l], pair, ord);
            }
            if (all) return {i, j};
        }
    }
    return {};
}

}  // namespace sing
