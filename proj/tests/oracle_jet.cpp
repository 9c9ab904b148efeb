#include "oracle_jet.hpp"

#include <map>

namespace sing::oracle {

namespace {

void enumerate_below(int nvars, int K, std::vector<Monomial>& out) {
    std::vector<int> e(nvars, 0);
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == nvars - 1) {
            for (int d = 0; d <= rem; ++d) {
                e[i] = d;
                out.emplace_back(std::vector<int>(e));
            }
            e[i] = 0;
            return;
        }
        for (int d = 0; d <= rem; ++d) {
            e[i] = d;
            self(self, i + 1, rem - d);
        }
        e[i] = 0;
    };
    rec(rec, 0, K - 1);
}

struct JetSpace {
    int nvars, K;
    std::vector<Monomial> mons;
    std::map<std::vector<int>, int> index;

    JetSpace(int n, int bound) : nvars(n), K(bound) {
        enumerate_below(n, K, mons);
        for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i].e] = static_cast<int>(i);
    }

    std::vector<Rat> truncate(const Polynomial& p) const {
        std::vector<Rat> v(mons.size(), Rat(0));
        for (const auto& [m, c] : p.terms())
            if (m.degree() < K) v[static_cast<std::size_t>(index.at(m.e))] = c;
        return v;
    }
};

/// Row-reduces rows in place; returns (rank, pivot columns). Rows end up
/// in reduced echelon form.
std::pair<int, std::vector<int>> rref(std::vector<std::vector<Rat>>& rows, std::size_t ncols) {
    std::vector<int> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        Rat inv = 1 / rows[r][c];
        for (std::size_t j = c; j < ncols; ++j) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat fct = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= fct * rows[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return {static_cast<int>(r), pivots};
}

std::vector<std::vector<Rat>> ideal_jet_rows(const std::vector<Polynomial>& gens,
                                             const JetSpace& js) {
    std::vector<std::vector<Rat>> rows;
    std::vector<Monomial> mults;
    enumerate_below(js.nvars, js.K, mults);
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        int og = g.order_at_origin();
        for (const auto& m : mults) {
            if (m.degree() + og >= js.K) continue;
            std::vector<Rat> row = js.truncate(g.mul_term(m, Rat(1)));
            bool nz = false;
            for (const auto& x : row)
                if (x != 0) {
                    nz = true;
                    break;
                }
            if (nz) rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace

std::uint64_t jet_colength(const std::vector<Polynomial>& gens, int K) {
    const int n = gens.front().nvars();
    JetSpace js(n, K);
    auto rows = ideal_jet_rows(gens, js);
    auto [rank, piv] = rref(rows, js.mons.size());
    return js.mons.size() - static_cast<std::uint64_t>(rank);
}

Length jet_colength_stable(const std::vector<Polynomial>& gens, int kmax) {
    bool all_zero = true;
    for (const auto& g : gens)
        if (!g.is_zero()) all_zero = false;
    if (all_zero) return Length::infinite();
    std::uint64_t prev = 0;
    bool have_prev = false;
    for (int K = 2; K <= kmax; ++K) {
        std::uint64_t v = jet_colength(gens, K);
        if (have_prev && v == prev) return Length::of(v);
        prev = v;
        have_prev = true;
    }
    return Length::infinite();
}

int jet_socle_type(const Polynomial& f, int K) {
    const int n = f.nvars();
    std::vector<Polynomial> gens{f};
    for (int i = 0; i < n; ++i) gens.push_back(f.differentiate(i));
    JetSpace js(n, K);
    auto irows = ideal_jet_rows(gens, js);
    auto [irank, ipiv] = rref(irows, js.mons.size());
    irows.resize(static_cast<std::size_t>(irank));

    // unknowns: jets g of degree < K-1; constraints: x_l*g reduces to zero
    // against the ideal span, for every l
    std::vector<int> unknowns;
    for (std::size_t i = 0; i < js.mons.size(); ++i)
        if (js.mons[i].degree() < K - 1) unknowns.push_back(static_cast<int>(i));
    const std::size_t u = unknowns.size();

    auto reduce_vec = [&](std::vector<Rat> v) {
        for (std::size_t i = 0; i < irows.size(); ++i) {
            int c = ipiv[i];
            if (v[static_cast<std::size_t>(c)] == 0) continue;
            Rat fct = v[static_cast<std::size_t>(c)];
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= fct * irows[i][j];
        }
        return v;
    };

    // rows of the constraint system, indexed by (l, residual coordinate)
    std::vector<std::vector<Rat>> cons;
    std::vector<std::vector<std::vector<Rat>>> reduced(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l) {
        reduced[static_cast<std::size_t>(l)].resize(u);
        for (std::size_t k = 0; k < u; ++k) {
            Monomial m = js.mons[static_cast<std::size_t>(unknowns[k])];
            m.e[l] += 1;
            std::vector<Rat> v(js.mons.size(), Rat(0));
            if (m.degree() < K) v[static_cast<std::size_t>(js.index.at(m.e))] = 1;
            reduced[static_cast<std::size_t>(l)][k] = reduce_vec(std::move(v));
        }
    }
    for (int l = 0; l < n; ++l) {
        for (std::size_t coord = 0; coord < js.mons.size(); ++coord) {
            std::vector<Rat> row(u, Rat(0));
            bool nz = false;
            for (std::size_t k = 0; k < u; ++k) {
                row[k] = reduced[static_cast<std::size_t>(l)][k][coord];
                if (row[k] != 0) nz = true;
            }
            if (nz) cons.push_back(std::move(row));
        }
    }
    auto [crank, cpiv] = rref(cons, u);
    int soldim = static_cast<int>(u) - crank;
    int ipiv_low = 0;
    for (int c : ipiv)
        if (js.mons[static_cast<std::size_t>(c)].degree() < K - 1) ++ipiv_low;
    return soldim - ipiv_low;
}

}  // namespace sing::oracle
