#include "sing/ideal_ops.hpp"

#include <algorithm>

#include "engine.hpp"
#include "sing/errors.hpp"
#include "sing/module_syzygy.hpp"

namespace sing {

Ideal::Ideal(std::vector<Polynomial> gens, const MonomialOrder& ord)
    : ord_(ord), basis_{{}, ord, false} {
    for (auto& g : gens) {
        if (g.nvars() != ord.nvars) throw DimensionMismatch("generator arity mismatch");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
    if (!gens_.empty()) {
        basis_ = std_basis(gens_, ord_);
        for (const auto& g : gens_)
            if (!is_member(g, basis_)) throw EngineError("cached basis rejects a generator");
    }
}

bool Ideal::contains(const Polynomial& f) const {
    if (f.is_zero()) return true;
    if (gens_.empty()) return false;
    return is_member(f, basis_);
}

bool Ideal::is_unit_ideal() const { return contains(Polynomial::constant(nvars(), Rat(1))); }

bool Ideal::is_zero_ideal() const { return gens_.empty(); }

namespace {

void require_same_ring(const Ideal& I, const Ideal& J) {
    if (I.nvars() != J.nvars() || I.ord().kind != J.ord().kind)
        throw DimensionMismatch("ideals live in different rings");
}

/// The interreduced generator list products and colons work on: the
/// cached standard basis when present.
const std::vector<Polynomial>& working_gens(const Ideal& I) {
    return I.is_zero_ideal() ? I.gens() : I.basis().gens;
}

}  // namespace

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    std::vector<Polynomial> gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    return Ideal(std::move(gens), I.ord());
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    std::vector<Polynomial> gens;
    for (const auto& a : working_gens(I))
        for (const auto& b : working_gens(J)) gens.push_back(a * b);
    return Ideal(std::move(gens), I.ord());
}

Ideal ideal_power(const Ideal& I, unsigned k, unsigned cap) {
    if (k < 1) throw std::invalid_argument("ideal power requires k >= 1");
    if (k > cap) throw PowerCapExceeded("ideal power " + std::to_string(k) +
                                        " exceeds the cap " + std::to_string(cap));
    Ideal acc = I;
    for (unsigned i = 1; i < k; ++i) acc = ideal_product(acc, I);
    return acc;
}

Ideal colon_element(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) throw ZeroDivisor("colon by the zero element");
    if (f.nvars() != I.nvars()) throw DimensionMismatch("colon element arity mismatch");
    if (I.is_zero_ideal()) return I;  // 0 : f = 0 for f a nonzerodivisor
    std::vector<Polynomial> list{f};
    const auto& gens = working_gens(I);
    list.insert(list.end(), gens.begin(), gens.end());
    SyzygyMatrix Z = syzygies(list, I.ord());
    std::vector<Polynomial> out;
    for (const auto& col : Z.columns)
        if (!col[0].is_zero()) out.push_back(col[0]);
    return Ideal(std::move(out), I.ord());
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal({}, I.ord());
    const int n = I.nvars();
    // syzygies of (1,1), (a_i,0), (0,b_j) in R^2: the coefficients of the
    // first column generate I meet J
    std::vector<ModuleElement> cols;
    cols.push_back({Polynomial::constant(n, Rat(1)), Polynomial::constant(n, Rat(1))});
    for (const auto& a : working_gens(I)) cols.push_back({a, Polynomial::zero(n)});
    for (const auto& b : working_gens(J)) cols.push_back({Polynomial::zero(n), b});

    detail::ModOrder mo{I.ord(), 0};
    std::vector<detail::EPoly> eps;
    eps.reserve(cols.size());
    for (const auto& c : cols) eps.push_back(detail::ep_from_columns(c, mo));
    std::vector<detail::EPoly> syz = detail::syzygies_engine(eps, 2, I.ord());
    std::vector<Polynomial> out;
    for (const auto& s : syz) {
        ModuleElement coeffs = detail::ep_to_columns(s, static_cast<int>(cols.size()), n);
        if (!coeffs[0].is_zero()) out.push_back(coeffs[0]);
    }
    return Ideal(std::move(out), I.ord());
}

Ideal colon_ideal(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    if (J.is_zero_ideal()) throw ZeroDivisor("colon by the zero ideal");
    const auto& gens = working_gens(J);
    Ideal acc = colon_element(I, gens.front());
    for (std::size_t i = 1; i < gens.size(); ++i)
        acc = ideal_intersect(acc, colon_element(I, gens[i]));
    return acc;
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    for (const auto& g : J.gens())
        if (!I.contains(g)) return false;
    return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    return ideal_contains(I, J) && ideal_contains(J, I);
}

Length local_colength(const Ideal& I) {
    if (I.ord().is_global())
        throw std::invalid_argument("local colength requires a local order");
    if (I.is_zero_ideal()) return Length::infinite();
    return colength(leading_ideal(I.basis()));
}

}  // namespace sing
