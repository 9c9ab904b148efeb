#include "sing/derlog.hpp"

#include "sing/errors.hpp"
#include "sing/ideal_ops.hpp"
#include "sing/standard_basis.hpp"

namespace sing {

namespace {

std::vector<Polynomial> koszul_generator_list(const Polynomial& f) {
    // (f, f_{x_1},...,f_{x_n})
    std::vector<Polynomial> gens{f};
    for (int i = 0; i < f.nvars(); ++i) gens.push_back(f.differentiate(i));
    return gens;
}

void verify_logarithmic(const Derivation& d, const Polynomial& f) {
    Polynomial val = d.apply(f);
    if (weak_normal_form(val, {f}, MonomialOrder::global(f.nvars())).is_zero()) return;
    throw EngineError("derivation is not logarithmic for f");
}

SyzygyMatrix derivations_as_matrix(const std::vector<Derivation>& ds, int n) {
    SyzygyMatrix M{{}, std::vector<Polynomial>(static_cast<std::size_t>(n),
                                               Polynomial::zero(n))};
    for (const auto& d : ds) M.columns.push_back(d.coeffs);
    return M;
}

}  // namespace

Polynomial Derivation::apply(const Polynomial& f) const {
    Polynomial out(f.nvars());
    for (int i = 0; i < f.nvars(); ++i) out = out + coeffs[i] * f.differentiate(i);
    return out;
}

std::vector<Derivation> derlog_generators(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("derlog of the zero polynomial");
    const int n = f.nvars();
    SyzygyMatrix Z = syzygies(koszul_generator_list(f), MonomialOrder::global(n));
    std::vector<Derivation> out;
    for (const auto& col : Z.columns) {
        Derivation d;
        d.coeffs.assign(col.begin() + 1, col.end());  // pi drops coordinate 0
        bool zero = true;
        for (const auto& c : d.coeffs)
            if (!c.is_zero()) zero = false;
        if (zero) continue;
        verify_logarithmic(d, f);
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<Derivation> koszul_derivations(const Polynomial& f) {
    const int n = f.nvars();
    std::vector<Polynomial> grad;
    for (int i = 0; i < n; ++i) grad.push_back(f.differentiate(i));
    std::vector<Derivation> out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Derivation d;
            d.coeffs.assign(static_cast<std::size_t>(n), Polynomial::zero(n));
            d.coeffs[j] = grad[i];        // f_i d/dx_j
            d.coeffs[i] = -grad[j];       // - f_j d/dx_i
            verify_logarithmic(d, f);     // eta(f) = 0 here
            out.push_back(std::move(d));
        }
    }
    for (int i = 0; i < n; ++i) {
        Derivation d;
        d.coeffs.assign(static_cast<std::size_t>(n), Polynomial::zero(n));
        d.coeffs[i] = f;                  // f d/dx_i, eta(f) = f_i * f
        verify_logarithmic(d, f);
        out.push_back(std::move(d));
    }
    return out;
}

int essential_min_gens(const Polynomial& f) {
    MonomialOrder ord = MonomialOrder::local(f.nvars());
    std::vector<Polynomial> gens = koszul_generator_list(f);
    SyzygyMatrix Z = syzygies(gens, ord);
    SyzygyMatrix B = koszul_boundaries(gens);
    return min_gens_finite_length(Z, B, ord);
}

bool global_quasihomogeneity_test(const Polynomial& f) {
    const int n = f.nvars();
    MonomialOrder ord = MonomialOrder::global(n);
    std::vector<Polynomial> igens{f};
    std::vector<Polynomial> jgens;
    for (int i = 0; i < n; ++i) {
        jgens.push_back(f.differentiate(i));
        igens.push_back(jgens.back());
    }
    Ideal I(igens, ord);
    if (!colength(leading_ideal(I.basis())).is_finite())
        throw NotIsolatedGlobally("I_f is not zero-dimensional over the polynomial ring");
    return ideal_equal(I, Ideal(jgens, ord));
}

bool verify_euler_splitting(const Polynomial& f) {
    if (!f.is_homogeneous() || f.is_zero() || f.total_degree() < 1)
        throw NonHomogeneousInput("Euler splitting requires homogeneous f of degree >= 1");
    const int n = f.nvars();
    const int d = f.total_degree();
    MonomialOrder ord = MonomialOrder::global(n);

    std::vector<Polynomial> grad;
    for (int i = 0; i < n; ++i) grad.push_back(f.differentiate(i));
    SyzygyMatrix gradsyz = syzygies(grad, ord);

    std::vector<Derivation> split_gens;
    for (const auto& col : gradsyz.columns) {
        Derivation eta{col};
        if (!eta.apply(f).is_zero())
            throw EngineError("gradient syzygy does not annihilate f");
        split_gens.push_back(std::move(eta));
    }
    Derivation euler;
    for (int i = 0; i < n; ++i)
        euler.coeffs.push_back(Polynomial::variable(n, i));
    // directness witness: theta_E(f) = d*f != 0 while the syzygy part kills f
    if (euler.apply(f) != f.scale(Rat(d))) throw EngineError("Euler identity failed");
    split_gens.push_back(euler);

    std::vector<Derivation> dl = derlog_generators(f);
    SyzygyMatrix A = derivations_as_matrix(split_gens, n);
    SyzygyMatrix B = derivations_as_matrix(dl, n);
    for (const auto& g : dl)
        if (!module_membership(g.coeffs, A, ord)) return false;
    for (const auto& g : split_gens)
        if (!module_membership(g.coeffs, B, ord)) return false;
    return true;
}

bool derivation_membership(const Derivation& d, const std::vector<Derivation>& gens,
                           const MonomialOrder& ord) {
    if (gens.empty()) {
        for (const auto& c : d.coeffs)
            if (!c.is_zero()) return false;
        return true;
    }
    return module_membership(d.coeffs, derivations_as_matrix(gens, gens.front().nvars()), ord);
}

std::string derivation_to_string(const Derivation& d, const std::vector<std::string>& vars) {
    std::string out;
    for (int i = 0; i < d.nvars(); ++i) {
        if (d.coeffs[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + d.coeffs[i].to_string(vars) + ")*d/d" + vars[i];
    }
    if (out.empty()) out = "0";
    return out;
}

}  // namespace sing
