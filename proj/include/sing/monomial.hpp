#pragma once

#include <string>
#include <vector>

#include "sing/errors.hpp"

namespace sing {

/// Exponent vector of a monomial in a fixed number of variables.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    int nvars() const { return static_cast<int>(e.size()); }

    int degree() const {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }

    bool is_one() const {
        for (int x : e)
            if (x != 0) return false;
        return true;
    }

    bool divides(const Monomial& m) const {
        if (e.size() != m.e.size()) throw DimensionMismatch("monomial arity mismatch");
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        if (e.size() != m.e.size()) throw DimensionMismatch("monomial arity mismatch");
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
        return r;
    }

    /// Quotient this / m; caller guarantees divisibility.
    Monomial divide(const Monomial& m) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        if (a.e.size() != b.e.size()) throw DimensionMismatch("monomial arity mismatch");
        Monomial r = a;
        for (std::size_t i = 0; i < a.e.size(); ++i)
            if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
        return r;
    }

    bool operator==(const Monomial& m) const { return e == m.e; }
    bool operator!=(const Monomial& m) const { return e != m.e; }

    /// Fixed internal order used for canonical term storage (first variable
    /// dominant, plain lexicographic). Independent of any MonomialOrder.
    static int lex_compare(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.e.size(); ++i) {
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        }
        return 0;
    }
};

enum class OrderKind {
    GlobalDegRevLex,   ///< well-order: polynomial-ring semantics
    LocalNegDegRevLex  ///< 1 maximal: localization at the origin
};

/// Total order on monomials of a fixed arity. The global kind refines
/// divisibility; under the local kind the constant monomial is maximal,
/// which makes standard bases model the localization at the origin.
struct MonomialOrder {
    OrderKind kind;
    int nvars;

    bool is_global() const { return kind == OrderKind::GlobalDegRevLex; }

    static MonomialOrder global(int nvars) { return {OrderKind::GlobalDegRevLex, nvars}; }
    static MonomialOrder local(int nvars) { return {OrderKind::LocalNegDegRevLex, nvars}; }

    /// Returns +1 when a > b, 0 on equality, -1 when a < b.
    int compare(const Monomial& a, const Monomial& b) const {
        if (a.nvars() != nvars || b.nvars() != nvars)
            throw DimensionMismatch("monomial arity does not match order");
        int da = a.degree(), db = b.degree();
        if (da != db) {
            bool a_wins = is_global() ? (da > db) : (da < db);
            return a_wins ? 1 : -1;
        }
        // reverse lexicographic tie-break: the last variable with differing
        // exponent decides, smaller exponent wins
        for (int i = nvars - 1; i >= 0; --i) {
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        }
        return 0;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

inline int compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    return ord.compare(a, b);
}

}  // namespace sing
