#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sing/monomial.hpp"
#include "sing/rational.hpp"

namespace sing {

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are stored sorted by the fixed internal lexicographic order
/// (descending), independent of any MonomialOrder, so a Polynomial is an
/// order-agnostic value: the same f is used under global and local
/// semantics. No stored coefficient is zero; equal polynomials compare
/// equal structurally.
class Polynomial {
public:
    using Term = std::pair<Monomial, Rat>;

    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Rat& c);
    static Polynomial variable(int nvars, int i);
    static Polynomial monomial(Monomial m, Rat c);
    /// Builds the canonical form from an arbitrary term list (merges
    /// duplicates, drops zeros, sorts).
    static Polynomial from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of the constant monomial (0 if absent).
    Rat constant_part() const;

    /// Max total degree over the support; -1 for the zero polynomial.
    int total_degree() const;

    /// Min total degree over the support (the order of the power series).
    int order_at_origin() const;

    bool is_homogeneous() const;

    /// Exact formal partial derivative; i is 0-based.
    Polynomial differentiate(int i) const;

    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial operator-() const;
    Polynomial scale(const Rat& c) const;
    Polynomial mul_term(const Monomial& m, const Rat& c) const;
    Polynomial pow(unsigned k) const;

    bool operator==(const Polynomial& g) const {
        return nvars_ == g.nvars_ && terms_ == g.terms_;
    }
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    /// Canonical text form; parse(to_string()) is the identity.
    std::string to_string(const std::vector<std::string>& vars) const;

private:
    void normalize();
    void check_arity(const Polynomial& g) const;

    int nvars_;
    std::vector<Term> terms_;
};

}  // namespace sing
