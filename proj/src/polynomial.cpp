#include "sing/polynomial.hpp"

#include <algorithm>

#include "sing/errors.hpp"

namespace sing {

Polynomial Polynomial::constant(int nvars, const Rat& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace_back(Monomial::one(nvars), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw DimensionMismatch("variable index out of range");
    Monomial m = Monomial::one(nvars);
    m.e[i] = 1;
    return monomial(std::move(m), Rat(1));
}

Polynomial Polynomial::monomial(Monomial m, Rat c) {
    Polynomial p(m.nvars());
    if (c != 0) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
    Polynomial p(nvars);
    for (const auto& [m, c] : terms)
        if (m.nvars() != nvars) throw DimensionMismatch("term arity mismatch");
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return Monomial::lex_compare(a.first, b.first) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second += t.second;
            if (out.back().second == 0) out.pop_back();
        } else if (t.second != 0) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

void Polynomial::check_arity(const Polynomial& g) const {
    if (nvars_ != g.nvars_) throw DimensionMismatch("polynomial arity mismatch");
}

Rat Polynomial::constant_part() const {
    if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
    return Rat(0);
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int Polynomial::order_at_origin() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int md = m.degree();
        if (d < 0 || md < d) d = md;
    }
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

Polynomial Polynomial::differentiate(int i) const {
    if (i < 0 || i >= nvars_) throw DimensionMismatch("derivative index out of range");
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
        if (m.e[i] == 0) continue;
        Monomial d = m;
        d.e[i] -= 1;
        out.emplace_back(std::move(d), c * m.e[i]);
    }
    return from_terms(nvars_, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    check_arity(g);
    std::vector<Term> out = terms_;
    out.insert(out.end(), g.terms_.begin(), g.terms_.end());
    return from_terms(nvars_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::operator-() const {
    Polynomial p(nvars_);
    p.terms_ = terms_;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

Polynomial Polynomial::scale(const Rat& c) const {
    if (c == 0) return Polynomial(nvars_);
    Polynomial p(nvars_);
    p.terms_ = terms_;
    for (auto& [m, co] : p.terms_) co *= c;
    return p;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rat& c) const {
    if (c == 0) return Polynomial(nvars_);
    Polynomial p(nvars_);
    p.terms_.reserve(terms_.size());
    for (const auto& [mo, co] : terms_) p.terms_.emplace_back(mo * m, co * c);
    return p;  // multiplying by a monomial preserves the internal sort
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    check_arity(g);
    std::vector<Term> out;
    out.reserve(terms_.size() * g.terms_.size());
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : g.terms_) out.emplace_back(ma * mb, ca * cb);
    return from_terms(nvars_, std::move(out));
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r = constant(nvars_, Rat(1));
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& vars) const {
    if (static_cast<int>(vars.size()) != nvars_)
        throw DimensionMismatch("variable-name count mismatch");
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (!out.empty()) {
            out += (a < 0) ? "-" : "+";
            if (a < 0) a = -a;
        } else if (a < 0) {
            out += "-";
            a = -a;
        }
        std::string mon;
        for (int i = 0; i < nvars_; ++i) {
            if (m.e[i] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += vars[i];
            if (m.e[i] > 1) mon += "^" + std::to_string(m.e[i]);
        }
        if (mon.empty()) {
            out += rat_to_string(a);
        } else {
            if (a != 1) out += rat_to_string(a) + "*";
            out += mon;
        }
    }
    return out;
}

}  // namespace sing
