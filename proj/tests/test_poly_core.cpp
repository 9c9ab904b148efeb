#include <random>

#include "doctest.h"
#include "sing/errors.hpp"
#include "sing/parser.hpp"
#include "sing/polynomial.hpp"

using namespace sing;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

Polynomial P(const std::string& s, const std::vector<std::string>& vars = XY) {
    return parse_polynomial(s, vars);
}

Polynomial random_poly(std::mt19937_64& rng, int nvars, int maxdeg, int maxterms) {
    std::uniform_int_distribution<int> dterm(1, maxterms);
    std::uniform_int_distribution<int> dcoef(-5, 5);
    std::uniform_int_distribution<int> dexp(0, maxdeg);
    std::vector<Polynomial::Term> terms;
    int k = dterm(rng);
    for (int t = 0; t < k; ++t) {
        std::vector<int> e(nvars);
        for (int i = 0; i < nvars; ++i) e[i] = dexp(rng);
        terms.emplace_back(Monomial(std::move(e)), Rat(dcoef(rng)));
    }
    return Polynomial::from_terms(nvars, std::move(terms));
}

}  // namespace

TEST_CASE("parse examples") {
    Polynomial f = P("x^4+x^3*y^2+y^6");
    CHECK(f.term_count() == 3);
    CHECK(f.to_string(XY) == "x^4+x^3*y^2+y^6");

    CHECK(P("0").is_zero());
    CHECK(P("(x+y)^2 - x^2 - 2*x*y") == P("y^2"));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(P("x+"), ParseError);
    CHECK_THROWS_AS(P("xy"), ParseError);       // implicit multiplication is an identifier
    CHECK_THROWS_AS(P("x^4+w"), ParseError);    // unknown variable
    CHECK_THROWS_AS(P("1/0"), ParseError);      // zero denominator
    CHECK_THROWS_AS(P("(x"), ParseError);
    CHECK_THROWS_AS(P("x 2"), ParseError);      // trailing input
    // position annotation survives
    try {
        P("x^4+w");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("rational literals and exponents") {
    CHECK(P("1/2*x") == P("x").scale(Rat(1, 2)));
    CHECK(P("-3*x^2") == -P("x^2").scale(Rat(3)));
    CHECK(P("x^0") == P("1"));
    CHECK(P("2/4") == P("1/2"));
}

TEST_CASE("compare_monomials conventions") {
    MonomialOrder g = MonomialOrder::global(2), l = MonomialOrder::local(2);
    Monomial x({1, 0}), y({0, 1}), x2({2, 0}), xy({1, 1}), one({0, 0});
    CHECK(compare_monomials(x, y, g) > 0);    // x > y
    CHECK(compare_monomials(one, x, l) > 0);  // 1 maximal locally
    CHECK(compare_monomials(x2, xy, g) > 0);  // degrevlex tie-break
    CHECK(compare_monomials(x, x, g) == 0);
    CHECK_THROWS_AS(compare_monomials(Monomial({1, 0, 0}), x, g), DimensionMismatch);
}

TEST_CASE("compare_monomials is a strict total order on random samples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dexp(0, 4);
    for (auto kind : {OrderKind::GlobalDegRevLex, OrderKind::LocalNegDegRevLex}) {
        MonomialOrder ord{kind, 3};
        std::vector<Monomial> sample;
        for (int i = 0; i < 60; ++i)
            sample.push_back(Monomial({dexp(rng), dexp(rng), dexp(rng)}));
        for (const auto& a : sample)
            for (const auto& b : sample) {
                int ab = ord.compare(a, b), ba = ord.compare(b, a);
                CHECK(ab == -ba);
                CHECK((ab == 0) == (a == b));
            }
        // transitivity on triples
        for (std::size_t i = 0; i + 2 < sample.size(); ++i) {
            const auto &a = sample[i], &b = sample[i + 1], &c = sample[i + 2];
            if (ord.compare(a, b) > 0 && ord.compare(b, c) > 0) CHECK(ord.compare(a, c) > 0);
        }
        // global kind refines divisibility (well-founded on divisibility chains)
        if (ord.is_global())
            for (const auto& a : sample)
                for (const auto& b : sample)
                    if (a != b && a.divides(b)) CHECK(ord.compare(b, a) > 0);
    }
}

TEST_CASE("differentiate") {
    CHECK(P("x^4+x^3*y^2+y^6").differentiate(0) == P("4*x^3+3*x^2*y^2"));
    CHECK(P("y^6").differentiate(0).is_zero());
    CHECK(P("x^2+y^2-1").differentiate(1) == P("2*y"));
    CHECK_THROWS_AS(P("x").differentiate(5), DimensionMismatch);
}

TEST_CASE("constant_part") {
    CHECK(P("x^2+y^2-1").constant_part() == -1);
    CHECK(parse_polynomial("x*y+x*z+y*z+x*y*z", XYZ).constant_part() == 0);
    CHECK(P("0").constant_part() == 0);
}

TEST_CASE("arithmetic examples") {
    CHECK(P("(x+y)*(x-y)") == P("x^2-y^2"));
    Polynomial f = P("x^3-2*y+1/3");
    CHECK(f + P("0") == f);
    CHECK(P("2*x").scale(Rat(1, 2)) == P("x"));
    CHECK_THROWS_AS(f * parse_polynomial("z", XYZ), DimensionMismatch);
}

TEST_CASE("ring axioms on randomized polynomials") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 60; ++round) {
        Polynomial a = random_poly(rng, 2, 4, 4);
        Polynomial b = random_poly(rng, 2, 4, 4);
        Polynomial c = random_poly(rng, 2, 4, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("Leibniz rule on randomized pairs") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 60; ++round) {
        Polynomial f = random_poly(rng, 3, 3, 4);
        Polynomial g = random_poly(rng, 3, 3, 4);
        for (int i = 0; i < 3; ++i)
            CHECK((f * g).differentiate(i) ==
                  f * g.differentiate(i) + g * f.differentiate(i));
    }
}

TEST_CASE("parse o print is the identity on canonical forms") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 80; ++round) {
        Polynomial f = random_poly(rng, 2, 5, 6);
        CHECK(P(f.to_string(XY)) == f);
    }
    // and on a few crafted shapes
    for (const char* s : {"0", "-x", "1/2", "-1/2*x*y+3", "x^10-y^10"})
        CHECK(P(P(s).to_string(XY)).to_string(XY) == P(s).to_string(XY));
}
