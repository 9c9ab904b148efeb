#include <random>

#include "doctest.h"
#include "sing/errors.hpp"
#include "sing/module_syzygy.hpp"
#include "sing/parser.hpp"

using namespace sing;

namespace {

const std::vector<std::string> XY{"x", "y"};

Polynomial P(const std::string& s) { return parse_polynomial(s, XY); }

ModuleElement col(std::initializer_list<const char*> entries) {
    ModuleElement v;
    for (const char* e : entries) v.push_back(P(e));
    return v;
}

bool same_column_space(const SyzygyMatrix& A, const SyzygyMatrix& B, const MonomialOrder& ord) {
    for (const auto& c : A.columns)
        if (!module_membership(c, B, ord)) return false;
    for (const auto& c : B.columns)
        if (!module_membership(c, A, ord)) return false;
    return true;
}

std::vector<Polynomial> list(const Polynomial& f, bool f_first) {
    std::vector<Polynomial> gens;
    if (f_first) gens.push_back(f);
    gens.push_back(f.differentiate(0));
    gens.push_back(f.differentiate(1));
    if (!f_first) gens.push_back(f);
    return gens;
}

}  // namespace

TEST_CASE("syzygy of a regular sequence is Koszul") {
    MonomialOrder g = MonomialOrder::global(2);
    SyzygyMatrix Z = syzygies({P("x"), P("y")}, g);
    SyzygyMatrix K{{col({"-y", "x"})}, {P("x"), P("y")}};
    CHECK(same_column_space(Z, K, g));
}

TEST_CASE("circle syzygies match the displayed matrix") {
    // generators ordered (f, f_x, f_y); the displayed matrix carries the
    // f-row at the bottom, so its columns are permuted accordingly
    MonomialOrder g = MonomialOrder::global(2);
    Polynomial f = P("x^2+y^2-1");
    SyzygyMatrix Z = syzygies(list(f, true), g);
    SyzygyMatrix paper{{col({"0", "-y", "x"}), col({"-2*x", "x^2-1", "x*y"}),
                       col({"-2*y", "x*y", "y^2-1"})},
                      list(f, true)};
    CHECK(same_column_space(Z, paper, g));
}

TEST_CASE("rank-zero evaluation for the non-quasihomogeneous curve") {
    MonomialOrder l = MonomialOrder::local(2);
    Polynomial f = P("x^4+x^3*y^2+y^6");
    SyzygyMatrix Z = syzygies(list(f, false), l);
    CHECK(!Z.columns.empty());
    CHECK(rational_rank(evaluate_at_zero(Z)) == 0);
}

TEST_CASE("koszul_boundaries definition") {
    SyzygyMatrix B = koszul_boundaries({P("x"), P("y")});
    REQUIRE(B.columns.size() == 1);
    CHECK(B.columns[0][0] == P("y"));
    CHECK(B.columns[0][1] == P("-x"));

    Polynomial f = P("x^3-y^2");
    SyzygyMatrix B3 = koszul_boundaries(list(f, true));
    CHECK(B3.columns.size() == 3);  // C(3,2)

    // zero entries give the obvious monomial multiples
    SyzygyMatrix Bz = koszul_boundaries({P("x"), P("0")});
    REQUIRE(Bz.columns.size() == 1);
    CHECK(Bz.columns[0][0].is_zero());
    CHECK(Bz.columns[0][1] == P("-x"));
}

TEST_CASE("boundaries are cycles") {
    for (const char* s : {"x^3-y^2", "x^4+x^3*y^2+y^6", "x^5+y^5-x^2*y^2"}) {
        Polynomial f = P(s);
        MonomialOrder l = MonomialOrder::local(2);
        std::vector<Polynomial> gens = list(f, true);
        SyzygyMatrix Z = syzygies(gens, l);
        SyzygyMatrix B = koszul_boundaries(gens);
        for (const auto& c : B.columns) CHECK(module_membership(c, Z, l));
    }
}

TEST_CASE("module_membership examples") {
    MonomialOrder g = MonomialOrder::global(2);
    // omega_0 in <omega_1, omega_2> for the circle, on the derivation side
    SyzygyMatrix M{{col({"x^2-1", "x*y"}), col({"x*y", "y^2-1"})}, {}};
    M.target_gens = {Polynomial::zero(2), Polynomial::zero(2)};
    CHECK(module_membership(col({"-y", "x"}), M, g));

    CHECK(module_membership(col({"0", "0"}), M, g));

    SyzygyMatrix single{{col({"x"})}, {Polynomial::zero(2)}};
    CHECK(!module_membership(col({"1"}), single, g));  // degree obstruction
}

TEST_CASE("min_gens_finite_length examples") {
    MonomialOrder l = MonomialOrder::local(2);
    // node: H1 is cyclic
    Polynomial node = P("x^2+y^2");
    std::vector<Polynomial> gens = list(node, true);
    SyzygyMatrix Z = syzygies(gens, l);
    SyzygyMatrix B = koszul_boundaries(gens);
    CHECK(min_gens_finite_length(Z, B, l) == 1);

    // num = den -> 0
    CHECK(min_gens_finite_length(B, B, l) == 0);

    // smooth at the origin: unit Tjurina ideal, H1 = 0
    Polynomial circ = P("x^2+y^2-1");
    std::vector<Polynomial> cg = list(circ, true);
    CHECK(min_gens_finite_length(syzygies(cg, l), koszul_boundaries(cg), l) == 0);
}

TEST_CASE("min_gens detects infinite length") {
    MonomialOrder l = MonomialOrder::local(2);
    Polynomial f = P("x^2*y^2");  // non-isolated
    std::vector<Polynomial> gens = list(f, true);
    SyzygyMatrix Z = syzygies(gens, l);
    SyzygyMatrix B = koszul_boundaries(gens);
    CHECK_THROWS_AS(min_gens_finite_length(Z, B, l), NotFiniteLength);
}

TEST_CASE("evaluate_at_zero and rational_rank") {
    SyzygyMatrix zero32{{col({"x", "y", "x*y"}), col({"y^2", "0", "x^2"})}, {}};
    zero32.target_gens.assign(3, Polynomial::zero(2));
    auto M = evaluate_at_zero(zero32);
    CHECK(rational_rank(M) == 0);

    std::vector<std::vector<Rat>> id2{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    CHECK(rational_rank(id2) == 2);

    // constant part of the circle matrix
    SyzygyMatrix circle{{col({"-y", "x", "0"}), col({"x^2-1", "x*y", "-2*x"}),
                        col({"x*y", "y^2-1", "-2*y"})},
                       {}};
    circle.target_gens.assign(3, Polynomial::zero(2));
    CHECK(rational_rank(evaluate_at_zero(circle)) == 2);

    std::vector<std::vector<Rat>> frac{{Rat(1, 2), Rat(1, 3)}, {Rat(3), Rat(2)}};
    CHECK(rational_rank(frac) == 1);
}

TEST_CASE("two-generation of plane-curve syzygies") {
    // The syzygy module of (f_x, f_y, f) is free of rank 2 for reduced
    // plane curves with isolated singularities. A basis need not sit
    // among the computed columns (the choice is non-constructive), so the
    // checkable content is: two generators suffice locally at the origin,
    // and a generating pair of columns exists where the search finds one.
    MonomialOrder g = MonomialOrder::global(2), l = MonomialOrder::local(2);
    for (const char* s : {"x^4+x^3*y^2+y^6", "x^5+y^5-x^2*y^2", "x^4+y^2", "x^3+y^4"}) {
        Polynomial f = P(s);
        SyzygyMatrix Z = syzygies(list(f, false), l);
        SyzygyMatrix den{{}, Z.target_gens};
        for (const auto& c : Z.columns) {
            for (int v = 0; v < 2; ++v) {
                Monomial xv = Monomial::one(2);
                xv.e[v] = 1;
                ModuleElement m;
                for (const auto& p : c) m.push_back(p.mul_term(xv, Rat(1)));
                den.columns.push_back(std::move(m));
            }
        }
        CHECK(min_gens_finite_length(Z, den, l) == 2);
    }
    for (const char* s : {"x^4+x^3*y^2+y^6", "x^4+y^2", "x^3+y^4"}) {
        Polynomial f = P(s);
        SyzygyMatrix Z = syzygies(list(f, false), g);
        SyzygyMatrix m = minimalize_columns(Z, g);
        if (m.columns.size() != 2) {
            auto pair = two_generator_subset(Z, g);
            CHECK(pair.size() == 2);
        } else {
            CHECK(m.columns.size() == 2);
        }
    }
}

TEST_CASE("random syzygy columns annihilate their generators") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> dcoef(-3, 3);
    std::uniform_int_distribution<int> dexp(0, 3);
    MonomialOrder l = MonomialOrder::local(2), g = MonomialOrder::global(2);
    for (int round = 0; round < 40; ++round) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 3; ++k) {
            std::vector<Polynomial::Term> ts;
            for (int t = 0; t < 3; ++t)
                ts.emplace_back(Monomial({dexp(rng), dexp(rng)}), Rat(dcoef(rng)));
            gens.push_back(Polynomial::from_terms(2, std::move(ts)));
        }
        bool all_zero = true;
        for (const auto& p : gens)
            if (!p.is_zero()) all_zero = false;
        if (all_zero) continue;
        // syzygies() itself asserts sum a_i g_i = 0 on every column
        SyzygyMatrix Z1 = syzygies(gens, round % 2 ? l : g);
        for (const auto& c : Z1.columns) {
            Polynomial acc(2);
            for (std::size_t i = 0; i < gens.size(); ++i) acc = acc + c[i] * gens[i];
            CHECK(acc.is_zero());
        }
    }
}
