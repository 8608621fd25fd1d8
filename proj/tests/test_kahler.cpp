#include <doctest.h>

#include "vsb/errors.hpp"
#include "vsb/kahler.hpp"

#include "helpers.hpp"

using namespace vsb;

TEST_CASE("Kahler differentials of small truncated polynomial algebras") {
    SUBCASE("A = Q: Omega = 0") {
        auto a = helpers::poly_truncated(1);
        KahlerModule k(a);
        CHECK(k.dim() == 0);
        CHECK(k.partial(basis_vector(1, 0)).is_zero());
    }
    SUBCASE("A = Q[x]/(x^2): dim 1, x dx = 0") {
        auto a = helpers::poly_truncated(2);
        KahlerModule k(a);
        CHECK(k.dim() == 1);
        SuperVector dx = k.partial(basis_vector(1, 1));
        CHECK(!dx.is_zero());
        CHECK(k.module_mult(basis_vector(1, 1), dx).is_zero());        // x dx = 0
        CHECK(k.partial(basis_vector(1, 0)).is_zero());                // d1 = 0
    }
    SUBCASE("A = Q[x]/(x^3): dim 2, x^2 dx = 0") {
        auto a = helpers::poly_truncated(3);
        KahlerModule k(a);
        CHECK(k.dim() == 2);
        SuperVector dx = k.partial(basis_vector(1, 1));
        SuperVector xdx = k.module_mult(basis_vector(1, 1), dx);
        CHECK(!dx.is_zero());
        CHECK(!xdx.is_zero());
        CHECK(k.module_mult(basis_vector(1, 2), dx).is_zero());        // x^2 dx = 0
        // d(x^2) = 2x dx
        CHECK(k.partial(basis_vector(1, 2)) == rat(2) * xdx);
        // d(x^3) = d(0) = 0 and 3x^2 dx = 0 agree
        CHECK(k.module_mult(basis_vector(1, 2), dx) == SuperVector(k.omega().id));
    }
}

TEST_CASE("pairing of a derivation with Omega") {
    auto a = helpers::poly_truncated(3);
    KahlerModule k(a);
    DerivationMatrix xddx = helpers::power_ddx(a, 1);
    SuperVector dx = k.partial(basis_vector(1, 1));
    // <x d/dx, 1 dx> = 1 * (x d/dx)(x) = x
    CHECK(k.pair_derivation(xddx, dx) == basis_vector(1, 1));
    // <x d/dx, x dx> = x * x = x^2
    SuperVector xdx = k.module_mult(basis_vector(1, 1), dx);
    CHECK(k.pair_derivation(xddx, xdx) == basis_vector(1, 2));
}

TEST_CASE("assembled example-family tables") {
    SUBCASE("free boson: Gamma is one even generator, Omega = 0") {
        auto v = build_section4_algebroid(helpers::sec4_free(false));
        CHECK(v.dim_gamma() == 1);
        CHECK(v.gamma().parity(0) == Parity::Even);
        CHECK(v.bracket_of(basis_vector(v.gamma().id, 0), basis_vector(v.gamma().id, 0)).is_zero());
        CHECK(v.pairing_of(basis_vector(v.gamma().id, 0), basis_vector(v.gamma().id, 0)).is_zero());
    }
    SUBCASE("free fermion: odd generator") {
        auto v = build_section4_algebroid(helpers::sec4_free(true));
        CHECK(v.dim_gamma() == 1);
        CHECK(v.gamma().parity(0) == Parity::Odd);
    }
    SUBCASE("A = Q[x]/(x^2), g = x d/dx") {
        auto v = build_section4_algebroid(helpers::sec4_poly(2));
        CHECK(v.dim_gamma() == 3); // 1⊗g, x⊗g, dx

        SuperVector one_g = basis_vector(v.gamma().id, 0);
        SuperVector dx = basis_vector(v.gamma().id, 2);

        // [1⊗g, 1 dx] = 1(g·1)dx + 1 d(1·(g·x)) = d(x) = dx
        CHECK(v.bracket_of(one_g, dx) == dx);
        // <1⊗g, 1 dx> = 1·1·(g·x) = x
        CHECK(v.pairing_of(one_g, dx) == basis_vector(1, 1));
        // <dx, dx> = 0
        CHECK(v.pairing_of(dx, dx).is_zero());
        // x*(1⊗g) = x⊗g + (g·x)d1 + (g·1)dx = x⊗g + x d(1) = x⊗g
        CHECK(v.star_act(basis_vector(1, 1), one_g) == basis_vector(v.gamma().id, 1));
    }
    SUBCASE("star compatibility with the bracket on Omega") {
        auto v = build_section4_algebroid(helpers::sec4_poly(3));
        // [v, pd(b)] = pd(pi(v)(b)) on every generator pair
        for (int j = 0; j < v.dim_gamma(); ++j)
            for (int b = 0; b < v.dim_a(); ++b) {
                SuperVector lhs = v.bracket_of(basis_vector(v.gamma().id, j),
                                               v.partial_table()[static_cast<size_t>(b)]);
                SuperVector rhs = v.partial_of(
                    v.pi_act(basis_vector(v.gamma().id, j), basis_vector(1, b)));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("L(1) data of the example family") {
    SUBCASE("d = 0 over A = Q gives L(1) = 0") {
        auto input = helpers::sec4_free(false);
        auto v = build_section4_algebroid(input);
        auto l1 = build_section4_l1(input, v);
        for (const auto& col : l1.l1) CHECK(col.is_zero());
    }
    SUBCASE("A = Q[x]/(x^2), d(g) = 1") {
        auto input = helpers::sec4_poly(2, basis_vector(1, 0));
        auto v = build_section4_algebroid(input);
        auto l1 = build_section4_l1(input, v);
        // L(1)(1⊗g) = g·1 + 1·1 = 1
        CHECK(l1.l1[0] == basis_vector(1, 0));
        // L(1)(x⊗g) = g·x + x·1 = 2x
        CHECK(l1.l1[1] == basis_vector(1, 1, rat(2)));
        // L(1)|_Omega = 0
        CHECK(l1.l1[2].is_zero());
    }
}

TEST_CASE("input invariants are enforced") {
    SUBCASE("non-derivation action is rejected") {
        auto input = helpers::sec4_poly(2);
        input.pi = {helpers::power_ddx(input.a, 0)}; // plain d/dx, not a derivation here
        CHECK(!input.validate().passed());
        CHECK_THROWS_AS((void)build_section4_algebroid(input), InvariantViolationError);
    }
    SUBCASE("odd generator must act as zero") {
        auto input = helpers::sec4_free(true);
        input.pi = {helpers::power_ddx(input.a, 1)}; // zero matrix on Q anyway
        input.pi[0].columns[0] = basis_vector(1, 0); // force a nonzero action
        CHECK(!input.validate().passed());
    }
    SUBCASE("d must satisfy the derivation law on a nonabelian g") {
        auto bad = helpers::sec4_nonabelian(SuperVector(1), basis_vector(1, 0));
        // d(g2) = 1: d([g1,g2]) = d(g2) = 1 but g1 d(g2) - g2 d(g1) = 0
        CHECK(!bad.validate().passed());
        auto good = helpers::sec4_nonabelian(basis_vector(1, 1), basis_vector(1, 2));
        CHECK(good.validate().passed());
    }
}
