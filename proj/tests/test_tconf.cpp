#include <doctest.h>

#include "vsb/algebroid.hpp"
#include "vsb/kahler.hpp"
#include "vsb/tconf.hpp"

#include "helpers.hpp"

using namespace vsb;

namespace {

// All-zero products and ∂ = 0 over given component dimensions.
TruncatedConformal zero_tconf(int na, int nb) {
    StructureAlgebra a = helpers::poly_truncated(na);
    Space b = even_space(2, nb);
    std::vector<SuperVector> partial(static_cast<size_t>(na), SuperVector(2));
    auto table = [](size_t r, size_t c, int space) {
        return std::vector<std::vector<SuperVector>>(r, std::vector<SuperVector>(c, SuperVector(space)));
    };
    return TruncatedConformal(a, b, partial, table(static_cast<size_t>(na), static_cast<size_t>(nb), 1),
                              table(static_cast<size_t>(nb), static_cast<size_t>(na), 1),
                              table(static_cast<size_t>(nb), static_cast<size_t>(nb), 2),
                              table(static_cast<size_t>(nb), static_cast<size_t>(nb), 1));
}

TruncatedConformal section4_tconf(const SectionFourInput& input) {
    VertexSuperalgebroid v = build_section4_algebroid(input);
    return to_truncated_conformal_unchecked(v);
}

// Block direct sum of two instances (test-only; exercises the monotonicity
// property of the axiom checks).
TruncatedConformal direct_sum(const TruncatedConformal& x, const TruncatedConformal& y) {
    int nax = x.dim_a(), nay = y.dim_a();
    int nbx = x.dim_b(), nby = y.dim_b();
    int na = nax + nay, nb = nbx + nby;

    std::vector<Parity> apar, bpar;
    std::vector<std::string> albl, blbl;
    for (int i = 0; i < nax; ++i) { apar.push_back(x.a_space().parity(i)); albl.push_back("L." + x.a_space().label(i)); }
    for (int i = 0; i < nay; ++i) { apar.push_back(y.a_space().parity(i)); albl.push_back("R." + y.a_space().label(i)); }
    for (int i = 0; i < nbx; ++i) { bpar.push_back(x.b_space().parity(i)); blbl.push_back("L." + x.b_space().label(i)); }
    for (int i = 0; i < nby; ++i) { bpar.push_back(y.b_space().parity(i)); blbl.push_back("R." + y.b_space().label(i)); }
    Space aspace(11, apar, albl), bspace(12, bpar, blbl);

    auto prods = std::vector<std::vector<SuperVector>>(
        static_cast<size_t>(na), std::vector<SuperVector>(static_cast<size_t>(na), SuperVector(11)));
    StructureAlgebra a(aspace, std::nullopt, prods);

    auto remap_a = [&](const SuperVector& v, bool right) {
        SuperVector out(11);
        for (const auto& [i, c] : v.entries()) out.set(i + (right ? nax : 0), c);
        return out;
    };
    auto remap_b = [&](const SuperVector& v, bool right) {
        SuperVector out(12);
        for (const auto& [i, c] : v.entries()) out.set(i + (right ? nbx : 0), c);
        return out;
    };

    std::vector<SuperVector> partial(static_cast<size_t>(na), SuperVector(12));
    for (int i = 0; i < nax; ++i) partial[static_cast<size_t>(i)] = remap_b(x.partial_table()[static_cast<size_t>(i)], false);
    for (int i = 0; i < nay; ++i) partial[static_cast<size_t>(nax + i)] = remap_b(y.partial_table()[static_cast<size_t>(i)], true);

    auto zero_ab = std::vector<std::vector<SuperVector>>(
        static_cast<size_t>(na), std::vector<SuperVector>(static_cast<size_t>(nb), SuperVector(11)));
    auto zero_ba = std::vector<std::vector<SuperVector>>(
        static_cast<size_t>(nb), std::vector<SuperVector>(static_cast<size_t>(na), SuperVector(11)));
    auto zero_bb0 = std::vector<std::vector<SuperVector>>(
        static_cast<size_t>(nb), std::vector<SuperVector>(static_cast<size_t>(nb), SuperVector(12)));
    auto zero_bb1 = std::vector<std::vector<SuperVector>>(
        static_cast<size_t>(nb), std::vector<SuperVector>(static_cast<size_t>(nb), SuperVector(11)));

    for (int side = 0; side < 2; ++side) {
        const TruncatedConformal& t = side ? y : x;
        int na_t = side ? nay : nax;
        int nb_t = side ? nby : nbx;
        int aoff = side ? nax : 0;
        int boff = side ? nbx : 0;
        for (int i = 0; i < na_t; ++i)
            for (int u = 0; u < nb_t; ++u) {
                zero_ab[static_cast<size_t>(aoff + i)][static_cast<size_t>(boff + u)] =
                    remap_a(t.a_part(t.prod0(i, t.dim_a() + u)), side);
                zero_ba[static_cast<size_t>(boff + u)][static_cast<size_t>(aoff + i)] =
                    remap_a(t.a_part(t.prod0(t.dim_a() + u, i)), side);
            }
        for (int u = 0; u < nb_t; ++u)
            for (int v = 0; v < nb_t; ++v) {
                zero_bb0[static_cast<size_t>(boff + u)][static_cast<size_t>(boff + v)] =
                    remap_b(t.b_part(t.prod0(t.dim_a() + u, t.dim_a() + v)), side);
                zero_bb1[static_cast<size_t>(boff + u)][static_cast<size_t>(boff + v)] =
                    remap_a(t.a_part(t.prod1(t.dim_a() + u, t.dim_a() + v)), side);
            }
    }
    return TruncatedConformal(a, bspace, partial, zero_ab, zero_ba, zero_bb0, zero_bb1);
}

} // namespace

TEST_CASE("zero products satisfy every axiom") {
    auto c = zero_tconf(2, 3);
    CHECK(c.check_derivation_axiom().passed());
    CHECK(c.check_supercommutativity_axiom().passed());
    CHECK(c.check_superassociativity_axiom().passed());
}

TEST_CASE("example-family instances satisfy the axioms") {
    SUBCASE("A = Q[x]/(x^2)") {
        auto c = section4_tconf(helpers::sec4_poly(2));
        CHECK(c.check_well_formed().passed());
        CHECK(c.check_derivation_axiom().passed());
        CHECK(c.check_supercommutativity_axiom().passed());
        CHECK(c.check_superassociativity_axiom().passed());
    }
    SUBCASE("A = Q[x]/(x^3)") {
        auto c = section4_tconf(helpers::sec4_poly(3));
        CHECK(c.check_all().passed());
    }
    SUBCASE("free fermion") {
        auto c = section4_tconf(helpers::sec4_free(true));
        CHECK(c.check_all().passed());
    }
}

TEST_CASE("perturbed product fails with a replayable witness") {
    auto input = helpers::sec4_poly(2);
    VertexSuperalgebroid v = build_section4_algebroid(input);

    // corrupt one bracket entry: [gamma_0, gamma_0] += gamma_0
    auto bracket = v.bracket_table();
    bracket[0][0].add(0, rat(1));
    VertexSuperalgebroid bad(v.algebra(), v.gamma(), v.star_table(), bracket, v.pairing_table(),
                             v.pi_table(), v.partial_table());
    TruncatedConformal c = to_truncated_conformal_unchecked(bad);

    CheckReport report = c.check_supercommutativity_axiom();
    CHECK(!report.passed());
    const CheckItem* failed = nullptr;
    for (const auto& item : report.items())
        if (!item.passed) failed = &item;
    REQUIRE(failed != nullptr);
    REQUIRE(failed->witness.has_value());

    // replay: re-evaluate both sides at the witness indices
    const auto& w = *failed->witness;
    if (failed->label == "Eq 2.8: u0 v = eps(u,v)(-v0 u + pd(v1 u))") {
        int u = static_cast<int>(w.indices[0]);
        int vv = static_cast<int>(w.indices[1]);
        SuperVector lhs = c.prod0(u, vv);
        SuperVector rhs = c.partial_of(c.prod1(vv, u)) - c.prod0(vv, u);
        rhs *= Rational(epsilon_sign(c.parity(u), c.parity(vv)));
        CHECK(c.format_c(lhs) == w.lhs);
        CHECK(c.format_c(rhs) == w.rhs);
        CHECK(lhs != rhs);
    }
}

TEST_CASE("axiom checks are monotone under direct sums") {
    auto cx = section4_tconf(helpers::sec4_poly(2));
    auto cy = section4_tconf(helpers::sec4_free(true));
    CHECK(cx.check_all().passed());
    CHECK(cy.check_all().passed());
    auto sum = direct_sum(cx, cy);
    CHECK(sum.check_derivation_axiom().passed());
    CHECK(sum.check_supercommutativity_axiom().passed());
    CHECK(sum.check_superassociativity_axiom().passed());
}
