#pragma once

// Shared constructors for the small algebra instances the tests exercise.

#include <optional>
#include <string>
#include <vector>

#include "vsb/algebra.hpp"
#include "vsb/kahler.hpp"
#include "vsb/svector.hpp"

namespace helpers {

using namespace vsb;

struct Quad {
    int i, j, k;
    long num, den = 1;
};

inline StructureAlgebra algebra_from_constants(Space space, std::optional<int> unit_idx,
                                               const std::vector<Quad>& quads) {
    int n = space.dim();
    std::vector<std::vector<SuperVector>> table(
        static_cast<size_t>(n), std::vector<SuperVector>(static_cast<size_t>(n), SuperVector(space.id)));
    for (const auto& q : quads)
        table[static_cast<size_t>(q.i)][static_cast<size_t>(q.j)].add(q.k, rat(q.num, q.den));
    std::optional<SuperVector> unit;
    if (unit_idx) unit = basis_vector(space.id, *unit_idx);
    return StructureAlgebra(std::move(space), std::move(unit), std::move(table));
}

// Truncated polynomial algebra Q[x]/(x^trunc), basis 1, x, ..., x^{trunc-1}.
inline StructureAlgebra poly_truncated(int trunc, int space_id = 1) {
    std::vector<std::string> labels;
    for (int i = 0; i < trunc; ++i)
        labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    Space space = even_space(space_id, trunc, labels);
    std::vector<Quad> quads;
    for (int i = 0; i < trunc; ++i)
        for (int j = 0; j < trunc; ++j)
            if (i + j < trunc) quads.push_back({i, j, i + j, 1});
    return algebra_from_constants(space, 0, quads);
}

// Grassmann algebra on one odd generator: basis {1, theta}, theta^2 = 0.
inline StructureAlgebra grassmann_one(int space_id = 1) {
    Space space(space_id, {Parity::Even, Parity::Odd}, {"1", "theta"});
    std::vector<Quad> quads = {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}};
    return algebra_from_constants(space, 0, quads);
}

// x^k d/dx on Q[x]/(x^trunc): x^m -> m x^{m+k-1}. A derivation for k >= 1.
inline DerivationMatrix power_ddx(const StructureAlgebra& a, int k) {
    DerivationMatrix m;
    m.degree = Parity::Even;
    int n = a.dim();
    for (int col = 0; col < n; ++col) {
        SuperVector image(a.space().id);
        int target = col + k - 1;
        if (col > 0 && target < n) image.set(target, rat(col));
        m.columns.push_back(image);
    }
    return m;
}

inline DerivationMatrix zero_derivation(const StructureAlgebra& a, Parity degree = Parity::Even) {
    DerivationMatrix m;
    m.degree = degree;
    m.columns.assign(static_cast<size_t>(a.dim()), SuperVector(a.space().id));
    return m;
}

// A = Q, 1-dimensional g acting trivially, d = 0.
inline SectionFourInput sec4_free(bool odd_generator) {
    SectionFourInput in{algebra_from_constants(even_space(1, 1, {"1"}), 0, {{0, 0, 0, 1}}),
                        StructureAlgebra(Space(2, {odd_generator ? Parity::Odd : Parity::Even}, {"g"}),
                                         std::nullopt,
                                         {{SuperVector(2)}}),
                        {},
                        {}};
    in.pi = {zero_derivation(in.a, odd_generator ? Parity::Odd : Parity::Even)};
    in.d = {SuperVector(1)};
    return in;
}

// A = Q[x]/(x^trunc), g = Q·(x d/dx), d(g) given as an element of A.
inline SectionFourInput sec4_poly(int trunc, SuperVector d_of_g = SuperVector(1)) {
    SectionFourInput in{poly_truncated(trunc),
                        StructureAlgebra(even_space(2, 1, {"g"}), std::nullopt, {{SuperVector(2)}}),
                        {},
                        {}};
    in.pi = {power_ddx(in.a, 1)};
    in.d = {d_of_g};
    return in;
}

// A = Q[x]/(x^3), g = span{x d/dx, x^2 d/dx} with [g1, g2] = g2.
inline SectionFourInput sec4_nonabelian(SuperVector d1 = SuperVector(1),
                                        SuperVector d2 = SuperVector(1)) {
    Space gs = even_space(2, 2, {"g1", "g2"});
    std::vector<Quad> gbr = {{0, 1, 1, 1}, {1, 0, 1, -1}};
    SectionFourInput in{poly_truncated(3),
                        algebra_from_constants(gs, std::nullopt, gbr),
                        {},
                        {}};
    in.pi = {power_ddx(in.a, 1), power_ddx(in.a, 2)};
    in.d = {d1, d2};
    return in;
}

} // namespace helpers
