#pragma once

#include <optional>
#include <vector>

#include "vsb/report.hpp"
#include "vsb/subspace.hpp"
#include "vsb/svector.hpp"

namespace vsb {

// A finite-dimensional superalgebra given extensionally by its structure
// constants. No law (associativity, super-commutativity, Jacobi, ...) is
// assumed; the check_* members verify them on basis tuples, which by
// bilinearity decides them exactly.
class StructureAlgebra {
public:
    StructureAlgebra(Space space, std::optional<SuperVector> unit,
                     std::vector<std::vector<SuperVector>> products);

    const Space& space() const { return space_; }
    int dim() const { return space_.dim(); }
    const std::optional<SuperVector>& unit() const { return unit_; }

    const SuperVector& product(int i, int j) const;
    SuperVector product(const SuperVector& u, const SuperVector& v) const;

    SuperVector zero() const { return SuperVector(space_.id); }

    // |e_i e_j| = |e_i| + |e_j| whenever the product is nonzero.
    CheckReport check_parity_additive() const;
    // e_i e_j = eps(e_i, e_j) e_j e_i
    CheckReport check_super_commutative() const;
    // (e_i e_j) e_k = e_i (e_j e_k)
    CheckReport check_associative() const;
    // 1 e_i = e_i 1 = e_i (fails when no unit is declared)
    CheckReport check_unital() const;
    // product read as a bracket: parity additivity, skew-supersymmetry,
    // super Jacobi identity.
    CheckReport check_lie_superalgebra() const;
    // graded Leibniz identity only (no skew-symmetry assumed).
    CheckReport check_leibniz_superalgebra() const;

private:
    Space space_;
    std::optional<SuperVector> unit_;
    std::vector<std::vector<SuperVector>> products_;
};

// A linear endomorphism of a StructureAlgebra's underlying space together
// with a parity; check verifies D(ab) = D(a)b + (-1)^{s|a|} a D(b).
struct DerivationMatrix {
    std::vector<SuperVector> columns; // image of each basis vector
    Parity degree = Parity::Even;

    SuperVector apply(const SuperVector& v) const;
};

CheckReport check_derivation(const DerivationMatrix& d, const StructureAlgebra& algebra,
                             const std::string& label);

} // namespace vsb
