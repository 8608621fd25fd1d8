#pragma once

#include <vector>

#include "vsb/algebra.hpp"
#include "vsb/algebroid.hpp"
#include "vsb/bmodule.hpp"
#include "vsb/report.hpp"
#include "vsb/subspace.hpp"

namespace vsb {

// Input for the example family B = (A⊗g) ⊕ A∂A: a commutative unital algebra
// A (purely even), a Lie superalgebra g acting on A by derivations (odd part
// acting as zero), and an even derivation d: g → A.
struct SectionFourInput {
    StructureAlgebra a;
    StructureAlgebra g; // product table read as the bracket
    std::vector<DerivationMatrix> pi; // per g basis, endomorphism of A
    std::vector<SuperVector> d;       // per g basis, element of A

    CheckReport validate() const;
};

// The A-module of Kähler 1-differentials: the free A-module on symbols ∂e_j
// modulo the Leibniz relations ∂(aa') - a∂a' - a'∂a and their A-multiples,
// with an exact reduction map onto non-pivot coordinate representatives.
class KahlerModule {
public:
    explicit KahlerModule(const StructureAlgebra& a);

    const Space& omega() const { return omega_; }
    int dim() const { return omega_.dim(); }
    const Space& ambient() const { return ambient_; }
    const Subspace& relations() const { return relations_; }

    // Canonical image of an ambient free-module element in Ω coordinates.
    SuperVector reduce(const SuperVector& ambient_vec) const;
    // a ∂ b for a, b ∈ A, as an Ω element.
    SuperVector a_partial_b(const SuperVector& a, const SuperVector& b) const;
    // ∂ a = 1 ∂ a.
    SuperVector partial(const SuperVector& a) const;
    // A-module action a · w on Ω.
    SuperVector module_mult(const SuperVector& a, const SuperVector& w) const;
    // ⟨τ, a∂b⟩ = a τ(b) for a derivation τ of A, evaluated on an Ω element.
    SuperVector pair_derivation(const DerivationMatrix& tau, const SuperVector& w) const;

    int ambient_coord(int i, int j) const; // e_i ∂ e_j
    SuperVector lift(const SuperVector& w) const; // Ω -> ambient representative

private:
    StructureAlgebra a_;
    Space ambient_;
    Subspace relations_;
    Space omega_;
    std::vector<int> rep_coords_; // ambient coordinate of each Ω basis vector
    std::map<int, int> coord_to_omega_;
};

KahlerModule build_kahler(const StructureAlgebra& a);

// Assembles the vertex A-superalgebroid on Γ = (A⊗g) ⊕ Ω: star action,
// bracket, pairing, anchor and ∂ per the example family's formulas. Throws
// InvariantViolationError when the input fails validate().
VertexSuperalgebroid build_section4_algebroid(const SectionFourInput& input);

// L(1)(a⊗g) = ga + a·d(g), L(1)|_Ω = 0.
BModuleData build_section4_l1(const SectionFourInput& input, const VertexSuperalgebroid& v);

} // namespace vsb
