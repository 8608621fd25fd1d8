#pragma once

#include <vector>

#include "vsb/algebra.hpp"
#include "vsb/report.hpp"
#include "vsb/svector.hpp"

namespace vsb {

// A 1-truncated conformal superalgebra C = C0 ⊕ C1 with an even map
// ∂: C0 → C1 and bilinear products u_0 v, u_1 v. C0 carries a full
// StructureAlgebra (its product is not part of the truncated-conformal data;
// the algebroid correspondence uses it). Products are stored over the unified
// index space C = C0 ⊕ C1 with the structural zeros (a_i a' = 0, prod1
// supported on C1 x C1 only) enforced by construction.
class TruncatedConformal {
public:
    // Block tables: p0_ab: C0 x C1 -> C0, p0_ba: C1 x C0 -> C0,
    // p0_bb: C1 x C1 -> C1, p1_bb: C1 x C1 -> C0. partial: per C0 basis
    // index, a vector in C1.
    TruncatedConformal(StructureAlgebra a0, Space c1, std::vector<SuperVector> partial,
                       std::vector<std::vector<SuperVector>> p0_ab,
                       std::vector<std::vector<SuperVector>> p0_ba,
                       std::vector<std::vector<SuperVector>> p0_bb,
                       std::vector<std::vector<SuperVector>> p1_bb);

    const StructureAlgebra& algebra() const { return a0_; }
    const Space& a_space() const { return a0_.space(); }
    const Space& b_space() const { return c1_; }
    const Space& c_space() const { return c_; }

    int dim_a() const { return a0_.dim(); }
    int dim_b() const { return c1_.dim(); }
    int dim_c() const { return c_.dim(); }

    bool is_a_index(int c_idx) const { return c_idx < dim_a(); }
    Parity parity(int c_idx) const { return c_.parity(c_idx); }

    // Embeddings and projections between component spaces and C.
    SuperVector embed_a(const SuperVector& a) const;
    SuperVector embed_b(const SuperVector& b) const;
    SuperVector a_part(const SuperVector& c) const;
    SuperVector b_part(const SuperVector& c) const;
    SuperVector basis_c(int c_idx) const { return basis_vector(c_.id, c_idx); }

    // Bilinear products on C (i = 0, 1) and the derivation, all in C coords.
    SuperVector prod0(int i, int j) const;
    SuperVector prod1(int i, int j) const;
    SuperVector prod0(const SuperVector& x, const SuperVector& y) const;
    SuperVector prod1(const SuperVector& x, const SuperVector& y) const;
    SuperVector partial_of(const SuperVector& x) const; // ∂ of the C0 part

    const std::vector<SuperVector>& partial_table() const { return partial_; }

    // Well-formedness of the data itself: parity additivity of the tables
    // and parity preservation of ∂.
    CheckReport check_well_formed() const;

    // (∂a)_0 = 0,  (∂a)_1 = -a_0,  ∂(u_0 a) = u_0 ∂a
    CheckReport check_derivation_axiom() const;
    // u_0 a = -eps(u,a) a_0 u,  u_0 v = eps(u,v)(-v_0 u + ∂(v_1 u)),
    // u_1 v = eps(u,v) v_1 u
    CheckReport check_supercommutativity_axiom() const;
    // α_0 (β_i γ) = eps(α,β) β_i (α_0 γ) + (α_0 β)_i γ for i = 0, 1
    CheckReport check_superassociativity_axiom() const;

    CheckReport check_all() const;

    std::string format_c(const SuperVector& v) const { return format_vector(v, c_); }

private:
    StructureAlgebra a0_;
    Space c1_;
    Space c_;
    std::vector<SuperVector> partial_;
    std::vector<std::vector<SuperVector>> prod0_;
    std::vector<std::vector<SuperVector>> prod1_;
};

} // namespace vsb
