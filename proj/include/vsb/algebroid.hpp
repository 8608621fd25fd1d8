#pragma once

#include <vector>

#include "vsb/algebra.hpp"
#include "vsb/report.hpp"
#include "vsb/tconf.hpp"

namespace vsb {

// A vertex A-superalgebroid (A, Γ, *, [.,.], π, <.,.>, ∂). Tables are raw
// data; every law is verified, none assumed. π is stored extensionally, one
// endomorphism of A per Γ basis element.
class VertexSuperalgebroid {
public:
    VertexSuperalgebroid(StructureAlgebra a, Space gamma,
                         std::vector<std::vector<SuperVector>> star,
                         std::vector<std::vector<SuperVector>> bracket,
                         std::vector<std::vector<SuperVector>> pairing,
                         std::vector<DerivationMatrix> pi,
                         std::vector<SuperVector> partial);

    const StructureAlgebra& algebra() const { return a_; }
    const Space& gamma() const { return gamma_; }
    int dim_a() const { return a_.dim(); }
    int dim_gamma() const { return gamma_.dim(); }

    const std::vector<std::vector<SuperVector>>& star_table() const { return star_; }
    const std::vector<std::vector<SuperVector>>& bracket_table() const { return bracket_; }
    const std::vector<std::vector<SuperVector>>& pairing_table() const { return pairing_; }
    const std::vector<DerivationMatrix>& pi_table() const { return pi_; }
    const std::vector<SuperVector>& partial_table() const { return partial_; }

    SuperVector star_act(const SuperVector& a, const SuperVector& v) const;
    SuperVector bracket_of(const SuperVector& u, const SuperVector& v) const;
    SuperVector pairing_of(const SuperVector& u, const SuperVector& v) const;
    SuperVector pi_act(const SuperVector& v, const SuperVector& a) const; // π(v)(a)
    SuperVector partial_of(const SuperVector& a) const;

    // Algebra laws on A, Leibniz superalgebra on Γ, derivation property and
    // Leibniz-homomorphism property of π, π∘∂ = 0, unitality of *, pairing
    // symmetry, parity additivity of all tables.
    CheckReport check_prerequisites() const;

    // The nine compatibility identities, labeled "Eq 2.13" .. "Eq 2.21".
    // Throws PrerequisiteFailedError when check_prerequisites fails (the
    // axioms are then not evaluated).
    CheckReport check_algebroid_axioms() const;

    // Prerequisites + axioms as one report (no throw on prerequisite
    // failure; axioms are skipped in that case).
    CheckReport check_full() const;

private:
    StructureAlgebra a_;
    Space gamma_;
    std::vector<std::vector<SuperVector>> star_;    // A x Γ -> Γ
    std::vector<std::vector<SuperVector>> bracket_; // Γ x Γ -> Γ
    std::vector<std::vector<SuperVector>> pairing_; // Γ x Γ -> A
    std::vector<DerivationMatrix> pi_;              // Γ -> End(A)
    std::vector<SuperVector> partial_;              // A -> Γ
};

// Table-level translation to the 1-truncated conformal superalgebra
// C = A ⊕ Γ of the correspondence: u0 v = [u,v], u1 v = <u,v>,
// u0 a = π(u)(a), a0 u = -eps(a,u) π(u)(a), a_i a' = 0.
TruncatedConformal to_truncated_conformal_unchecked(const VertexSuperalgebroid& v);

// The six compatibility identities ("Eq 2.24" .. "Eq 2.29") tying the star
// action and A-product to the truncated-conformal products.
CheckReport check_correspondence(const StructureAlgebra& a,
                                 const std::vector<std::vector<SuperVector>>& star,
                                 const TruncatedConformal& c);

// Checked conversion: requires the algebroid axioms, converts, requires the
// truncated-conformal axioms and the correspondence identities. Throws
// AxiomViolationError naming the first failed identity.
TruncatedConformal to_truncated_conformal(const VertexSuperalgebroid& v);

// Inverse direction: rebuild the algebroid from C plus a star table.
// Verifies the correspondence identities; throws AxiomViolationError naming
// the failed one. Round-trips table-identically with to_truncated_conformal.
VertexSuperalgebroid from_truncated_conformal(const TruncatedConformal& c,
                                              std::vector<std::vector<SuperVector>> star);

} // namespace vsb
