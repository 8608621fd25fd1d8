#pragma once

#include <map>
#include <vector>

#include "vsb/svector.hpp"

namespace vsb {

// A subspace of an indexed space held in row-echelon form, one row per pivot
// index, each row scaled so its pivot coefficient is 1. reduce() projects
// onto the complement spanned by non-pivot coordinates, which is the unique
// canonical residue mod the row space; rref_rows() exposes the fully
// back-substituted (pairwise-reduced) basis.
class Subspace {
public:
    explicit Subspace(int space_id = 0) : space_id_(space_id) {}

    int space_id() const { return space_id_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    // Adds v to the span; returns true when the rank grew.
    bool insert(SuperVector v);

    // Canonical residue of v mod the subspace (no pivot coordinate remains).
    SuperVector reduce(SuperVector v) const;

    bool contains(const SuperVector& v) const { return reduce(v).is_zero(); }

    std::vector<int> pivot_columns() const;
    std::vector<SuperVector> rref_rows() const;

    // Non-pivot coordinates among 0..ambient_dim-1: the canonical section of
    // the quotient map (quotient representatives).
    std::vector<int> non_pivot_columns(int ambient_dim) const;

private:
    int space_id_;
    std::map<int, SuperVector> rows_; // pivot index -> row
};

// Row space of a list of vectors; throws SpaceMismatchError if they disagree
// on the ambient space.
Subspace span(const std::vector<SuperVector>& vectors, int space_id_if_empty = 0);

int quotient_dimension(int ambient_dim, const Subspace& sub);

} // namespace vsb
