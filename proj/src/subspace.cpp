#include "vsb/subspace.hpp"

#include <algorithm>

#include "vsb/errors.hpp"

namespace vsb {

bool Subspace::insert(SuperVector v) {
    if (v.space_id() != space_id_)
        throw SpaceMismatchError("subspace over space " + std::to_string(space_id_) +
                                 " cannot absorb vector from space " + std::to_string(v.space_id()));
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    int pivot = v.entries().begin()->first;
    Rational lead = v.entries().begin()->second;
    v *= Rational(1) / lead;
    rows_.emplace(pivot, std::move(v));
    return true;
}

SuperVector Subspace::reduce(SuperVector v) const {
    // Eliminating at index j only introduces indices > j, so a single
    // ascending sweep clears every pivot coordinate.
    int from = 0;
    for (;;) {
        int pivot = -1;
        for (auto it = v.entries().lower_bound(from); it != v.entries().end(); ++it) {
            if (rows_.count(it->first)) {
                pivot = it->first;
                break;
            }
        }
        if (pivot < 0) break;
        Rational c = v.coeff(pivot);
        v.add_scaled(-c, rows_.at(pivot));
        from = pivot;
    }
    return v;
}

std::vector<int> Subspace::pivot_columns() const {
    std::vector<int> cols;
    cols.reserve(rows_.size());
    for (const auto& [pivot, row] : rows_) cols.push_back(pivot);
    return cols;
}

std::vector<SuperVector> Subspace::rref_rows() const {
    // Back-substitute so rows are pairwise reduced.
    std::vector<SuperVector> rows;
    rows.reserve(rows_.size());
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        SuperVector row = it->second;
        for (const auto& done : rows) {
            int p = done.entries().begin()->first;
            Rational c = row.coeff(p);
            if (!is_zero(c)) row.add_scaled(-c, done);
        }
        rows.push_back(std::move(row));
    }
    std::reverse(rows.begin(), rows.end());
    return rows;
}

std::vector<int> Subspace::non_pivot_columns(int ambient_dim) const {
    std::vector<int> cols;
    for (int i = 0; i < ambient_dim; ++i)
        if (!rows_.count(i)) cols.push_back(i);
    return cols;
}

Subspace span(const std::vector<SuperVector>& vectors, int space_id_if_empty) {
    int space_id = vectors.empty() ? space_id_if_empty : vectors.front().space_id();
    Subspace sub(space_id);
    for (const auto& v : vectors) sub.insert(v);
    return sub;
}

int quotient_dimension(int ambient_dim, const Subspace& sub) {
    return ambient_dim - sub.dim();
}

} // namespace vsb
