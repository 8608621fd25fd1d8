#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vsb/parity.hpp"
#include "vsb/rational.hpp"

namespace vsb {

// An indexed superspace: a dimension, a parity per basis index, and
// optional human-readable basis labels used in reports.
struct Space {
    int id = 0;
    std::vector<Parity> parities;
    std::vector<std::string> labels;

    Space() = default;
    Space(int id_, std::vector<Parity> parities_, std::vector<std::string> labels_ = {});

    int dim() const { return static_cast<int>(parities.size()); }
    Parity parity(int idx) const { return parities.at(static_cast<size_t>(idx)); }
    const std::string& label(int idx) const { return labels.at(static_cast<size_t>(idx)); }
};

// Purely even space helper (labels default to e0, e1, ...).
Space even_space(int id, int dim, std::vector<std::string> labels = {});

// Sparse exact vector over an indexed space. Zero coefficients are never
// stored; entries iterate in ascending index order.
class SuperVector {
public:
    SuperVector() = default;
    explicit SuperVector(int space_id) : space_id_(space_id) {}

    int space_id() const { return space_id_; }
    bool is_zero() const { return entries_.empty(); }
    int support_size() const { return static_cast<int>(entries_.size()); }
    const std::map<int, Rational>& entries() const { return entries_; }

    Rational coeff(int idx) const;
    void set(int idx, const Rational& c);
    void add(int idx, const Rational& c);

    SuperVector& operator+=(const SuperVector& rhs);
    SuperVector& operator-=(const SuperVector& rhs);
    SuperVector& operator*=(const Rational& c);

    friend SuperVector operator+(SuperVector a, const SuperVector& b) { return a += b; }
    friend SuperVector operator-(SuperVector a, const SuperVector& b) { return a -= b; }
    friend SuperVector operator*(const Rational& c, SuperVector v) { return v *= c; }

    bool operator==(const SuperVector& rhs) const = default;

    // axpy: *this += c * v
    void add_scaled(const Rational& c, const SuperVector& v);

private:
    void check_same_space(const SuperVector& rhs) const;

    int space_id_ = 0;
    std::map<int, Rational> entries_;
};

SuperVector basis_vector(int space_id, int idx, const Rational& c = Rational(1));

// Parity of a homogeneous vector; std::nullopt for the zero vector (which
// vacuously satisfies every homogeneity constraint). Throws MixedParityError
// on genuinely mixed input.
std::optional<Parity> parity_of(const SuperVector& v, const Space& space);

// Koszul sign of a homogeneous pair, as a Rational (+1 or -1).
Rational epsilon(const SuperVector& u, const SuperVector& v, const Space& su, const Space& sv);

std::string format_vector(const SuperVector& v, const Space& space);

} // namespace vsb
