#include "vsb/svector.hpp"

#include <sstream>

#include "vsb/errors.hpp"

namespace vsb {

Space::Space(int id_, std::vector<Parity> parities_, std::vector<std::string> labels_)
    : id(id_), parities(std::move(parities_)), labels(std::move(labels_)) {
    if (labels.empty()) {
        labels.reserve(parities.size());
        for (size_t i = 0; i < parities.size(); ++i) labels.push_back("e" + std::to_string(i));
    }
    if (labels.size() != parities.size())
        throw Error("space " + std::to_string(id) + ": label/parity size mismatch");
}

Space even_space(int id, int dim, std::vector<std::string> labels) {
    return Space(id, std::vector<Parity>(static_cast<size_t>(dim), Parity::Even), std::move(labels));
}

Rational SuperVector::coeff(int idx) const {
    auto it = entries_.find(idx);
    return it == entries_.end() ? Rational(0) : it->second;
}

void SuperVector::set(int idx, const Rational& c) {
    if (vsb::is_zero(c))
        entries_.erase(idx);
    else
        entries_[idx] = c;
}

void SuperVector::add(int idx, const Rational& c) {
    auto [it, inserted] = entries_.try_emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (vsb::is_zero(it->second)) entries_.erase(it);
    }
}

void SuperVector::check_same_space(const SuperVector& rhs) const {
    if (space_id_ != rhs.space_id_)
        throw SpaceMismatchError("vector spaces " + std::to_string(space_id_) + " and " +
                                 std::to_string(rhs.space_id_) + " differ");
}

SuperVector& SuperVector::operator+=(const SuperVector& rhs) {
    check_same_space(rhs);
    for (const auto& [idx, c] : rhs.entries_) add(idx, c);
    return *this;
}

SuperVector& SuperVector::operator-=(const SuperVector& rhs) {
    check_same_space(rhs);
    for (const auto& [idx, c] : rhs.entries_) add(idx, -c);
    return *this;
}

SuperVector& SuperVector::operator*=(const Rational& c) {
    if (vsb::is_zero(c)) {
        entries_.clear();
        return *this;
    }
    for (auto& [idx, v] : entries_) v *= c;
    return *this;
}

void SuperVector::add_scaled(const Rational& c, const SuperVector& v) {
    check_same_space(v);
    if (vsb::is_zero(c)) return;
    for (const auto& [idx, x] : v.entries_) add(idx, c * x);
}

SuperVector basis_vector(int space_id, int idx, const Rational& c) {
    SuperVector v(space_id);
    v.set(idx, c);
    return v;
}

std::optional<Parity> parity_of(const SuperVector& v, const Space& space) {
    if (v.is_zero()) return std::nullopt; // zero is homogeneous of any parity
    std::optional<Parity> p;
    for (const auto& [idx, c] : v.entries()) {
        Parity q = space.parity(idx);
        if (!p)
            p = q;
        else if (*p != q)
            throw MixedParityError("vector " + format_vector(v, space) + " mixes parities");
    }
    return p;
}

Rational epsilon(const SuperVector& u, const SuperVector& v, const Space& su, const Space& sv) {
    auto pu = parity_of(u, su);
    auto pv = parity_of(v, sv);
    if (pu && pv) return Rational(epsilon_sign(*pu, *pv));
    return Rational(1);
}

std::string format_vector(const SuperVector& v, const Space& space) {
    if (v.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [idx, c] : v.entries()) {
        std::string coeff = to_string(c);
        if (first) {
            first = false;
            if (coeff == "1")
                out << space.label(idx);
            else if (coeff == "-1")
                out << "-" << space.label(idx);
            else
                out << coeff << "*" << space.label(idx);
            continue;
        }
        if (sgn(c) > 0) {
            out << " + ";
            if (coeff == "1")
                out << space.label(idx);
            else
                out << coeff << "*" << space.label(idx);
        } else {
            out << " - ";
            std::string mag = to_string(-c);
            if (mag == "1")
                out << space.label(idx);
            else
                out << mag << "*" << space.label(idx);
        }
    }
    return out.str();
}

} // namespace vsb
