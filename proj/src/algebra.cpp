#include "vsb/algebra.hpp"

#include "vsb/errors.hpp"

namespace vsb {

StructureAlgebra::StructureAlgebra(Space space, std::optional<SuperVector> unit,
                                   std::vector<std::vector<SuperVector>> products)
    : space_(std::move(space)), unit_(std::move(unit)), products_(std::move(products)) {
    size_t n = static_cast<size_t>(space_.dim());
    if (products_.size() != n)
        throw Error("product table has " + std::to_string(products_.size()) + " rows, expected " +
                    std::to_string(n));
    for (auto& row : products_) {
        if (row.size() != n) throw Error("ragged product table");
        for (auto& v : row)
            if (v.space_id() != space_.id) throw SpaceMismatchError("product entry in wrong space");
    }
    if (unit_ && unit_->space_id() != space_.id)
        throw SpaceMismatchError("unit vector in wrong space");
}

const SuperVector& StructureAlgebra::product(int i, int j) const {
    return products_.at(static_cast<size_t>(i)).at(static_cast<size_t>(j));
}

SuperVector StructureAlgebra::product(const SuperVector& u, const SuperVector& v) const {
    SuperVector out(space_.id);
    for (const auto& [i, a] : u.entries())
        for (const auto& [j, b] : v.entries()) out.add_scaled(a * b, product(i, j));
    return out;
}

CheckReport StructureAlgebra::check_parity_additive() const {
    CheckReport report("parity additivity");
    AxiomScan scan(report, "parity of products");
    int n = dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Parity expect = space_.parity(i) + space_.parity(j);
            bool ok = true;
            for (const auto& [k, c] : product(i, j).entries())
                if (space_.parity(k) != expect) ok = false;
            scan.record(ok, {i, j}, format_vector(product(i, j), space_),
                        expect == Parity::Even ? "(even component)" : "(odd component)");
        }
    return report;
}

CheckReport StructureAlgebra::check_super_commutative() const {
    CheckReport report("super-commutativity");
    report.merge(check_parity_additive());
    AxiomScan scan(report, "ab = eps(a,b) ba");
    int n = dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            SuperVector lhs = product(i, j);
            SuperVector rhs = product(j, i);
            rhs *= Rational(epsilon_sign(space_.parity(i), space_.parity(j)));
            scan.record(lhs == rhs, {i, j}, format_vector(lhs, space_), format_vector(rhs, space_));
        }
    return report;
}

CheckReport StructureAlgebra::check_associative() const {
    CheckReport report("associativity");
    AxiomScan scan(report, "(ab)c = a(bc)");
    int n = dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                SuperVector lhs = product(product(i, j), basis_vector(space_.id, k));
                SuperVector rhs = product(basis_vector(space_.id, i), product(j, k));
                scan.record(lhs == rhs, {i, j, k}, format_vector(lhs, space_),
                            format_vector(rhs, space_));
            }
    return report;
}

CheckReport StructureAlgebra::check_unital() const {
    CheckReport report("unit law");
    if (!unit_) {
        report.add_fail("1a = a = a1", Witness{{}, "(no unit declared)", ""});
        return report;
    }
    AxiomScan scan(report, "1a = a = a1");
    int n = dim();
    for (int i = 0; i < n; ++i) {
        SuperVector e_i = basis_vector(space_.id, i);
        SuperVector left = product(*unit_, e_i);
        SuperVector right = product(e_i, *unit_);
        scan.record(left == e_i && right == e_i, {i}, format_vector(left, space_),
                    format_vector(e_i, space_));
    }
    return report;
}

CheckReport StructureAlgebra::check_lie_superalgebra() const {
    CheckReport report("Lie superalgebra laws");
    report.merge(check_parity_additive());
    int n = dim();
    {
        AxiomScan scan(report, "[a,b] = -eps(a,b)[b,a]");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                SuperVector lhs = product(i, j);
                SuperVector rhs = product(j, i);
                rhs *= Rational(-epsilon_sign(space_.parity(i), space_.parity(j)));
                scan.record(lhs == rhs, {i, j}, format_vector(lhs, space_),
                            format_vector(rhs, space_));
            }
    }
    {
        AxiomScan scan(report, "[a,[b,c]] = [[a,b],c] + eps(a,b)[b,[a,c]]");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    SuperVector lhs = product(basis_vector(space_.id, i), product(j, k));
                    SuperVector rhs = product(product(i, j), basis_vector(space_.id, k));
                    rhs.add_scaled(Rational(epsilon_sign(space_.parity(i), space_.parity(j))),
                                   product(basis_vector(space_.id, j), product(i, k)));
                    scan.record(lhs == rhs, {i, j, k}, format_vector(lhs, space_),
                                format_vector(rhs, space_));
                }
    }
    return report;
}

CheckReport StructureAlgebra::check_leibniz_superalgebra() const {
    CheckReport report("Leibniz superalgebra laws");
    report.merge(check_parity_additive());
    AxiomScan scan(report, "[u,[v,w]] = [[u,v],w] + eps(u,v)[v,[u,w]]");
    int n = dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                SuperVector lhs = product(basis_vector(space_.id, i), product(j, k));
                SuperVector rhs = product(product(i, j), basis_vector(space_.id, k));
                rhs.add_scaled(Rational(epsilon_sign(space_.parity(i), space_.parity(j))),
                               product(basis_vector(space_.id, j), product(i, k)));
                scan.record(lhs == rhs, {i, j, k}, format_vector(lhs, space_),
                            format_vector(rhs, space_));
            }
    return report;
}

SuperVector DerivationMatrix::apply(const SuperVector& v) const {
    SuperVector out = columns.empty() ? SuperVector(v.space_id())
                                      : SuperVector(columns.front().space_id());
    for (const auto& [idx, c] : v.entries()) out.add_scaled(c, columns.at(static_cast<size_t>(idx)));
    return out;
}

CheckReport check_derivation(const DerivationMatrix& d, const StructureAlgebra& algebra,
                             const std::string& label) {
    CheckReport report(label);
    AxiomScan scan(report, "D(ab) = D(a)b + (-1)^{s|a|} a D(b)");
    const Space& space = algebra.space();
    int n = algebra.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            SuperVector lhs = d.apply(algebra.product(i, j));
            SuperVector rhs = algebra.product(d.apply(basis_vector(space.id, i)),
                                              basis_vector(space.id, j));
            Rational sign(is_odd(d.degree) && is_odd(space.parity(i)) ? -1 : 1);
            rhs.add_scaled(sign, algebra.product(basis_vector(space.id, i),
                                                 d.apply(basis_vector(space.id, j))));
            scan.record(lhs == rhs, {i, j}, format_vector(lhs, space), format_vector(rhs, space));
        }
    return report;
}

} // namespace vsb
