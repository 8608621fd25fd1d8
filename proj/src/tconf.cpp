#include "vsb/tconf.hpp"

#include "vsb/errors.hpp"

namespace vsb {

namespace {

void expect_table(const std::vector<std::vector<SuperVector>>& t, size_t rows, size_t cols,
                  const char* name) {
    if (t.size() != rows) throw Error(std::string(name) + ": wrong row count");
    for (const auto& row : t)
        if (row.size() != cols) throw Error(std::string(name) + ": ragged table");
}

} // namespace

TruncatedConformal::TruncatedConformal(StructureAlgebra a0, Space c1,
                                       std::vector<SuperVector> partial,
                                       std::vector<std::vector<SuperVector>> p0_ab,
                                       std::vector<std::vector<SuperVector>> p0_ba,
                                       std::vector<std::vector<SuperVector>> p0_bb,
                                       std::vector<std::vector<SuperVector>> p1_bb)
    : a0_(std::move(a0)), c1_(std::move(c1)), partial_(std::move(partial)) {
    size_t na = static_cast<size_t>(a0_.dim());
    size_t nb = static_cast<size_t>(c1_.dim());
    expect_table(p0_ab, na, nb, "prod0 A x B");
    expect_table(p0_ba, nb, na, "prod0 B x A");
    expect_table(p0_bb, nb, nb, "prod0 B x B");
    expect_table(p1_bb, nb, nb, "prod1 B x B");
    if (partial_.size() != na) throw Error("partial map: wrong size");

    std::vector<Parity> parities = a0_.space().parities;
    parities.insert(parities.end(), c1_.parities.begin(), c1_.parities.end());
    std::vector<std::string> labels = a0_.space().labels;
    labels.insert(labels.end(), c1_.labels.begin(), c1_.labels.end());
    c_ = Space(a0_.space().id + c1_.id + 101, std::move(parities), std::move(labels));

    size_t nc = na + nb;
    prod0_.assign(nc, std::vector<SuperVector>(nc, SuperVector(c_.id)));
    prod1_.assign(nc, std::vector<SuperVector>(nc, SuperVector(c_.id)));
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < nb; ++j) prod0_[i][na + j] = embed_a(p0_ab[i][j]);
    for (size_t i = 0; i < nb; ++i)
        for (size_t j = 0; j < na; ++j) prod0_[na + i][j] = embed_a(p0_ba[i][j]);
    for (size_t i = 0; i < nb; ++i)
        for (size_t j = 0; j < nb; ++j) {
            prod0_[na + i][na + j] = embed_b(p0_bb[i][j]);
            prod1_[na + i][na + j] = embed_a(p1_bb[i][j]);
        }
}

SuperVector TruncatedConformal::embed_a(const SuperVector& a) const {
    SuperVector out(c_.id);
    for (const auto& [idx, c] : a.entries()) out.set(idx, c);
    return out;
}

SuperVector TruncatedConformal::embed_b(const SuperVector& b) const {
    SuperVector out(c_.id);
    for (const auto& [idx, c] : b.entries()) out.set(idx + dim_a(), c);
    return out;
}

SuperVector TruncatedConformal::a_part(const SuperVector& c) const {
    SuperVector out(a0_.space().id);
    for (const auto& [idx, v] : c.entries())
        if (idx < dim_a()) out.set(idx, v);
    return out;
}

SuperVector TruncatedConformal::b_part(const SuperVector& c) const {
    SuperVector out(c1_.id);
    for (const auto& [idx, v] : c.entries())
        if (idx >= dim_a()) out.set(idx - dim_a(), v);
    return out;
}

SuperVector TruncatedConformal::prod0(int i, int j) const {
    return prod0_.at(static_cast<size_t>(i)).at(static_cast<size_t>(j));
}

SuperVector TruncatedConformal::prod1(int i, int j) const {
    return prod1_.at(static_cast<size_t>(i)).at(static_cast<size_t>(j));
}

SuperVector TruncatedConformal::prod0(const SuperVector& x, const SuperVector& y) const {
    SuperVector out(c_.id);
    for (const auto& [i, a] : x.entries())
        for (const auto& [j, b] : y.entries()) out.add_scaled(a * b, prod0(i, j));
    return out;
}

SuperVector TruncatedConformal::prod1(const SuperVector& x, const SuperVector& y) const {
    SuperVector out(c_.id);
    for (const auto& [i, a] : x.entries())
        for (const auto& [j, b] : y.entries()) out.add_scaled(a * b, prod1(i, j));
    return out;
}

SuperVector TruncatedConformal::partial_of(const SuperVector& x) const {
    SuperVector out(c_.id);
    for (const auto& [idx, c] : x.entries())
        if (idx < dim_a()) out.add_scaled(c, embed_b(partial_.at(static_cast<size_t>(idx))));
    return out;
}

CheckReport TruncatedConformal::check_well_formed() const {
    CheckReport report("truncated conformal data");
    int na = dim_a();
    {
        AxiomScan scan(report, "partial preserves parity");
        for (int i = 0; i < na; ++i) {
            bool ok = true;
            for (const auto& [j, c] : partial_.at(static_cast<size_t>(i)).entries())
                if (c1_.parity(j) != a0_.space().parity(i)) ok = false;
            scan.record(ok, {i}, format_vector(partial_.at(static_cast<size_t>(i)), c1_), "");
        }
    }
    for (int which = 0; which <= 1; ++which) {
        AxiomScan scan(report, which == 0 ? "parity additivity of u0 v" : "parity additivity of u1 v");
        int nc = dim_c();
        for (int i = 0; i < nc; ++i)
            for (int j = 0; j < nc; ++j) {
                SuperVector p = which == 0 ? prod0(i, j) : prod1(i, j);
                Parity expect = parity(i) + parity(j);
                bool ok = true;
                for (const auto& [k, c] : p.entries())
                    if (parity(k) != expect) ok = false;
                scan.record(ok, {i, j}, format_c(p), "");
            }
    }
    return report;
}

CheckReport TruncatedConformal::check_derivation_axiom() const {
    CheckReport report("derivation axiom");
    int na = dim_a();
    int nc = dim_c();
    {
        AxiomScan scan(report, "Eq 2.7: (pd a)0 = 0");
        for (int i = 0; i < na; ++i) {
            SuperVector da = partial_of(basis_c(i));
            for (int x = 0; x < nc; ++x) {
                SuperVector lhs = prod0(da, basis_c(x));
                scan.record(lhs.is_zero(), {i, x}, format_c(lhs), "0");
            }
        }
    }
    {
        AxiomScan scan(report, "Eq 2.7: (pd a)1 = -a0");
        for (int i = 0; i < na; ++i) {
            SuperVector da = partial_of(basis_c(i));
            for (int u = na; u < nc; ++u) {
                SuperVector lhs = prod1(da, basis_c(u));
                SuperVector rhs = prod0(i, u);
                rhs *= Rational(-1);
                scan.record(lhs == rhs, {i, u}, format_c(lhs), format_c(rhs));
            }
        }
    }
    {
        AxiomScan scan(report, "Eq 2.7: pd(u0 a) = u0 pd(a)");
        for (int u = na; u < nc; ++u)
            for (int i = 0; i < na; ++i) {
                SuperVector lhs = partial_of(prod0(u, i));
                SuperVector rhs = prod0(basis_c(u), partial_of(basis_c(i)));
                scan.record(lhs == rhs, {u, i}, format_c(lhs), format_c(rhs));
            }
    }
    return report;
}

CheckReport TruncatedConformal::check_supercommutativity_axiom() const {
    CheckReport report("super commutativity axiom");
    int na = dim_a();
    int nc = dim_c();
    {
        AxiomScan scan(report, "Eq 2.8: u0 a = -eps(u,a) a0 u");
        for (int u = na; u < nc; ++u)
            for (int i = 0; i < na; ++i) {
                SuperVector lhs = prod0(u, i);
                SuperVector rhs = prod0(i, u);
                rhs *= Rational(-epsilon_sign(parity(u), parity(i)));
                scan.record(lhs == rhs, {u, i}, format_c(lhs), format_c(rhs));
            }
    }
    {
        AxiomScan scan(report, "Eq 2.8: u0 v = eps(u,v)(-v0 u + pd(v1 u))");
        for (int u = na; u < nc; ++u)
            for (int v = na; v < nc; ++v) {
                SuperVector lhs = prod0(u, v);
                SuperVector rhs = partial_of(prod1(v, u)) - prod0(v, u);
                rhs *= Rational(epsilon_sign(parity(u), parity(v)));
                scan.record(lhs == rhs, {u, v}, format_c(lhs), format_c(rhs));
            }
    }
    {
        AxiomScan scan(report, "Eq 2.8: u1 v = eps(u,v) v1 u");
        for (int u = na; u < nc; ++u)
            for (int v = na; v < nc; ++v) {
                SuperVector lhs = prod1(u, v);
                SuperVector rhs = prod1(v, u);
                rhs *= Rational(epsilon_sign(parity(u), parity(v)));
                scan.record(lhs == rhs, {u, v}, format_c(lhs), format_c(rhs));
            }
    }
    return report;
}

CheckReport TruncatedConformal::check_superassociativity_axiom() const {
    CheckReport report("super associativity axiom");
    int nc = dim_c();
    for (int which = 0; which <= 1; ++which) {
        AxiomScan scan(report, which == 0 ? "Eq 2.9 (i=0)" : "Eq 2.9 (i=1)");
        for (int al = 0; al < nc; ++al)
            for (int be = 0; be < nc; ++be)
                for (int ga = 0; ga < nc; ++ga) {
                    SuperVector inner = which == 0 ? prod0(be, ga) : prod1(be, ga);
                    SuperVector lhs = prod0(basis_c(al), inner);
                    SuperVector a0g = prod0(al, ga);
                    SuperVector rhs = which == 0 ? prod0(basis_c(be), a0g) : prod1(basis_c(be), a0g);
                    rhs *= Rational(epsilon_sign(parity(al), parity(be)));
                    SuperVector a0b = prod0(al, be);
                    rhs += which == 0 ? prod0(a0b, basis_c(ga)) : prod1(a0b, basis_c(ga));
                    scan.record(lhs == rhs, {al, be, ga}, format_c(lhs), format_c(rhs));
                }
    }
    return report;
}

CheckReport TruncatedConformal::check_all() const {
    CheckReport report("truncated conformal axioms");
    report.merge(check_well_formed());
    report.merge(check_derivation_axiom());
    report.merge(check_supercommutativity_axiom());
    report.merge(check_superassociativity_axiom());
    return report;
}

} // namespace vsb
