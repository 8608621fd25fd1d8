#include "vsb/algebroid.hpp"

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

VertexSuperalgebroid::VertexSuperalgebroid(StructureAlgebra a, Space gamma,
                                           std::vector<std::vector<SuperVector>> star,
                                           std::vector<std::vector<SuperVector>> bracket,
                                           std::vector<std::vector<SuperVector>> pairing,
                                           std::vector<DerivationMatrix> pi,
                                           std::vector<SuperVector> partial)
    : a_(std::move(a)), gamma_(std::move(gamma)), star_(std::move(star)),
      bracket_(std::move(bracket)), pairing_(std::move(pairing)), pi_(std::move(pi)),
      partial_(std::move(partial)) {
    size_t na = static_cast<size_t>(a_.dim());
    size_t ng = static_cast<size_t>(gamma_.dim());
    expect_table(star_, na, ng, "star");
    expect_table(bracket_, ng, ng, "bracket");
    expect_table(pairing_, ng, ng, "pairing");
    if (pi_.size() != ng) throw Error("pi: wrong size");
    if (partial_.size() != na) throw Error("partial: wrong size");
}

SuperVector VertexSuperalgebroid::star_act(const SuperVector& a, const SuperVector& v) const {
    SuperVector out(gamma_.id);
    for (const auto& [i, x] : a.entries())
        for (const auto& [j, y] : v.entries())
            out.add_scaled(x * y, star_.at(static_cast<size_t>(i)).at(static_cast<size_t>(j)));
    return out;
}

SuperVector VertexSuperalgebroid::bracket_of(const SuperVector& u, const SuperVector& v) const {
    SuperVector out(gamma_.id);
    for (const auto& [i, x] : u.entries())
        for (const auto& [j, y] : v.entries())
            out.add_scaled(x * y, bracket_.at(static_cast<size_t>(i)).at(static_cast<size_t>(j)));
    return out;
}

SuperVector VertexSuperalgebroid::pairing_of(const SuperVector& u, const SuperVector& v) const {
    SuperVector out(a_.space().id);
    for (const auto& [i, x] : u.entries())
        for (const auto& [j, y] : v.entries())
            out.add_scaled(x * y, pairing_.at(static_cast<size_t>(i)).at(static_cast<size_t>(j)));
    return out;
}

SuperVector VertexSuperalgebroid::pi_act(const SuperVector& v, const SuperVector& a) const {
    SuperVector out(a_.space().id);
    for (const auto& [j, y] : v.entries())
        out.add_scaled(y, pi_.at(static_cast<size_t>(j)).apply(a));
    return out;
}

SuperVector VertexSuperalgebroid::partial_of(const SuperVector& a) const {
    SuperVector out(gamma_.id);
    for (const auto& [i, x] : a.entries()) out.add_scaled(x, partial_.at(static_cast<size_t>(i)));
    return out;
}

CheckReport VertexSuperalgebroid::check_prerequisites() const {
    CheckReport report("algebroid prerequisites");
    report.merge(a_.check_parity_additive());
    report.merge(a_.check_unital());
    report.merge(a_.check_super_commutative());
    report.merge(a_.check_associative());

    StructureAlgebra bracket_alg(gamma_, std::nullopt, bracket_);
    report.merge(bracket_alg.check_leibniz_superalgebra());

    int na = dim_a();
    int ng = dim_gamma();
    const Space& aspace = a_.space();

    {
        AxiomScan scan(report, "parity additivity of a*v");
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < ng; ++j) {
                Parity expect = aspace.parity(i) + gamma_.parity(j);
                bool ok = true;
                for (const auto& [k, c] :
                     star_.at(static_cast<size_t>(i)).at(static_cast<size_t>(j)).entries())
                    if (gamma_.parity(k) != expect) ok = false;
                scan.record(ok, {i, j},
                            format_vector(star_.at(static_cast<size_t>(i)).at(static_cast<size_t>(j)),
                                          gamma_),
                            "");
            }
    }
    {
        AxiomScan scan(report, "parity additivity of <u,v>");
        for (int i = 0; i < ng; ++i)
            for (int j = 0; j < ng; ++j) {
                Parity expect = gamma_.parity(i) + gamma_.parity(j);
                bool ok = true;
                for (const auto& [k, c] :
                     pairing_.at(static_cast<size_t>(i)).at(static_cast<size_t>(j)).entries())
                    if (aspace.parity(k) != expect) ok = false;
                scan.record(ok, {i, j},
                            format_vector(pairing_.at(static_cast<size_t>(i)).at(static_cast<size_t>(j)),
                                          aspace),
                            "");
            }
    }
    {
        AxiomScan scan(report, "partial preserves parity");
        for (int i = 0; i < na; ++i) {
            bool ok = true;
            for (const auto& [k, c] : partial_.at(static_cast<size_t>(i)).entries())
                if (gamma_.parity(k) != aspace.parity(i)) ok = false;
            scan.record(ok, {i}, format_vector(partial_.at(static_cast<size_t>(i)), gamma_), "");
        }
    }
    {
        AxiomScan scan(report, "1*v = v");
        for (int j = 0; j < ng; ++j) {
            SuperVector v = basis_vector(gamma_.id, j);
            SuperVector lhs = a_.unit() ? star_act(*a_.unit(), v) : SuperVector(gamma_.id);
            scan.record(lhs == v, {j}, format_vector(lhs, gamma_), format_vector(v, gamma_));
        }
    }
    {
        AxiomScan scan(report, "<u,v> = eps(u,v) <v,u>");
        for (int i = 0; i < ng; ++i)
            for (int j = 0; j < ng; ++j) {
                SuperVector lhs = pairing_.at(static_cast<size_t>(i)).at(static_cast<size_t>(j));
                SuperVector rhs = pairing_.at(static_cast<size_t>(j)).at(static_cast<size_t>(i));
                rhs *= Rational(epsilon_sign(gamma_.parity(i), gamma_.parity(j)));
                scan.record(lhs == rhs, {i, j}, format_vector(lhs, aspace), format_vector(rhs, aspace));
            }
    }
    for (int j = 0; j < ng; ++j) {
        CheckReport der = check_derivation(pi_.at(static_cast<size_t>(j)), a_,
                                           "pi(" + gamma_.label(j) + ") is a derivation");
        report.merge(der);
    }
    {
        AxiomScan scan(report, "pi parity");
        for (int j = 0; j < ng; ++j) {
            bool ok = pi_.at(static_cast<size_t>(j)).degree == gamma_.parity(j);
            for (int i = 0; i < na && ok; ++i)
                for (const auto& [k, c] :
                     pi_.at(static_cast<size_t>(j)).columns.at(static_cast<size_t>(i)).entries())
                    if (aspace.parity(k) != gamma_.parity(j) + aspace.parity(i)) ok = false;
            scan.record(ok, {j}, "", "");
        }
    }
    {
        AxiomScan scan(report, "pi([u,v]) = pi(u)pi(v) - eps(u,v) pi(v)pi(u)");
        for (int i = 0; i < ng; ++i)
            for (int j = 0; j < ng; ++j)
                for (int b = 0; b < na; ++b) {
                    SuperVector eb = basis_vector(aspace.id, b);
                    SuperVector lhs = pi_act(bracket_.at(static_cast<size_t>(i)).at(static_cast<size_t>(j)), eb);
                    SuperVector u = basis_vector(gamma_.id, i);
                    SuperVector v = basis_vector(gamma_.id, j);
                    SuperVector rhs = pi_act(u, pi_act(v, eb));
                    rhs.add_scaled(Rational(-epsilon_sign(gamma_.parity(i), gamma_.parity(j))),
                                   pi_act(v, pi_act(u, eb)));
                    scan.record(lhs == rhs, {i, j, b}, format_vector(lhs, aspace),
                                format_vector(rhs, aspace));
                }
    }
    {
        AxiomScan scan(report, "pi(pd a) = 0");
        for (int i = 0; i < na; ++i)
            for (int b = 0; b < na; ++b) {
                SuperVector lhs = pi_act(partial_.at(static_cast<size_t>(i)), basis_vector(aspace.id, b));
                scan.record(lhs.is_zero(), {i, b}, format_vector(lhs, aspace), "0");
            }
    }
    return report;
}

CheckReport VertexSuperalgebroid::check_algebroid_axioms() const {
    CheckReport prereq = check_prerequisites();
    if (!prereq.passed())
        throw PrerequisiteFailedError("algebroid prerequisites failed at: " +
                                      prereq.first_failure_label());

    CheckReport report("vertex superalgebroid axioms");
    const Space& aspace = a_.space();
    int na = dim_a();
    int ng = dim_gamma();
    auto abasis = [&](int i) { return basis_vector(aspace.id, i); };
    auto gbasis = [&](int j) { return basis_vector(gamma_.id, j); };
    auto eps_aa = [&](int i, int j) {
        return Rational(epsilon_sign(aspace.parity(i), aspace.parity(j)));
    };
    auto eps_ag = [&](int i, int j) {
        return Rational(epsilon_sign(aspace.parity(i), gamma_.parity(j)));
    };
    auto eps_gg = [&](int i, int j) {
        return Rational(epsilon_sign(gamma_.parity(i), gamma_.parity(j)));
    };

    {
        AxiomScan scan(report, "Eq 2.13");
        // a*(a'*v) - (aa')*v = eps(a,a') pi(v)(a)*pd(a') + pi(v)(a')*pd(a)
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < na; ++j)
                for (int v = 0; v < ng; ++v) {
                    SuperVector lhs = star_act(abasis(i), star_act(abasis(j), gbasis(v)));
                    lhs -= star_act(a_.product(i, j), gbasis(v));
                    SuperVector rhs(gamma_.id);
                    rhs.add_scaled(eps_aa(i, j),
                                   star_act(pi_act(gbasis(v), abasis(i)),
                                            partial_.at(static_cast<size_t>(j))));
                    rhs += star_act(pi_act(gbasis(v), abasis(j)), partial_.at(static_cast<size_t>(i)));
                    scan.record(lhs == rhs, {i, j, v}, format_vector(lhs, gamma_),
                                format_vector(rhs, gamma_));
                }
    }
    {
        AxiomScan scan(report, "Eq 2.14");
        // [u, a*v] = pi(u)(a)*v + eps(u,a) a*[u,v]
        for (int u = 0; u < ng; ++u)
            for (int i = 0; i < na; ++i)
                for (int v = 0; v < ng; ++v) {
                    SuperVector lhs = bracket_of(gbasis(u), star_act(abasis(i), gbasis(v)));
                    SuperVector rhs = star_act(pi_act(gbasis(u), abasis(i)), gbasis(v));
                    rhs.add_scaled(eps_ag(i, u), star_act(abasis(i), bracket_of(gbasis(u), gbasis(v))));
                    scan.record(lhs == rhs, {u, i, v}, format_vector(lhs, gamma_),
                                format_vector(rhs, gamma_));
                }
    }
    {
        AxiomScan scan(report, "Eq 2.15");
        // [u,v] + eps(u,v)[v,u] = pd(<u,v>)
        for (int u = 0; u < ng; ++u)
            for (int v = 0; v < ng; ++v) {
                SuperVector lhs = bracket_.at(static_cast<size_t>(u)).at(static_cast<size_t>(v));
                lhs.add_scaled(eps_gg(u, v),
                               bracket_.at(static_cast<size_t>(v)).at(static_cast<size_t>(u)));
                SuperVector rhs = partial_of(pairing_.at(static_cast<size_t>(u)).at(static_cast<size_t>(v)));
                scan.record(lhs == rhs, {u, v}, format_vector(lhs, gamma_), format_vector(rhs, gamma_));
            }
    }
    {
        AxiomScan scan(report, "Eq 2.16");
        // pi(a*v) = a pi(v)
        for (int i = 0; i < na; ++i)
            for (int v = 0; v < ng; ++v)
                for (int b = 0; b < na; ++b) {
                    SuperVector lhs = pi_act(star_act(abasis(i), gbasis(v)), abasis(b));
                    SuperVector rhs = a_.product(abasis(i), pi_act(gbasis(v), abasis(b)));
                    scan.record(lhs == rhs, {i, v, b}, format_vector(lhs, aspace),
                                format_vector(rhs, aspace));
                }
    }
    {
        AxiomScan scan(report, "Eq 2.17");
        // <a*u, v> = a<u,v> - eps(a,u)eps(a,v) pi(u)(pi(v)(a))
        for (int i = 0; i < na; ++i)
            for (int u = 0; u < ng; ++u)
                for (int v = 0; v < ng; ++v) {
                    SuperVector lhs = pairing_of(star_act(abasis(i), gbasis(u)), gbasis(v));
                    SuperVector rhs =
                        a_.product(abasis(i), pairing_.at(static_cast<size_t>(u)).at(static_cast<size_t>(v)));
                    rhs.add_scaled(-(eps_ag(i, u) * eps_ag(i, v)),
                                   pi_act(gbasis(u), pi_act(gbasis(v), abasis(i))));
                    scan.record(lhs == rhs, {i, u, v}, format_vector(lhs, aspace),
                                format_vector(rhs, aspace));
                }
    }
    {
        AxiomScan scan(report, "Eq 2.18");
        // pi(v)(<v1,v2>) = <[v,v1],v2> + eps(v,v1)<v1,[v,v2]>
        for (int v = 0; v < ng; ++v)
            for (int v1 = 0; v1 < ng; ++v1)
                for (int v2 = 0; v2 < ng; ++v2) {
                    SuperVector lhs = pi_act(gbasis(v), pairing_.at(static_cast<size_t>(v1)).at(static_cast<size_t>(v2)));
                    SuperVector rhs = pairing_of(bracket_of(gbasis(v), gbasis(v1)), gbasis(v2));
                    rhs.add_scaled(eps_gg(v, v1),
                                   pairing_of(gbasis(v1), bracket_of(gbasis(v), gbasis(v2))));
                    scan.record(lhs == rhs, {v, v1, v2}, format_vector(lhs, aspace),
                                format_vector(rhs, aspace));
                }
    }
    {
        AxiomScan scan(report, "Eq 2.19");
        // pd(aa') = a*pd(a') + eps(a,a') a'*pd(a)
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < na; ++j) {
                SuperVector lhs = partial_of(a_.product(i, j));
                SuperVector rhs = star_act(abasis(i), partial_.at(static_cast<size_t>(j)));
                rhs.add_scaled(eps_aa(i, j), star_act(abasis(j), partial_.at(static_cast<size_t>(i))));
                scan.record(lhs == rhs, {i, j}, format_vector(lhs, gamma_), format_vector(rhs, gamma_));
            }
    }
    {
        AxiomScan scan(report, "Eq 2.20");
        // [v, pd(a)] = pd(pi(v)(a))
        for (int v = 0; v < ng; ++v)
            for (int i = 0; i < na; ++i) {
                SuperVector lhs = bracket_of(gbasis(v), partial_.at(static_cast<size_t>(i)));
                SuperVector rhs = partial_of(pi_act(gbasis(v), abasis(i)));
                scan.record(lhs == rhs, {v, i}, format_vector(lhs, gamma_), format_vector(rhs, gamma_));
            }
    }
    {
        AxiomScan scan(report, "Eq 2.21");
        // <v, pd(a)> = pi(v)(a)
        for (int v = 0; v < ng; ++v)
            for (int i = 0; i < na; ++i) {
                SuperVector lhs = pairing_of(gbasis(v), partial_.at(static_cast<size_t>(i)));
                SuperVector rhs = pi_act(gbasis(v), abasis(i));
                scan.record(lhs == rhs, {v, i}, format_vector(lhs, aspace), format_vector(rhs, aspace));
            }
    }
    return report;
}

CheckReport VertexSuperalgebroid::check_full() const {
    CheckReport report("vertex superalgebroid");
    CheckReport prereq = check_prerequisites();
    report.merge(prereq);
    if (prereq.passed()) report.merge(check_algebroid_axioms());
    return report;
}

TruncatedConformal to_truncated_conformal_unchecked(const VertexSuperalgebroid& v) {
    int na = v.dim_a();
    int ng = v.dim_gamma();
    const Space& aspace = v.algebra().space();
    const Space& gspace = v.gamma();

    std::vector<std::vector<SuperVector>> p0_ab(
        static_cast<size_t>(na), std::vector<SuperVector>(static_cast<size_t>(ng), SuperVector(aspace.id)));
    std::vector<std::vector<SuperVector>> p0_ba(
        static_cast<size_t>(ng), std::vector<SuperVector>(static_cast<size_t>(na), SuperVector(aspace.id)));
    for (int u = 0; u < ng; ++u)
        for (int i = 0; i < na; ++i) {
            SuperVector pua = v.pi_act(basis_vector(gspace.id, u), basis_vector(aspace.id, i));
            p0_ba[static_cast<size_t>(u)][static_cast<size_t>(i)] = pua;
            pua *= Rational(-epsilon_sign(aspace.parity(i), gspace.parity(u)));
            p0_ab[static_cast<size_t>(i)][static_cast<size_t>(u)] = pua;
        }
    return TruncatedConformal(v.algebra(), gspace, v.partial_table(), std::move(p0_ab),
                              std::move(p0_ba), v.bracket_table(), v.pairing_table());
}

CheckReport check_correspondence(const StructureAlgebra& a,
                                 const std::vector<std::vector<SuperVector>>& star,
                                 const TruncatedConformal& c) {
    CheckReport report("algebroid/truncated-conformal correspondence");
    const Space& aspace = a.space();
    const Space& gspace = c.b_space();
    int na = c.dim_a();
    int nb = c.dim_b();

    auto star_act = [&](const SuperVector& av, const SuperVector& gv) {
        SuperVector out(gspace.id);
        for (const auto& [i, x] : av.entries())
            for (const auto& [j, y] : gv.entries())
                out.add_scaled(x * y, star.at(static_cast<size_t>(i)).at(static_cast<size_t>(j)));
        return out;
    };
    auto abasis = [&](int i) { return basis_vector(aspace.id, i); };
    auto gbasis = [&](int j) { return basis_vector(gspace.id, j); };
    // products through the truncated-conformal tables, in component coords
    auto p0_aa_part = [&](const SuperVector& x, const SuperVector& y) {
        return c.a_part(c.prod0(x, y));
    };
    auto eps_aa = [&](int i, int j) {
        return Rational(epsilon_sign(aspace.parity(i), aspace.parity(j)));
    };
    auto eps_ga = [&](int u, int i) {
        return Rational(epsilon_sign(gspace.parity(u), aspace.parity(i)));
    };

    {
        AxiomScan scan(report, "Eq 2.24");
        // a(a'u) - (aa')u = eps(a,a')(u0 a) pd a' + (u0 a') pd a
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < na; ++j)
                for (int u = 0; u < nb; ++u) {
                    SuperVector lhs = star_act(abasis(i), star_act(abasis(j), gbasis(u)));
                    lhs -= star_act(a.product(i, j), gbasis(u));
                    SuperVector u0a = p0_aa_part(c.embed_b(gbasis(u)), c.embed_a(abasis(i)));
                    SuperVector u0a2 = p0_aa_part(c.embed_b(gbasis(u)), c.embed_a(abasis(j)));
                    SuperVector rhs(gspace.id);
                    rhs.add_scaled(eps_aa(i, j), star_act(u0a, c.partial_table().at(static_cast<size_t>(j))));
                    rhs += star_act(u0a2, c.partial_table().at(static_cast<size_t>(i)));
                    scan.record(lhs == rhs, {i, j, u}, format_vector(lhs, gspace),
                                format_vector(rhs, gspace));
                }
    }
    {
        AxiomScan scan(report, "Eq 2.25");
        // u0(av) - eps(u,a) a(u0 v) = (u0 a)v
        for (int u = 0; u < nb; ++u)
            for (int i = 0; i < na; ++i)
                for (int v = 0; v < nb; ++v) {
                    SuperVector av = star_act(abasis(i), gbasis(v));
                    SuperVector lhs = c.b_part(c.prod0(c.embed_b(gbasis(u)), c.embed_b(av)));
                    SuperVector u0v = c.b_part(c.prod0(na + u, na + v));
                    lhs.add_scaled(-eps_ga(u, i), star_act(abasis(i), u0v));
                    SuperVector u0a = p0_aa_part(c.embed_b(gbasis(u)), c.embed_a(abasis(i)));
                    SuperVector rhs = star_act(u0a, gbasis(v));
                    scan.record(lhs == rhs, {u, i, v}, format_vector(lhs, gspace),
                                format_vector(rhs, gspace));
                }
    }
    {
        AxiomScan scan(report, "Eq 2.26");
        // u0(aa') = eps(u,a) a(u0 a') + (u0 a)a'
        for (int u = 0; u < nb; ++u)
            for (int i = 0; i < na; ++i)
                for (int j = 0; j < na; ++j) {
                    SuperVector lhs = p0_aa_part(c.embed_b(gbasis(u)), c.embed_a(a.product(i, j)));
                    SuperVector u0a2 = p0_aa_part(c.embed_b(gbasis(u)), c.embed_a(abasis(j)));
                    SuperVector rhs(aspace.id);
                    rhs.add_scaled(eps_ga(u, i), a.product(abasis(i), u0a2));
                    SuperVector u0a = p0_aa_part(c.embed_b(gbasis(u)), c.embed_a(abasis(i)));
                    rhs += a.product(u0a, abasis(j));
                    scan.record(lhs == rhs, {u, i, j}, format_vector(lhs, aspace),
                                format_vector(rhs, aspace));
                }
    }
    {
        AxiomScan scan(report, "Eq 2.27");
        // a'0(av) = eps(a,a') a(a'0 v)
        for (int j = 0; j < na; ++j)
            for (int i = 0; i < na; ++i)
                for (int v = 0; v < nb; ++v) {
                    SuperVector av = star_act(abasis(i), gbasis(v));
                    SuperVector lhs = p0_aa_part(c.embed_a(abasis(j)), c.embed_b(av));
                    SuperVector a0v = p0_aa_part(c.embed_a(abasis(j)), c.embed_b(gbasis(v)));
                    SuperVector rhs(aspace.id);
                    rhs.add_scaled(eps_aa(i, j), a.product(abasis(i), a0v));
                    scan.record(lhs == rhs, {j, i, v}, format_vector(lhs, aspace),
                                format_vector(rhs, aspace));
                }
    }
    {
        AxiomScan scan(report, "Eq 2.28");
        // (au)1 v = a(u1 v) - eps(a,u)eps(a,v) u0 v0 a
        for (int i = 0; i < na; ++i)
            for (int u = 0; u < nb; ++u)
                for (int v = 0; v < nb; ++v) {
                    SuperVector au = star_act(abasis(i), gbasis(u));
                    SuperVector lhs = c.a_part(c.prod1(c.embed_b(au), c.embed_b(gbasis(v))));
                    SuperVector u1v = c.a_part(c.prod1(na + u, na + v));
                    SuperVector rhs = a.product(abasis(i), u1v);
                    SuperVector v0a = p0_aa_part(c.embed_b(gbasis(v)), c.embed_a(abasis(i)));
                    SuperVector u0v0a = p0_aa_part(c.embed_b(gbasis(u)), c.embed_a(v0a));
                    Rational sign = Rational(epsilon_sign(aspace.parity(i), gspace.parity(u))) *
                                    Rational(epsilon_sign(aspace.parity(i), gspace.parity(v)));
                    rhs.add_scaled(-sign, u0v0a);
                    scan.record(lhs == rhs, {i, u, v}, format_vector(lhs, aspace),
                                format_vector(rhs, aspace));
                }
    }
    {
        AxiomScan scan(report, "Eq 2.29");
        // pd(aa') = a pd a' + eps(a,a') a' pd a
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < na; ++j) {
                SuperVector lhs = c.b_part(c.partial_of(c.embed_a(a.product(i, j))));
                SuperVector rhs = star_act(abasis(i), c.partial_table().at(static_cast<size_t>(j)));
                rhs.add_scaled(eps_aa(i, j),
                               star_act(abasis(j), c.partial_table().at(static_cast<size_t>(i))));
                scan.record(lhs == rhs, {i, j}, format_vector(lhs, gspace), format_vector(rhs, gspace));
            }
    }
    return report;
}

TruncatedConformal to_truncated_conformal(const VertexSuperalgebroid& v) {
    CheckReport axioms = v.check_algebroid_axioms();
    if (!axioms.passed())
        throw AxiomViolationError(axioms.first_failure_label(), "algebroid axioms fail");
    TruncatedConformal c = to_truncated_conformal_unchecked(v);
    CheckReport tc = c.check_all();
    if (!tc.passed())
        throw AxiomViolationError(tc.first_failure_label(), "converted structure fails");
    CheckReport corr = check_correspondence(v.algebra(), v.star_table(), c);
    if (!corr.passed())
        throw AxiomViolationError(corr.first_failure_label(), "correspondence identity fails");
    return c;
}

VertexSuperalgebroid from_truncated_conformal(const TruncatedConformal& c,
                                              std::vector<std::vector<SuperVector>> star) {
    CheckReport corr = check_correspondence(c.algebra(), star, c);
    if (!corr.passed())
        throw AxiomViolationError(corr.first_failure_label(), "correspondence identity fails");

    int na = c.dim_a();
    int nb = c.dim_b();
    const Space& gspace = c.b_space();
    std::vector<std::vector<SuperVector>> bracket(
        static_cast<size_t>(nb), std::vector<SuperVector>(static_cast<size_t>(nb), SuperVector(gspace.id)));
    std::vector<std::vector<SuperVector>> pairing(
        static_cast<size_t>(nb),
        std::vector<SuperVector>(static_cast<size_t>(nb), SuperVector(c.a_space().id)));
    std::vector<DerivationMatrix> pi(static_cast<size_t>(nb));
    for (int u = 0; u < nb; ++u) {
        for (int v = 0; v < nb; ++v) {
            bracket[static_cast<size_t>(u)][static_cast<size_t>(v)] = c.b_part(c.prod0(na + u, na + v));
            pairing[static_cast<size_t>(u)][static_cast<size_t>(v)] = c.a_part(c.prod1(na + u, na + v));
        }
        pi[static_cast<size_t>(u)].degree = gspace.parity(u);
        for (int i = 0; i < na; ++i)
            pi[static_cast<size_t>(u)].columns.push_back(c.a_part(c.prod0(na + u, i)));
    }
    return VertexSuperalgebroid(c.algebra(), gspace, std::move(star), std::move(bracket),
                                std::move(pairing), std::move(pi), c.partial_table());
}

} // namespace vsb
