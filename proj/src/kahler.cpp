#include "vsb/kahler.hpp"

#include "vsb/errors.hpp"

namespace vsb {

CheckReport SectionFourInput::validate() const {
    CheckReport report("example-family input");
    {
        AxiomScan scan(report, "A purely even");
        for (int i = 0; i < a.dim(); ++i)
            scan.record(a.space().parity(i) == Parity::Even, {i}, a.space().label(i), "even");
    }
    report.merge(a.check_unital());
    report.merge(a.check_super_commutative());
    report.merge(a.check_associative());
    report.merge(g.check_lie_superalgebra());

    if (pi.size() != static_cast<size_t>(g.dim())) throw Error("pi: wrong size");
    if (d.size() != static_cast<size_t>(g.dim())) throw Error("d: wrong size");

    for (int j = 0; j < g.dim(); ++j) {
        if (is_odd(g.space().parity(j))) {
            AxiomScan scan(report, "odd part of g acts trivially");
            bool zero = true;
            for (const auto& col : pi.at(static_cast<size_t>(j)).columns)
                if (!col.is_zero()) zero = false;
            scan.record(zero, {j}, g.space().label(j), "0");
        } else {
            report.merge(check_derivation(pi.at(static_cast<size_t>(j)), a,
                                          "pi(" + g.space().label(j) + ") is a derivation"));
        }
    }
    {
        AxiomScan scan(report, "pi is a Lie superalgebra homomorphism");
        auto pi_vec = [&](const SuperVector& gv, const SuperVector& av) {
            SuperVector out(a.space().id);
            for (const auto& [j, c] : gv.entries())
                out.add_scaled(c, pi.at(static_cast<size_t>(j)).apply(av));
            return out;
        };
        for (int p = 0; p < g.dim(); ++p)
            for (int q = 0; q < g.dim(); ++q)
                for (int b = 0; b < a.dim(); ++b) {
                    SuperVector eb = basis_vector(a.space().id, b);
                    SuperVector lhs = pi_vec(g.product(p, q), eb);
                    SuperVector rhs = pi.at(static_cast<size_t>(p)).apply(pi.at(static_cast<size_t>(q)).apply(eb));
                    rhs.add_scaled(Rational(-epsilon_sign(g.space().parity(p), g.space().parity(q))),
                                   pi.at(static_cast<size_t>(q)).apply(pi.at(static_cast<size_t>(p)).apply(eb)));
                    scan.record(lhs == rhs, {p, q, b}, format_vector(lhs, a.space()),
                                format_vector(rhs, a.space()));
                }
    }
    {
        AxiomScan scan(report, "d is even");
        for (int j = 0; j < g.dim(); ++j) {
            bool ok = !is_odd(g.space().parity(j)) || d.at(static_cast<size_t>(j)).is_zero();
            scan.record(ok, {j}, format_vector(d.at(static_cast<size_t>(j)), a.space()), "0");
        }
    }
    {
        AxiomScan scan(report, "d([x,y]) = x d(y) - y d(x)");
        for (int p = 0; p < g.dim(); ++p)
            for (int q = 0; q < g.dim(); ++q) {
                SuperVector lhs(a.space().id);
                for (const auto& [j, c] : g.product(p, q).entries())
                    lhs.add_scaled(c, d.at(static_cast<size_t>(j)));
                SuperVector rhs = pi.at(static_cast<size_t>(p)).apply(d.at(static_cast<size_t>(q)));
                rhs -= pi.at(static_cast<size_t>(q)).apply(d.at(static_cast<size_t>(p)));
                scan.record(lhs == rhs, {p, q}, format_vector(lhs, a.space()),
                            format_vector(rhs, a.space()));
            }
    }
    return report;
}

KahlerModule::KahlerModule(const StructureAlgebra& a) : a_(a) {
    int n = a.dim();
    const Space& as = a.space();
    std::vector<std::string> amb_labels;
    amb_labels.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) amb_labels.push_back(as.label(i) + "d(" + as.label(j) + ")");
    ambient_ = even_space(as.id + 40, n * n, std::move(amb_labels));
    relations_ = Subspace(ambient_.id);

    // ambient module action e_m . (e_i d e_j) = (e_m e_i) d e_j
    auto module_mult_ambient = [&](int m, const SuperVector& w) {
        SuperVector out(ambient_.id);
        for (const auto& [coord, c] : w.entries()) {
            int i = coord / n, j = coord % n;
            for (const auto& [k, x] : a.product(m, i).entries()) out.add(k * n + j, c * x);
        }
        return out;
    };
    auto partial_ambient = [&](const SuperVector& x) {
        // d(x) = sum_l x_l (1 d e_l), with 1 expanded in coordinates
        SuperVector out(ambient_.id);
        const SuperVector& unit = *a.unit();
        for (const auto& [l, xl] : x.entries())
            for (const auto& [m, um] : unit.entries()) out.add(m * n + l, xl * um);
        return out;
    };

    if (!a.unit()) throw Error("Kahler module needs a unital algebra");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            SuperVector rel = partial_ambient(a.product(i, j));
            rel.add(i * n + j, Rational(-1));
            rel.add(j * n + i, Rational(-1));
            relations_.insert(rel);
            for (int m = 0; m < n; ++m) relations_.insert(module_mult_ambient(m, rel));
        }

    rep_coords_ = relations_.non_pivot_columns(n * n);
    std::vector<std::string> labels;
    labels.reserve(rep_coords_.size());
    for (size_t k = 0; k < rep_coords_.size(); ++k) {
        labels.push_back(ambient_.label(rep_coords_[k]));
        coord_to_omega_[rep_coords_[k]] = static_cast<int>(k);
    }
    omega_ = even_space(ambient_.id + 1, static_cast<int>(rep_coords_.size()), std::move(labels));
}

int KahlerModule::ambient_coord(int i, int j) const { return i * a_.dim() + j; }

SuperVector KahlerModule::reduce(const SuperVector& ambient_vec) const {
    SuperVector res = relations_.reduce(ambient_vec);
    SuperVector out(omega_.id);
    for (const auto& [coord, c] : res.entries()) out.set(coord_to_omega_.at(coord), c);
    return out;
}

SuperVector KahlerModule::lift(const SuperVector& w) const {
    SuperVector out(ambient_.id);
    for (const auto& [idx, c] : w.entries()) out.set(rep_coords_.at(static_cast<size_t>(idx)), c);
    return out;
}

SuperVector KahlerModule::a_partial_b(const SuperVector& a, const SuperVector& b) const {
    int n = a_.dim();
    SuperVector amb(ambient_.id);
    for (const auto& [i, x] : a.entries())
        for (const auto& [j, y] : b.entries()) amb.add(i * n + j, x * y);
    return reduce(amb);
}

SuperVector KahlerModule::partial(const SuperVector& a) const {
    return a_partial_b(*a_.unit(), a);
}

SuperVector KahlerModule::module_mult(const SuperVector& a, const SuperVector& w) const {
    int n = a_.dim();
    SuperVector amb(ambient_.id);
    SuperVector lifted = lift(w);
    for (const auto& [coord, c] : lifted.entries()) {
        int i = coord / n, j = coord % n;
        for (const auto& [m, x] : a.entries())
            for (const auto& [k, y] : a_.product(m, i).entries()) amb.add(k * n + j, c * x * y);
    }
    return reduce(amb);
}

SuperVector KahlerModule::pair_derivation(const DerivationMatrix& tau, const SuperVector& w) const {
    int n = a_.dim();
    SuperVector out(a_.space().id);
    SuperVector lifted = lift(w);
    for (const auto& [coord, c] : lifted.entries()) {
        int i = coord / n, j = coord % n;
        out.add_scaled(c, a_.product(basis_vector(a_.space().id, i),
                                     tau.columns.at(static_cast<size_t>(j))));
    }
    return out;
}

KahlerModule build_kahler(const StructureAlgebra& a) { return KahlerModule(a); }

VertexSuperalgebroid build_section4_algebroid(const SectionFourInput& input) {
    CheckReport valid = input.validate();
    if (!valid.passed())
        throw InvariantViolationError(valid.first_failure_label(), "input invariant fails");

    const StructureAlgebra& a = input.a;
    const StructureAlgebra& g = input.g;
    const Space& as = a.space();
    const Space& gs = g.space();
    int na = a.dim();
    int ng = g.dim();

    KahlerModule kahler(a);
    int nt = na * ng;
    int nw = kahler.dim();
    int n_gamma = nt + nw;

    std::vector<Parity> parities;
    std::vector<std::string> labels;
    parities.reserve(static_cast<size_t>(n_gamma));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < ng; ++j) {
            parities.push_back(gs.parity(j));
            labels.push_back(as.label(i) + "(x)" + gs.label(j));
        }
    for (int w = 0; w < nw; ++w) {
        parities.push_back(Parity::Even);
        labels.push_back(kahler.omega().label(w));
    }
    Space gamma(as.id + 42, std::move(parities), std::move(labels));

    auto t_index = [&](int i, int j) { return i * ng + j; };
    auto embed_t = [&](const SuperVector& av, const SuperVector& gv) {
        SuperVector out(gamma.id);
        for (const auto& [i, x] : av.entries())
            for (const auto& [j, y] : gv.entries()) out.add(t_index(i, j), x * y);
        return out;
    };
    auto embed_w = [&](const SuperVector& w) {
        SuperVector out(gamma.id);
        for (const auto& [idx, c] : w.entries()) out.add(nt + idx, c);
        return out;
    };
    auto pi_g = [&](int j, const SuperVector& av) { return input.pi.at(static_cast<size_t>(j)).apply(av); };
    auto abasis = [&](int i) { return basis_vector(as.id, i); };
    auto gbasis = [&](int j) { return basis_vector(gs.id, j); };

    // star action
    std::vector<std::vector<SuperVector>> star(
        static_cast<size_t>(na), std::vector<SuperVector>(static_cast<size_t>(n_gamma), SuperVector(gamma.id)));
    for (int m = 0; m < na; ++m) {
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < ng; ++j) {
                // a*(b⊗g) = ab⊗g + (ga)db + (gb)da
                SuperVector out = embed_t(a.product(m, i), gbasis(j));
                out += embed_w(kahler.a_partial_b(pi_g(j, abasis(m)), abasis(i)));
                out += embed_w(kahler.a_partial_b(pi_g(j, abasis(i)), abasis(m)));
                star[static_cast<size_t>(m)][static_cast<size_t>(t_index(i, j))] = out;
            }
        for (int w = 0; w < nw; ++w)
            star[static_cast<size_t>(m)][static_cast<size_t>(nt + w)] =
                embed_w(kahler.module_mult(abasis(m), basis_vector(kahler.omega().id, w)));
    }

    // bracket
    std::vector<std::vector<SuperVector>> bracket(
        static_cast<size_t>(n_gamma),
        std::vector<SuperVector>(static_cast<size_t>(n_gamma), SuperVector(gamma.id)));
    for (int i = 0; i < na; ++i)
        for (int p = 0; p < ng; ++p) {
            int row = t_index(i, p);
            for (int j = 0; j < na; ++j)
                for (int q = 0; q < ng; ++q) {
                    // [a⊗g, a'⊗g'] = aa'⊗[g,g'] + a(ga')⊗g' - eps(g,g') a'(g'a)⊗g
                    SuperVector out = embed_t(a.product(i, j), g.product(p, q));
                    out += embed_t(a.product(abasis(i), pi_g(p, abasis(j))), gbasis(q));
                    out.add_scaled(Rational(-epsilon_sign(gs.parity(p), gs.parity(q))),
                                   embed_t(a.product(abasis(j), pi_g(q, abasis(i))), gbasis(p)));
                    bracket[static_cast<size_t>(row)][static_cast<size_t>(t_index(j, q))] = out;
                }
            for (int w = 0; w < nw; ++w) {
                // [a'⊗g', a d b] = a'(g'a) d b + a d(a'(g'b))
                SuperVector lifted = kahler.lift(basis_vector(kahler.omega().id, w));
                SuperVector out(gamma.id);
                for (const auto& [coord, c] : lifted.entries()) {
                    int al = coord / na, be = coord % na;
                    SuperVector term = kahler.a_partial_b(
                        a.product(abasis(i), pi_g(p, abasis(al))), abasis(be));
                    term.add_scaled(Rational(1),
                                    kahler.a_partial_b(abasis(al),
                                                       a.product(abasis(i), pi_g(p, abasis(be)))));
                    out.add_scaled(c, embed_w(term));
                }
                bracket[static_cast<size_t>(row)][static_cast<size_t>(nt + w)] = out;

                // [a d b, a'⊗g'] = -a'(g'a) d b + a'(g'b) d a
                SuperVector out2(gamma.id);
                for (const auto& [coord, c] : lifted.entries()) {
                    int al = coord / na, be = coord % na;
                    SuperVector term = kahler.a_partial_b(
                        a.product(abasis(i), pi_g(p, abasis(al))), abasis(be));
                    term *= Rational(-1);
                    term += kahler.a_partial_b(a.product(abasis(i), pi_g(p, abasis(be))), abasis(al));
                    out2.add_scaled(c, embed_w(term));
                }
                bracket[static_cast<size_t>(nt + w)][static_cast<size_t>(row)] = out2;
            }
        }

    // pairing
    std::vector<std::vector<SuperVector>> pairing(
        static_cast<size_t>(n_gamma),
        std::vector<SuperVector>(static_cast<size_t>(n_gamma), SuperVector(as.id)));
    for (int i = 0; i < na; ++i)
        for (int p = 0; p < ng; ++p) {
            int row = t_index(i, p);
            for (int w = 0; w < nw; ++w) {
                // <a⊗g, a' d b> = a a' (g b)
                SuperVector lifted = kahler.lift(basis_vector(kahler.omega().id, w));
                SuperVector out(as.id);
                for (const auto& [coord, c] : lifted.entries()) {
                    int al = coord / na, be = coord % na;
                    out.add_scaled(c, a.product(a.product(i, al), pi_g(p, abasis(be))));
                }
                pairing[static_cast<size_t>(row)][static_cast<size_t>(nt + w)] = out;
                pairing[static_cast<size_t>(nt + w)][static_cast<size_t>(row)] = out; // Ω is even
            }
        }

    // anchor
    std::vector<DerivationMatrix> pi(static_cast<size_t>(n_gamma));
    for (int i = 0; i < na; ++i)
        for (int p = 0; p < ng; ++p) {
            DerivationMatrix& m = pi[static_cast<size_t>(t_index(i, p))];
            m.degree = gs.parity(p);
            for (int b = 0; b < na; ++b)
                m.columns.push_back(a.product(abasis(i), pi_g(p, abasis(b))));
        }
    for (int w = 0; w < nw; ++w) {
        DerivationMatrix& m = pi[static_cast<size_t>(nt + w)];
        m.degree = Parity::Even;
        m.columns.assign(static_cast<size_t>(na), SuperVector(as.id));
    }

    // derivation A -> Γ
    std::vector<SuperVector> partial;
    partial.reserve(static_cast<size_t>(na));
    for (int l = 0; l < na; ++l) partial.push_back(embed_w(kahler.partial(abasis(l))));

    return VertexSuperalgebroid(a, std::move(gamma), std::move(star), std::move(bracket),
                                std::move(pairing), std::move(pi), std::move(partial));
}

BModuleData build_section4_l1(const SectionFourInput& input, const VertexSuperalgebroid& v) {
    BModuleData data;
    int na = input.a.dim();
    int ng = input.g.dim();
    int nt = na * ng;
    data.l1.assign(static_cast<size_t>(v.dim_gamma()), SuperVector(input.a.space().id));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < ng; ++j) {
            SuperVector val = input.pi.at(static_cast<size_t>(j)).apply(basis_vector(input.a.space().id, i));
            val += input.a.product(basis_vector(input.a.space().id, i), input.d.at(static_cast<size_t>(j)));
            data.l1.at(static_cast<size_t>(i * ng + j)) = val;
        }
    (void)nt;
    return data;
}

} // namespace vsb
