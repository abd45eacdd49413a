#include "folalg/foliation.hpp"

#include <algorithm>

namespace folalg {

namespace {

void section_residuals(const Section& s, const std::string& where,
                       std::vector<std::string>& out) {
    for (std::size_t l = 0; l < s.size(); ++l)
        if (!s[l].is_zero())
            out.push_back(where + " component e" + std::to_string(l + 1) + ": " +
                          s[l].to_string());
}

PolyMat stack(const PolyMat& a, const PolyMat& b) {
    PolyMat out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

Tristate is_B_foliated(const FoliatedPair& pair, const Section& a) {
    bool indeterminate = false;
    for (std::size_t h = 0; h < pair.p(); ++h) {
        Section br = pair.A.bracket_sections(pair.B.rows[h], a);
        SpanSolve sol = solve_in_span(pair.B.rows, br, pair.A.chart());
        if (sol.status == SpanSolve::Status::NotInSpan) return Tristate::No;
        if (sol.status == SpanSolve::Status::RationalOnly) indeterminate = true;
    }
    return indeterminate ? Tristate::Indeterminate : Tristate::Yes;
}

Report check_foliation(const FoliatedPair& pair) {
    Report rep;
    const Chart& chart = pair.A.chart();
    std::size_t r = pair.A.rank();
    std::size_t p = pair.p();
    std::size_t q = pair.q();
    std::size_t n = chart.leaf_dim();

    // Shapes and pointwise independence at generic points.
    {
        std::vector<std::string> bad;
        if (p + pair.C.rank() != r)
            bad.push_back("rank B + rank C = " + std::to_string(p + pair.C.rank()) +
                          " != rank A = " + std::to_string(r));
        if (generic_rank(pair.B.rows, chart) != p) bad.push_back("B rows dependent");
        if (generic_rank(pair.C.rows, chart) != pair.C.rank()) bad.push_back("C rows dependent");
        if (generic_rank(stack(pair.B.rows, pair.C.rows), chart) != r)
            bad.push_back("B + C does not span A at generic points");
        if (bad.empty())
            rep.pass("fol.shapes");
        else
            rep.fail("fol.shapes", "", bad);
    }

    // (i) bracket closure of B.
    {
        std::vector<std::string> residuals;
        bool indet = false;
        for (std::size_t h = 0; h < p; ++h) {
            for (std::size_t k = h + 1; k < p; ++k) {
                Section br = pair.A.bracket_sections(pair.B.rows[h], pair.B.rows[k]);
                SpanSolve sol = solve_in_span(pair.B.rows, br, chart);
                if (sol.status == SpanSolve::Status::NotInSpan)
                    section_residuals(br,
                                      "[b" + std::to_string(h + 1) + ",b" +
                                          std::to_string(k + 1) + "] not in span B;",
                                      residuals);
                else if (sol.status == SpanSolve::Status::RationalOnly)
                    indet = true;
            }
        }
        if (!residuals.empty())
            rep.fail("fol.bracket_closure", "Def. 1.2", residuals);
        else if (indet)
            rep.indeterminate("fol.bracket_closure", "Def. 1.2",
                              "span membership only rational at the genericity locus");
        else
            rep.pass("fol.bracket_closure", "Def. 1.2");
    }

    // (ii) anchor image equals the leaf tangent bundle.
    {
        std::vector<std::string> residuals;
        auto tr_idx = chart.transverse_indices();
        auto leaf_idx = chart.leaf_indices();
        PolyMat beta = zero_matrix(chart, p, n);
        for (std::size_t h = 0; h < p; ++h) {
            PolyVec v = pair.A.anchor_apply(pair.B.rows[h]);
            for (std::size_t a = 0; a < tr_idx.size(); ++a)
                if (!v[tr_idx[a]].is_zero())
                    residuals.push_back("anchor(b" + std::to_string(h + 1) +
                                        ") transverse component " + chart.name(tr_idx[a]) +
                                        ": " + v[tr_idx[a]].to_string());
            for (std::size_t u = 0; u < n; ++u) beta[h][u] = v[leaf_idx[u]];
        }
        std::size_t beta_rank = generic_rank(beta, chart);
        if (beta_rank != n)
            residuals.push_back("rank(beta) = " + std::to_string(beta_rank) +
                                " != dim F = " + std::to_string(n));
        if (residuals.empty())
            rep.pass("fol.anchor_image", "Def. 1.2 (1)");
        else
            rep.fail("fol.anchor_image", "Def. 1.2 (1)", residuals);
    }

    // (iii) witness rows span the complement.
    {
        std::vector<std::string> residuals;
        bool indet = false;
        if (q != pair.C.rank())
            residuals.push_back("witness count " + std::to_string(q) + " != rank C = " +
                                std::to_string(pair.C.rank()));
        for (std::size_t s = 0; s < q; ++s) {
            SpanSolve sol = solve_in_span(pair.C.rows, pair.witness[s], chart);
            if (sol.status == SpanSolve::Status::NotInSpan)
                residuals.push_back("witness row " + std::to_string(s + 1) + " not in span C");
            else if (sol.status == SpanSolve::Status::RationalOnly)
                indet = true;
        }
        if (generic_rank(pair.witness, chart) != q)
            residuals.push_back("witness rows dependent at generic points");
        if (!residuals.empty())
            rep.fail("fol.witness_in_complement", "Lemma 1.1", residuals);
        else if (indet)
            rep.indeterminate("fol.witness_in_complement", "Lemma 1.1");
        else
            rep.pass("fol.witness_in_complement", "Lemma 1.1");
    }

    // (iv) witness rows are B-foliated (foliated-generation condition).
    {
        std::vector<std::string> residuals;
        bool indet = false;
        for (std::size_t s = 0; s < q; ++s) {
            Tristate t = is_B_foliated(pair, pair.witness[s]);
            if (t == Tristate::No) {
                for (std::size_t h = 0; h < p; ++h) {
                    Section br = pair.A.bracket_sections(pair.B.rows[h], pair.witness[s]);
                    if (solve_in_span(pair.B.rows, br, chart).status ==
                        SpanSolve::Status::NotInSpan)
                        section_residuals(br,
                                          "[b" + std::to_string(h + 1) + ", w" +
                                              std::to_string(s + 1) + "] not in span B;",
                                          residuals);
                }
            } else if (t == Tristate::Indeterminate) {
                indet = true;
            }
        }
        if (!residuals.empty())
            rep.fail("fol.witness_foliated", "Def. 1.2 (2)", residuals);
        else if (indet)
            rep.indeterminate("fol.witness_foliated", "Def. 1.2 (2)");
        else
            rep.pass("fol.witness_foliated", "Def. 1.2 (2)");
    }

    rep.pass("fol.minimal", "Def. 1.2",
             p == n ? "minimally foliated" : "not minimal (rank B != dim F)");
    return rep;
}

SectionFrame pair_frame(const FoliatedPair& pair) {
    return SectionFrame::make(pair.A, stack(pair.witness, pair.B.rows));
}

PolyVec project_to_witness(const FoliatedPair& pair, const Section& a) {
    SpanSolve sol = solve_in_span(stack(pair.witness, pair.B.rows), a, pair.A.chart());
    if (sol.status != SpanSolve::Status::Polynomial)
        throw IndeterminateError("section has no polynomial expansion in the pair frame");
    return PolyVec(sol.coeffs.begin(), sol.coeffs.begin() + pair.q());
}

// ---------------------------------------------------------------------------

TransversalLieAlgebroid quotient_transversal(const FoliatedPair& pair) {
    const Chart& chart = pair.A.chart();
    Chart tchart = chart.transversal_chart();
    std::size_t q = pair.q();
    auto tr_idx = chart.transverse_indices();

    PolyMat anchor = zero_matrix(tchart, q, tchart.size());
    for (std::size_t s = 0; s < q; ++s) {
        PolyVec v = pair.A.anchor_apply(pair.witness[s]);
        for (std::size_t a = 0; a < tr_idx.size(); ++a) {
            if (!v[tr_idx[a]].is_foliated())
                throw ConstructionError("non-foliated projected anchor coefficient of witness " +
                                        std::to_string(s + 1) + " along " +
                                        chart.name(tr_idx[a]) + ": " + v[tr_idx[a]].to_string());
            anchor[s][a] = v[tr_idx[a]].transplant(tchart);
        }
    }

    SectionFrame frame = pair_frame(pair);
    StructureFunctions structure(tchart, q);
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = i + 1; j < q; ++j) {
            PolyVec v = zero_vector(tchart, q);
            for (std::size_t s = 0; s < q; ++s) {
                const Poly& coeff = frame.c[i][j][s];
                if (!coeff.is_foliated())
                    throw ConstructionError(
                        "non-foliated projected structure coefficient [w" + std::to_string(i + 1) +
                        ",w" + std::to_string(j + 1) + "] -> w" + std::to_string(s + 1) + ": " +
                        coeff.to_string());
                v[s] = coeff.transplant(tchart);
            }
            structure.set_bracket(i, j, std::move(v));
        }
    }

    return TransversalLieAlgebroid{chart,
                                   LieAlgebroid(tchart, q, std::move(anchor), std::move(structure))};
}

Report check_transversal(const TransversalLieAlgebroid& e) {
    Report rep;
    rep.merge(e.core.check_lie_algebroid(), "transversal");
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

// rho rows live over the full chart; their transverse components must equal
// the anchor of E.
void validate_lift(const TransversalLieAlgebroid& e, const PolyMat& rho) {
    const Chart& chart = e.full_chart;
    auto tr_idx = chart.transverse_indices();
    if (rho.size() != e.rank()) throw ConstructionError("lift row count != rank E");
    for (const auto& row : rho)
        if (row.size() != chart.base_dim())
            throw ConstructionError("lift column count != chart dimension");
    for (std::size_t s = 0; s < rho.size(); ++s) {
        for (std::size_t a = 0; a < tr_idx.size(); ++a) {
            Poly expect = e.core.anchor()[s][a].transplant(chart);
            if (rho[s][tr_idx[a]] != expect)
                throw ConstructionError("lift fails psi o rho = sharp_E at row " +
                                        std::to_string(s + 1) + ", " + chart.name(tr_idx[a]));
        }
    }
}

}  // namespace

FoliatedPair canonical_extension(const TransversalLieAlgebroid& e, const PolyMat& rho) {
    validate_lift(e, rho);
    const Chart& chart = e.full_chart;
    std::size_t q = e.rank();
    std::size_t n = chart.leaf_dim();
    std::size_t m = chart.base_dim();
    auto leaf_idx = chart.leaf_indices();
    auto tr_idx = chart.transverse_indices();

    std::size_t rank = n + q;
    PolyMat anchor = zero_matrix(chart, rank, m);
    for (std::size_t u = 0; u < n; ++u) anchor[u][leaf_idx[u]] = Poly::constant(chart, 1);
    for (std::size_t s = 0; s < q; ++s) anchor[n + s] = rho[s];

    StructureFunctions structure(chart, rank);
    // [Y_u, eps_s] = [d/dy_u, rho_s], a leafwise field since rho_s is foliated.
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t s = 0; s < q; ++s) {
            PolyVec v = zero_vector(chart, rank);
            for (std::size_t a = 0; a < tr_idx.size(); ++a)
                if (!rho[s][tr_idx[a]].partial(leaf_idx[u]).is_zero())
                    throw ConstructionError("lift row " + std::to_string(s + 1) +
                                            " is not a foliated vector field");
            for (std::size_t v2 = 0; v2 < n; ++v2)
                v[v2] = rho[s][leaf_idx[v2]].partial(leaf_idx[u]);
            structure.set_bracket(u, n + s, std::move(v));
        }
    }
    // [eps_s, eps_t] = ([rho_s, rho_t] - rho([e_s,e_t]_E)) + [e_s,e_t]_E.
    for (std::size_t s = 0; s < q; ++s) {
        for (std::size_t t = s + 1; t < q; ++t) {
            PolyVec ebr = e.core.structure().bracket(s, t);  // over the transversal chart
            PolyVec fpart = commutator(chart, rho[s], rho[t]);
            for (std::size_t w = 0; w < q; ++w) {
                Poly cw = ebr[w].transplant(chart);
                for (std::size_t i = 0; i < m; ++i) fpart[i] -= cw * rho[w][i];
            }
            PolyVec v = zero_vector(chart, rank);
            for (std::size_t a = 0; a < tr_idx.size(); ++a)
                if (!fpart[tr_idx[a]].is_zero())
                    throw ConstructionError("curvature part of the lift is not leafwise along " +
                                            chart.name(tr_idx[a]) + ": " +
                                            fpart[tr_idx[a]].to_string());
            for (std::size_t u = 0; u < n; ++u) v[u] = fpart[leaf_idx[u]];
            for (std::size_t w = 0; w < q; ++w) v[n + w] = ebr[w].transplant(chart);
            structure.set_bracket(n + s, n + t, std::move(v));
        }
    }

    LieAlgebroid a0(chart, rank, std::move(anchor), std::move(structure));
    FoliatedPair pair;
    pair.A = std::move(a0);
    pair.B.rows = zero_matrix(chart, n, rank);
    for (std::size_t u = 0; u < n; ++u) pair.B.rows[u][u] = Poly::constant(chart, 1);
    pair.C.rows = zero_matrix(chart, q, rank);
    for (std::size_t s = 0; s < q; ++s) pair.C.rows[s][n + s] = Poly::constant(chart, 1);
    pair.witness = pair.C.rows;
    return pair;
}

TwistedExtension twisted_extension(const TransversalLieAlgebroid& e, const PolyMat& rho,
                                   const std::vector<std::vector<PolyVec>>& lambda) {
    FoliatedPair base = canonical_extension(e, rho);
    const Chart& chart = e.full_chart;
    std::size_t q = e.rank();
    std::size_t n = chart.leaf_dim();
    auto tr_idx = chart.transverse_indices();

    if (lambda.size() != q) throw ConstructionError("lambda shape mismatch");
    for (const auto& row : lambda)
        if (row.size() != q) throw ConstructionError("lambda shape mismatch");
    for (std::size_t s = 0; s < q; ++s)
        for (std::size_t t = 0; t < q; ++t) {
            if (lambda[s][t].size() != q)
                throw ConstructionError("lambda value length != rank E");
            for (std::size_t w = 0; w < q; ++w)
                if (lambda[s][t][w] != -lambda[t][s][w])
                    throw ConstructionError("lambda is not antisymmetric");
        }
    for (std::size_t s = 0; s < q; ++s)
        for (std::size_t t = s + 1; t < q; ++t)
            for (std::size_t a = 0; a < tr_idx.size(); ++a) {
                Poly acc(chart);
                for (std::size_t w = 0; w < q; ++w)
                    acc += lambda[s][t][w] * e.core.anchor()[w][a].transplant(chart);
                if (!acc.is_zero())
                    throw ConstructionError("lambda(e" + std::to_string(s + 1) + ",e" +
                                            std::to_string(t + 1) + ") is not in ker sharp_E");
            }

    StructureFunctions structure(chart, base.A.rank());
    for (std::size_t h = 0; h < base.A.rank(); ++h)
        for (std::size_t k = h + 1; k < base.A.rank(); ++k)
            structure.set_bracket(h, k, base.A.structure().bracket(h, k));
    for (std::size_t s = 0; s < q; ++s)
        for (std::size_t t = s + 1; t < q; ++t) {
            PolyVec v = base.A.structure().bracket(n + s, n + t);
            for (std::size_t w = 0; w < q; ++w) v[n + w] += lambda[s][t][w];
            structure.set_bracket(n + s, n + t, std::move(v));
        }

    TwistedExtension out;
    out.pair = base;
    out.pair.A = LieAlgebroid(chart, base.A.rank(), base.A.anchor(), std::move(structure));
    out.jacobi = out.pair.A.check_lie_algebroid();
    return out;
}

// ---------------------------------------------------------------------------

void EValuedForm::add(IndexTuple tuple, const PolyVec& value) {
    if (tuple.size() != bgrade) throw std::invalid_argument("tuple/grade mismatch");
    bool zero = true;
    for (const auto& pcomp : value)
        if (!pcomp.is_zero()) zero = false;
    if (zero) return;
    auto sorted = sort_signed(std::move(tuple));
    if (!sorted) return;
    auto it = comps.find(sorted->first);
    if (it == comps.end()) {
        PolyVec v = value;
        if (sorted->second == -1)
            for (auto& pcomp : v) pcomp = -pcomp;
        comps.emplace(std::move(sorted->first), std::move(v));
    } else {
        for (std::size_t s = 0; s < value.size(); ++s)
            it->second[s] += sorted->second == 1 ? value[s] : -value[s];
        bool now_zero = true;
        for (const auto& pcomp : it->second)
            if (!pcomp.is_zero()) now_zero = false;
        if (now_zero) comps.erase(it);
    }
}

PolyVec EValuedForm::coeff(IndexTuple tuple) const {
    auto sorted = sort_signed(std::move(tuple));
    PolyVec zero(e_rank, Poly(chart));
    if (!sorted) return zero;
    auto it = comps.find(sorted->first);
    if (it == comps.end()) return zero;
    PolyVec v = it->second;
    if (sorted->second == -1)
        for (auto& pcomp : v) pcomp = -pcomp;
    return v;
}

EValuedForm EValuedForm::operator+(const EValuedForm& o) const {
    EValuedForm r = *this;
    for (const auto& [t, v] : o.comps) r.add(t, v);
    return r;
}

EValuedForm EValuedForm::operator-(const EValuedForm& o) const {
    return *this + o * Rational(-1);
}

EValuedForm EValuedForm::operator*(const Rational& c) const {
    EValuedForm r{chart, e_rank, bgrade, {}};
    for (const auto& [t, v] : comps) {
        PolyVec scaled = v;
        for (auto& pcomp : scaled) pcomp = pcomp * c;
        r.add(t, scaled);
    }
    return r;
}

bool EValuedForm::operator==(const EValuedForm& o) const {
    return bgrade == o.bgrade && comps == o.comps;
}

std::string EValuedForm::to_string() const {
    if (comps.empty()) return "0";
    std::string out;
    for (const auto& [t, v] : comps) {
        for (std::size_t s = 0; s < v.size(); ++s) {
            if (v[s].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + v[s].to_string() + ") b*[";
            for (std::size_t j = 0; j < t.size(); ++j)
                out += (j ? " " : "") + std::to_string(t[j] + 1);
            out += "] (x) e" + std::to_string(s + 1);
        }
    }
    return out;
}

EValuedForm evalued_dpp(const FoliatedPair& pair, const EValuedForm& xi) {
    SectionFrame bframe = SectionFrame::make(pair.A, pair.B.rows);
    EValuedForm out{pair.A.chart(), xi.e_rank, xi.bgrade + 1, {}};
    for (std::size_t s = 0; s < xi.e_rank; ++s) {
        AForm comp(pair.A.chart(), xi.bgrade);
        for (const auto& [t, v] : xi.comps) comp.add(t, v[s]);
        AForm dcomp = frame_d(bframe, comp);
        for (const auto& [t, c] : dcomp.comps()) {
            PolyVec v(xi.e_rank, Poly(pair.A.chart()));
            v[s] = c;
            out.add(t, v);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

DeformationFamily DeformationFamily::make(const FoliatedPair& pair, PolyMat theta,
                                          const std::string& param_name) {
    DeformationFamily fam;
    fam.chart_with_t = pair.A.chart().extended_with_fiber("param", {param_name});
    fam.t_index = fam.chart_with_t.require(param_name);

    if (theta.size() != pair.p()) throw ConstructionError("theta row count != rank B");
    for (auto& row : theta) {
        if (row.size() != pair.q()) throw ConstructionError("theta column count != rank E");
        for (auto& entry : row) entry = entry.transplant(fam.chart_with_t);
    }
    auto leaf = fam.chart_with_t.leaf_indices();
    for (const auto& row : theta)
        for (const auto& entry : row) {
            if (!entry.independent_of(leaf))
                throw ConstructionError("theta depends on a leaf coordinate: " +
                                        entry.to_string());
            if (!entry.substitute(fam.t_index, Rational(0)).is_zero())
                throw ConstructionError("theta does not vanish at t = 0: " + entry.to_string());
        }
    fam.theta = std::move(theta);
    return fam;
}

EValuedForm deformation_form(const FoliatedPair& pair, const DeformationFamily& fam) {
    const Chart& chart = pair.A.chart();
    EValuedForm xi{chart, pair.q(), 1, {}};
    for (std::size_t h = 0; h < fam.theta.size(); ++h) {
        PolyVec v(pair.q(), Poly(chart));
        for (std::size_t s = 0; s < pair.q(); ++s)
            v[s] = fam.theta[h][s].coefficient_of(fam.t_index, 1).transplant(chart);
        xi.add({static_cast<unsigned>(h)}, v);
    }
    return xi;
}

EValuedForm trivial_deformation_form(const FoliatedPair& pair, const Section& a) {
    PolyVec g = project_to_witness(pair, a);
    EValuedForm zero_form{pair.A.chart(), pair.q(), 0, {}};
    zero_form.add({}, g);
    return evalued_dpp(pair, zero_form) * Rational(-1);
}

}  // namespace folalg
