#include "folalg/algebroid.hpp"

#include <functional>
#include <stdexcept>

namespace folalg {

StructureFunctions::StructureFunctions(const Chart& chart, std::size_t rank)
    : chart_(chart), rank_(rank) {
    c_.assign(rank, std::vector<PolyVec>(rank, zero_vector(chart, rank)));
}

const PolyVec& StructureFunctions::bracket(std::size_t h, std::size_t k) const {
    return c_.at(h).at(k);
}

Poly StructureFunctions::coeff(std::size_t h, std::size_t k, std::size_t l) const {
    return c_.at(h).at(k).at(l);
}

void StructureFunctions::set_bracket(std::size_t h, std::size_t k, PolyVec v) {
    if (v.size() != rank_) throw std::invalid_argument("structure vector length mismatch");
    if (h == k) {
        for (const auto& p : v)
            if (!p.is_zero()) throw std::invalid_argument("nonzero diagonal bracket");
        return;
    }
    PolyVec neg(v.size(), Poly(chart_));
    for (std::size_t l = 0; l < v.size(); ++l) neg[l] = -v[l];
    c_[h][k] = std::move(v);
    c_[k][h] = std::move(neg);
}

bool StructureFunctions::operator==(const StructureFunctions& o) const {
    return rank_ == o.rank_ && c_ == o.c_;
}

// ---------------------------------------------------------------------------

LieAlgebroid::LieAlgebroid(Chart chart, std::size_t rank, PolyMat anchor,
                           StructureFunctions structure)
    : chart_(std::move(chart)), rank_(rank), anchor_(std::move(anchor)),
      structure_(std::move(structure)) {
    if (anchor_.size() != rank_) throw std::invalid_argument("anchor row count != rank");
    for (const auto& row : anchor_)
        if (row.size() != chart_.base_dim())
            throw std::invalid_argument("anchor column count != chart dimension");
    if (structure_.rank() != rank_) throw std::invalid_argument("structure rank mismatch");
}

LieAlgebroid LieAlgebroid::tangent(const Chart& chart) {
    std::size_t m = chart.base_dim();
    PolyMat anchor = zero_matrix(chart, m, m);
    for (std::size_t i = 0; i < m; ++i) anchor[i][i] = Poly::constant(chart, 1);
    return LieAlgebroid(chart, m, std::move(anchor), StructureFunctions(chart, m));
}

Section LieAlgebroid::basis_section(std::size_t h) const {
    Section s = zero_vector(chart_, rank_);
    s.at(h) = Poly::constant(chart_, 1);
    return s;
}

PolyVec LieAlgebroid::anchor_apply(const Section& s) const {
    if (s.size() != rank_) throw std::invalid_argument("section rank mismatch");
    PolyVec out = zero_vector(chart_, chart_.base_dim());
    for (std::size_t h = 0; h < rank_; ++h)
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += s[h] * anchor_[h][i];
    return out;
}

Poly LieAlgebroid::anchor_derive(const Section& s, const Poly& f) const {
    PolyVec x = anchor_apply(s);
    Poly out(chart_);
    for (std::size_t i = 0; i < x.size(); ++i) out += x[i] * f.partial(i);
    return out;
}

Section LieAlgebroid::bracket_sections(const Section& s1, const Section& s2) const {
    if (s1.size() != rank_ || s2.size() != rank_)
        throw std::invalid_argument("section rank mismatch");
    Section out = zero_vector(chart_, rank_);
    for (std::size_t h = 0; h < rank_; ++h) {
        if (s1[h].is_zero()) continue;
        for (std::size_t k = 0; k < rank_; ++k) {
            if (s2[k].is_zero()) continue;
            const PolyVec& c = structure_.bracket(h, k);
            Poly scale = s1[h] * s2[k];
            for (std::size_t l = 0; l < rank_; ++l) out[l] += scale * c[l];
        }
    }
    PolyVec x1 = anchor_apply(s1);
    PolyVec x2 = anchor_apply(s2);
    for (std::size_t l = 0; l < rank_; ++l) {
        for (std::size_t i = 0; i < x1.size(); ++i) {
            out[l] += x1[i] * s2[l].partial(i);
            out[l] -= x2[i] * s1[l].partial(i);
        }
    }
    return out;
}

Report LieAlgebroid::check_lie_algebroid() const {
    Report rep;
    // Anchor morphism on basis pairs; Leibniz extension makes this spanning.
    bool anchor_ok = true;
    std::vector<std::string> anchor_res;
    for (std::size_t h = 0; h < rank_; ++h) {
        for (std::size_t k = h + 1; k < rank_; ++k) {
            PolyVec lhs = anchor_apply(structure_.bracket(h, k));
            PolyVec rhs = commutator(chart_, anchor_[h], anchor_[k]);
            for (std::size_t i = 0; i < lhs.size(); ++i) {
                Poly res = lhs[i] - rhs[i];
                if (!res.is_zero()) {
                    anchor_ok = false;
                    anchor_res.push_back("anchor([e" + std::to_string(h + 1) + ",e" +
                                         std::to_string(k + 1) + "]) - [anchors] along " +
                                         chart_.name(i) + ": " + res.to_string());
                }
            }
        }
    }
    if (anchor_ok)
        rep.pass("lie.anchor_morphism", "Def. 1.1 (1)");
    else
        rep.fail("lie.anchor_morphism", "Def. 1.1 (1)", anchor_res);

    bool jac_ok = true;
    std::vector<std::string> jac_res;
    for (std::size_t h = 0; h < rank_; ++h) {
        for (std::size_t k = h + 1; k < rank_; ++k) {
            for (std::size_t l = k + 1; l < rank_; ++l) {
                Section eh = basis_section(h), ek = basis_section(k), el = basis_section(l);
                Section j = bracket_sections(bracket_sections(eh, ek), el);
                Section t2 = bracket_sections(bracket_sections(ek, el), eh);
                Section t3 = bracket_sections(bracket_sections(el, eh), ek);
                for (std::size_t m = 0; m < rank_; ++m) {
                    Poly res = j[m] + t2[m] + t3[m];
                    if (!res.is_zero()) {
                        jac_ok = false;
                        jac_res.push_back("jacobi(e" + std::to_string(h + 1) + ",e" +
                                          std::to_string(k + 1) + ",e" + std::to_string(l + 1) +
                                          ") component e" + std::to_string(m + 1) + ": " +
                                          res.to_string());
                    }
                }
            }
        }
    }
    if (jac_ok)
        rep.pass("lie.jacobi", "Def. 1.1");
    else
        rep.fail("lie.jacobi", "Def. 1.1", jac_res);
    return rep;
}

// ---------------------------------------------------------------------------

AForm AForm::function(const Poly& f) {
    AForm w(f.chart(), 0);
    w.add({}, f);
    return w;
}

AForm AForm::operator+(const AForm& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch");
    AForm r = *this;
    for (const auto& [t, c] : o.comps_) r.add(t, c);
    return r;
}

AForm AForm::operator-(const AForm& o) const { return *this + o * Rational(-1); }

AForm AForm::operator*(const Rational& c) const {
    AForm r(chart_, degree_);
    for (const auto& [t, f] : comps_) r.add(t, f * c);
    return r;
}

AForm AForm::operator*(const Poly& f) const {
    AForm r(chart_, degree_);
    for (const auto& [t, c] : comps_) r.add(t, c * f);
    return r;
}

AForm AForm::wedge(const AForm& o) const {
    AForm r(chart_, degree_ + o.degree_);
    IndexTuple merged;
    for (const auto& [s, f] : comps_)
        for (const auto& [t, g] : o.comps_) {
            int sign = merge_sign(s, t, merged);
            if (sign == 0) continue;
            Poly c = f * g;
            r.add(merged, sign == 1 ? c : -c);
        }
    return r;
}

// ---------------------------------------------------------------------------

SectionFrame SectionFrame::make(const LieAlgebroid& a, PolyMat rows) {
    SectionFrame fr;
    fr.algebroid = &a;
    fr.sections = std::move(rows);
    std::size_t d = fr.sections.size();
    fr.anchors.reserve(d);
    for (const auto& row : fr.sections) fr.anchors.push_back(a.anchor_apply(row));
    fr.c.assign(d, std::vector<PolyVec>(d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (i == j) {
                fr.c[i][j] = zero_vector(a.chart(), d);
                continue;
            }
            if (j < i) continue;  // fill antisymmetrically below
            Section br = a.bracket_sections(fr.sections[i], fr.sections[j]);
            SpanSolve sol = solve_in_span(fr.sections, br, a.chart());
            if (sol.status != SpanSolve::Status::Polynomial)
                throw IndeterminateError("frame bracket [F" + std::to_string(i + 1) + ",F" +
                                         std::to_string(j + 1) +
                                         "] has no polynomial expansion in the frame");
            fr.c[i][j] = sol.coeffs;
            PolyVec neg;
            neg.reserve(d);
            for (const auto& p : sol.coeffs) neg.push_back(-p);
            fr.c[j][i] = std::move(neg);
        }
    }
    return fr;
}

SectionFrame SectionFrame::basis(const LieAlgebroid& a) {
    SectionFrame fr;
    fr.algebroid = &a;
    std::size_t r = a.rank();
    fr.sections = zero_matrix(a.chart(), r, r);
    for (std::size_t i = 0; i < r; ++i) fr.sections[i][i] = Poly::constant(a.chart(), 1);
    fr.anchors = a.anchor();
    fr.c.assign(r, std::vector<PolyVec>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) fr.c[i][j] = a.structure().bracket(i, j);
    return fr;
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const IndexTuple&)>& fn) {
    if (k > n) return;
    IndexTuple t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = static_cast<unsigned>(i);
    while (true) {
        fn(t);
        std::size_t i = k;
        while (i > 0 && t[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++t[i - 1];
        for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
    }
}

AForm frame_d(const SectionFrame& frame, const AForm& w) {
    const Chart& chart = frame.algebroid->chart();
    unsigned deg = w.degree();
    AForm out(chart, deg + 1);
    std::size_t d = frame.size();
    if (deg + 1 > d) return out;

    for_each_combination(d, deg + 1, [&](const IndexTuple& t) {
        Poly val(chart);
        // sum_j (-1)^{j+1} sharp(F_{t_j})( w(t minus j) )
        for (std::size_t j = 0; j < t.size(); ++j) {
            IndexTuple rest;
            rest.reserve(t.size() - 1);
            for (std::size_t u = 0; u < t.size(); ++u)
                if (u != j) rest.push_back(t[u]);
            Poly coeff = w.coeff(rest);
            if (coeff.is_zero()) continue;
            Poly der(chart);
            const PolyVec& x = frame.anchors[t[j]];
            for (std::size_t i = 0; i < x.size(); ++i) der += x[i] * coeff.partial(i);
            if (j % 2 == 0)
                val += der;
            else
                val -= der;
        }
        // sum_{j<l} (-1)^{j+l} w([F_{t_j},F_{t_l}], rest)
        for (std::size_t j = 0; j < t.size(); ++j) {
            for (std::size_t l = j + 1; l < t.size(); ++l) {
                IndexTuple rest;
                rest.reserve(t.size() - 2);
                for (std::size_t u = 0; u < t.size(); ++u)
                    if (u != j && u != l) rest.push_back(t[u]);
                const PolyVec& br = frame.c[t[j]][t[l]];
                Poly term(chart);
                for (std::size_t k = 0; k < br.size(); ++k) {
                    if (br[k].is_zero()) continue;
                    IndexTuple full;
                    full.reserve(rest.size() + 1);
                    full.push_back(static_cast<unsigned>(k));
                    full.insert(full.end(), rest.begin(), rest.end());
                    Poly c = w.coeff(full);
                    if (!c.is_zero()) term += br[k] * c;
                }
                // 1-based signs: (-1)^{(j+1)+(l+1)} = (-1)^{j+l}.
                if ((j + l) % 2 == 0)
                    val += term;
                else
                    val -= term;
            }
        }
        out.add(t, val);
    });
    return out;
}

AForm d_A(const LieAlgebroid& a, const AForm& w) {
    return frame_d(SectionFrame::basis(a), w);
}

std::vector<Poly> monomials_up_to(const Chart& chart, const std::vector<std::size_t>& coords,
                                  unsigned max_total_degree) {
    std::vector<Poly> out;
    std::vector<unsigned> exps(coords.size(), 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
        if (pos == coords.size()) {
            Poly::Exponents e(chart.size(), 0);
            for (std::size_t i = 0; i < coords.size(); ++i) e[coords[i]] = exps[i];
            out.push_back(Poly::monomial(chart, std::move(e), Rational(1)));
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            exps[pos] = k;
            rec(pos + 1, left - k);
        }
        exps[pos] = 0;
    };
    rec(0, max_total_degree);
    return out;
}

Report LieAlgebroid::check_dsquared(unsigned degree_cap, unsigned poly_cap) const {
    Report rep;
    SectionFrame frame = SectionFrame::basis(*this);
    std::vector<Poly> monos = monomials_up_to(chart_, chart_.base_indices(), poly_cap);
    bool ok = true;
    std::vector<std::string> residuals;
    unsigned cap = std::min<unsigned>(degree_cap, static_cast<unsigned>(rank_));
    for (unsigned deg = 0; deg <= cap; ++deg) {
        for_each_combination(rank_, deg, [&](const IndexTuple& t) {
            for (const auto& mono : monos) {
                AForm w(chart_, deg);
                w.add(t, mono);
                AForm dd = frame_d(frame, frame_d(frame, w));
                if (!dd.is_zero()) {
                    ok = false;
                    for (const auto& [tt, c] : dd.comps()) {
                        std::string where = "d(d(" + mono.to_string() + " e*[";
                        for (unsigned i : t) where += std::to_string(i + 1) + " ";
                        where += "]))";
                        residuals.push_back(where + ": " + c.to_string());
                        if (residuals.size() > 20) return;
                    }
                }
            }
        });
    }
    if (ok)
        rep.pass("lie.dsquared", "",
                 "degree cap " + std::to_string(cap) + ", coefficient degree cap " +
                     std::to_string(poly_cap));
    else
        rep.fail("lie.dsquared", "", residuals);
    return rep;
}

}  // namespace folalg
