#include "folalg/tangent.hpp"

namespace folalg {

std::string dotted_name(const std::string& name) { return name + "_dot"; }

namespace {

std::string fresh_name(std::string candidate, const std::vector<Coord>& taken) {
    auto used = [&](const std::string& n) {
        for (const auto& c : taken)
            if (c.name == n) return true;
        return false;
    };
    while (used(candidate)) candidate += "_";
    return candidate;
}

Poly dotted_variable(const Chart& tchart, std::size_t m, std::size_t i) {
    Poly::Exponents e(tchart.size(), 0);
    e[m + i] = 1;
    return Poly::monomial(tchart, std::move(e), Rational(1));
}

}  // namespace

Chart tangent_chart(const Chart& base, std::size_t rank) {
    std::vector<Coord> coords;
    auto base_idx = base.base_indices();
    for (std::size_t i : base_idx) coords.push_back({base.name(i), base.kind(i), {}});
    for (std::size_t i : base_idx)
        coords.push_back({fresh_name(dotted_name(base.name(i)), coords), base.kind(i), {}});
    for (std::size_t a = 0; a < rank; ++a)
        coords.push_back(
            {fresh_name("xi" + std::to_string(a + 1), coords), CoordKind::Fiber, "xi"});
    for (std::size_t a = 0; a < rank; ++a)
        coords.push_back({fresh_name("xi" + std::to_string(a + 1) + "_dot", coords),
                          CoordKind::Fiber, "xidot"});
    return Chart::from_coords(std::move(coords));
}

Poly complete_lift_function(const Chart& base, const Chart& tchart, const Poly& f) {
    Poly ft = f.transplant(tchart);
    Poly out(tchart);
    std::size_t m = base.base_dim();
    for (std::size_t i = 0; i < m; ++i) out += dotted_variable(tchart, m, i) * ft.partial(i);
    return out;
}

LieAlgebroid tangent_algebroid(const LieAlgebroid& a) {
    const Chart& base = a.chart();
    std::size_t r = a.rank();
    std::size_t m = base.base_dim();
    Chart tchart = tangent_chart(base, r);

    auto lift = [&](const Poly& f) { return f.transplant(tchart); };
    auto clift = [&](const Poly& f) { return complete_lift_function(base, tchart, f); };

    PolyMat anchor = zero_matrix(tchart, 2 * r, 2 * m);
    for (std::size_t al = 0; al < r; ++al) {
        for (std::size_t i = 0; i < m; ++i) {
            anchor[al][i] = lift(a.anchor()[al][i]);
            anchor[al][m + i] = clift(a.anchor()[al][i]);
            anchor[r + al][m + i] = lift(a.anchor()[al][i]);
        }
    }

    StructureFunctions st(tchart, 2 * r);
    for (std::size_t al = 0; al < r; ++al) {
        for (std::size_t be = 0; be < r; ++be) {
            const PolyVec& c = a.structure().bracket(al, be);
            if (be > al) {
                // [c_al, c_be] = ([a_al, a_be])^C
                PolyVec v = zero_vector(tchart, 2 * r);
                for (std::size_t ga = 0; ga < r; ++ga) {
                    v[ga] = lift(c[ga]);
                    v[r + ga] = clift(c[ga]);
                }
                st.set_bracket(al, be, std::move(v));
            }
            // [c_al, v_be] = ([a_al, a_be])^V
            PolyVec w = zero_vector(tchart, 2 * r);
            for (std::size_t ga = 0; ga < r; ++ga) w[r + ga] = lift(c[ga]);
            st.set_bracket(al, r + be, std::move(w));
        }
    }
    return LieAlgebroid(tchart, 2 * r, std::move(anchor), std::move(st));
}

Section complete_lift(const LieAlgebroid& a, const LieAlgebroid& ta, const Section& s) {
    const Chart& tchart = ta.chart();
    std::size_t r = a.rank();
    std::size_t m = a.chart().base_dim();
    Section out = zero_vector(tchart, 2 * r);
    for (std::size_t al = 0; al < r; ++al) {
        Poly st = s[al].transplant(tchart);
        out[al] = st;
        for (std::size_t i = 0; i < m; ++i)
            out[r + al] += dotted_variable(tchart, m, i) * st.partial(i);
    }
    return out;
}

Section vertical_lift(const LieAlgebroid& a, const LieAlgebroid& ta, const Section& s) {
    const Chart& tchart = ta.chart();
    std::size_t r = a.rank();
    Section out = zero_vector(tchart, 2 * r);
    for (std::size_t al = 0; al < r; ++al) out[r + al] = s[al].transplant(tchart);
    return out;
}

Report check_tangent_flip_identity(const LieAlgebroid& a, const LieAlgebroid& ta) {
    Report rep;
    const Chart& tchart = ta.chart();
    std::size_t r = a.rank();
    std::size_t m = a.chart().base_dim();

    // flip o (sharp_A)_* on basis sections: the anchor of c_al is the
    // complete lift of sharp(a_al) on TM, the anchor of v_al its vertical
    // lift.
    std::vector<std::string> residuals;
    for (std::size_t al = 0; al < r; ++al) {
        for (std::size_t i = 0; i < m; ++i) {
            Poly rho = a.anchor()[al][i].transplant(tchart);
            Poly crho(tchart);
            for (std::size_t j = 0; j < m; ++j)
                crho += dotted_variable(tchart, m, j) * rho.partial(j);
            Poly d1 = ta.anchor()[al][i] - rho;
            Poly d2 = ta.anchor()[al][m + i] - crho;
            Poly d3 = ta.anchor()[r + al][i];
            Poly d4 = ta.anchor()[r + al][m + i] - rho;
            for (const Poly* d : {&d1, &d2, &d3, &d4})
                if (!d->is_zero())
                    residuals.push_back("row " + std::to_string(al + 1) + ", column " +
                                        tchart.name(i) + ": " + d->to_string());
        }
    }
    if (residuals.empty())
        rep.pass("tangent.flip_anchor");
    else
        rep.fail("tangent.flip_anchor", "", residuals);
    return rep;
}

FoliatedPair tangent_foliation(const FoliatedPair& pair) {
    FoliatedPair out;
    out.A = tangent_algebroid(pair.A);
    const std::size_t p = pair.p();
    const std::size_t q = pair.q();

    out.B.rows.clear();
    for (std::size_t h = 0; h < p; ++h)
        out.B.rows.push_back(complete_lift(pair.A, out.A, pair.B.rows[h]));
    for (std::size_t h = 0; h < p; ++h)
        out.B.rows.push_back(vertical_lift(pair.A, out.A, pair.B.rows[h]));

    out.C.rows.clear();
    for (std::size_t s = 0; s < q; ++s)
        out.C.rows.push_back(complete_lift(pair.A, out.A, pair.C.rows[s]));
    for (std::size_t s = 0; s < q; ++s)
        out.C.rows.push_back(vertical_lift(pair.A, out.A, pair.C.rows[s]));

    out.witness.clear();
    for (std::size_t s = 0; s < q; ++s)
        out.witness.push_back(complete_lift(pair.A, out.A, pair.witness[s]));
    for (std::size_t s = 0; s < q; ++s)
        out.witness.push_back(vertical_lift(pair.A, out.A, pair.witness[s]));
    return out;
}

}  // namespace folalg
