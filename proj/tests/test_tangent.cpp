#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "folalg/tangent.hpp"
#include "test_support.hpp"

using namespace folalg;
using namespace testsupport;

TEST_CASE("tangent chart layout") {
    Chart c = Chart::make({"x1"}, {"y1"});
    Chart tc = tangent_chart(c, 2);
    REQUIRE(tc.base_dim() == 4);
    CHECK(tc.name(0) == "x1");
    CHECK(tc.name(1) == "y1");
    CHECK(tc.name(2) == "x1_dot");
    CHECK(tc.name(3) == "y1_dot");
    CHECK(tc.kind(2) == CoordKind::Transverse);
    CHECK(tc.kind(3) == CoordKind::Leaf);
    CHECK(tc.fiber_indices("xi").size() == 2);
    CHECK(tc.fiber_indices("xidot").size() == 2);
}

TEST_CASE("lifts of basis and scaled sections") {
    Chart c = Chart::make({"x1"}, {});
    LieAlgebroid a = LieAlgebroid::tangent(c);  // rank 1
    LieAlgebroid ta = tangent_algebroid(a);
    Chart tc = ta.chart();

    Section e1 = a.basis_section(0);
    Section c1 = complete_lift(a, ta, e1);
    CHECK(c1[0] == Poly::constant(tc, 1));
    CHECK(c1[1].is_zero());
    Section v1 = vertical_lift(a, ta, e1);
    CHECK(v1[0].is_zero());
    CHECK(v1[1] == Poly::constant(tc, 1));

    // a = x * e1: a^C = x c1 + xdot v1
    Section xa{Poly::variable(c, "x1")};
    Section xc = complete_lift(a, ta, xa);
    CHECK(xc[0] == Poly::variable(tc, "x1"));
    CHECK(xc[1] == Poly::variable(tc, "x1_dot"));

    CHECK(is_zero_vector(vertical_lift(a, ta, a.zero_section())));
}

TEST_CASE("lift identities on random data") {
    Chart c = Chart::make({"x1"}, {"y1"});
    LieAlgebroid a = LieAlgebroid::tangent(c);
    LieAlgebroid ta = tangent_algebroid(a);
    std::mt19937 rng(41);
    for (int i = 0; i < 20; ++i) {
        Section s = random_section(rng, a, 2);
        Poly f = random_poly(rng, c, c.base_indices(), 2);
        Section fs = s;
        for (auto& comp : fs) comp = comp * f;

        // (f a)^C = f a^C + f^C a^V
        Section lhs = complete_lift(a, ta, fs);
        Section rhs = complete_lift(a, ta, s);
        Poly ft = f.transplant(ta.chart());
        Poly fc = complete_lift_function(c, ta.chart(), f);
        Section vs = vertical_lift(a, ta, s);
        for (std::size_t l = 0; l < rhs.size(); ++l) rhs[l] = rhs[l] * ft + fc * vs[l];
        CHECK(lhs == rhs);

        // (f a)^V = f a^V
        Section lhsv = vertical_lift(a, ta, fs);
        for (std::size_t l = 0; l < vs.size(); ++l) vs[l] = vs[l] * ft;
        CHECK(lhsv == vs);
    }
}

TEST_CASE("bracket laws for lifts on random sections") {
    std::mt19937 rng(43);
    for (LieAlgebroid a : {LieAlgebroid::tangent(Chart::make({"x1"}, {"y1"})), cyclic_so3(),
                           dirac_bivector_pair().A}) {
        LieAlgebroid ta = tangent_algebroid(a);
        for (int i = 0; i < 7; ++i) {
            Section s1 = random_section(rng, a, 1);
            Section s2 = random_section(rng, a, 1);
            Section br = a.bracket_sections(s1, s2);

            Section c1 = complete_lift(a, ta, s1);
            Section c2 = complete_lift(a, ta, s2);
            Section v1 = vertical_lift(a, ta, s1);
            Section v2 = vertical_lift(a, ta, s2);

            CHECK(ta.bracket_sections(c1, c2) == complete_lift(a, ta, br));
            CHECK(ta.bracket_sections(c1, v2) == vertical_lift(a, ta, br));
            CHECK(is_zero_vector(ta.bracket_sections(v1, v2)));
        }
    }
}

TEST_CASE("anchor of the tangent algebroid intertwines complete lifts") {
    Chart c = Chart::make({"x1"}, {"y1"});
    LieAlgebroid a = LieAlgebroid::tangent(c);
    LieAlgebroid ta = tangent_algebroid(a);
    Chart tc = ta.chart();
    std::size_t m = c.base_dim();
    std::mt19937 rng(47);
    for (int i = 0; i < 10; ++i) {
        Section s = random_section(rng, a, 2);
        PolyVec x = a.anchor_apply(s);
        PolyVec lhs = ta.anchor_apply(complete_lift(a, ta, s));
        // complete lift of the TM field x on TTM
        for (std::size_t k = 0; k < m; ++k) {
            Poly xt = x[k].transplant(tc);
            CHECK(lhs[k] == xt);
            Poly cx(tc);
            for (std::size_t j = 0; j < m; ++j)
                cx += Poly::variable(tc, dotted_name(c.name(j))) * xt.partial(j);
            CHECK(lhs[m + k] == cx);
        }
    }
}

TEST_CASE("tangent algebroid of fixtures passes the axioms") {
    // abelian chart case: TA of TM over {x}
    LieAlgebroid tm = LieAlgebroid::tangent(Chart::make({"x1"}, {}));
    LieAlgebroid ttm = tangent_algebroid(tm);
    CHECK(ttm.rank() == 2);
    CHECK(ttm.check_lie_algebroid().all_passed());
    CHECK(is_zero_vector(ttm.structure().bracket(0, 1)));
    CHECK(check_tangent_flip_identity(tm, ttm).all_passed());

    // cyclic algebra over a point
    LieAlgebroid so3 = cyclic_so3();
    LieAlgebroid tso3 = tangent_algebroid(so3);
    CHECK(tso3.rank() == 6);
    CHECK(tso3.check_lie_algebroid().all_passed());
    Chart tc = tso3.chart();
    // [c1, c2] = c3, [c1, v2] = v3
    CHECK(tso3.structure().coeff(0, 1, 2) == Poly::constant(tc, 1));
    CHECK(tso3.structure().coeff(0, 4, 5) == Poly::constant(tc, 1));
    CHECK(check_tangent_flip_identity(so3, tso3).all_passed());

    LieAlgebroid dirac = dirac_bivector_pair().A;
    CHECK(tangent_algebroid(dirac).check_lie_algebroid().all_passed());
}

TEST_CASE("tangent foliation of verified pairs passes the verifier") {
    for (FoliatedPair pair : {flat_pair(), dirac_bivector_pair(), extension_pair()}) {
        REQUIRE(check_foliation(pair).all_passed());
        FoliatedPair tp = tangent_foliation(pair);
        CHECK(tp.A.check_lie_algebroid().all_passed());
        CHECK(check_foliation(tp).all_passed());
        CHECK(tp.p() == 2 * pair.p());
        CHECK(tp.q() == 2 * pair.q());
    }
}

TEST_CASE("tangent pair of a minimal pair is minimal") {
    FoliatedPair tp = tangent_foliation(flat_pair());
    Report rep = check_foliation(tp);
    bool minimal = false;
    for (const auto& c : rep.checks())
        if (c.id == "fol.minimal" && c.note == "minimally foliated") minimal = true;
    CHECK(minimal);
}
