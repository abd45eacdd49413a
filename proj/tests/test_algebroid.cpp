#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "folalg/algebroid.hpp"
#include "test_support.hpp"

using namespace folalg;
using testsupport::cyclic_so3;
using testsupport::non_jacobi_fixture;

static Chart xy() { return Chart::make({"x1"}, {"y1"}); }

TEST_CASE("anchor application") {
    Chart c = xy();
    LieAlgebroid tm = LieAlgebroid::tangent(c);
    Section s{Poly::variable(c, "x1"), Poly::variable(c, "y1")};
    PolyVec v = tm.anchor_apply(s);
    CHECK(v[0] == Poly::variable(c, "x1"));
    CHECK(v[1] == Poly::variable(c, "y1"));

    CHECK(is_zero_vector(tm.anchor_apply(tm.zero_section())));

    // rank 2 over a 1-dim chart, anchor rows (y1), (0)
    Chart line = Chart::make({}, {"y1"});
    PolyMat anchor = zero_matrix(line, 2, 1);
    anchor[0][0] = Poly::variable(line, "y1");
    LieAlgebroid a(line, 2, anchor, StructureFunctions(line, 2));
    Section s2{Poly::constant(line, 1), Poly::constant(line, 5)};
    PolyVec v2 = a.anchor_apply(s2);
    CHECK(v2[0] == Poly::variable(line, "y1"));
}

TEST_CASE("bracket of sections") {
    Chart c = xy();
    LieAlgebroid tm = LieAlgebroid::tangent(c);
    // s1 = d/dx, s2 = x d/dy  =>  [s1,s2] = d/dy
    Section s1{Poly::constant(c, 1), Poly(c)};
    Section s2{Poly(c), Poly::variable(c, "x1")};
    Section br = tm.bracket_sections(s1, s2);
    CHECK(br[0].is_zero());
    CHECK(br[1] == Poly::constant(c, 1));

    std::mt19937 rng(3);
    for (int i = 0; i < 10; ++i) {
        Section s = testsupport::random_section(rng, tm, 2);
        CHECK(is_zero_vector(tm.bracket_sections(s, s)));
    }

    LieAlgebroid so3 = cyclic_so3();
    Section e1 = so3.basis_section(0), e2 = so3.basis_section(1);
    Section b = so3.bracket_sections(e1, e2);
    CHECK(b[2] == Poly::constant(so3.chart(), 1));
    CHECK(b[0].is_zero());
    CHECK(b[1].is_zero());
}

TEST_CASE("bracket Leibniz rule on random data") {
    Chart c = Chart::make({"x1"}, {"y1"});
    LieAlgebroid tm = LieAlgebroid::tangent(c);
    std::mt19937 rng(17);
    for (int i = 0; i < 25; ++i) {
        Section s1 = testsupport::random_section(rng, tm, 2);
        Section s2 = testsupport::random_section(rng, tm, 2);
        Poly f = testsupport::random_poly(rng, c, c.base_indices(), 2);
        Section fs2 = s2;
        for (auto& comp : fs2) comp = comp * f;
        Section lhs = tm.bracket_sections(s1, fs2);
        Section rhs = tm.bracket_sections(s1, s2);
        Poly df = tm.anchor_derive(s1, f);
        for (std::size_t l = 0; l < rhs.size(); ++l) rhs[l] = rhs[l] * f + df * s2[l];
        CHECK(lhs == rhs);
    }
}

TEST_CASE("check_lie_algebroid") {
    CHECK(LieAlgebroid::tangent(Chart::make({"x1", "x2"}, {"y1"})).check_lie_algebroid().all_passed());
    CHECK(cyclic_so3().check_lie_algebroid().all_passed());

    Report bad = non_jacobi_fixture().check_lie_algebroid();
    CHECK(bad.any_failed());
    bool jacobi_failed = false;
    for (const auto& chk : bad.checks())
        if (chk.id == "lie.jacobi" && chk.verdict == Verdict::Fail && !chk.residuals.empty())
            jacobi_failed = true;
    CHECK(jacobi_failed);
}

TEST_CASE("anchor-bracket compatibility on random sections") {
    // For verified algebroids, sharp([s1,s2]) = [sharp s1, sharp s2].
    std::mt19937 rng(29);
    Chart c = Chart::make({"x1"}, {"y1"});
    for (LieAlgebroid a : {LieAlgebroid::tangent(c), cyclic_so3()}) {
        for (int i = 0; i < 15; ++i) {
            Section s1 = testsupport::random_section(rng, a, 1);
            Section s2 = testsupport::random_section(rng, a, 1);
            PolyVec lhs = a.anchor_apply(a.bracket_sections(s1, s2));
            PolyVec rhs = commutator(a.chart(), a.anchor_apply(s1), a.anchor_apply(s2));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("exterior differential of functions and dual forms") {
    Chart c = xy();
    LieAlgebroid tm = LieAlgebroid::tangent(c);
    Poly f = Poly::parse(c, "x1^2*y1");
    AForm df = d_A(tm, AForm::function(f));
    CHECK(df.coeff({0}) == f.partial(0));
    CHECK(df.coeff({1}) == f.partial(1));
    CHECK(d_A(tm, df).is_zero());

    // cyclic algebra: d(e*1) = -e*2 ^ e*3
    LieAlgebroid so3 = cyclic_so3();
    AForm e1star(so3.chart(), 1);
    e1star.add({0}, Poly::constant(so3.chart(), 1));
    AForm d1 = d_A(so3, e1star);
    CHECK(d1.coeff({1, 2}) == Poly::constant(so3.chart(), -1));
    CHECK(d1.coeff({0, 1}).is_zero());
    CHECK(d1.coeff({0, 2}).is_zero());
}

TEST_CASE("top degree differential returns zero form of degree r+1") {
    LieAlgebroid so3 = cyclic_so3();
    AForm top(so3.chart(), 3);
    top.add({0, 1, 2}, Poly::constant(so3.chart(), 1));
    AForm d = d_A(so3, top);
    CHECK(d.degree() == 4);
    CHECK(d.is_zero());
}

TEST_CASE("check_dsquared") {
    CHECK(LieAlgebroid::tangent(xy()).check_dsquared(2, 2).all_passed());
    CHECK(cyclic_so3().check_dsquared(3, 2).all_passed());
    CHECK(non_jacobi_fixture().check_dsquared(3, 1).any_failed());
}
