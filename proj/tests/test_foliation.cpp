#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "folalg/foliation.hpp"
#include "test_support.hpp"

using namespace folalg;
using namespace testsupport;

TEST_CASE("is_B_foliated") {
    FoliatedPair pair = flat_pair();
    Chart c = pair.A.chart();
    // a = d/dx is TF-foliated
    Section a{Poly::constant(c, 1), Poly(c)};
    CHECK(is_B_foliated(pair, a) == Tristate::Yes);
    // a = y d/dx is not: [d/dy, y d/dx] = d/dx
    Section b{Poly::variable(c, "y1"), Poly(c)};
    CHECK(is_B_foliated(pair, b) == Tristate::No);
    // sections of B itself are B-foliated
    CHECK(is_B_foliated(pair, pair.B.rows[0]) == Tristate::Yes);
}

TEST_CASE("check_foliation on the flat pair") {
    Report rep = check_foliation(flat_pair());
    CHECK(rep.all_passed());
    bool minimal_note = false;
    for (const auto& c : rep.checks())
        if (c.id == "fol.minimal" && c.note == "minimally foliated") minimal_note = true;
    CHECK(minimal_note);
}

TEST_CASE("check_foliation rejects a transverse B") {
    // B = span{d/dx} anchors transversally: condition (1) of Def. 1.2 fails.
    FoliatedPair pair = flat_pair();
    std::swap(pair.B.rows, pair.C.rows);
    pair.witness = pair.C.rows;
    Report rep = check_foliation(pair);
    bool anchor_failed = false;
    for (const auto& c : rep.checks())
        if (c.id == "fol.anchor_image" && c.verdict == Verdict::Fail) anchor_failed = true;
    CHECK(anchor_failed);
}

TEST_CASE("check_foliation rejects a non-foliated witness") {
    FoliatedPair pair = flat_pair();
    Chart c = pair.A.chart();
    pair.witness[0] = Section{Poly::variable(c, "y1"), Poly(c)};  // y d/dx
    Report rep = check_foliation(pair);
    bool witness_failed = false;
    for (const auto& chk : rep.checks())
        if (chk.id == "fol.witness_foliated" && chk.verdict == Verdict::Fail &&
            !chk.residuals.empty())
            witness_failed = true;
    CHECK(witness_failed);
}

TEST_CASE("check_foliation on the Dirac bivector fixture") {
    FoliatedPair pair = dirac_bivector_pair();
    CHECK(pair.A.check_lie_algebroid().all_passed());
    CHECK(check_foliation(pair).all_passed());
}

TEST_CASE("brackets of B-foliated sections are B-foliated") {
    std::mt19937 rng(31);
    for (FoliatedPair pair : {flat_pair(), dirac_bivector_pair(), extension_pair()}) {
        Chart c = pair.A.chart();
        auto random_b_foliated = [&]() {
            Section s = zero_vector(c, pair.A.rank());
            for (std::size_t w = 0; w < pair.q(); ++w) {
                Poly f = random_poly(rng, c, c.transverse_indices(), 1);
                for (std::size_t l = 0; l < s.size(); ++l) s[l] += f * pair.witness[w][l];
            }
            for (std::size_t h = 0; h < pair.p(); ++h) {
                Poly g = random_poly(rng, c, c.base_indices(), 1);
                for (std::size_t l = 0; l < s.size(); ++l) s[l] += g * pair.B.rows[h][l];
            }
            return s;
        };
        for (int i = 0; i < 6; ++i) {
            Section s1 = random_b_foliated();
            Section s2 = random_b_foliated();
            Section br = pair.A.bracket_sections(s1, s2);
            CHECK(is_B_foliated(pair, br) == Tristate::Yes);
        }
    }
}

TEST_CASE("quotient of the flat pair is the transversal tangent") {
    FoliatedPair pair = flat_pair();
    TransversalLieAlgebroid e = quotient_transversal(pair);
    CHECK(e.rank() == 1);
    Chart tc = e.core.chart();
    CHECK(tc.size() == 1);
    CHECK(e.core.anchor()[0][0] == Poly::constant(tc, 1));
    CHECK(check_transversal(e).all_passed());

    // [[d/dx],[x d/dx]]_nu = [d/dx]
    Section s1{Poly::constant(tc, 1)};
    Section s2{Poly::variable(tc, "x1")};
    Section br = e.core.bracket_sections(s1, s2);
    CHECK(br[0] == Poly::constant(tc, 1));
}

TEST_CASE("quotient of a trivial line extension is abelian") {
    // A = B + trivial line with all brackets zero over {x;y}.
    Chart c = Chart::make({"x1"}, {"y1"});
    PolyMat anchor = zero_matrix(c, 2, 2);
    anchor[0][1] = Poly::constant(c, 1);  // b -> d/dy
    FoliatedPair pair;
    pair.A = LieAlgebroid(c, 2, std::move(anchor), StructureFunctions(c, 2));
    pair.B.rows = zero_matrix(c, 1, 2);
    pair.B.rows[0][0] = Poly::constant(c, 1);
    pair.C.rows = zero_matrix(c, 1, 2);
    pair.C.rows[0][1] = Poly::constant(c, 1);
    pair.witness = pair.C.rows;
    REQUIRE(check_foliation(pair).all_passed());
    TransversalLieAlgebroid e = quotient_transversal(pair);
    CHECK(e.rank() == 1);
    CHECK(e.core.anchor()[0][0].is_zero());
    CHECK(e.core.structure().bracket(0, 0)[0].is_zero());
}

TEST_CASE("quotient of the Dirac fixture") {
    TransversalLieAlgebroid e = quotient_transversal(dirac_bivector_pair());
    CHECK(e.rank() == 2);
    Chart tc = e.core.chart();
    // structure read off the graph bracket: [e1,e2] = e1
    CHECK(e.core.structure().coeff(0, 1, 0) == Poly::constant(tc, 1));
    CHECK(e.core.structure().coeff(0, 1, 1).is_zero());
    CHECK(check_transversal(e).all_passed());
}

TEST_CASE("canonical extension reproduces TM for the transversal tangent") {
    Chart c = Chart::make({"x1"}, {"y1"});
    TransversalLieAlgebroid e = quotient_transversal(flat_pair());
    PolyMat rho = zero_matrix(c, 1, 2);
    rho[0][0] = Poly::constant(c, 1);
    FoliatedPair ext = canonical_extension(e, rho);
    CHECK(ext.A.rank() == 2);
    CHECK(ext.A.check_lie_algebroid().all_passed());
    CHECK(check_foliation(ext).all_passed());
    // standard TM brackets: all structure functions vanish
    for (std::size_t h = 0; h < 2; ++h)
        for (std::size_t k = 0; k < 2; ++k)
            CHECK(is_zero_vector(ext.A.structure().bracket(h, k)));
}

TEST_CASE("canonical extension with zero lift of an abelian algebroid") {
    Chart c = Chart::make({"x1"}, {"y1"});
    Chart tc = c.transversal_chart();
    TransversalLieAlgebroid e{c, LieAlgebroid(tc, 1, zero_matrix(tc, 1, 1),
                                              StructureFunctions(tc, 1))};
    FoliatedPair ext = canonical_extension(e, zero_matrix(c, 1, 2));
    CHECK(ext.A.check_lie_algebroid().all_passed());
    CHECK(check_foliation(ext).all_passed());
    for (std::size_t h = 0; h < 2; ++h)
        for (std::size_t k = 0; k < 2; ++k)
            CHECK(is_zero_vector(ext.A.structure().bracket(h, k)));
}

TEST_CASE("canonical extension with a leafwise-shearing lift") {
    FoliatedPair ext = extension_pair();
    CHECK(ext.A.rank() == 2);
    // [Y, eps] = [d/dy, d/dx + y d/dy] = d/dy != 0
    CHECK(ext.A.structure().coeff(0, 1, 0) == Poly::constant(ext.A.chart(), 1));
    CHECK(ext.A.check_lie_algebroid().all_passed());
    CHECK(check_foliation(ext).all_passed());
}

TEST_CASE("canonical extension passes the verifiers for random admissible lifts") {
    std::mt19937 rng(37);
    Chart c = Chart::make({"x1"}, {"y1"});
    TransversalLieAlgebroid e = quotient_transversal(flat_pair());
    for (int i = 0; i < 8; ++i) {
        PolyMat rho = zero_matrix(c, 1, 2);
        rho[0][0] = Poly::constant(c, 1);
        rho[0][1] = random_poly(rng, c, c.base_indices(), 2);
        FoliatedPair ext = canonical_extension(e, rho);
        CHECK(ext.A.check_lie_algebroid().all_passed());
        CHECK(check_foliation(ext).all_passed());
    }
    // quotient of the Dirac fixture with random leaf components
    TransversalLieAlgebroid e2 = quotient_transversal(dirac_bivector_pair());
    Chart c2 = e2.full_chart;
    for (int i = 0; i < 5; ++i) {
        PolyMat rho = zero_matrix(c2, 2, 3);
        for (std::size_t s = 0; s < 2; ++s) {
            for (std::size_t a = 0; a < 2; ++a)
                rho[s][a] = e2.core.anchor()[s][a].transplant(c2);
            rho[s][2] = random_poly(rng, c2, c2.transverse_indices(), 1);
        }
        FoliatedPair ext = canonical_extension(e2, rho);
        CHECK(ext.A.check_lie_algebroid().all_passed());
        CHECK(check_foliation(ext).all_passed());
    }
}

TEST_CASE("canonical extension rejects a bad lift") {
    Chart c = Chart::make({"x1"}, {"y1"});
    TransversalLieAlgebroid e = quotient_transversal(flat_pair());
    PolyMat rho = zero_matrix(c, 1, 2);
    rho[0][0] = Poly::variable(c, "x1");  // transverse part != anchor
    CHECK_THROWS_AS(canonical_extension(e, rho), ConstructionError);
}

TEST_CASE("twisted extension") {
    // Abelian rank-2 transversal algebroid over a point-foliated chart.
    Chart c = Chart::make({}, {"y1"});
    Chart tc = c.transversal_chart();
    TransversalLieAlgebroid e{c, LieAlgebroid(tc, 2, zero_matrix(tc, 2, 0),
                                              StructureFunctions(tc, 2))};
    PolyMat rho = zero_matrix(c, 2, 1);

    auto zero_lambda = [&]() {
        return std::vector<std::vector<PolyVec>>(
            2, std::vector<PolyVec>(2, zero_vector(c, 2)));
    };

    SUBCASE("zero twist reproduces the canonical extension") {
        FoliatedPair base = canonical_extension(e, rho);
        TwistedExtension tw = twisted_extension(e, rho, zero_lambda());
        CHECK(tw.jacobi.all_passed());
        CHECK(tw.pair.A.structure() == base.A.structure());
    }

    SUBCASE("constant twist of an abelian algebroid keeps Jacobi") {
        auto lambda = zero_lambda();
        lambda[0][1][0] = Poly::constant(c, 1);   // lambda(e1,e2) = e1
        lambda[1][0][0] = Poly::constant(c, -1);
        TwistedExtension tw = twisted_extension(e, rho, lambda);
        CHECK(tw.jacobi.all_passed());
        CHECK(tw.pair.A.structure().coeff(1, 2, 1) == Poly::constant(c, 1));
    }

    SUBCASE("twist outside ker sharp_E is rejected") {
        Chart c2 = Chart::make({"x1"}, {"y1"});
        Chart tc2 = c2.transversal_chart();
        PolyMat anchor2 = zero_matrix(tc2, 2, 1);
        anchor2[1][0] = Poly::constant(tc2, 1);
        TransversalLieAlgebroid e2{c2, LieAlgebroid(tc2, 2, std::move(anchor2),
                                                    StructureFunctions(tc2, 2))};
        PolyMat rho2 = zero_matrix(c2, 2, 2);
        rho2[1][0] = Poly::constant(c2, 1);
        auto lambda = std::vector<std::vector<PolyVec>>(
            2, std::vector<PolyVec>(2, zero_vector(c2, 2)));
        lambda[0][1][1] = Poly::constant(c2, 1);  // e2 is not in ker sharp
        lambda[1][0][1] = Poly::constant(c2, -1);
        CHECK_THROWS_AS(twisted_extension(e2, rho2, lambda), ConstructionError);
    }

    SUBCASE("non-constant twist can break Jacobi, with residual reported") {
        Chart c3 = Chart::make({"x1"}, {"y1"});
        Chart tc3 = c3.transversal_chart();
        PolyMat anchor3 = zero_matrix(tc3, 3, 1);
        anchor3[2][0] = Poly::constant(tc3, 1);  // only e3 anchors
        TransversalLieAlgebroid e3{c3, LieAlgebroid(tc3, 3, std::move(anchor3),
                                                    StructureFunctions(tc3, 3))};
        PolyMat rho3 = zero_matrix(c3, 3, 2);
        rho3[2][0] = Poly::constant(c3, 1);
        auto lambda = std::vector<std::vector<PolyVec>>(
            3, std::vector<PolyVec>(3, zero_vector(c3, 3)));
        lambda[0][1][0] = Poly::variable(c3, "x1");  // lambda(e1,e2) = x1 e1
        lambda[1][0][0] = -Poly::variable(c3, "x1");
        TwistedExtension tw = twisted_extension(e3, rho3, lambda);
        CHECK(tw.jacobi.any_failed());
        bool residual_found = false;
        for (const auto& chk : tw.jacobi.checks())
            if (chk.verdict == Verdict::Fail && !chk.residuals.empty()) residual_found = true;
        CHECK(residual_found);
    }
}

TEST_CASE("deformation forms") {
    FoliatedPair pair = flat_pair();
    Chart ext = pair.A.chart().extended_with_fiber("param", {"t"});

    SUBCASE("first-order family") {
        PolyMat theta(1, PolyVec{Poly::parse(ext, "t*x1")});
        DeformationFamily fam = DeformationFamily::make(pair, theta);
        EValuedForm xi = deformation_form(pair, fam);
        CHECK(xi.coeff({0})[0] == Poly::variable(pair.A.chart(), "x1"));
    }
    SUBCASE("second-order family has zero infinitesimal form") {
        PolyMat theta(1, PolyVec{Poly::parse(ext, "t^2*x1")});
        CHECK(deformation_form(pair, DeformationFamily::make(pair, theta)).is_zero());
    }
    SUBCASE("zero family") {
        PolyMat theta(1, PolyVec{Poly(ext)});
        CHECK(deformation_form(pair, DeformationFamily::make(pair, theta)).is_zero());
    }
    SUBCASE("family must vanish at t = 0") {
        PolyMat theta(1, PolyVec{Poly::parse(ext, "x1")});
        CHECK_THROWS_AS(DeformationFamily::make(pair, theta), ConstructionError);
    }
    SUBCASE("family must not involve leaf coordinates") {
        PolyMat theta(1, PolyVec{Poly::parse(ext, "t*y1")});
        CHECK_THROWS_AS(DeformationFamily::make(pair, theta), ConstructionError);
    }
}

TEST_CASE("trivial deformation forms") {
    FoliatedPair pair = flat_pair();
    Chart c = pair.A.chart();
    SUBCASE("sections of B give zero") {
        CHECK(trivial_deformation_form(pair, pair.B.rows[0]).is_zero());
    }
    SUBCASE("a = y d/dx gives -b* (x) e") {
        Section a{Poly::variable(c, "y1"), Poly(c)};
        EValuedForm xi = trivial_deformation_form(pair, a);
        CHECK(xi.coeff({0})[0] == Poly::constant(c, -1));
    }
    SUBCASE("foliated coefficients are killed by d''") {
        Section a{Poly::variable(c, "x1"), Poly(c)};
        CHECK(trivial_deformation_form(pair, a).is_zero());
    }
}
