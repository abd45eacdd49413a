#pragma once

#include "folalg/algebroid.hpp"

namespace folalg {

// Construction-level failure: inconsistent input data (as opposed to a
// verification finding, which lands in a Report).
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Subbundle of a rank-r algebroid: rows are sections in the e-basis,
// pointwise independent at generic points.
struct Subbundle {
    PolyMat rows;  // p x r
    std::size_t rank() const { return rows.size(); }
};

// A Lie algebroid together with a candidate foliation B, a complement C and a
// witness basis of B-foliated sections spanning C.
struct FoliatedPair {
    LieAlgebroid A;
    Subbundle B;      // rank p
    Subbundle C;      // rank q = r - p
    PolyMat witness;  // q x r, B-foliated rows spanning C

    std::size_t p() const { return B.rank(); }
    std::size_t q() const { return witness.size(); }
};

enum class Tristate { Yes, No, Indeterminate };

// True iff [b, a] stays in the span of B for every basis row b of B;
// indeterminate when a span resolution only exists with rational-function
// coefficients (genericity locus issue).
Tristate is_B_foliated(const FoliatedPair& pair, const Section& a);

// Verifies the foliation conditions: bracket closure of B, anchor image
// equal to the leaf tangent at generic points, witness rows B-foliated and
// spanning the complement; flags minimality.
Report check_foliation(const FoliatedPair& pair);

// Quotient E = A/B as an algebroid over the transversal chart; the
// structure functions are foliated and the anchor lands in the transverse
// coordinate block.
struct TransversalLieAlgebroid {
    Chart full_chart;   // chart of the ambient pair
    LieAlgebroid core;  // over full_chart.transversal_chart()

    std::size_t rank() const { return core.rank(); }
};

TransversalLieAlgebroid quotient_transversal(const FoliatedPair& pair);

// Def. 1.1 conditions for the quotient object (exact identities over the
// transversal chart).
Report check_transversal(const TransversalLieAlgebroid& e);

// Canonical minimal extension A0 = F + E along a lift rho (q x m matrix over
// the full chart whose transverse components reproduce the anchor of E).
// Returns the extension together with its canonical foliated pair
// (B = F block, witness = E block).
FoliatedPair canonical_extension(const TransversalLieAlgebroid& e, const PolyMat& rho);

// Canonical extension with the E-block bracket shifted by an antisymmetric
// form lambda valued in ker sharp_E; the report states whether the Jacobi
// identity survives the twist.
struct TwistedExtension {
    FoliatedPair pair;
    Report jacobi;
};
TwistedExtension twisted_extension(const TransversalLieAlgebroid& e, const PolyMat& rho,
                                   const std::vector<std::vector<PolyVec>>& lambda);

// E-valued form of type (0, bgrade): coefficients over B-index tuples with
// one polynomial per E-component (E identified with C via the splitting).
struct EValuedForm {
    Chart chart;
    std::size_t e_rank = 0;
    unsigned bgrade = 0;
    std::map<IndexTuple, PolyVec> comps;

    void add(IndexTuple tuple, const PolyVec& value);
    PolyVec coeff(IndexTuple tuple) const;
    bool is_zero() const { return comps.empty(); }

    EValuedForm operator+(const EValuedForm& o) const;
    EValuedForm operator-(const EValuedForm& o) const;
    EValuedForm operator*(const Rational& c) const;
    bool operator==(const EValuedForm& o) const;
    std::string to_string() const;
};

// d'' on E-valued (0,r)-forms through the B-frame (flat Bott action on the
// witness frame).
EValuedForm evalued_dpp(const FoliatedPair& pair, const EValuedForm& xi);

// Polynomial family of deformed bases b'_h(x,t) = b_h + theta^s_h(x,t) c_s;
// theta lives over the pair chart extended by one formal parameter.
struct DeformationFamily {
    Chart chart_with_t;
    std::size_t t_index = 0;
    PolyMat theta;  // p x q

    static DeformationFamily make(const FoliatedPair& pair, PolyMat theta_over_extended,
                                  const std::string& param_name = "t");
};

// Infinitesimal deformation form: Xi = d theta/dt |_{t=0} as an E-valued
// (0,1)-form.
EValuedForm deformation_form(const FoliatedPair& pair, const DeformationFamily& fam);

// -d''(pr_C a): the deformation form of the trivial deformation generated
// by a section a.
EValuedForm trivial_deformation_form(const FoliatedPair& pair, const Section& a);

// Frame (witness rows first, then B rows) with brackets resolved; shared by
// the bigraded calculus.
SectionFrame pair_frame(const FoliatedPair& pair);

// Projection of a section onto the witness components (pr_C under the
// identification E = C); throws IndeterminateError when not polynomial.
PolyVec project_to_witness(const FoliatedPair& pair, const Section& a);

}  // namespace folalg
