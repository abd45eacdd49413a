#pragma once

#include "folalg/foliation.hpp"

namespace folalg {

// Chart of the tangent manifold: base coordinates followed by their dotted
// companions (same transverse/leaf kind), plus fiber groups "xi"/"xidot"
// tagging the double-bundle coordinates.  The transverse block is (x, xdot),
// the leaf block (y, ydot).
Chart tangent_chart(const Chart& base, std::size_t rank);

// Dotted companion name of a base coordinate in the tangent chart.
std::string dotted_name(const std::string& name);

// Complete lift of a function: f^C = sum_i xdot^i df/dx^i (as a polynomial
// over the tangent chart).
Poly complete_lift_function(const Chart& base, const Chart& tchart, const Poly& f);

// Tangent Lie algebroid over the tangent chart; rank 2r with the basis
// (c_1..c_r, v_1..v_r) of complete and vertical lifts of the e-basis.
LieAlgebroid tangent_algebroid(const LieAlgebroid& a);

// Lifts of sections to sections of the tangent algebroid.
Section complete_lift(const LieAlgebroid& a, const LieAlgebroid& ta, const Section& s);
Section vertical_lift(const LieAlgebroid& a, const LieAlgebroid& ta, const Section& s);

// Anchor of the tangent algebroid computed through the flip of the
// differential of the anchor map (independent route; used as a
// cross-check against the constructed anchor matrix).
Report check_tangent_flip_identity(const LieAlgebroid& a, const LieAlgebroid& ta);

// Induced foliation (TA, TB) of a foliated pair (Prop.-2.1-style data).
FoliatedPair tangent_foliation(const FoliatedPair& pair);

}  // namespace folalg
