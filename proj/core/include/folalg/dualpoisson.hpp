#pragma once

#include "folalg/foliation.hpp"

namespace folalg {

// Total space of the dual bundle with its fiber-linear Poisson bivector.
struct DualPoissonManifold {
    Chart chart;           // base chart extended by the fiber group "eta"
    std::size_t rank = 0;  // fiber dimension
    Multivector bivector;

    std::size_t eta_index(std::size_t h) const;  // chart index of eta_h
};

// Fiber-linear bivector built from the anchor and structure functions.
DualPoissonManifold dual_poisson(const LieAlgebroid& a);

// Evaluation function l_s of a section on the dual fibers.
Poly fiber_linear(const DualPoissonManifold& m, const Section& s);

// Schouten square of the bivector; zero iff the algebroid axioms hold.
Report check_poisson(const DualPoissonManifold& m);

// Split dual data of a foliated pair: coordinates (x, y, eta_h, zeta_q) with
// eta dual to the B rows and zeta dual to the witness rows.
struct SplitDualPoisson {
    Chart chart;
    std::size_t p = 0;  // rank B
    std::size_t q = 0;  // rank E
    Multivector lambda;      // full fiber-linear bivector
    Multivector p_quotient;  // induced bivector of the quotient dual (eta block)

    std::size_t eta_index(std::size_t h) const;
    std::size_t zeta_index(std::size_t s) const;
};

SplitDualPoisson foliated_dual(const FoliatedPair& pair);

// Coefficient conditions for the dual Poisson structure of a foliated pair,
// the restricted brackets on the quotient dual at eta = 0, and projection
// compatibility with the bivector of the quotient.
Report check_foliated_dual(const FoliatedPair& pair);

// The same coefficient conditions phrased for the homological super-vector
// field; the field itself is the bivector data with parity metadata, so its
// checks coincide with the bivector checks.
Report vaintrob_conditions(const FoliatedPair& pair);

// Rendering of the degree-1 super-vector field in odd coordinates, for
// reports.
std::string vaintrob_field_string(const FoliatedPair& pair);

}  // namespace folalg
