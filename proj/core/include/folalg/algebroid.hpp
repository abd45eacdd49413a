#pragma once

#include <functional>
#include <string>
#include <vector>

#include "folalg/exterior.hpp"
#include "folalg/linalg.hpp"
#include "folalg/report.hpp"

namespace folalg {

// Raised when a construction needs a span resolution that has no polynomial
// solution (genericity locus issue); callers map this to the indeterminate
// verdict rather than a plain failure.
struct IndeterminateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Section of an algebroid: components in the e-basis.
using Section = PolyVec;

// Antisymmetric structure functions c^l_{hk}; fixed rank r.
class StructureFunctions {
  public:
    StructureFunctions() = default;
    StructureFunctions(const Chart& chart, std::size_t rank);

    std::size_t rank() const { return rank_; }
    // [e_h, e_k] component vector (length rank).
    const PolyVec& bracket(std::size_t h, std::size_t k) const;
    Poly coeff(std::size_t h, std::size_t k, std::size_t l) const;

    // Sets [e_h,e_k] = v and [e_k,e_h] = -v.
    void set_bracket(std::size_t h, std::size_t k, PolyVec v);

    bool operator==(const StructureFunctions& o) const;

  private:
    Chart chart_;
    std::size_t rank_ = 0;
    std::vector<std::vector<PolyVec>> c_;  // c_[h][k] = components of [e_h,e_k]
    PolyVec neg_buf_;
};

// Lie algebroid over a single chart: rank, anchor coefficient matrix over the
// base coordinates, antisymmetric structure functions.
class LieAlgebroid {
  public:
    LieAlgebroid() = default;
    LieAlgebroid(Chart chart, std::size_t rank, PolyMat anchor, StructureFunctions structure);

    // Tangent algebroid of the chart: identity anchor, zero structure.
    static LieAlgebroid tangent(const Chart& chart);

    const Chart& chart() const { return chart_; }
    std::size_t rank() const { return rank_; }
    const PolyMat& anchor() const { return anchor_; }
    const StructureFunctions& structure() const { return structure_; }

    Section basis_section(std::size_t h) const;
    Section zero_section() const { return zero_vector(chart_, rank_); }

    // sharp(s) as a vector field over the base coordinates.
    PolyVec anchor_apply(const Section& s) const;
    // Derivation action sharp(s)(f).
    Poly anchor_derive(const Section& s, const Poly& f) const;

    // [s1,s2]^l = s1^h s2^k c^l_{hk} + sharp(s1)(s2^l) - sharp(s2)(s1^l).
    Section bracket_sections(const Section& s1, const Section& s2) const;

    Report check_lie_algebroid() const;
    Report check_dsquared(unsigned degree_cap = 3, unsigned poly_cap = 2) const;

  private:
    Chart chart_;
    std::size_t rank_ = 0;
    PolyMat anchor_;  // rank x base_dim
    StructureFunctions structure_;
};

// A-form: antisymmetric Poly coefficients over section (frame) indices.
class AForm : public detail::AntisymCoeffs {
  public:
    AForm() = default;
    AForm(Chart chart, unsigned degree) : detail::AntisymCoeffs(std::move(chart), degree) {}
    static AForm function(const Poly& f);

    AForm operator+(const AForm& o) const;
    AForm operator-(const AForm& o) const;
    AForm operator*(const Rational& c) const;
    AForm operator*(const Poly& f) const;
    AForm wedge(const AForm& o) const;
};

// A frame of sections with brackets resolved into the frame: the common
// machinery behind the exterior differential, the bigraded calculus and
// connection curvature.
struct SectionFrame {
    const LieAlgebroid* algebroid = nullptr;
    PolyMat sections;                     // d x rank, rows in the e-basis
    PolyMat anchors;                      // d x base_dim
    std::vector<std::vector<PolyVec>> c;  // [F_i,F_j] = sum_k c[i][j][k] F_k

    std::size_t size() const { return sections.size(); }

    // Resolves brackets of the frame rows inside their own span; throws
    // IndeterminateError when a bracket has no polynomial expansion.
    static SectionFrame make(const LieAlgebroid& a, PolyMat rows);
    static SectionFrame basis(const LieAlgebroid& a);
};

// Exterior differential of a frame form (degree r input yields the zero
// degree r+1 form).
AForm frame_d(const SectionFrame& frame, const AForm& w);

// d_A against the basis frame.
AForm d_A(const LieAlgebroid& a, const AForm& w);

// Enumeration helpers shared by the verifiers.
void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const IndexTuple&)>& fn);
std::vector<Poly> monomials_up_to(const Chart& chart, const std::vector<std::size_t>& coords,
                                  unsigned max_total_degree);

}  // namespace folalg
