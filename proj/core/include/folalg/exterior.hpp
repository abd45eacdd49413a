#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "folalg/poly.hpp"

namespace folalg {

// Strictly increasing coordinate-index tuple.
using IndexTuple = std::vector<unsigned>;

// Sorts an index tuple, returning the permutation sign, or nullopt when an
// index repeats.
std::optional<std::pair<IndexTuple, int>> sort_signed(IndexTuple t);

// Sign of wedging theta_S with theta_T (disjoint, both increasing); 0 when
// they intersect.
int merge_sign(const IndexTuple& s, const IndexTuple& t, IndexTuple& out);

namespace detail {

// Shared antisymmetric coefficient container: increasing tuples -> Poly.
class AntisymCoeffs {
  public:
    AntisymCoeffs() = default;
    AntisymCoeffs(Chart chart, unsigned degree)
        : chart_(std::move(chart)), degree_(degree) {}

    const Chart& chart() const { return chart_; }
    unsigned degree() const { return degree_; }
    const std::map<IndexTuple, Poly>& comps() const { return comps_; }

    bool is_zero() const { return comps_.empty(); }

    void add(IndexTuple tuple, const Poly& coeff);  // sorts, applies sign
    Poly coeff(IndexTuple tuple) const;             // any order, sign-resolved

    bool operator==(const AntisymCoeffs& o) const {
        return chart_ == o.chart_ && degree_ == o.degree_ && comps_ == o.comps_;
    }

  protected:
    Chart chart_;
    unsigned degree_ = 0;
    std::map<IndexTuple, Poly> comps_;
};

}  // namespace detail

// Multivector field of fixed degree on a chart (all chart coordinates count,
// fiber groups included).
class Multivector : public detail::AntisymCoeffs {
  public:
    Multivector() = default;
    Multivector(Chart chart, unsigned degree)
        : detail::AntisymCoeffs(std::move(chart), degree) {}

    static Multivector function(const Poly& f);
    static Multivector vector_field(const Chart& chart, const std::vector<Poly>& comps);

    Multivector operator+(const Multivector& o) const;
    Multivector operator-(const Multivector& o) const;
    Multivector operator*(const Rational& c) const;
    Multivector wedge(const Multivector& o) const;

    std::string to_string(const std::string& symbol = "d/d") const;
};

// Schouten-Nijenhuis bracket, graded so that [P,P] = 0 is the Jacobi
// condition for a Poisson bivector and degree-1 brackets reproduce the Lie
// bracket of vector fields.  Convention (odd-momentum antibracket):
//   [P,Q] = sum_i ( d_r P/d theta_i ^ dQ/dz_i - dP/dz_i ^ d_l Q/d theta_i )
// with right/left Grassmann derivatives as marked.  Under this convention
// [P,Q] = -(-1)^((p-1)(q-1)) [Q,P], the graded Leibniz rule
// [P, Q^R] = [P,Q]^R + (-1)^((p-1)q) Q^[P,R] holds, and for a bivector
// [P,P] is minus twice the Jacobiator of {f,g} = P(df,dg).
Multivector schouten(const Multivector& p, const Multivector& q);

// {f,g} = Pi(df, dg) for a bivector Pi.
Poly poisson_bracket(const Multivector& bivector, const Poly& f, const Poly& g);

// Differential form of fixed degree on a chart.
class Form : public detail::AntisymCoeffs {
  public:
    Form() = default;
    Form(Chart chart, unsigned degree) : detail::AntisymCoeffs(std::move(chart), degree) {}

    static Form function(const Poly& f);
    static Form covector(const Chart& chart, const std::vector<Poly>& comps);

    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator*(const Rational& c) const;
    Form operator*(const Poly& f) const;
    Form wedge(const Form& o) const;

    std::string to_string(const std::string& symbol = "dz") const;
};

// Exterior differential, interior product and Lie derivative; the vector
// field argument has one component per chart coordinate.
Form exterior_d(const Form& w);
Form interior(const std::vector<Poly>& field, const Form& w);
Form lie_derivative(const std::vector<Poly>& field, const Form& w);

// Commutator of vector fields given over the base coordinates of a chart.
std::vector<Poly> commutator(const Chart& chart, const std::vector<Poly>& x,
                             const std::vector<Poly>& y);

}  // namespace folalg
