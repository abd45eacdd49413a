#pragma once

#include <optional>
#include <vector>

#include "folalg/poly.hpp"

namespace folalg {

using PolyVec = std::vector<Poly>;
using PolyMat = std::vector<PolyVec>;

PolyMat zero_matrix(const Chart& chart, std::size_t rows, std::size_t cols);
PolyVec zero_vector(const Chart& chart, std::size_t n);
bool is_zero_vector(const PolyVec& v);

Poly determinant(const PolyMat& m, const Chart& chart);
PolyMat adjugate(const PolyMat& m, const Chart& chart);

// Rank at generic points: rank over the rational-function field.
std::size_t generic_rank(PolyMat m, const Chart& chart);

// Result of solving  target = sum_h f_h rows[h]  over the function field.
struct SpanSolve {
    enum class Status {
        NotInSpan,    // inconsistent even over rational functions
        Polynomial,   // solvable with polynomial coefficients (coeffs set)
        RationalOnly  // solvable generically, but not with polynomial coefficients
    };
    Status status = Status::NotInSpan;
    PolyVec coeffs;  // size rows.size() when status == Polynomial
};

SpanSolve solve_in_span(const PolyMat& rows, const PolyVec& target, const Chart& chart);

bool in_span(const PolyMat& rows, const PolyVec& target, const Chart& chart);

}  // namespace folalg
