#include "folalg/linalg.hpp"

#include <stdexcept>

namespace folalg {

PolyMat zero_matrix(const Chart& chart, std::size_t rows, std::size_t cols) {
    return PolyMat(rows, PolyVec(cols, Poly(chart)));
}

PolyVec zero_vector(const Chart& chart, std::size_t n) { return PolyVec(n, Poly(chart)); }

bool is_zero_vector(const PolyVec& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

Poly determinant(const PolyMat& m, const Chart& chart) {
    std::size_t n = m.size();
    if (n == 0) return Poly::constant(chart, 1);
    if (n == 1) return m[0][0];
    Poly det(chart);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMat minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            PolyVec row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Poly cof = m[0][j] * determinant(minor, chart);
        if (j % 2 == 0)
            det += cof;
        else
            det -= cof;
    }
    return det;
}

PolyMat adjugate(const PolyMat& m, const Chart& chart) {
    std::size_t n = m.size();
    PolyMat adj = zero_matrix(chart, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            PolyMat minor;
            for (std::size_t a = 0; a < n; ++a) {
                if (a == i) continue;
                PolyVec row;
                for (std::size_t b = 0; b < n; ++b)
                    if (b != j) row.push_back(m[a][b]);
                minor.push_back(std::move(row));
            }
            Poly cof = determinant(minor, chart);
            adj[j][i] = ((i + j) % 2 == 0) ? cof : -cof;
        }
    }
    return adj;
}

std::size_t generic_rank(PolyMat m, const Chart& chart) {
    (void)chart;
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    std::size_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (m[i][col].is_zero()) continue;
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = m[row][col] * m[i][j] - m[i][col] * m[row][j];
            m[i][col] = Poly(m[i][col].chart());
        }
        ++row;
        ++rank;
    }
    return rank;
}

namespace {

// Rational function as a polynomial pair; exact zero tests only.
struct RatPoly {
    Poly num, den;
    RatPoly() = default;
    RatPoly(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {}
    static RatPoly of(const Poly& p) { return {p, Poly::constant(p.chart(), 1)}; }
    bool is_zero() const { return num.is_zero(); }
};

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    return {a.num * b.num, a.den * b.den};
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
}

RatPoly divide(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::runtime_error("division by zero rational function");
    return {a.num * b.den, a.den * b.num};
}

}  // namespace

SpanSolve solve_in_span(const PolyMat& rows, const PolyVec& target, const Chart& chart) {
    std::size_t p = rows.size();
    std::size_t r = target.size();
    for (const auto& row : rows)
        if (row.size() != r) throw std::invalid_argument("span row length mismatch");

    if (is_zero_vector(target)) {
        SpanSolve s;
        s.status = SpanSolve::Status::Polynomial;
        s.coeffs = zero_vector(chart, p);
        return s;
    }

    // Equations: for each component i,  sum_h f_h rows[h][i] = target[i].
    PolyMat a = zero_matrix(chart, r, p + 1);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t h = 0; h < p; ++h) a[i][h] = rows[h][i];
        a[i][p] = target[i];
    }

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < p && row < r; ++col) {
        std::size_t pivot = row;
        while (pivot < r && a[pivot][col].is_zero()) ++pivot;
        if (pivot == r) continue;
        std::swap(a[pivot], a[row]);
        for (std::size_t i = 0; i < r; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            Poly factor = a[i][col];
            for (std::size_t j = 0; j <= p; ++j)
                a[i][j] = a[row][col] * a[i][j] - factor * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }

    for (std::size_t i = row; i < r; ++i)
        if (!a[i][p].is_zero()) return SpanSolve{};  // inconsistent

    // Back out f_h = rhs/pivot on pivot columns, zero on free columns.
    std::vector<RatPoly> f(p, RatPoly::of(Poly(chart)));
    for (std::size_t k = 0; k < pivot_col.size(); ++k) {
        // After full (Jordan-style) elimination each pivot row reads
        //   a[k][pivot_col[k]] * f_pivot + (free columns) = a[k][p].
        RatPoly rhs = RatPoly::of(a[k][p]);
        for (std::size_t j = pivot_col[k] + 1; j < p; ++j) {
            bool is_pivot = false;
            for (std::size_t t = k + 1; t < pivot_col.size(); ++t)
                if (pivot_col[t] == j) is_pivot = true;
            if (is_pivot || a[k][j].is_zero()) continue;
            rhs = rhs - RatPoly::of(a[k][j]) * f[j];
        }
        f[pivot_col[k]] = divide(rhs, RatPoly::of(a[k][pivot_col[k]]));
    }
    // Free columns keep f = 0; with Jordan elimination above, pivot rows can
    // still reference free columns, handled in the loop. Process pivots in
    // reverse so referenced f[j] values are final.
    // (Free variables stay zero, so the first pass is already correct.)

    SpanSolve s;
    s.coeffs.assign(p, Poly(chart));
    for (std::size_t h = 0; h < p; ++h) {
        auto q = Poly::exact_divide(f[h].num, f[h].den);
        if (!q) {
            s.status = SpanSolve::Status::RationalOnly;
            s.coeffs.clear();
            return s;
        }
        s.coeffs[h] = *q;
    }

    // Exact verification of the candidate solution.
    PolyVec check = zero_vector(chart, r);
    for (std::size_t h = 0; h < p; ++h)
        for (std::size_t i = 0; i < r; ++i) check[i] += s.coeffs[h] * rows[h][i];
    for (std::size_t i = 0; i < r; ++i)
        if (check[i] != target[i])
            throw std::logic_error("span solver produced an invalid solution");

    s.status = SpanSolve::Status::Polynomial;
    return s;
}

bool in_span(const PolyMat& rows, const PolyVec& target, const Chart& chart) {
    return solve_in_span(rows, target, chart).status == SpanSolve::Status::Polynomial;
}

}  // namespace folalg
