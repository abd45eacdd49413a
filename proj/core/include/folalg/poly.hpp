#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "folalg/chart.hpp"
#include "folalg/rational.hpp"

namespace folalg {

struct PolyError : std::runtime_error {
    std::size_t position;  // byte offset into the parsed text (parse errors only)
    explicit PolyError(const std::string& msg, std::size_t pos = 0)
        : std::runtime_error(msg), position(pos) {}
};

// Multivariate polynomial with exact rational coefficients over a chart.
// Terms map exponent vectors (one slot per chart coordinate) to nonzero
// rationals; the zero polynomial has an empty term map.
class Poly {
  public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, Rational>;

    Poly() = default;
    explicit Poly(Chart chart) : chart_(std::move(chart)) {}

    static Poly constant(const Chart& chart, const Rational& c);
    static Poly variable(const Chart& chart, const std::string& name);
    static Poly monomial(const Chart& chart, Exponents e, const Rational& c);

    // Grammar:  poly := term (('+'|'-') term)*
    //           term := rational ('*' var ('^' uint)?)*
    //                 | var ('^' uint)? ('*' var ('^' uint)?)*
    //           rational := int ('/' uint)?
    // A leading sign before the first term is accepted as well.
    static Poly parse(const Chart& chart, std::string_view text);

    const Chart& chart() const { return chart_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::optional<Rational> as_constant() const;  // nullopt if not constant
    unsigned degree() const;                      // total degree; 0 for the zero poly
    unsigned degree_in(std::size_t coord) const;

    // True iff every leaf-coordinate partial vanishes.
    bool is_foliated() const;
    // True iff the polynomial involves none of the given coordinates.
    bool independent_of(const std::vector<std::size_t>& coords) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly partial(std::size_t coord) const;
    Poly partial(const std::string& name) const;

    // Substitute an exact rational value for one coordinate.
    Poly substitute(std::size_t coord, const Rational& value) const;
    // Coefficient of coord^power, as a polynomial free of that coordinate.
    Poly coefficient_of(std::size_t coord, unsigned power) const;

    // Re-express over another chart, matching coordinates by name. Every
    // coordinate that actually occurs must exist in the target chart.
    Poly transplant(const Chart& target) const;

    // Exact division; nullopt when the divisor does not divide exactly.
    static std::optional<Poly> exact_divide(const Poly& num, const Poly& den);

    std::string to_string() const;

  private:
    void add_term(const Exponents& e, const Rational& c);
    Chart chart_;
    TermMap terms_;
    friend Poly poly_mul_impl(const Poly&, const Poly&);
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

void require_same_chart(const Poly& a, const Poly& b);

}  // namespace folalg
