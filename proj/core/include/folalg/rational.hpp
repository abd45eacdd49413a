#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace folalg {

// Exact rational scalar. The whole kernel computes over these; no floating
// point anywhere.
using Rational = mpq_class;

inline Rational rat(long num, unsigned long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Canonical form: "n" for integers, "n/d" otherwise, d > 0.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace folalg
