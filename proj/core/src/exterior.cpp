#include "folalg/exterior.hpp"

#include <algorithm>
#include <stdexcept>

namespace folalg {

std::optional<std::pair<IndexTuple, int>> sort_signed(IndexTuple t) {
    int sign = 1;
    for (std::size_t i = 1; i < t.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && t[j - 1] > t[j]) {
            std::swap(t[j - 1], t[j]);
            sign = -sign;
            --j;
        }
    }
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i - 1] == t[i]) return std::nullopt;
    return std::make_pair(std::move(t), sign);
}

int merge_sign(const IndexTuple& s, const IndexTuple& t, IndexTuple& out) {
    out.clear();
    out.reserve(s.size() + t.size());
    int inversions = 0;
    for (unsigned a : s)
        for (unsigned b : t) {
            if (a == b) return 0;
            if (b < a) ++inversions;
        }
    std::merge(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(out));
    return (inversions % 2 == 0) ? 1 : -1;
}

namespace detail {

void AntisymCoeffs::add(IndexTuple tuple, const Poly& coeff) {
    if (coeff.is_zero()) return;
    if (tuple.size() != degree_) throw std::invalid_argument("tuple/degree mismatch");
    auto sorted = sort_signed(std::move(tuple));
    if (!sorted) return;
    Poly c = sorted->second == 1 ? coeff : -coeff;
    auto it = comps_.find(sorted->first);
    if (it == comps_.end()) {
        comps_.emplace(std::move(sorted->first), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

Poly AntisymCoeffs::coeff(IndexTuple tuple) const {
    auto sorted = sort_signed(std::move(tuple));
    if (!sorted) return Poly(chart_);
    auto it = comps_.find(sorted->first);
    if (it == comps_.end()) return Poly(chart_);
    return sorted->second == 1 ? it->second : -it->second;
}

}  // namespace detail

// ---------------------------------------------------------------------------

Multivector Multivector::function(const Poly& f) {
    Multivector m(f.chart(), 0);
    m.add({}, f);
    return m;
}

Multivector Multivector::vector_field(const Chart& chart, const std::vector<Poly>& comps) {
    Multivector m(chart, 1);
    for (unsigned i = 0; i < comps.size(); ++i) m.add({i}, comps[i]);
    return m;
}

Multivector Multivector::operator+(const Multivector& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch");
    Multivector r = *this;
    for (const auto& [t, c] : o.comps_) r.add(t, c);
    return r;
}

Multivector Multivector::operator-(const Multivector& o) const {
    return *this + o * Rational(-1);
}

Multivector Multivector::operator*(const Rational& c) const {
    Multivector r(chart_, degree_);
    for (const auto& [t, f] : comps_) r.add(t, f * c);
    return r;
}

Multivector Multivector::wedge(const Multivector& o) const {
    if (chart_ != o.chart_) throw std::invalid_argument("chart mismatch");
    Multivector r(chart_, degree_ + o.degree_);
    IndexTuple merged;
    for (const auto& [s, f] : comps_)
        for (const auto& [t, g] : o.comps_) {
            int sign = merge_sign(s, t, merged);
            if (sign == 0) continue;
            Poly c = f * g;
            r.add(merged, sign == 1 ? c : -c);
        }
    return r;
}

namespace {

// Grassmann derivative of one increasing tuple; the right-handed derivative
// picks up the sign of commuting theta_i past the factors after it.
bool theta_derivative(const IndexTuple& s, unsigned i, bool right, IndexTuple& out, int& sign) {
    auto it = std::find(s.begin(), s.end(), i);
    if (it == s.end()) return false;
    std::size_t pos = static_cast<std::size_t>(it - s.begin());
    std::size_t swaps = right ? (s.size() - 1 - pos) : pos;
    sign = (swaps % 2 == 0) ? 1 : -1;
    out.clear();
    for (std::size_t j = 0; j < s.size(); ++j)
        if (j != pos) out.push_back(s[j]);
    return true;
}

// sum_i  d_r P / d theta_i  ^  dQ/dx^i
Multivector antibracket_first(const Multivector& p, const Multivector& q) {
    unsigned deg = p.degree() + q.degree();
    Multivector r(p.chart(), deg == 0 ? 0 : deg - 1);
    IndexTuple reduced, merged;
    for (const auto& [s, f] : p.comps()) {
        for (std::size_t k = 0; k < s.size(); ++k) {
            int dsign;
            theta_derivative(s, s[k], /*right=*/true, reduced, dsign);
            for (const auto& [t, g] : q.comps()) {
                Poly dg = g.partial(s[k]);
                if (dg.is_zero()) continue;
                int msign = merge_sign(reduced, t, merged);
                if (msign == 0) continue;
                Poly c = f * dg;
                r.add(merged, (dsign * msign) == 1 ? c : -c);
            }
        }
    }
    return r;
}

// sum_i  dP/dx^i  ^  d_l Q / d theta_i
Multivector antibracket_second(const Multivector& p, const Multivector& q) {
    unsigned deg = p.degree() + q.degree();
    Multivector r(p.chart(), deg == 0 ? 0 : deg - 1);
    IndexTuple reduced, merged;
    for (const auto& [t, g] : q.comps()) {
        for (std::size_t k = 0; k < t.size(); ++k) {
            int dsign;
            theta_derivative(t, t[k], /*right=*/false, reduced, dsign);
            for (const auto& [s, f] : p.comps()) {
                Poly df = f.partial(t[k]);
                if (df.is_zero()) continue;
                int msign = merge_sign(s, reduced, merged);
                if (msign == 0) continue;
                Poly c = df * g;
                r.add(merged, (dsign * msign) == 1 ? c : -c);
            }
        }
    }
    return r;
}

}  // namespace

Multivector schouten(const Multivector& p, const Multivector& q) {
    if (p.chart() != q.chart()) throw std::invalid_argument("chart mismatch");
    return antibracket_first(p, q) - antibracket_second(p, q);
}

Poly poisson_bracket(const Multivector& bivector, const Poly& f, const Poly& g) {
    if (bivector.degree() != 2) throw std::invalid_argument("expected a bivector");
    Poly out(f.chart());
    for (const auto& [t, c] : bivector.comps()) {
        unsigned i = t[0], j = t[1];
        out += c * (f.partial(i) * g.partial(j) - f.partial(j) * g.partial(i));
    }
    return out;
}

// ---------------------------------------------------------------------------

Form Form::function(const Poly& f) {
    Form w(f.chart(), 0);
    w.add({}, f);
    return w;
}

Form Form::covector(const Chart& chart, const std::vector<Poly>& comps) {
    Form w(chart, 1);
    for (unsigned i = 0; i < comps.size(); ++i) w.add({i}, comps[i]);
    return w;
}

Form Form::operator+(const Form& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch");
    Form r = *this;
    for (const auto& [t, c] : o.comps_) r.add(t, c);
    return r;
}

Form Form::operator-(const Form& o) const { return *this + o * Rational(-1); }

Form Form::operator*(const Rational& c) const {
    Form r(chart_, degree_);
    for (const auto& [t, f] : comps_) r.add(t, f * c);
    return r;
}

Form Form::operator*(const Poly& f) const {
    Form r(chart_, degree_);
    for (const auto& [t, c] : comps_) r.add(t, c * f);
    return r;
}

Form Form::wedge(const Form& o) const {
    if (chart_ != o.chart_) throw std::invalid_argument("chart mismatch");
    Form r(chart_, degree_ + o.degree_);
    IndexTuple merged;
    for (const auto& [s, f] : comps_)
        for (const auto& [t, g] : o.comps_) {
            int sign = merge_sign(s, t, merged);
            if (sign == 0) continue;
            Poly c = f * g;
            r.add(merged, sign == 1 ? c : -c);
        }
    return r;
}

Form exterior_d(const Form& w) {
    Form r(w.chart(), w.degree() + 1);
    IndexTuple merged;
    for (const auto& [t, f] : w.comps()) {
        for (unsigned i = 0; i < w.chart().size(); ++i) {
            Poly df = f.partial(i);
            if (df.is_zero()) continue;
            IndexTuple single{i};
            int sign = merge_sign(single, t, merged);
            if (sign == 0) continue;
            r.add(merged, sign == 1 ? df : -df);
        }
    }
    return r;
}

Form interior(const std::vector<Poly>& field, const Form& w) {
    if (w.degree() == 0) return Form(w.chart(), 0);
    Form r(w.chart(), w.degree() - 1);
    for (const auto& [t, f] : w.comps()) {
        for (std::size_t k = 0; k < t.size(); ++k) {
            unsigned i = t[k];
            if (i >= field.size() || field[i].is_zero()) continue;
            IndexTuple reduced;
            for (std::size_t j = 0; j < t.size(); ++j)
                if (j != k) reduced.push_back(t[j]);
            Poly c = field[i] * f;
            r.add(reduced, (k % 2 == 0) ? c : -c);
        }
    }
    return r;
}

Form lie_derivative(const std::vector<Poly>& field, const Form& w) {
    return exterior_d(interior(field, w)) + interior(field, exterior_d(w));
}

std::vector<Poly> commutator(const Chart& chart, const std::vector<Poly>& x,
                             const std::vector<Poly>& y) {
    std::size_t m = chart.base_dim();
    if (x.size() != m || y.size() != m)
        throw std::invalid_argument("vector field dimension mismatch");
    std::vector<Poly> out(m, Poly(chart));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            out[i] += x[j] * y[i].partial(j) - y[j] * x[i].partial(j);
    return out;
}

std::string Multivector::to_string(const std::string& symbol) const {
    if (comps_.empty()) return "0";
    std::string out;
    for (const auto& [t, c] : comps_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")";
        for (unsigned i : t) out += " " + symbol + chart_.name(i);
    }
    return out;
}

std::string Form::to_string(const std::string& symbol) const {
    if (comps_.empty()) return "0";
    std::string out;
    for (const auto& [t, c] : comps_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")";
        for (unsigned i : t) out += " " + symbol + chart_.name(i);
    }
    return out;
}

}  // namespace folalg
