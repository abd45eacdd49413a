#include "folalg/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace folalg {

void require_same_chart(const Poly& a, const Poly& b) {
    if (a.chart() != b.chart()) throw PolyError("chart mismatch between polynomials");
}

Poly Poly::constant(const Chart& chart, const Rational& c) {
    Poly p(chart);
    if (c != 0) p.terms_.emplace(Exponents(chart.size(), 0), c);
    return p;
}

Poly Poly::variable(const Chart& chart, const std::string& name) {
    Exponents e(chart.size(), 0);
    e[chart.require(name)] = 1;
    Poly p(chart);
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Poly Poly::monomial(const Chart& chart, Exponents e, const Rational& c) {
    if (e.size() != chart.size()) throw PolyError("exponent vector length mismatch");
    Poly p(chart);
    if (c != 0) p.terms_.emplace(std::move(e), c);
    return p;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool Poly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](unsigned k) { return k == 0; }));
}

std::optional<Rational> Poly::as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) return std::nullopt;
    return terms_.begin()->second;
}

unsigned Poly::degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned t = 0;
        for (unsigned k : e) t += k;
        d = std::max(d, t);
    }
    return d;
}

unsigned Poly::degree_in(std::size_t coord) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(coord));
    return d;
}

bool Poly::is_foliated() const {
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0 && chart_.kind(i) == CoordKind::Leaf) return false;
    return true;
}

bool Poly::independent_of(const std::vector<std::size_t>& coords) const {
    for (const auto& [e, c] : terms_)
        for (std::size_t i : coords)
            if (e.at(i) > 0) return false;
    return true;
}

Poly Poly::operator-() const {
    Poly r(chart_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_chart(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_chart(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    require_same_chart(*this, o);
    Poly r(chart_);
    Exponents e(chart_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    Poly r(chart_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

bool Poly::operator==(const Poly& o) const {
    return chart_ == o.chart_ && terms_ == o.terms_;
}

Poly Poly::partial(std::size_t coord) const {
    Poly r(chart_);
    for (const auto& [e, c] : terms_) {
        unsigned k = e.at(coord);
        if (k == 0) continue;
        Exponents d = e;
        d[coord] = k - 1;
        r.add_term(d, c * Rational(k));
    }
    return r;
}

Poly Poly::partial(const std::string& name) const { return partial(chart_.require(name)); }

Poly Poly::substitute(std::size_t coord, const Rational& value) const {
    Poly r(chart_);
    for (const auto& [e, c] : terms_) {
        unsigned k = e.at(coord);
        Rational scale = c;
        for (unsigned j = 0; j < k; ++j) scale *= value;
        if (scale == 0) continue;
        Exponents d = e;
        d[coord] = 0;
        r.add_term(d, scale);
    }
    return r;
}

Poly Poly::coefficient_of(std::size_t coord, unsigned power) const {
    Poly r(chart_);
    for (const auto& [e, c] : terms_) {
        if (e.at(coord) != power) continue;
        Exponents d = e;
        d[coord] = 0;
        r.add_term(d, c);
    }
    return r;
}

Poly Poly::transplant(const Chart& target) const {
    if (chart_ == target) return *this;
    std::vector<std::optional<std::size_t>> map(chart_.size());
    for (std::size_t i = 0; i < chart_.size(); ++i) map[i] = target.index_of(chart_.name(i));
    Poly r(target);
    for (const auto& [e, c] : terms_) {
        Exponents d(target.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!map[i])
                throw PolyError("coordinate '" + chart_.name(i) + "' missing in target chart");
            d[*map[i]] += e[i];
        }
        r.add_term(d, c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Canonical printing: graded-lex descending term order.

namespace {

bool grlex_greater(const Poly::Exponents& a, const Poly::Exponents& b) {
    unsigned da = 0, db = 0;
    for (unsigned k : a) da += k;
    for (unsigned k : b) db += k;
    if (da != db) return da > db;
    return a > b;
}

std::string monomial_string(const Chart& chart, const Poly::Exponents& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += chart.name(i);
        if (e[i] >= 2) out += "^" + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return grlex_greater(a->first, b->first); });

    std::string out;
    bool first = true;
    for (auto* t : order) {
        Rational c = t->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string mono = monomial_string(chart_, t->first);
        if (mono.empty()) {
            out += folalg::to_string(c);
        } else if (c == 1) {
            out += mono;
        } else {
            out += folalg::to_string(c) + "*" + mono;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact division (single divisor, graded-lex leading terms).

namespace {

const Poly::TermMap::value_type* leading_term(const Poly::TermMap& terms) {
    const Poly::TermMap::value_type* best = nullptr;
    for (const auto& t : terms)
        if (!best || grlex_greater(t.first, best->first)) best = &t;
    return best;
}

bool exponents_divide(const Poly::Exponents& den, const Poly::Exponents& num) {
    for (std::size_t i = 0; i < den.size(); ++i)
        if (den[i] > num[i]) return false;
    return true;
}

}  // namespace

std::optional<Poly> Poly::exact_divide(const Poly& num, const Poly& den) {
    require_same_chart(num, den);
    if (den.is_zero()) return std::nullopt;
    if (auto c = den.as_constant()) return num * (Rational(1) / *c);

    Poly rem = num;
    Poly quot(num.chart());
    auto dlt = leading_term(den.terms());
    while (!rem.is_zero()) {
        auto rlt = leading_term(rem.terms());
        if (!exponents_divide(dlt->first, rlt->first)) return std::nullopt;
        Exponents q = rlt->first;
        for (std::size_t i = 0; i < q.size(); ++i) q[i] -= dlt->first[i];
        Poly step = Poly::monomial(num.chart(), q, rlt->second / dlt->second);
        quot += step;
        rem -= step * den;
    }
    return quot;
}

// ---------------------------------------------------------------------------
// Parser.

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) { throw PolyError(msg, pos); }

    std::string read_uint_digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return std::string(text.substr(start, pos - start));
    }

    std::string read_identifier() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
            fail("expected identifier");
        ++pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }
};

unsigned parse_exponent(Cursor& cur) {
    if (!cur.accept('^')) return 1;
    std::string digits = cur.read_uint_digits();
    unsigned long v = 0;
    try {
        v = std::stoul(digits);
    } catch (const std::exception&) {
        cur.fail("malformed exponent");
    }
    if (v > 64) cur.fail("exponent too large");
    return static_cast<unsigned>(v);
}

Rational parse_rational(Cursor& cur, bool negative) {
    std::string numstr = cur.read_uint_digits();
    mpz_class num(numstr);
    if (negative) num = -num;
    if (cur.accept('/')) {
        std::size_t at = cur.pos;
        std::string denstr = cur.read_uint_digits();
        mpz_class den(denstr);
        if (den == 0) throw PolyError("malformed rational: zero denominator", at);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    return Rational(num);
}

// term := rational ('*' var ('^' uint)?)* | var ('^' uint)? ('*' var ('^' uint)?)*
Poly parse_term(Cursor& cur, const Chart& chart, bool negated) {
    Rational coef(1);
    Poly::Exponents e(chart.size(), 0);

    char c = cur.peek();
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(c))) {
        coef = parse_rational(cur, false);
        saw_factor = true;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t at = cur.pos;
        std::string name = cur.read_identifier();
        auto idx = chart.index_of(name);
        if (!idx) throw PolyError("unknown variable: " + name, at);
        e[*idx] += parse_exponent(cur);
        saw_factor = true;
    } else {
        cur.fail("expected term");
    }

    while (true) {
        std::size_t save = cur.pos;
        if (!cur.accept('*')) break;
        std::size_t at = cur.pos;
        if (!std::isalpha(static_cast<unsigned char>(cur.peek()))) {
            // not a variable factor; backtrack and stop (e.g. nothing valid follows)
            cur.pos = save;
            cur.fail("expected variable after '*'");
        }
        std::string name = cur.read_identifier();
        auto idx = chart.index_of(name);
        if (!idx) throw PolyError("unknown variable: " + name, at);
        e[*idx] += parse_exponent(cur);
    }
    (void)saw_factor;

    if (negated) coef = -coef;
    return Poly::monomial(chart, std::move(e), coef);
}

}  // namespace

Poly Poly::parse(const Chart& chart, std::string_view text) {
    Cursor cur{text};
    Poly result(chart);
    if (cur.done()) cur.fail("empty polynomial");

    bool neg = false;
    if (cur.accept('-'))
        neg = true;
    else
        cur.accept('+');
    result += parse_term(cur, chart, neg);

    while (!cur.done()) {
        if (cur.accept('+'))
            neg = false;
        else if (cur.accept('-'))
            neg = true;
        else
            cur.fail("expected '+' or '-'");
        result += parse_term(cur, chart, neg);
    }
    return result;
}

}  // namespace folalg
