#include "folalg/chart.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace folalg {

bool is_identifier(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

static void validate(const std::vector<Coord>& coords) {
    std::set<std::string> seen;
    bool fiber_started = false;
    for (const auto& c : coords) {
        if (!is_identifier(c.name))
            throw std::invalid_argument("bad coordinate name: '" + c.name + "'");
        if (!seen.insert(c.name).second)
            throw std::invalid_argument("duplicate coordinate name: " + c.name);
        if (c.kind == CoordKind::Fiber) {
            if (c.fiber_tag.empty())
                throw std::invalid_argument("fiber coordinate without group tag: " + c.name);
            fiber_started = true;
        } else if (fiber_started) {
            throw std::invalid_argument("base coordinate after fiber group: " + c.name);
        }
    }
}

Chart Chart::make(std::vector<std::string> transverse, std::vector<std::string> leaf) {
    std::vector<Coord> coords;
    coords.reserve(transverse.size() + leaf.size());
    for (auto& n : transverse) coords.push_back({std::move(n), CoordKind::Transverse, {}});
    for (auto& n : leaf) coords.push_back({std::move(n), CoordKind::Leaf, {}});
    return from_coords(std::move(coords));
}

Chart Chart::from_coords(std::vector<Coord> coords) {
    validate(coords);
    auto d = std::make_shared<Data>();
    d->coords = std::move(coords);
    d->base = 0;
    for (const auto& c : d->coords)
        if (c.kind != CoordKind::Fiber) ++d->base;
    return Chart(std::move(d));
}

Chart Chart::extended_with_fiber(const std::string& tag,
                                 std::vector<std::string> names) const {
    std::vector<Coord> coords = data_->coords;
    for (auto& n : names) coords.push_back({std::move(n), CoordKind::Fiber, tag});
    return from_coords(std::move(coords));
}

std::size_t Chart::size() const { return data_->coords.size(); }
std::size_t Chart::base_dim() const { return data_->base; }

std::size_t Chart::transverse_dim() const {
    std::size_t k = 0;
    for (const auto& c : data_->coords)
        if (c.kind == CoordKind::Transverse) ++k;
    return k;
}

std::size_t Chart::leaf_dim() const {
    std::size_t n = 0;
    for (const auto& c : data_->coords)
        if (c.kind == CoordKind::Leaf) ++n;
    return n;
}

const std::string& Chart::name(std::size_t i) const { return data_->coords.at(i).name; }
CoordKind Chart::kind(std::size_t i) const { return data_->coords.at(i).kind; }
const std::string& Chart::fiber_tag(std::size_t i) const { return data_->coords.at(i).fiber_tag; }

std::optional<std::size_t> Chart::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < data_->coords.size(); ++i)
        if (data_->coords[i].name == name) return i;
    return std::nullopt;
}

std::size_t Chart::require(const std::string& name) const {
    auto i = index_of(name);
    if (!i) throw std::invalid_argument("unknown coordinate: " + name);
    return *i;
}

std::vector<std::size_t> Chart::transverse_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (kind(i) == CoordKind::Transverse) out.push_back(i);
    return out;
}

std::vector<std::size_t> Chart::leaf_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (kind(i) == CoordKind::Leaf) out.push_back(i);
    return out;
}

std::vector<std::size_t> Chart::base_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (kind(i) != CoordKind::Fiber) out.push_back(i);
    return out;
}

std::vector<std::size_t> Chart::fiber_indices(const std::string& tag) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (kind(i) == CoordKind::Fiber && fiber_tag(i) == tag) out.push_back(i);
    return out;
}

Chart Chart::transversal_chart() const {
    std::vector<Coord> coords;
    for (const auto& c : data_->coords)
        if (c.kind == CoordKind::Transverse) coords.push_back(c);
    return from_coords(std::move(coords));
}

bool Chart::operator==(const Chart& other) const {
    if (data_ == other.data_) return true;
    if (!data_ || !other.data_) return false;
    if (data_->coords.size() != other.data_->coords.size()) return false;
    for (std::size_t i = 0; i < data_->coords.size(); ++i) {
        const auto& a = data_->coords[i];
        const auto& b = other.data_->coords[i];
        if (a.name != b.name || a.kind != b.kind || a.fiber_tag != b.fiber_tag)
            return false;
    }
    return true;
}

std::vector<std::string> fresh_names(const Chart& chart, const std::string& stem,
                                     std::size_t count) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::string name = stem + std::to_string(i + 1);
        auto taken = [&](const std::string& n) {
            if (chart.index_of(n)) return true;
            for (const auto& prev : out)
                if (prev == n) return true;
            return false;
        };
        while (taken(name)) name += "_";
        out.push_back(std::move(name));
    }
    return out;
}

}  // namespace folalg
