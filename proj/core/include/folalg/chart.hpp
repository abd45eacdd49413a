#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace folalg {

enum class CoordKind { Transverse, Leaf, Fiber };

struct Coord {
    std::string name;
    CoordKind kind = CoordKind::Transverse;
    std::string fiber_tag;  // empty unless kind == Fiber
};

// A named coordinate chart with a fixed transverse/leaf split and optional
// auxiliary fiber-coordinate groups (appended after the base coordinates).
// Immutable after construction; cheap to copy and share.
class Chart {
  public:
    Chart() = default;

    static Chart make(std::vector<std::string> transverse,
                      std::vector<std::string> leaf);
    static Chart from_coords(std::vector<Coord> coords);

    // New chart with an extra fiber group appended.
    Chart extended_with_fiber(const std::string& tag,
                              std::vector<std::string> names) const;

    bool valid() const { return data_ != nullptr; }
    std::size_t size() const;       // all coordinates, fiber groups included
    std::size_t base_dim() const;   // transverse + leaf
    std::size_t transverse_dim() const;
    std::size_t leaf_dim() const;

    const std::string& name(std::size_t i) const;
    CoordKind kind(std::size_t i) const;
    const std::string& fiber_tag(std::size_t i) const;

    std::optional<std::size_t> index_of(const std::string& name) const;
    std::size_t require(const std::string& name) const;

    std::vector<std::size_t> transverse_indices() const;
    std::vector<std::size_t> leaf_indices() const;
    std::vector<std::size_t> base_indices() const;
    std::vector<std::size_t> fiber_indices(const std::string& tag) const;

    // Chart whose coordinates are just the transverse ones of this chart.
    Chart transversal_chart() const;

    bool operator==(const Chart& other) const;
    bool operator!=(const Chart& other) const { return !(*this == other); }

    bool same_object(const Chart& other) const { return data_ == other.data_; }

  private:
    struct Data {
        std::vector<Coord> coords;
        std::size_t base = 0;
    };
    explicit Chart(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    std::shared_ptr<const Data> data_;
};

bool is_identifier(const std::string& s);

// stem1..stemN, suffixed with '_' until free in the chart.
std::vector<std::string> fresh_names(const Chart& chart, const std::string& stem,
                                     std::size_t count);

}  // namespace folalg
