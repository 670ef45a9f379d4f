#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kontact {

enum class CoordKind { Linear, Angular };

struct Coord {
    std::string name;
    CoordKind kind;
    bool operator==(const Coord&) const = default;
};

/// An ordered coordinate system. Coordinate order is significant: it fixes
/// component indices of vector fields and the symbol order of the term order.
/// Each linear coordinate contributes one symbol; each angular coordinate
/// contributes two (sin then cos).
class Chart {
public:
    explicit Chart(std::vector<Coord> coords);

    /// Parses "x1 x2 theta0:angle"; a leading "chart" keyword is accepted.
    static Chart parse(std::string_view decl);

    std::size_t dim() const { return coords_.size(); }
    std::size_t symbol_count() const { return nsymbols_; }
    const Coord& coord(std::size_t i) const { return coords_[i]; }
    const std::vector<Coord>& coords() const { return coords_; }

    std::optional<std::size_t> index_of(std::string_view name) const;

    /// First symbol slot of coordinate i (its sin slot when angular).
    std::size_t symbol_base(std::size_t i) const { return bases_[i]; }

    /// Symbol slot -> printable factor name ("x1", "sin(theta0)", ...).
    const std::string& symbol_name(std::size_t slot) const { return symbol_names_[slot]; }

    std::string decl_string() const;

    bool operator==(const Chart& o) const { return coords_ == o.coords_; }

private:
    std::vector<Coord> coords_;
    std::vector<std::size_t> bases_;
    std::vector<std::string> symbol_names_;
    std::size_t nsymbols_ = 0;
};

using ChartPtr = std::shared_ptr<const Chart>;

inline ChartPtr make_chart(std::string_view decl) {
    return std::make_shared<const Chart>(Chart::parse(decl));
}

/// Content equality; values parsed onto separately built but identical charts
/// are interoperable.
bool same_chart(const ChartPtr& a, const ChartPtr& b);

void require_same_chart(const ChartPtr& a, const ChartPtr& b, const char* what);

}  // namespace kontact
