#include "symcore/chart.hpp"

#include <sstream>
#include <unordered_set>

#include "symcore/errors.hpp"

namespace kontact {

Chart::Chart(std::vector<Coord> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw DomainError("chart needs at least one coordinate");
    std::unordered_set<std::string> seen;
    for (const auto& c : coords_) {
        if (c.name.empty()) throw DomainError("empty coordinate name");
        if (c.name.rfind("d_", 0) == 0)
            throw DomainError("coordinate name may not start with 'd_': " + c.name);
        if (!seen.insert(c.name).second)
            throw DomainError("duplicate coordinate name: " + c.name);
    }
    for (const auto& c : coords_) {
        bases_.push_back(nsymbols_);
        if (c.kind == CoordKind::Angular) {
            symbol_names_.push_back("sin(" + c.name + ")");
            symbol_names_.push_back("cos(" + c.name + ")");
            nsymbols_ += 2;
        } else {
            symbol_names_.push_back(c.name);
            nsymbols_ += 1;
        }
    }
}

Chart Chart::parse(std::string_view decl) {
    std::vector<Coord> coords;
    std::istringstream in{std::string(decl)};
    std::string tok;
    bool first = true;
    while (in >> tok) {
        if (first && tok == "chart") {
            first = false;
            continue;
        }
        first = false;
        CoordKind kind = CoordKind::Linear;
        auto colon = tok.find(':');
        if (colon != std::string::npos) {
            std::string suffix = tok.substr(colon + 1);
            if (suffix != "angle")
                throw ParseError(colon, "unknown coordinate suffix ':" + suffix + "'");
            kind = CoordKind::Angular;
            tok = tok.substr(0, colon);
        }
        coords.push_back({tok, kind});
    }
    return Chart(std::move(coords));
}

std::optional<std::size_t> Chart::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i].name == name) return i;
    return std::nullopt;
}

std::string Chart::decl_string() const {
    std::string out;
    for (const auto& c : coords_) {
        if (!out.empty()) out += ' ';
        out += c.name;
        if (c.kind == CoordKind::Angular) out += ":angle";
    }
    return out;
}

bool same_chart(const ChartPtr& a, const ChartPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void require_same_chart(const ChartPtr& a, const ChartPtr& b, const char* what) {
    if (!same_chart(a, b))
        throw ChartMismatch(std::string("chart mismatch in ") + what);
}

}  // namespace kontact
