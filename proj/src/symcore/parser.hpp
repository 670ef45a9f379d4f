#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "calculus/vector_field.hpp"
#include "symcore/trigpoly.hpp"

namespace kontact {

/// Result of parsing one expression: either a scalar trig polynomial or a
/// vector field, never both.
struct ParsedExpr {
    std::optional<TrigPoly> poly;
    std::optional<VectorField> field;

    bool is_field() const { return field.has_value(); }
};

/// Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := primary ('^' integer)*
///   primary:= rational | name | 'sin(' name ')' | 'cos(' name ')'
///           | 'd_' name | '(' expr ')'
/// A summand containing exactly one d_<name> factor is a vector-field
/// component; an expression with no d_ factor is a TrigPoly. Mixing the two
/// is a syntax error, as is a product of two d_ factors.
ParsedExpr parse_expression(std::string_view text, const ChartPtr& chart);

TrigPoly parse_poly(std::string_view text, const ChartPtr& chart);
VectorField parse_field(std::string_view text, const ChartPtr& chart);

}  // namespace kontact
