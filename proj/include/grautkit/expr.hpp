#pragma once

#include <string>
#include <string_view>

#include "grautkit/endo.hpp"
#include "grautkit/poly.hpp"

namespace grautkit {

/// Byte range into the parsed input, for diagnostics.
struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;  // one past the last byte
};

/// Syntax or lexical error, carrying the offending byte range.
class ParseError : public UsageError {
public:
    ParseError(const std::string& message, SourceSpan span)
        : UsageError(message), span_(span) {}
    SourceSpan span() const { return span_; }

private:
    SourceSpan span_;
};

/// Which fixed variable set an expression is written in.
enum class VarSet { Plane, Space };  // (u, v) and (x, y, z)

inline int arity_of(VarSet vs) { return vs == VarSet::Plane ? 2 : 3; }

/// Variable names in index order.
std::string_view variable_names(VarSet vs);

/// Parses a polynomial. Accepted syntax: signed terms of rational
/// coefficients ("2", "3/2", "-1/4"), variables, "^" positive-integer powers,
/// implicit or "*" multiplication, parentheses (expanded). ASCII only.
Poly parse_poly(std::string_view text, VarSet vars);

/// Parses a map as a ";"- or newline-separated component list:
/// "f; g; h" in x,y,z or "f; g" in u,v.
PolyMap parse_map(std::string_view text);

/// Canonical rendering: graded-lex term order, explicit "*", "1*" suppressed.
/// parse(format(p)) == p for every polynomial.
std::string format(const Poly& p);
std::string format(const PolyMap& m);

}  // namespace grautkit
