#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>

#include "tunnelwell/errors.hpp"

namespace tunnelwell {

namespace detail {
struct ExprNode;
}

/// Immutable parsed expression in the variable `x` plus named parameters.
/// Functions: sin cos exp log sqrt abs tanh. Operators: + - * / ^ and
/// unary minus, with ^ binding tightest (right-associative).
class Expr {
public:
    /// Evaluate at x with parameter bindings. All parameters must be bound.
    double eval(double x, const std::map<std::string, double>& bindings) const;

    /// Names of all parameters appearing in the tree (excludes `x`).
    const std::set<std::string>& params() const { return params_; }

    /// Fully parenthesized canonical form; re-parses to the same tree.
    std::string pretty_print() const;

    friend Expr parse(const std::string& text);

private:
    std::shared_ptr<const detail::ExprNode> root_;
    std::set<std::string> params_;
};

/// Parse expression text. Throws SyntaxError (with byte offset),
/// UnknownIdentifier, ArityError.
Expr parse(const std::string& text);

} // namespace tunnelwell
