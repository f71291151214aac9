#include "tunnelwell/expr.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace tunnelwell {
namespace detail {

enum class NodeKind { Number, Var, Param, Neg, Add, Sub, Mul, Div, Pow, Call };

struct ExprNode {
    NodeKind kind;
    double value = 0.0;          // Number
    std::string name;            // Param / Call
    std::shared_ptr<const ExprNode> lhs, rhs; // rhs unused for Neg/Call
    std::size_t offset = 0;      // byte offset in source, for diagnostics
};

using NodePtr = std::shared_ptr<const ExprNode>;

namespace {

const std::array<std::string, 7> kFunctions = {"sin", "cos", "exp", "log",
                                               "sqrt", "abs", "tanh"};

bool is_function(const std::string& s) {
    for (const auto& f : kFunctions)
        if (f == s) return true;
    return false;
}

struct Parser {
    const std::string& text;
    std::size_t pos = 0;
    std::set<std::string>* params;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    bool accept(char c) {
        if (peek(c)) { ++pos; return true; }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) {
            throw SyntaxError(std::string("expected '") + c + "'", pos);
        }
    }

    NodePtr make(NodeKind k, std::size_t off, NodePtr l = nullptr, NodePtr r = nullptr) {
        auto n = std::make_shared<ExprNode>();
        n->kind = k; n->lhs = std::move(l); n->rhs = std::move(r); n->offset = off;
        return n;
    }

    NodePtr parse_expr() {
        NodePtr left = parse_term();
        for (;;) {
            skip_ws();
            const std::size_t off = pos;
            if (accept('+')) {
                left = make(NodeKind::Add, off, left, parse_term());
            } else if (accept('-')) {
                left = make(NodeKind::Sub, off, left, parse_term());
            } else {
                return left;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr left = parse_unary();
        for (;;) {
            skip_ws();
            const std::size_t off = pos;
            if (accept('*')) {
                left = make(NodeKind::Mul, off, left, parse_unary());
            } else if (accept('/')) {
                left = make(NodeKind::Div, off, left, parse_unary());
            } else {
                return left;
            }
        }
    }

    NodePtr parse_unary() {
        skip_ws();
        const std::size_t off = pos;
        if (accept('-')) {
            return make(NodeKind::Neg, off, parse_unary());
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        skip_ws();
        const std::size_t off = pos;
        if (accept('^')) {
            // right-associative; exponent may carry a unary minus
            return make(NodeKind::Pow, off, base, parse_unary());
        }
        return base;
    }

    NodePtr parse_primary() {
        skip_ws();
        if (pos >= text.size()) {
            throw SyntaxError("unexpected end of expression", pos);
        }
        const std::size_t off = pos;
        const char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return parse_number();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            return parse_identifier();
        }
        if (accept('(')) {
            NodePtr inner = parse_expr();
            expect(')');
            return inner;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", off);
    }

    NodePtr parse_number() {
        const std::size_t off = pos;
        const char* begin = text.c_str() + pos;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) {
            throw SyntaxError("malformed number", off);
        }
        pos += static_cast<std::size_t>(end - begin);
        auto n = std::make_shared<ExprNode>();
        n->kind = NodeKind::Number; n->value = v; n->offset = off;
        return n;
    }

    NodePtr parse_identifier() {
        const std::size_t off = pos;
        std::size_t end = pos;
        while (end < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_'))
            ++end;
        std::string name = text.substr(pos, end - pos);
        pos = end;
        if (peek('(')) {
            if (!is_function(name)) {
                throw UnknownIdentifier("unknown function '" + name + "'");
            }
            expect('(');
            NodePtr arg = parse_expr();
            if (accept(',')) {
                throw ArityError("function '" + name + "' takes exactly one argument");
            }
            expect(')');
            auto n = std::make_shared<ExprNode>();
            n->kind = NodeKind::Call; n->name = name; n->lhs = arg; n->offset = off;
            return n;
        }
        if (name == "x") {
            auto n = std::make_shared<ExprNode>();
            n->kind = NodeKind::Var; n->offset = off;
            return n;
        }
        params->insert(name);
        auto n = std::make_shared<ExprNode>();
        n->kind = NodeKind::Param; n->name = name; n->offset = off;
        return n;
    }
};

double eval_node(const ExprNode& n, double x,
                 const std::map<std::string, double>& bindings) {
    switch (n.kind) {
    case NodeKind::Number: return n.value;
    case NodeKind::Var: return x;
    case NodeKind::Param: {
        auto it = bindings.find(n.name);
        if (it == bindings.end()) {
            throw MissingBinding("no binding for parameter '" + n.name + "'");
        }
        return it->second;
    }
    case NodeKind::Neg: return -eval_node(*n.lhs, x, bindings);
    case NodeKind::Add: return eval_node(*n.lhs, x, bindings) + eval_node(*n.rhs, x, bindings);
    case NodeKind::Sub: return eval_node(*n.lhs, x, bindings) - eval_node(*n.rhs, x, bindings);
    case NodeKind::Mul: return eval_node(*n.lhs, x, bindings) * eval_node(*n.rhs, x, bindings);
    case NodeKind::Div: {
        const double num = eval_node(*n.lhs, x, bindings);
        const double den = eval_node(*n.rhs, x, bindings);
        if (den == 0.0) throw DomainError("division by zero", n.offset);
        return num / den;
    }
    case NodeKind::Pow:
        return std::pow(eval_node(*n.lhs, x, bindings), eval_node(*n.rhs, x, bindings));
    case NodeKind::Call: {
        const double a = eval_node(*n.lhs, x, bindings);
        if (n.name == "sin") return std::sin(a);
        if (n.name == "cos") return std::cos(a);
        if (n.name == "exp") return std::exp(a);
        if (n.name == "tanh") return std::tanh(a);
        if (n.name == "abs") return std::abs(a);
        if (n.name == "log") {
            if (a <= 0.0) throw DomainError("log of non-positive value", n.offset);
            return std::log(a);
        }
        if (n.name == "sqrt") {
            if (a < 0.0) throw DomainError("sqrt of negative value", n.offset);
            return std::sqrt(a);
        }
        throw UnknownIdentifier("unknown function '" + n.name + "'");
    }
    }
    throw std::logic_error("unreachable");
}

void print_node(const ExprNode& n, std::ostream& os) {
    switch (n.kind) {
    case NodeKind::Number: {
        std::ostringstream tmp;
        tmp.precision(17);
        tmp << n.value;
        std::string s = tmp.str();
        if (n.value < 0) { os << "(" << s << ")"; } else { os << s; }
        return;
    }
    case NodeKind::Var: os << "x"; return;
    case NodeKind::Param: os << n.name; return;
    case NodeKind::Neg:
        os << "(-";
        print_node(*n.lhs, os);
        os << ")";
        return;
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Mul:
    case NodeKind::Div:
    case NodeKind::Pow: {
        const char op = n.kind == NodeKind::Add ? '+'
                      : n.kind == NodeKind::Sub ? '-'
                      : n.kind == NodeKind::Mul ? '*'
                      : n.kind == NodeKind::Div ? '/' : '^';
        os << "(";
        print_node(*n.lhs, os);
        os << op;
        print_node(*n.rhs, os);
        os << ")";
        return;
    }
    case NodeKind::Call:
        os << n.name << "(";
        print_node(*n.lhs, os);
        os << ")";
        return;
    }
}

} // namespace
} // namespace detail

Expr parse(const std::string& text) {
    bool all_ws = true;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) { all_ws = false; break; }
    if (text.empty() || all_ws) {
        throw SyntaxError("empty expression", 0);
    }
    Expr e;
    detail::Parser p{text, 0, &e.params_};
    e.root_ = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) {
        throw SyntaxError("trailing input", p.pos);
    }
    return e;
}

double Expr::eval(double x, const std::map<std::string, double>& bindings) const {
    return detail::eval_node(*root_, x, bindings);
}

std::string Expr::pretty_print() const {
    std::ostringstream os;
    detail::print_node(*root_, os);
    return os.str();
}

} // namespace tunnelwell
