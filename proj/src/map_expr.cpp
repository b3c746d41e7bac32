#include "fskit/map_expr.hpp"

#include <cctype>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

namespace fskit {

namespace {

// Recursive-descent parser for the scalar grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | '(' expr ')' | 'x' | number
struct ScalarNode {
    enum class Kind { constant, variable, add, sub, mul, div, neg };
    Kind kind;
    double value = 0.0;
    std::unique_ptr<ScalarNode> lhs, rhs;

    double eval(double x) const {
        switch (kind) {
            case Kind::constant: return value;
            case Kind::variable: return x;
            case Kind::add: return lhs->eval(x) + rhs->eval(x);
            case Kind::sub: return lhs->eval(x) - rhs->eval(x);
            case Kind::mul: return lhs->eval(x) * rhs->eval(x);
            case Kind::div: return lhs->eval(x) / rhs->eval(x);
            case Kind::neg: return -lhs->eval(x);
        }
        return 0.0;
    }
};

using NodePtr = std::unique_ptr<ScalarNode>;

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what, 1, pos_ + 1);
    }

    double number() {
        skip_ws();
        const std::string rest(text_.substr(pos_));
        const char* begin = rest.c_str();
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) fail("expected a number");
        pos_ += static_cast<std::size_t>(end - begin);
        return v;
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

NodePtr make_node(ScalarNode::Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto node = std::make_unique<ScalarNode>();
    node->kind = kind;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
}

NodePtr parse_expr(Cursor& c);

NodePtr parse_factor(Cursor& c) {
    if (c.eat('-')) return make_node(ScalarNode::Kind::neg, parse_factor(c));
    if (c.eat('(')) {
        auto inner = parse_expr(c);
        if (!c.eat(')')) c.fail("expected ')'");
        return inner;
    }
    const char next = c.peek();
    if (next == 'x' || next == 'X') {
        c.eat(next);
        return make_node(ScalarNode::Kind::variable);
    }
    auto node = make_node(ScalarNode::Kind::constant);
    node->value = c.number();
    return node;
}

NodePtr parse_term(Cursor& c) {
    auto lhs = parse_factor(c);
    while (true) {
        if (c.eat('*'))
            lhs = make_node(ScalarNode::Kind::mul, std::move(lhs), parse_factor(c));
        else if (c.eat('/'))
            lhs = make_node(ScalarNode::Kind::div, std::move(lhs), parse_factor(c));
        else
            return lhs;
    }
}

NodePtr parse_expr(Cursor& c) {
    auto lhs = parse_term(c);
    while (true) {
        if (c.eat('+'))
            lhs = make_node(ScalarNode::Kind::add, std::move(lhs), parse_term(c));
        else if (c.eat('-'))
            lhs = make_node(ScalarNode::Kind::sub, std::move(lhs), parse_term(c));
        else
            return lhs;
    }
}

FuzzyReal parse_real_term(Cursor& c, const AlphaGrid& grid, ArithmeticTrace* trace) {
    const std::string name = c.identifier();
    if (name.empty()) c.fail("expected tri(...), crisp(...) or an operation");
    if (!c.eat('(')) c.fail("expected '(' after \"" + name + "\"");

    if (name == "tri") {
        const double a = c.number();
        if (!c.eat(',')) c.fail("expected ','");
        const double b = c.number();
        if (!c.eat(',')) c.fail("expected ','");
        const double v = c.number();
        if (!c.eat(')')) c.fail("expected ')'");
        return fr_triangular(a, b, v, grid);
    }
    if (name == "crisp") {
        const double r = c.number();
        if (!c.eat(')')) c.fail("expected ')'");
        return fr_crisp(r, grid);
    }

    const FuzzyReal lhs = parse_real_term(c, grid, trace);
    if (!c.eat(',')) c.fail("expected ','");
    const FuzzyReal rhs = parse_real_term(c, grid, trace);
    if (!c.eat(')')) c.fail("expected ')'");

    if (name == "add") return fr_add(lhs, rhs, trace);
    if (name == "sub") return fr_sub(lhs, rhs, trace);
    if (name == "mul") return fr_mul(lhs, rhs, trace);
    if (name == "div") return fr_div(lhs, rhs, trace);
    c.fail("unknown operation \"" + name + "\"");
}

}  // namespace

std::function<double(double)> parse_scalar_map(std::string_view expr) {
    Cursor c(expr);
    auto root = parse_expr(c);
    if (!c.at_end()) c.fail("unexpected trailing input");
    auto shared = std::shared_ptr<ScalarNode>(std::move(root));
    return [shared](double x) { return shared->eval(x); };
}

FuzzyReal parse_fuzzy_real_expr(std::string_view expr, const AlphaGrid& grid,
                                ArithmeticTrace* trace) {
    Cursor c(expr);
    FuzzyReal out = parse_real_term(c, grid, trace);
    if (!c.at_end()) c.fail("unexpected trailing input");
    return out;
}

}  // namespace fskit
