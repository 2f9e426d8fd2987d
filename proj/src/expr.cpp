#include "tmnlcs/expr.hpp"

#include <cctype>
#include <cmath>
#include <memory>
#include <string>

namespace tmnlcs {

namespace {

struct Node {
    enum class Kind { constant, var_na, var_nb, add, sub, mul, div, neg, powneg1 };
    Kind kind;
    double value = 0.0; // constant
    std::shared_ptr<const Node> lhs, rhs;
};

using NodePtr = std::shared_ptr<const Node>;

NodePtr make_node(Node::Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

double eval_node(const Node& node, long na, long nb) {
    switch (node.kind) {
    case Node::Kind::constant: return node.value;
    case Node::Kind::var_na: return static_cast<double>(na);
    case Node::Kind::var_nb: return static_cast<double>(nb);
    case Node::Kind::add: return eval_node(*node.lhs, na, nb) + eval_node(*node.rhs, na, nb);
    case Node::Kind::sub: return eval_node(*node.lhs, na, nb) - eval_node(*node.rhs, na, nb);
    case Node::Kind::mul: return eval_node(*node.lhs, na, nb) * eval_node(*node.rhs, na, nb);
    case Node::Kind::div: {
        const double denom = eval_node(*node.rhs, na, nb);
        if (denom == 0.0) throw FunctionDomainError("expression division by zero", na, nb);
        return eval_node(*node.lhs, na, nb) / denom;
    }
    case Node::Kind::neg: return -eval_node(*node.lhs, na, nb);
    case Node::Kind::powneg1: {
        const double x = eval_node(*node.lhs, na, nb);
        const double r = std::nearbyint(x);
        if (std::abs(x - r) > 1e-9)
            throw FunctionDomainError("powneg1 of non-integer argument", na, nb);
        return std::fmod(std::abs(r), 2.0) < 0.5 ? 1.0 : -1.0;
    }
    }
    throw Error("invalid expression node");
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    NodePtr parse() {
        NodePtr e = parse_expr();
        skip_ws();
        if (pos_ != src_.size())
            fail("unexpected trailing characters");
        return e;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ExprParseError(msg + " at position " + std::to_string(pos_) + " in '" +
                             std::string(src_) + "'");
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        while (true) {
            if (consume('+'))
                lhs = make_node(Node::Kind::add, lhs, parse_term());
            else if (consume('-'))
                lhs = make_node(Node::Kind::sub, lhs, parse_term());
            else
                return lhs;
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_factor();
        while (true) {
            if (consume('*'))
                lhs = make_node(Node::Kind::mul, lhs, parse_factor());
            else if (consume('/'))
                lhs = make_node(Node::Kind::div, lhs, parse_factor());
            else
                return lhs;
        }
    }

    NodePtr parse_factor() {
        if (consume('-')) return make_node(Node::Kind::neg, parse_factor());
        return parse_primary();
    }

    NodePtr parse_primary() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of expression");
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = 0;
            while (pos_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                v = v * 10 + (src_[pos_] - '0');
                ++pos_;
            }
            auto node = std::make_shared<Node>();
            node->kind = Node::Kind::constant;
            node->value = static_cast<double>(v);
            return node;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   std::isalnum(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            const std::string_view word = src_.substr(start, pos_ - start);
            if (word == "na") return make_node(Node::Kind::var_na);
            if (word == "nb") return make_node(Node::Kind::var_nb);
            if (word == "powneg1") {
                if (!consume('(')) fail("expected '(' after powneg1");
                NodePtr arg = parse_expr();
                if (!consume(')')) fail("expected ')'");
                return make_node(Node::Kind::powneg1, arg);
            }
            pos_ = start;
            fail("unknown identifier '" + std::string(word) + "'");
        }
        if (consume('(')) {
            NodePtr e = parse_expr();
            if (!consume(')')) fail("expected ')'");
            return e;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

NonlinearFunction parse_nonlinear_function(std::string_view source) {
    Parser parser(source);
    NodePtr root = parser.parse();
    std::string label(source);
    return NonlinearFunction(
        std::move(label),
        [root](long na, long nb) {
            return std::complex<double>(eval_node(*root, na, nb), 0.0);
        });
}

} // namespace tmnlcs
