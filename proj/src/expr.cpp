#include "rearr/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>

#include "rearr/error.hpp"

namespace rearr {

namespace {

struct FuncInfo {
    FuncId id;
    int arity;
};

const std::map<std::string, FuncInfo, std::less<>>& function_table() {
    static const std::map<std::string, FuncInfo, std::less<>> table = {
        {"sin", {FuncId::sin, 1}},   {"cos", {FuncId::cos, 1}},
        {"exp", {FuncId::exp, 1}},   {"log", {FuncId::log, 1}},
        {"abs", {FuncId::abs, 1}},   {"sqrt", {FuncId::sqrt, 1}},
        {"min", {FuncId::min, 2}},   {"max", {FuncId::max, 2}},
        {"floor", {FuncId::floor, 1}}, {"sign", {FuncId::sign, 1}},
    };
    return table;
}

const char* func_name(FuncId id) {
    for (const auto& [name, info] : function_table())
        if (info.id == id) return name.c_str();
    return "?";
}

[[noreturn]] void parse_fail(std::size_t pos, const std::string& what) {
    throw error(errc::parse, "parse error at position " + std::to_string(pos) + ": " + what);
}

class Parser {
  public:
    Parser(std::string_view text, int dimension) : text_(text), dim_(dimension) {
        if (dimension < 1) throw error(errc::config, "expression dimension must be >= 1");
    }

    ExprPtr run() {
        ExprPtr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) parse_fail(pos_, "unexpected trailing input");
        return e;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
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

    ExprPtr parse_sum() {
        ExprPtr lhs = parse_term();
        for (;;) {
            const char c = peek();
            if (c != '+' && c != '-') return lhs;
            ++pos_;
            lhs = make_binary(c, std::move(lhs), parse_term());
        }
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_unary();
        for (;;) {
            const char c = peek();
            if (c != '*' && c != '/') return lhs;
            ++pos_;
            lhs = make_binary(c, std::move(lhs), parse_unary());
        }
    }

    // unary minus binds looser than ^, so "-x1^2" is -(x1^2)
    ExprPtr parse_unary() {
        if (eat('-')) {
            auto node = std::make_unique<ExprNode>();
            node->kind = ExprNode::Kind::unary_minus;
            node->args.push_back(parse_unary());
            return node;
        }
        if (eat('+')) return parse_unary();
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_primary();
        if (peek() == '^') {
            ++pos_;
            return make_binary('^', std::move(base), parse_unary()); // right-assoc, allows x^-2
        }
        return base;
    }

    ExprPtr parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) parse_fail(pos_, "unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr inner = parse_sum();
            if (!eat(')')) parse_fail(pos_, "expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
        parse_fail(pos_, std::string("unexpected character '") + c + "'");
    }

    ExprPtr parse_number() {
        const std::size_t start = pos_;
        const std::string buf(text_.substr(pos_));
        char* end = nullptr;
        const double v = std::strtod(buf.c_str(), &end);
        if (end == buf.c_str()) parse_fail(start, "malformed number");
        pos_ += static_cast<std::size_t>(end - buf.c_str());
        auto node = std::make_unique<ExprNode>();
        node->kind = ExprNode::Kind::number;
        node->number = v;
        return node;
    }

    ExprPtr parse_identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string name(text_.substr(start, pos_ - start));

        if (name.size() >= 2 && name[0] == 'x' && name[1] != '0' &&
            name.find_first_not_of("0123456789", 1) == std::string::npos) {
            const long idx = std::strtol(name.c_str() + 1, nullptr, 10);
            if (idx < 1 || idx > dim_)
                parse_fail(start, "variable " + name + " exceeds dimension " + std::to_string(dim_));
            auto node = std::make_unique<ExprNode>();
            node->kind = ExprNode::Kind::variable;
            node->variable = static_cast<int>(idx - 1);
            return node;
        }

        const auto it = function_table().find(name);
        if (it == function_table().end()) parse_fail(start, "unknown identifier '" + name + "'");

        if (!eat('(')) parse_fail(pos_, "expected '(' after function name");
        auto node = std::make_unique<ExprNode>();
        node->kind = ExprNode::Kind::call;
        node->func = it->second.id;
        node->args.push_back(parse_sum());
        while (eat(',')) node->args.push_back(parse_sum());
        if (!eat(')')) parse_fail(pos_, "expected ')' in function call");
        if (static_cast<int>(node->args.size()) != it->second.arity)
            parse_fail(start, name + " expects " + std::to_string(it->second.arity) +
                                  " argument(s), got " + std::to_string(node->args.size()));
        return node;
    }

    static ExprPtr make_binary(char op, ExprPtr lhs, ExprPtr rhs) {
        auto node = std::make_unique<ExprNode>();
        node->kind = ExprNode::Kind::binary;
        node->op = op;
        node->args.push_back(std::move(lhs));
        node->args.push_back(std::move(rhs));
        return node;
    }

    std::string_view text_;
    int dim_;
    std::size_t pos_ = 0;
};

[[noreturn]] void eval_fail(const std::string& what) { throw error(errc::evaluation, what); }

double check_nan(double v, const char* what) {
    if (std::isnan(v)) eval_fail(std::string("NaN result in ") + what);
    return v;
}

double eval_node(const ExprNode& node, std::span<const double> x) {
    switch (node.kind) {
        case ExprNode::Kind::number:
            return node.number;
        case ExprNode::Kind::variable:
            return x[static_cast<std::size_t>(node.variable)];
        case ExprNode::Kind::unary_minus:
            return -eval_node(*node.args[0], x);
        case ExprNode::Kind::binary: {
            const double lhs = eval_node(*node.args[0], x);
            const double rhs = eval_node(*node.args[1], x);
            switch (node.op) {
                case '+': return check_nan(lhs + rhs, "+");
                case '-': return check_nan(lhs - rhs, "-");
                case '*': return check_nan(lhs * rhs, "*");
                case '/':
                    if (rhs == 0.0) eval_fail("division by zero");
                    return check_nan(lhs / rhs, "/");
                case '^':
                    if (lhs < 0.0 && rhs != std::floor(rhs))
                        eval_fail("negative base with non-integer exponent");
                    if (lhs == 0.0 && rhs < 0.0) eval_fail("zero base with negative exponent");
                    return check_nan(std::pow(lhs, rhs), "^");
            }
            eval_fail("unknown operator");
        }
        case ExprNode::Kind::call: {
            const double a = eval_node(*node.args[0], x);
            switch (node.func) {
                case FuncId::sin: return check_nan(std::sin(a), "sin");
                case FuncId::cos: return check_nan(std::cos(a), "cos");
                case FuncId::exp: return check_nan(std::exp(a), "exp");
                case FuncId::log:
                    if (a <= 0.0) eval_fail("log of non-positive value");
                    return check_nan(std::log(a), "log");
                case FuncId::abs: return std::abs(a);
                case FuncId::sqrt:
                    if (a < 0.0) eval_fail("sqrt of negative value");
                    return std::sqrt(a);
                case FuncId::floor: return std::floor(a);
                case FuncId::sign: return a > 0.0 ? 1.0 : (a < 0.0 ? -1.0 : 0.0);
                case FuncId::min: return check_nan(std::min(a, eval_node(*node.args[1], x)), "min");
                case FuncId::max: return check_nan(std::max(a, eval_node(*node.args[1], x)), "max");
            }
            eval_fail("unknown function");
        }
    }
    eval_fail("malformed expression tree");
}

void print_node(const ExprNode& node, std::string& out) {
    char buf[40];
    switch (node.kind) {
        case ExprNode::Kind::number:
            std::snprintf(buf, sizeof(buf), "%.17g", node.number);
            out += buf;
            return;
        case ExprNode::Kind::variable:
            out += 'x';
            out += std::to_string(node.variable + 1);
            return;
        case ExprNode::Kind::unary_minus:
            out += "(-";
            print_node(*node.args[0], out);
            out += ')';
            return;
        case ExprNode::Kind::binary:
            out += '(';
            print_node(*node.args[0], out);
            out += ' ';
            out += node.op;
            out += ' ';
            print_node(*node.args[1], out);
            out += ')';
            return;
        case ExprNode::Kind::call:
            out += func_name(node.func);
            out += '(';
            for (std::size_t k = 0; k < node.args.size(); ++k) {
                if (k > 0) out += ", ";
                print_node(*node.args[k], out);
            }
            out += ')';
            return;
    }
}

} // namespace

ExpressionAst ExpressionAst::parse(std::string_view text, int dimension) {
    Parser p(text, dimension);
    return ExpressionAst(p.run(), dimension);
}

double ExpressionAst::evaluate(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dimension_)
        throw error(errc::config, "point dimension does not match expression dimension");
    return eval_node(*root_, x);
}

std::string ExpressionAst::print() const {
    std::string out;
    print_node(*root_, out);
    return out;
}

ScalarField ScalarField::expression(std::string_view text, int dimension) {
    ScalarField f(Kind::expr, dimension, std::string(text));
    f.ast_ = std::make_shared<const ExpressionAst>(ExpressionAst::parse(text, dimension));
    return f;
}

ScalarField ScalarField::identity(int dimension) {
    if (dimension < 1) throw error(errc::config, "field dimension must be >= 1");
    return ScalarField(Kind::identity, dimension, "identity");
}

ScalarField ScalarField::constant(double c, int dimension) {
    if (dimension < 1) throw error(errc::config, "field dimension must be >= 1");
    char buf[48];
    std::snprintf(buf, sizeof(buf), "constant:%.17g", c);
    ScalarField f(Kind::constant, dimension, buf);
    f.constant_ = c;
    return f;
}

ScalarField ScalarField::dirichlet_marker(int dimension) {
    if (dimension < 1) throw error(errc::config, "field dimension must be >= 1");
    return ScalarField(Kind::dirichlet, dimension, "dirichlet_marker");
}

double ScalarField::operator()(std::span<const double> x) const {
    switch (kind_) {
        case Kind::expr: return ast_->evaluate(x);
        case Kind::identity: return x[0];
        case Kind::constant: return constant_;
        case Kind::dirichlet: return 1.0;
    }
    throw error(errc::evaluation, "malformed scalar field");
}

} // namespace rearr
