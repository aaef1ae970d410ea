#include "idealtop/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace idealtop {

namespace {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    ExprPtr parse() {
        auto e = sum();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    ExprPtr sum() {
        auto e = product();
        for (;;) {
            skip_ws();
            if (accept('+')) e = node(Expr::Op::Add, e, product());
            else if (accept('-')) e = node(Expr::Op::Sub, e, product());
            else return e;
        }
    }

    ExprPtr product() {
        auto e = power();
        for (;;) {
            skip_ws();
            if (accept('*')) e = node(Expr::Op::Mul, e, power());
            else if (accept('/')) e = node(Expr::Op::Div, e, power());
            else return e;
        }
    }

    ExprPtr power() { // right associative
        auto e = unary();
        skip_ws();
        if (accept('^')) return node(Expr::Op::Pow, e, power());
        return e;
    }

    ExprPtr unary() {
        skip_ws();
        if (accept('-')) {
            auto n = std::make_shared<Expr>();
            n->op = Expr::Op::Neg;
            n->a = unary();
            return n;
        }
        return atom();
    }

    ExprPtr atom() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of expression", pos_);
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            auto e = sum();
            skip_ws();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
                ++pos_;
            auto n = std::make_shared<Expr>();
            n->op = Expr::Op::Num;
            n->num = std::strtod(std::string(src_.substr(start, pos_ - start)).c_str(), nullptr);
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            auto n = std::make_shared<Expr>();
            n->op = Expr::Op::Var;
            n->var = std::string(src_.substr(start, pos_ - start));
            return n;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    static ExprPtr node(Expr::Op op, ExprPtr a, ExprPtr b) {
        auto n = std::make_shared<Expr>();
        n->op = op;
        n->a = std::move(a);
        n->b = std::move(b);
        return n;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < src_.size() && src_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

} // namespace

ExprPtr parse_expr(std::string_view src) { return Parser(src).parse(); }

double eval_expr(const ExprPtr& e, const std::map<std::string, double>& vars) {
    switch (e->op) {
        case Expr::Op::Num: return e->num;
        case Expr::Op::Var: {
            auto it = vars.find(e->var);
            if (it == vars.end())
                throw std::invalid_argument("unknown variable '" + e->var + "' in expression");
            return it->second;
        }
        case Expr::Op::Add: return eval_expr(e->a, vars) + eval_expr(e->b, vars);
        case Expr::Op::Sub: return eval_expr(e->a, vars) - eval_expr(e->b, vars);
        case Expr::Op::Mul: return eval_expr(e->a, vars) * eval_expr(e->b, vars);
        case Expr::Op::Div: return eval_expr(e->a, vars) / eval_expr(e->b, vars);
        case Expr::Op::Pow: return std::pow(eval_expr(e->a, vars), eval_expr(e->b, vars));
        case Expr::Op::Neg: return -eval_expr(e->a, vars);
    }
    return 0;
}

} // namespace idealtop
