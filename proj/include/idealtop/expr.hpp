#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace idealtop {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// Arithmetic expressions in named variables: numbers, + - * / ^, parentheses,
// unary minus. Used for closed-form sequence bodies (variable n) and
// per-dyadic-block formulas (variables k, r).
class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
public:
    enum class Op { Num, Var, Add, Sub, Mul, Div, Pow, Neg };
    Op op;
    double num = 0;
    std::string var;
    ExprPtr a, b;
};

ExprPtr parse_expr(std::string_view src); // throws ParseError
double eval_expr(const ExprPtr& e, const std::map<std::string, double>& vars);

} // namespace idealtop
