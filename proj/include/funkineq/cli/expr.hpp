#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

namespace funkineq::cli {

struct ExprError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// H(t) expressions for the falsifier. Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | primary
//   primary := number | t | e | pi | log(expr) | exp(expr) | sqrt(expr)
//            | pow(expr, expr) | '(' expr ')'
// The middle dot is accepted for '*'.
class Expr {
public:
    static Expr parse(const std::string& src);
    double operator()(double t) const { return fn_(t); }
    const std::string& source() const { return src_; }

private:
    std::function<double(double)> fn_;
    std::string src_;
};

} // namespace funkineq::cli
