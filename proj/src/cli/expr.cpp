#include "funkineq/cli/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace funkineq::cli {

namespace {

using Fn = std::function<double(double)>;

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Fn run()
    {
        Fn f = expr();
        skip();
        if (i_ != s_.size())
            fail("unexpected '" + s_.substr(i_, 1) + "'");
        return f;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ExprError("expression error at " + std::to_string(i_) + ": " + what);
    }

    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }

    bool eat(const std::string& tok)
    {
        skip();
        if (s_.compare(i_, tok.size(), tok) == 0) {
            i_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!eat(std::string(1, c)))
            fail(std::string("expected '") + c + "'");
    }

    Fn expr()
    {
        Fn a = term();
        for (;;) {
            if (eat("+")) {
                Fn b = term();
                a = [a, b](double t) { return a(t) + b(t); };
            } else if (eat("-")) {
                Fn b = term();
                a = [a, b](double t) { return a(t) - b(t); };
            } else {
                return a;
            }
        }
    }

    Fn term()
    {
        Fn a = unary();
        for (;;) {
            if (eat("*") || eat("\xC2\xB7")) {
                Fn b = unary();
                a = [a, b](double t) { return a(t) * b(t); };
            } else if (eat("/")) {
                Fn b = unary();
                a = [a, b](double t) { return a(t) / b(t); };
            } else {
                return a;
            }
        }
    }

    Fn unary()
    {
        if (eat("-")) {
            Fn a = unary();
            return [a](double t) { return -a(t); };
        }
        return primary();
    }

    Fn call1(double (*g)(double))
    {
        expect('(');
        Fn a = expr();
        expect(')');
        return [a, g](double t) { return g(a(t)); };
    }

    Fn primary()
    {
        skip();
        if (i_ >= s_.size())
            fail("unexpected end of input");
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = s_.c_str() + i_;
            char* end = nullptr;
            double v = std::strtod(begin, &end);
            if (end == begin)
                fail("bad number");
            i_ += static_cast<std::size_t>(end - begin);
            return [v](double) { return v; };
        }
        if (c == '(') {
            ++i_;
            Fn a = expr();
            expect(')');
            return a;
        }
        std::size_t j = i_;
        while (j < s_.size() && std::isalpha(static_cast<unsigned char>(s_[j])))
            ++j;
        std::string name = s_.substr(i_, j - i_);
        if (name.empty())
            fail("unexpected '" + std::string(1, c) + "'");
        i_ = j;
        if (name == "t")
            return [](double t) { return t; };
        if (name == "e")
            return [](double) { return std::exp(1.0); };
        if (name == "pi")
            return [](double) { return std::acos(-1.0); };
        if (name == "log")
            return call1([](double x) { return std::log(x); });
        if (name == "exp")
            return call1([](double x) { return std::exp(x); });
        if (name == "sqrt")
            return call1([](double x) { return std::sqrt(x); });
        if (name == "pow") {
            expect('(');
            Fn a = expr();
            expect(',');
            Fn b = expr();
            expect(')');
            return [a, b](double t) { return std::pow(a(t), b(t)); };
        }
        i_ -= name.size();
        fail("unknown name '" + name + "'");
    }
};

} // namespace

Expr Expr::parse(const std::string& src)
{
    Expr e;
    e.fn_ = Parser(src).run();
    e.src_ = src;
    return e;
}

} // namespace funkineq::cli
