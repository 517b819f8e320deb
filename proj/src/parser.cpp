#include "lpgeom/parser.hpp"

#include "lpgeom/error.hpp"

#include <cctype>

namespace lpg {

namespace {

class Parser {
public:
    Parser(std::string_view src, const ChartPtr& chart) : src_(src), chart_(chart) {}

    DifferentialForm parse() {
        skip_space();
        if (pos_ == src_.size()) throw ParseError("empty expression", pos_);
        DifferentialForm f = expr();
        skip_space();
        if (pos_ != src_.size()) throw ParseError("unexpected '" + std::string(1, src_[pos_]) + "'", pos_);
        return f;
    }

private:
    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool peek(std::string_view tok) {
        skip_space();
        return src_.substr(pos_, tok.size()) == tok;
    }

    bool at_wedge() { return peek("/\\"); }
    bool at_divide() { return peek("/") && !at_wedge(); }

    void expect(char c) {
        skip_space();
        if (pos_ >= src_.size() || src_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    DifferentialForm expr() {
        DifferentialForm f = sum();
        while (at_wedge()) {
            pos_ += 2;
            f = wedge(f, sum());
        }
        return f;
    }

    DifferentialForm sum() {
        DifferentialForm f = term();
        for (;;) {
            if (peek("+")) {
                ++pos_;
                f += term();
            } else if (peek("-")) {
                ++pos_;
                f -= term();
            } else {
                return f;
            }
        }
    }

    DifferentialForm term() {
        DifferentialForm f = unary();
        for (;;) {
            if (peek("*")) {
                const std::size_t at = pos_++;
                DifferentialForm g = unary();
                f = multiply(f, g, at);
            } else if (at_divide()) {
                const std::size_t at = pos_++;
                DifferentialForm g = unary();
                if (g.max_degree() > 0) throw ParseError("cannot divide by a form of positive degree", at);
                const Expression divisor = g.as_function();
                if (divisor.is_zero())
                    throw Error(ErrorKind::DivisionByZero, "at offset " + std::to_string(at) + ": division by zero");
                f *= Expression(1) / divisor;
            } else {
                return f;
            }
        }
    }

    static DifferentialForm multiply(const DifferentialForm& a, const DifferentialForm& b, std::size_t at) {
        if (a.max_degree() == 0) return a.as_function() * b;
        if (b.max_degree() == 0) return b.as_function() * a;
        throw ParseError("'*' between two forms of positive degree; use /\\", at);
    }

    DifferentialForm unary() {
        if (peek("-")) {
            ++pos_;
            return -unary();
        }
        return primary();
    }

    DifferentialForm primary() {
        skip_space();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            Integer value(std::string(src_.substr(start, pos_ - start)));
            return DifferentialForm(Expression::constant(chart_, Rational(value)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            const std::string_view name = src_.substr(start, pos_ - start);
            if (name == "d") {
                expect('(');
                DifferentialForm inner = expr();
                expect(')');
                return exterior_derivative(inner);
            }
            if (!chart_ || !chart_->index_of(name))
                throw Error(ErrorKind::UnknownSymbol, "at offset " + std::to_string(start) + ": unknown symbol '" +
                                                          std::string(name) + "'");
            return DifferentialForm(Expression::symbol(chart_, name));
        }
        if (c == '(') {
            ++pos_;
            DifferentialForm inner = expr();
            expect(')');
            return inner;
        }
        throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
    }

    std::string_view src_;
    const ChartPtr& chart_;
    std::size_t pos_ = 0;
};

} // namespace

DifferentialForm parse_form(std::string_view source, const ChartPtr& chart) {
    DifferentialForm f = Parser(source, chart).parse();
    return DifferentialForm(chart) + f;
}

Expression parse_expression(std::string_view source, const ChartPtr& chart) {
    DifferentialForm f = parse_form(source, chart);
    if (f.max_degree() > 0)
        throw Error(ErrorKind::InvalidArgument, "expected a scalar expression, got a form of degree " +
                                                    std::to_string(f.max_degree()));
    Expression e = f.as_function();
    return chart ? Expression::constant(chart, 0) + e : e;
}

} // namespace lpg
