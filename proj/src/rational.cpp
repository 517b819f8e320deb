#include "lpgeom/rational.hpp"

#include "lpgeom/error.hpp"

#include <cctype>

namespace lpg {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::UnknownSymbol: return "unknown symbol";
    case ErrorKind::DivisionByZero: return "division by zero";
    case ErrorKind::ChartMismatch: return "chart mismatch";
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::Precondition: return "precondition failed";
    case ErrorKind::SymmetryViolation: return "symmetry violation";
    case ErrorKind::Degenerate: return "degenerate input";
    case ErrorKind::Io: return "i/o error";
    case ErrorKind::Format: return "format error";
    }
    return "error";
}

std::string to_string(const Rational& q) {
    return q.get_str(10);
}

Rational parse_rational(std::string_view text) {
    std::size_t start = 0;
    while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
    std::size_t end = text.size();
    while (end > start && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::string body(text.substr(start, end - start));
    if (body.empty()) throw ParseError("empty rational literal", 0);

    const auto slash = body.find('/');
    auto check_int = [&](const std::string& s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        if (i == s.size()) throw ParseError("malformed rational literal '" + body + "'", 0);
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw ParseError("malformed rational literal '" + body + "'", i);
    };
    std::string num = body.substr(0, slash);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    check_int(num, true);
    Rational q;
    if (slash == std::string::npos) {
        q = Rational(Integer(num, 10));
    } else {
        const std::string den = body.substr(slash + 1);
        check_int(den, false);
        Integer d(den, 10);
        if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + body + "'");
        q = Rational(Integer(num, 10), d);
        q.canonicalize();
    }
    return q;
}

} // namespace lpg
