#include "delliptic/rational.hpp"

#include <ostream>

#include "delliptic/errors.hpp"

namespace delliptic {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DivisionByZero();
    v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    v_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero();
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) throw PreconditionError("malformed rational: '" + std::string(text) + "'");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw PreconditionError("malformed rational: '" + std::string(text) + "'");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw PreconditionError("malformed rational: '" + std::string(text) + "'");
        }
        std::string digits(s[0] == '+' ? s.substr(1) : s);
        return Integer(digits, 10);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rational_arith(const Rational& a, const Rational& b, ArithOp op) {
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    }
    throw PreconditionError("unknown arithmetic op");
}

} // namespace delliptic
