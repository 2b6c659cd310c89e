#include "slq/rat.hpp"

#include <ostream>
#include <stdexcept>

#include "slq/error.hpp"

namespace slq {

Rat::Rat(long long num, long long den) : Rat(BigInt(num), BigInt(den)) {}

Rat::Rat(BigInt num, BigInt den) {
    if (den == 0) fail(ErrorCode::ParseError, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    value_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) fail(ErrorCode::ParseError, "division by zero");
    value_ /= o.value_;
    return *this;
}

long long Rat::as_integer() const {
    if (!is_integer()) fail(ErrorCode::Internal, "not an integer: " + str());
    return numerator().convert_to<long long>();
}

Rat Rat::operator-() const {
    Rat r;
    r.value_ = -value_;
    return r;
}

Rat Rat::parse(const std::string& text) {
    if (text.empty()) fail(ErrorCode::ParseError, "empty rational");
    if (text.find('.') != std::string::npos)
        fail(ErrorCode::ParseError, "decimal notation rejected, use p/q: '" + text + "'");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den <= 0) fail(ErrorCode::ParseError, "denominator must be positive: '" + text + "'");
        return Rat(std::move(num), std::move(den));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "bad rational: '" + text + "'");
    }
}

std::string Rat::str() const {
    std::string s = numerator().str();
    if (!is_integer()) s += "/" + denominator().str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rat& q) { return os << q.str(); }

EpsLinear::Sign EpsLinear::sign() const {
    if (constant_.is_positive()) return Sign::Positive;
    if (constant_.is_negative()) return Sign::Negative;
    if (eps_coeff_.is_positive()) return Sign::Positive;
    if (eps_coeff_.is_negative()) return Sign::Negative;
    return Sign::Zero;
}

std::string EpsLinear::str() const {
    if (eps_coeff_.is_zero()) return constant_.str();
    std::string eps_part;
    if (eps_coeff_ == Rat(1)) eps_part = "eps";
    else if (eps_coeff_ == Rat(-1)) eps_part = "-eps";
    else eps_part = eps_coeff_.str() + "*eps";
    if (constant_.is_zero()) return eps_part;
    if (eps_coeff_.is_positive())
        return constant_.str() + " + " + (eps_coeff_ == Rat(1) ? "eps" : eps_coeff_.str() + "*eps");
    Rat neg = -eps_coeff_;
    return constant_.str() + " - " + (neg == Rat(1) ? "eps" : neg.str() + "*eps");
}

std::ostream& operator<<(std::ostream& os, const EpsLinear& v) { return os << v.str(); }

}  // namespace slq
