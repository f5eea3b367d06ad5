#include "qbaker/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace qbaker {

namespace mp = boost::multiprecision;

Dyadic::Dyadic(BigInt numerator, std::uint32_t exponent)
    : num_(std::move(numerator)), exp_(exponent) {
    if (num_ < 0) {
        throw std::domain_error("Dyadic: negative numerator");
    }
    canonicalize();
}

void Dyadic::canonicalize() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    const std::uint32_t tz = static_cast<std::uint32_t>(mp::lsb(num_));
    const std::uint32_t shift = tz < exp_ ? tz : exp_;
    if (shift > 0) {
        num_ >>= shift;
        exp_ -= shift;
    }
}

Dyadic Dyadic::operator+(const Dyadic& rhs) const {
    const std::uint32_t e = exp_ > rhs.exp_ ? exp_ : rhs.exp_;
    BigInt n = (num_ << (e - exp_)) + (rhs.num_ << (e - rhs.exp_));
    return Dyadic(std::move(n), e);
}

Dyadic Dyadic::operator-(const Dyadic& rhs) const {
    const std::uint32_t e = exp_ > rhs.exp_ ? exp_ : rhs.exp_;
    BigInt a = num_ << (e - exp_);
    BigInt b = rhs.num_ << (e - rhs.exp_);
    if (a < b) {
        throw std::domain_error("Dyadic: negative difference");
    }
    return Dyadic(a - b, e);
}

Dyadic Dyadic::twice() const {
    if (exp_ > 0) {
        return Dyadic(num_, exp_ - 1);
    }
    return Dyadic(num_ * 2, 0);
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& rhs) const {
    const std::uint32_t e = exp_ > rhs.exp_ ? exp_ : rhs.exp_;
    const BigInt a = num_ << (e - exp_);
    const BigInt b = rhs.num_ << (e - rhs.exp_);
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BigInt Dyadic::floor_scaled(std::uint64_t k) const {
    BigInt scaled = num_ * k;
    return scaled >> exp_;
}

double Dyadic::to_double() const {
    if (num_ == 0) {
        return 0.0;
    }
    const long bits = static_cast<long>(mp::msb(num_)) + 1;
    if (bits <= 53) {
        return std::ldexp(num_.convert_to<double>(), -static_cast<int>(exp_));
    }
    const long drop = bits - 53;
    const BigInt top = num_ >> drop;
    const long e2 = drop - static_cast<long>(exp_);
    return std::ldexp(top.convert_to<double>(), static_cast<int>(e2));
}

std::string Dyadic::to_string() const {
    return num_.str() + "/2^" + std::to_string(exp_);
}

}  // namespace qbaker
