#include "skoro/rational.hpp"

#include <stdexcept>
#include <utility>

namespace skoro {

Rat::Rat(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    normalize();
}

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Rat::normalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (den_.sign() < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    if (num_.is_zero()) {
        den_ = BigInt{1};
        return;
    }
    const BigInt g = gcd(num_, den_);
    num_ /= g;
    den_ /= g;
}

double Rat::to_double() const {
    return num_.to_double() / den_.to_double();
}

std::string Rat::to_string() const {
    if (den_ == BigInt{1}) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Rat Rat::operator-() const {
    Rat out = *this;
    out.num_ = -out.num_;
    return out;
}

Rat& Rat::operator+=(const Rat& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rat& Rat::operator-=(const Rat& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rat& Rat::operator*=(const Rat& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    if (this == &rhs) {
        const Rat copy = rhs;
        return *this /= copy;
    }
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::strong_ordering Rat::operator<=>(const Rat& rhs) const {
    return num_ * rhs.den_ <=> rhs.num_ * den_;
}

}  // namespace skoro
