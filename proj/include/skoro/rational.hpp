#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "skoro/bigint.hpp"

namespace skoro {

// Exact rational number in canonical form: den > 0, gcd(|num|, den) = 1,
// zero stored as 0/1. All arithmetic is exact; there is no rounding anywhere.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(std::int64_t v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rat(std::int64_t num, std::int64_t den);
    Rat(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    double to_double() const;
    std::string to_string() const;  // "num/den", or just "num" when den == 1

    Rat operator-() const;
    Rat& operator+=(const Rat& rhs);
    Rat& operator-=(const Rat& rhs);
    Rat& operator*=(const Rat& rhs);
    Rat& operator/=(const Rat& rhs);

    friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
    friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
    friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
    friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

    bool operator==(const Rat&) const = default;
    std::strong_ordering operator<=>(const Rat& rhs) const;

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

}  // namespace skoro
