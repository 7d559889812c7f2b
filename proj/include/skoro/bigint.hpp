#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace skoro {

// Arbitrary-precision signed integer: sign plus little-endian base-2^32
// magnitude with no leading zero limbs (zero is the empty magnitude,
// non-negative).
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);  // NOLINT(google-explicit-constructor)

    static BigInt from_string(std::string_view s);

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

    bool fits_int64() const;
    std::int64_t to_int64() const;  // throws std::overflow_error if out of range
    double to_double() const;
    std::string to_string() const;

    BigInt operator-() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);
    BigInt& operator/=(const BigInt& rhs);  // truncates toward zero
    BigInt& operator%=(const BigInt& rhs);  // remainder has the dividend's sign

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
    friend BigInt operator*(BigInt lhs, const BigInt& rhs) { return lhs *= rhs; }
    friend BigInt operator/(BigInt lhs, const BigInt& rhs) { return lhs /= rhs; }
    friend BigInt operator%(BigInt lhs, const BigInt& rhs) { return lhs %= rhs; }

    static void divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem);

    bool operator==(const BigInt&) const = default;
    std::strong_ordering operator<=>(const BigInt& rhs) const;

private:
    static int compare_magnitude(const std::vector<std::uint32_t>& a,
                                 const std::vector<std::uint32_t>& b);
    static void add_magnitude(std::vector<std::uint32_t>& a,
                              const std::vector<std::uint32_t>& b);
    static void sub_magnitude(std::vector<std::uint32_t>& a,
                              const std::vector<std::uint32_t>& b);  // requires a >= b
    void trim();

    bool negative_ = false;
    std::vector<std::uint32_t> limbs_;
};

BigInt abs(BigInt v);
BigInt gcd(BigInt a, BigInt b);
BigInt pow(BigInt base, std::uint64_t exponent);

}  // namespace skoro
