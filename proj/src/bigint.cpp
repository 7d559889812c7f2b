#include "skoro/bigint.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace skoro {

namespace {

void shl1(std::vector<std::uint32_t>& v) {
    std::uint32_t carry = 0;
    for (auto& limb : v) {
        const std::uint32_t next = limb >> 31;
        limb = (limb << 1) | carry;
        carry = next;
    }
    if (carry) v.push_back(carry);
}

void mul_add_small(std::vector<std::uint32_t>& v, std::uint32_t mul, std::uint32_t add) {
    std::uint64_t carry = add;
    for (auto& limb : v) {
        const std::uint64_t cur = static_cast<std::uint64_t>(limb) * mul + carry;
        limb = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    while (carry) {
        v.push_back(static_cast<std::uint32_t>(carry));
        carry >>= 32;
    }
}

// divides the magnitude by a small divisor in place, returns the remainder
std::uint32_t divmod_small(std::vector<std::uint32_t>& v, std::uint32_t div) {
    std::uint64_t rem = 0;
    for (std::size_t i = v.size(); i-- > 0;) {
        const std::uint64_t cur = (rem << 32) | v[i];
        v[i] = static_cast<std::uint32_t>(cur / div);
        rem = cur % div;
    }
    while (!v.empty() && v.back() == 0) v.pop_back();
    return static_cast<std::uint32_t>(rem);
}

}  // namespace

BigInt::BigInt(std::int64_t v) {
    negative_ = v < 0;
    std::uint64_t mag =
        negative_ ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    while (mag) {
        limbs_.push_back(static_cast<std::uint32_t>(mag));
        mag >>= 32;
    }
    if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    BigInt out;
    std::size_t pos = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        pos = 1;
    }
    if (pos == s.size()) throw std::invalid_argument("empty integer literal");
    while (pos < s.size()) {
        const std::size_t chunk_len = std::min<std::size_t>(9, s.size() - pos);
        std::uint32_t chunk = 0;
        std::uint32_t scale = 1;
        for (std::size_t i = 0; i < chunk_len; ++i, ++pos) {
            const char c = s[pos];
            if (c < '0' || c > '9') throw std::invalid_argument("invalid integer literal");
            chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
            scale *= 10;
        }
        mul_add_small(out.limbs_, scale, chunk);
    }
    out.negative_ = neg && !out.limbs_.empty();
    return out;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::compare_magnitude(const std::vector<std::uint32_t>& a,
                              const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

void BigInt::add_magnitude(std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t cur = carry + a[i];
        if (i < b.size()) cur += b[i];
        a[i] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    if (carry) a.push_back(static_cast<std::uint32_t>(carry));
}

void BigInt::sub_magnitude(std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b) {
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow;
        if (i < b.size()) cur -= b[i];
        borrow = cur < 0 ? 1 : 0;
        if (cur < 0) cur += std::int64_t{1} << 32;
        a[i] = static_cast<std::uint32_t>(cur);
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.limbs_.empty()) out.negative_ = !out.negative_;
    return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (this == &rhs) {
        const BigInt copy = rhs;
        return *this += copy;
    }
    if (negative_ == rhs.negative_) {
        add_magnitude(limbs_, rhs.limbs_);
    } else {
        const int cmp = compare_magnitude(limbs_, rhs.limbs_);
        if (cmp == 0) {
            limbs_.clear();
            negative_ = false;
        } else if (cmp > 0) {
            sub_magnitude(limbs_, rhs.limbs_);
        } else {
            std::vector<std::uint32_t> mag = rhs.limbs_;
            sub_magnitude(mag, limbs_);
            limbs_ = std::move(mag);
            negative_ = rhs.negative_;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
    if (this == &rhs) {
        limbs_.clear();
        negative_ = false;
        return *this;
    }
    return *this += -rhs;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
    if (is_zero() || rhs.is_zero()) {
        limbs_.clear();
        negative_ = false;
        return *this;
    }
    const std::vector<std::uint32_t>& a = limbs_;
    const std::vector<std::uint32_t>& b = rhs.limbs_;
    std::vector<std::uint32_t> res(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            const std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] +
                                      res[i + j] + carry;
            res[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        res[i + b.size()] += static_cast<std::uint32_t>(carry);
    }
    negative_ = negative_ != rhs.negative_;
    limbs_ = std::move(res);
    trim();
    return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    const bool a_neg = a.negative_;
    const bool quot_neg = a.negative_ != b.negative_;
    if (compare_magnitude(a.limbs_, b.limbs_) < 0) {
        BigInt r = a;  // |a| < |b|: quotient 0, remainder a
        quot = BigInt();
        rem = std::move(r);
        return;
    }
    const std::vector<std::uint32_t> divisor = b.limbs_;
    std::vector<std::uint32_t> q(a.limbs_.size(), 0);
    std::vector<std::uint32_t> r;
    for (std::size_t bit = a.limbs_.size() * 32; bit-- > 0;) {
        shl1(r);
        if ((a.limbs_[bit / 32] >> (bit % 32)) & 1u) {
            if (r.empty()) r.push_back(0);
            r[0] |= 1u;
        }
        if (compare_magnitude(r, divisor) >= 0) {
            sub_magnitude(r, divisor);
            q[bit / 32] |= 1u << (bit % 32);
        }
    }
    quot.limbs_ = std::move(q);
    quot.negative_ = quot_neg;
    quot.trim();
    rem.limbs_ = std::move(r);
    rem.negative_ = a_neg;
    rem.trim();
}

BigInt& BigInt::operator/=(const BigInt& rhs) {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    *this = std::move(q);
    return *this;
}

BigInt& BigInt::operator%=(const BigInt& rhs) {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    *this = std::move(r);
    return *this;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
    if (sign() != rhs.sign()) {
        return sign() < rhs.sign() ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
    }
    int cmp = compare_magnitude(limbs_, rhs.limbs_);
    if (negative_) cmp = -cmp;
    if (cmp < 0) return std::strong_ordering::less;
    if (cmp > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() > 2) return false;
    std::uint64_t mag = 0;
    if (limbs_.size() >= 1) mag = limbs_[0];
    if (limbs_.size() == 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    return negative_ ? mag <= (std::uint64_t{1} << 63) : mag < (std::uint64_t{1} << 63);
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("value does not fit in int64");
    std::uint64_t mag = 0;
    if (limbs_.size() >= 1) mag = limbs_[0];
    if (limbs_.size() == 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (negative_) {
        if (mag == (std::uint64_t{1} << 63)) return std::numeric_limits<std::int64_t>::min();
        return -static_cast<std::int64_t>(mag);
    }
    return static_cast<std::int64_t>(mag);
}

double BigInt::to_double() const {
    double d = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        d = d * 4294967296.0 + static_cast<double>(limbs_[i]);
    }
    return negative_ ? -d : d;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> chunks;  // base 10^9, little-endian
    std::vector<std::uint32_t> mag = limbs_;
    while (!mag.empty()) chunks.push_back(divmod_small(mag, 1000000000u));
    std::string out;
    if (negative_) out.push_back('-');
    out += std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        const std::string part = std::to_string(chunks[i]);
        out.append(9 - part.size(), '0');
        out += part;
    }
    return out;
}

BigInt abs(BigInt v) {
    return v.sign() < 0 ? -v : v;
}

BigInt gcd(BigInt a, BigInt b) {
    a = abs(std::move(a));
    b = abs(std::move(b));
    while (!b.is_zero()) {
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt pow(BigInt base, std::uint64_t exponent) {
    BigInt out{1};
    while (exponent) {
        if (exponent & 1) out *= base;
        base *= base;
        exponent >>= 1;
    }
    return out;
}

}  // namespace skoro
