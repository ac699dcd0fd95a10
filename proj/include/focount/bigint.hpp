#ifndef FOCOUNT_BIGINT_HPP
#define FOCOUNT_BIGINT_HPP

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace focount {

// Signed arbitrary-precision integer, sign + little-endian base-2^32 magnitude.
// Supports exactly what counting needs: +, -, *, comparison, parse, print.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long m = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
        mag_.push_back(static_cast<uint32_t>(m & 0xffffffffu));
        if (m >> 32) mag_.push_back(static_cast<uint32_t>(m >> 32));
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt parse(const std::string& s) {
        size_t i = 0;
        int sign = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -1;
            ++i;
        }
        if (i >= s.size()) throw std::invalid_argument("empty integer literal");
        BigInt r;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("bad digit in integer literal: " + s);
            r.mul_small(10);
            r.add_small(static_cast<uint32_t>(s[i] - '0'));
        }
        if (!r.mag_.empty()) r.sign_ = sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int signum() const { return sign_; }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const { return sign_ < 0 ? -*this : *this; }

    BigInt operator+(const BigInt& o) const {
        if (sign_ == 0) return o;
        if (o.sign_ == 0) return *this;
        BigInt r;
        if (sign_ == o.sign_) {
            r.mag_ = add_mag(mag_, o.mag_);
            r.sign_ = sign_;
        } else {
            int c = cmp_mag(mag_, o.mag_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.mag_ = sub_mag(mag_, o.mag_);
                r.sign_ = sign_;
            } else {
                r.mag_ = sub_mag(o.mag_, mag_);
                r.sign_ = o.sign_;
            }
        }
        return r;
    }
    BigInt operator-(const BigInt& o) const { return *this + (-o); }

    BigInt operator*(const BigInt& o) const {
        if (sign_ == 0 || o.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_.assign(mag_.size() + o.mag_.size(), 0);
        for (size_t i = 0; i < mag_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < o.mag_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(mag_[i]) * o.mag_[j] +
                               r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            size_t pos = i + o.mag_.size();
            while (carry) {
                uint64_t cur = r.mag_[pos] + carry;
                r.mag_[pos] = static_cast<uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
                ++pos;
            }
        }
        r.trim();
        r.sign_ = sign_ * o.sign_;
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    int compare(const BigInt& o) const {
        if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
        int c = cmp_mag(mag_, o.mag_);
        return sign_ >= 0 ? c : -c;
    }
    bool operator==(const BigInt& o) const { return compare(o) == 0; }
    bool operator!=(const BigInt& o) const { return compare(o) != 0; }
    bool operator<(const BigInt& o) const { return compare(o) < 0; }
    bool operator<=(const BigInt& o) const { return compare(o) <= 0; }
    bool operator>(const BigInt& o) const { return compare(o) > 0; }
    bool operator>=(const BigInt& o) const { return compare(o) >= 0; }

    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        unsigned long long m = magnitude_u64();
        if (sign_ >= 0) return m <= 0x7fffffffffffffffull;
        return m <= 0x8000000000000000ull;
    }
    long long to_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt does not fit in int64");
        unsigned long long m = magnitude_u64();
        return sign_ < 0 ? -static_cast<long long>(m - 1) - 1
                         : static_cast<long long>(m);
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<uint32_t> tmp = mag_;
        std::string digits;
        while (!tmp.empty()) {
            uint64_t rem = 0;
            for (size_t i = tmp.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | tmp[i];
                tmp[i] = static_cast<uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
            std::string chunk = std::to_string(rem);
            if (!tmp.empty()) chunk = std::string(9 - chunk.size(), '0') + chunk;
            digits = chunk + digits;
        }
        return (sign_ < 0 ? "-" : "") + digits;
    }

    static BigInt pow(const BigInt& base, unsigned e) {
        BigInt r(1), b = base;
        while (e) {
            if (e & 1u) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;

    unsigned long long magnitude_u64() const {
        unsigned long long m = 0;
        if (mag_.size() > 1) m = static_cast<unsigned long long>(mag_[1]) << 32;
        if (!mag_.empty()) m |= mag_[0];
        return m;
    }

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }
    void mul_small(uint32_t f) {
        uint64_t carry = 0;
        for (auto& limb : mag_) {
            uint64_t cur = static_cast<uint64_t>(limb) * f + carry;
            limb = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
        trim();
    }
    void add_small(uint32_t a) {
        if (a == 0) return;
        if (sign_ == 0) sign_ = 1;
        uint64_t carry = a;
        for (auto& limb : mag_) {
            uint64_t cur = static_cast<uint64_t>(limb) + carry;
            limb = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            if (!carry) break;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
        if (mag_.empty()) mag_.push_back(a);
    }
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r[i] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - borrow -
                          (i < b.size() ? b[i] : 0);
            if (cur < 0) {
                cur += (1LL << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

inline BigInt max(const BigInt& a, const BigInt& b) { return a < b ? b : a; }
inline BigInt min(const BigInt& a, const BigInt& b) { return a < b ? a : b; }

}  // namespace focount

#endif
