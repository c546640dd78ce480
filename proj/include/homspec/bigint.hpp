#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace homspec {

// Arbitrary-precision signed integer, sign-magnitude, base 1e9 limbs.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long m = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
        while (m > 0) {
            d_.push_back(static_cast<std::uint32_t>(m % kBase));
            m /= kBase;
        }
    }

    static BigInt from_string(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("BigInt: empty string");
        std::size_t i = 0;
        int sign = 1;
        if (s[0] == '+' || s[0] == '-') {
            sign = s[0] == '-' ? -1 : 1;
            i = 1;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: sign only");
        BigInt r;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            r = r.mul_small(10);
            r = add_mag(r, BigInt(s[i] - '0'));
        }
        if (!r.d_.empty()) r.sign_ = sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }
    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        if (a.sign_ == b.sign_) {
            BigInt r = add_mag(a, b);
            r.sign_ = a.sign_;
            return r;
        }
        int c = cmp_mag(a, b);
        if (c == 0) return BigInt();
        BigInt r = c > 0 ? sub_mag(a, b) : sub_mag(b, a);
        r.sign_ = c > 0 ? a.sign_ : b.sign_;
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.d_.assign(a.d_.size() + b.d_.size(), 0);
        for (std::size_t i = 0; i < a.d_.size(); ++i) {
            unsigned long long carry = 0;
            for (std::size_t j = 0; j < b.d_.size() || carry; ++j) {
                unsigned long long cur = r.d_[i + j] + carry;
                if (j < b.d_.size())
                    cur += static_cast<unsigned long long>(a.d_[i]) * b.d_[j];
                r.d_[i + j] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Truncated division (quotient rounds toward zero).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        if (cmp_mag(a, b) < 0) {
            q = BigInt();
            r = a;
            return;
        }
        BigInt rem;
        BigInt quot;
        quot.d_.assign(a.d_.size(), 0);
        BigInt bm = b.abs();
        for (std::size_t ii = a.d_.size(); ii-- > 0;) {
            rem = rem.shift_limb();
            rem = add_mag(rem, BigInt(static_cast<long long>(a.d_[ii])));
            // binary search the quotient limb
            std::uint32_t lo = 0, hi = kBase - 1, best = 0;
            while (lo <= hi) {
                std::uint32_t mid = lo + (hi - lo) / 2;
                if (cmp_mag(bm.mul_small(mid), rem) <= 0) {
                    best = mid;
                    lo = mid + 1;
                } else {
                    if (mid == 0) break;
                    hi = mid - 1;
                }
            }
            quot.d_[ii] = best;
            rem = sub_mag(rem, bm.mul_small(best));
        }
        quot.trim();
        rem.trim();
        quot.sign_ = quot.d_.empty() ? 0 : a.sign_ * b.sign_;
        rem.sign_ = rem.d_.empty() ? 0 : a.sign_;
        q = quot;
        r = rem;
    }
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.d_ == b.d_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a, b);
        return a.sign_ >= 0 ? c : -c;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs();
        b = b.abs();
        while (!b.is_zero()) {
            BigInt t = a % b;
            a = b;
            b = t;
        }
        return a.is_zero() ? BigInt(1) : a;
    }

    static BigInt pow10(unsigned k) {
        BigInt r(1);
        BigInt ten(10);
        for (unsigned i = 0; i < k; ++i) r = r * ten;
        return r;
    }

    // floor(sqrt(n)) for n >= 0.
    static BigInt isqrt(const BigInt& n) {
        if (n.sign_ < 0) throw std::domain_error("BigInt: isqrt of negative");
        if (n.is_zero()) return BigInt();
        std::size_t digits = n.to_string().size();
        BigInt x = pow10(static_cast<unsigned>(digits / 2 + 1));
        while (true) {
            BigInt y = (x + n / x) / BigInt(2);
            if (cmp(y, x) >= 0) break;
            x = y;
        }
        while (x * x > n) x = x - BigInt(1);
        return x;
    }

    bool fits_ll() const {
        static const BigInt lim(9000000000000000000LL);
        return cmp_mag(*this, lim) <= 0;
    }
    long long to_ll() const {
        if (!fits_ll()) throw std::overflow_error("BigInt: does not fit in long long");
        long long v = 0;
        for (std::size_t i = d_.size(); i-- > 0;) v = v * kBase + d_[i];
        return sign_ < 0 ? -v : v;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::string s = sign_ < 0 ? "-" : "";
        s += std::to_string(d_.back());
        for (std::size_t i = d_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(d_[i]);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }

private:
    static constexpr std::uint32_t kBase = 1000000000u;
    int sign_ = 0;
    std::vector<std::uint32_t> d_;  // little-endian limbs

    void trim() {
        while (!d_.empty() && d_.back() == 0) d_.pop_back();
        if (d_.empty()) sign_ = 0;
    }
    BigInt shift_limb() const {  // *this * kBase
        if (sign_ == 0) return BigInt();
        BigInt r = *this;
        r.d_.insert(r.d_.begin(), 0);
        return r;
    }
    BigInt mul_small(std::uint32_t m) const {
        if (sign_ == 0 || m == 0) return BigInt();
        BigInt r;
        r.sign_ = sign_;
        unsigned long long carry = 0;
        for (std::uint32_t limb : d_) {
            unsigned long long cur = static_cast<unsigned long long>(limb) * m + carry;
            r.d_.push_back(static_cast<std::uint32_t>(cur % kBase));
            carry = cur / kBase;
        }
        while (carry) {
            r.d_.push_back(static_cast<std::uint32_t>(carry % kBase));
            carry /= kBase;
        }
        r.trim();
        return r;
    }
    static int cmp_mag(const BigInt& a, const BigInt& b) {
        if (a.d_.size() != b.d_.size()) return a.d_.size() < b.d_.size() ? -1 : 1;
        for (std::size_t i = a.d_.size(); i-- > 0;)
            if (a.d_[i] != b.d_[i]) return a.d_[i] < b.d_[i] ? -1 : 1;
        return 0;
    }
    static BigInt add_mag(const BigInt& a, const BigInt& b) {
        BigInt r;
        r.sign_ = 1;
        const auto& x = a.d_;
        const auto& y = b.d_;
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < std::max(x.size(), y.size()) || carry; ++i) {
            std::uint64_t cur = carry;
            if (i < x.size()) cur += x[i];
            if (i < y.size()) cur += y[i];
            r.d_.push_back(static_cast<std::uint32_t>(cur % kBase));
            carry = static_cast<std::uint32_t>(cur / kBase);
        }
        r.trim();
        return r;
    }
    // requires |a| >= |b|
    static BigInt sub_mag(const BigInt& a, const BigInt& b) {
        BigInt r;
        r.sign_ = 1;
        r.d_ = a.d_;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.d_.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r.d_[i]) - borrow -
                               (i < b.d_.size() ? b.d_[i] : 0);
            borrow = 0;
            if (cur < 0) {
                cur += kBase;
                borrow = 1;
            }
            r.d_[i] = static_cast<std::uint32_t>(cur);
        }
        r.trim();
        return r;
    }
};

}  // namespace homspec
