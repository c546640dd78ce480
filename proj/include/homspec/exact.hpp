#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "homspec/rational.hpp"

namespace homspec {

// Element of a real quadratic field: a + b*sqrt(d), d square-free >= 0.
// d == 0 (with b == 0) is the canonical form of a plain rational, so a single
// value type covers both Rational and QuadExt quantities.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(Rational a) : a_(std::move(a)), b_(0), d_(0) {}
    QuadExt(long long a) : a_(a), b_(0), d_(0) {}
    QuadExt(Rational a, Rational b, long long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (d_ < 0) throw std::domain_error("QuadExt: negative radicand");
        normalize();
    }

    // sqrt(r) for r >= 0 rational, as an exact quadratic number.
    static QuadExt sqrt_of(const Rational& r) {
        if (r.sign() < 0) throw std::domain_error("QuadExt: sqrt of negative");
        if (r.is_zero()) return QuadExt(0);
        // sqrt(p/q) = sqrt(p*q)/q
        BigInt pq = r.num() * r.den();
        BigInt sq(1);
        long long free_part = split_squarefree(pq, sq);
        Rational b(sq, r.den());
        if (free_part == 1) return QuadExt(b);
        return QuadExt(Rational(0), b, free_part);
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long long d() const { return d_; }
    bool is_rational() const { return d_ == 0; }
    const Rational& rational() const {
        if (!is_rational()) throw std::domain_error("QuadExt: not rational");
        return a_;
    }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    int sign() const {
        if (b_.is_zero()) return a_.sign();
        if (a_.is_zero()) return b_.sign();
        if (a_.sign() == b_.sign()) return a_.sign();
        // opposite signs: compare a^2 against b^2 d
        int c = Rational::cmp(a_ * a_, b_ * b_ * Rational(d_));
        if (c == 0) return 0;
        return c > 0 ? a_.sign() : b_.sign();
    }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        long long d = merge_d(x, y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        long long d = merge_d(x, y);
        return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        long long d = merge_d(x, y);
        return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        if (y.is_zero()) throw std::domain_error("QuadExt: division by zero");
        long long d = merge_d(x, y);
        Rational nrm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(d);
        // conjugate trick; nrm != 0 since sqrt(d) is irrational for square-free d > 1
        QuadExt conj(y.a_, -y.b_, d);
        QuadExt num = x * conj;
        return QuadExt(num.a_ / nrm, num.b_ / nrm, d);
    }
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    // Comparison inside one field (or with rationals).
    static int cmp(const QuadExt& x, const QuadExt& y) { return (x - y).sign(); }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
    friend bool operator<(const QuadExt& x, const QuadExt& y) { return cmp(x, y) < 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return cmp(x, y) > 0; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return cmp(x, y) <= 0; }
    friend bool operator>=(const QuadExt& x, const QuadExt& y) { return cmp(x, y) >= 0; }

    // Exact sign of (x - y) across two different quadratic fields.
    static int cmp_cross(const QuadExt& x, const QuadExt& y) {
        if (x.d_ == y.d_ || x.is_rational() || y.is_rational()) {
            long long d = std::max(x.d_, y.d_);
            return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d).sign();
        }
        // sign(r + b1*sqrt(p) - b2*sqrt(q))
        Rational r = x.a_ - y.a_;
        const Rational& b1 = x.b_;
        Rational b2 = y.b_;
        // t = b1*sqrt(p) - b2*sqrt(q): compare b1^2 p vs b2^2 q when signs agree
        int st;
        int s1 = b1.sign(), s2 = b2.sign();
        if (s1 == 0)
            st = -s2;
        else if (s2 == 0)
            st = s1;
        else if (s1 != s2)
            st = s1;
        else {
            int c = Rational::cmp(b1 * b1 * Rational(x.d_), b2 * b2 * Rational(y.d_));
            st = c == 0 ? 0 : (c > 0 ? s1 : -s2);
        }
        int sr = r.sign();
        if (sr == 0) return st;
        if (st == 0) return sr;
        if (sr == st) return sr;
        // opposite: compare r^2 vs t^2 = b1^2 p + b2^2 q - 2 b1 b2 sqrt(pq)
        Rational u_rat = r * r - b1 * b1 * Rational(x.d_) - b2 * b2 * Rational(y.d_);
        Rational u_coef = b1 * b2 * Rational(2);
        // sign of u = u_rat + u_coef*sqrt(pq); pq need not be square-free here
        int su;
        if (u_coef.is_zero())
            su = u_rat.sign();
        else if (u_rat.is_zero())
            su = u_coef.sign();
        else if (u_rat.sign() == u_coef.sign())
            su = u_rat.sign();
        else {
            int c = Rational::cmp(u_rat * u_rat,
                                  u_coef * u_coef * Rational(x.d_) * Rational(y.d_));
            su = c == 0 ? 0 : (c > 0 ? u_rat.sign() : u_coef.sign());
        }
        if (su == 0) return 0;  // |r| == |t| with opposite signs
        return su > 0 ? sr : st;
    }

    std::string to_string() const {
        if (is_rational()) return a_.to_string();
        std::string s = "(" + a_.to_string();
        s += b_.sign() < 0 ? " - " : " + ";
        s += b_.abs().to_string() + "*sqrt(" + std::to_string(d_) + "))";
        return s;
    }

    // Exact floor(value * 10^digits).
    BigInt scaled_floor(unsigned digits) const {
        BigInt scale = BigInt::pow10(digits);
        // value*scale = (A + sgn(b)*sqrt(T)) / D over a common denominator
        BigInt D = a_.den() * b_.den();
        BigInt A = a_.num() * scale * b_.den();
        if (b_.is_zero()) return floor_div(A, D);
        BigInt T = b_.num() * b_.num() * BigInt(d_) * scale * scale * a_.den() * a_.den();
        BigInt R = BigInt::isqrt(T);
        bool exact_root = R * R == T;
        if (b_.sign() > 0) return floor_div(A + R, D);
        BigInt f = floor_div(A - R, D);
        if (!exact_root && (f * D == A - R)) f = f - BigInt(1);
        return f;
    }

    double to_double() const {
        // display only; the computation path never consumes this
        BigInt s = scaled_floor(18);
        return std::stod(s.to_string()) / 1e18;
    }

private:
    Rational a_, b_;
    long long d_;

    static BigInt floor_div(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        if (!r.is_zero() && (r.sign() < 0) != (b.sign() < 0)) q = q - BigInt(1);
        return q;
    }

    void normalize() {
        if (b_.is_zero()) {
            d_ = 0;
            return;
        }
        if (d_ == 0) throw std::domain_error("QuadExt: irrational part with zero radicand");
        if (d_ == 1) {
            a_ += b_;
            b_ = Rational(0);
            d_ = 0;
            return;
        }
        BigInt sq(1);
        BigInt dd(d_);
        long long f = split_squarefree(dd, sq);
        if (f != d_) {
            b_ *= Rational(sq, BigInt(1));
            d_ = f;
            if (d_ == 1) {
                a_ += b_;
                b_ = Rational(0);
                d_ = 0;
            }
        }
    }

    static long long merge_d(const QuadExt& x, const QuadExt& y) {
        if (x.d_ == 0) return y.d_;
        if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
        throw std::domain_error("QuadExt: incompatible radicands " + std::to_string(x.d_) +
                                " and " + std::to_string(y.d_));
    }

    // n = f * s^2 with f square-free; returns f, stores s.
    static long long split_squarefree(const BigInt& n, BigInt& s) {
        if (!n.fits_ll())
            throw std::overflow_error("QuadExt: radicand too large for square-free split");
        long long v = n.to_ll();
        long long sq = 1, f = 1;
        for (long long p = 2; p * p <= v; ++p) {
            if (v % p) continue;
            int e = 0;
            while (v % p == 0) {
                v /= p;
                ++e;
            }
            for (int i = 0; i < e / 2; ++i) sq *= p;
            if (e % 2) f *= p;
        }
        f *= v;
        s = BigInt(sq);
        return f;
    }
};

}  // namespace homspec
