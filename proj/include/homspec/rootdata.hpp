#pragma once

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "homspec/rational.hpp"

namespace homspec {

enum class GroupType { A, B, C, D };

// Classical root datum in the lambda-basis (coordinate functionals of the
// standard maximal torus). Carries the trace-form normalization used
// throughout: <l_i, l_j> = delta_ij - 1/(n+1) for type A and delta_ij / 2 for
// types B, C, D.
struct RootData {
    GroupType type;
    int rank;
};

inline bool is_dominant(const RootData& rd, const std::vector<int>& z) {
    if (static_cast<int>(z.size()) != rd.rank) return false;
    for (int i = 0; i + 1 < rd.rank; ++i)
        if (z[i] < z[i + 1]) return false;
    if (rd.rank == 0) return true;
    if (rd.type == GroupType::D) {
        if (rd.rank >= 2 && z[rd.rank - 2] < std::abs(z[rd.rank - 1])) return false;
        return true;
    }
    return z[rd.rank - 1] >= 0;
}

// <lambda, lambda + 2 rho> in the root datum's inner product.
inline Rational casimir_freudenthal(const RootData& rd, const std::vector<int>& z) {
    if (!is_dominant(rd, z)) throw std::domain_error("casimir_freudenthal: non-dominant weight");
    int n = rd.rank;
    Rational f(0);
    switch (rd.type) {
        case GroupType::A: {
            // sum z_k^2 + sum (n+2-2k) z_k - (sum z_k)^2/(n+1)
            Rational sum(0);
            for (int k = 0; k < n; ++k) {
                f += Rational(z[k]) * Rational(z[k]);
                f += Rational(n + 2 - 2 * (k + 1)) * Rational(z[k]);
                sum += Rational(z[k]);
            }
            f -= sum * sum / Rational(n + 1);
            break;
        }
        case GroupType::B:
            for (int k = 0; k < n; ++k)
                f += Rational(z[k]) * Rational(z[k] + 2 * (n - k - 1) + 1) / Rational(2);
            break;
        case GroupType::C:
            for (int k = 0; k < n; ++k)
                f += Rational(z[k]) * Rational(z[k] + 2 * (n - k)) / Rational(2);
            break;
        case GroupType::D:
            for (int k = 0; k < n; ++k)
                f += Rational(z[k]) * Rational(z[k] + 2 * (n - k - 1)) / Rational(2);
            break;
    }
    return f;
}

// su(2) fiber Casimir constants in the two metric normalizations that occur.
inline Rational su2_casimir_a_series(int z) { return Rational(z) * Rational(z + 2) / Rational(2); }
inline Rational su2_casimir_bd_series(int z) { return Rational(z) * Rational(z + 2) / Rational(4); }

// Weyl dimension formula, exact.
inline long long weyl_dimension(const RootData& rd, const std::vector<int>& z) {
    if (!is_dominant(rd, z)) throw std::domain_error("weyl_dimension: non-dominant weight");
    int n = rd.rank;
    Rational dim(1);
    switch (rd.type) {
        case GroupType::A: {
            // epsilon coordinates l_i = z_i + (n+1-i), z_{n+1} = 0
            std::vector<long long> l(n + 1);
            for (int i = 0; i < n; ++i) l[i] = z[i] + (n - i);
            l[n] = 0;
            for (int i = 0; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) dim *= Rational(l[i] - l[j], j - i);
            break;
        }
        case GroupType::B: {
            // l_i doubled to stay integral: 2 l_i = 2 z_i + 2(n-i) + 1
            std::vector<long long> l(n), r(n);
            for (int i = 0; i < n; ++i) {
                l[i] = 2LL * z[i] + 2 * (n - i - 1) + 1;
                r[i] = 2 * (n - i - 1) + 1;
            }
            for (int i = 0; i < n; ++i) dim *= Rational(l[i], r[i]);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    dim *= Rational(l[i] * l[i] - l[j] * l[j], r[i] * r[i] - r[j] * r[j]);
            break;
        }
        case GroupType::C: {
            std::vector<long long> l(n), r(n);
            for (int i = 0; i < n; ++i) {
                l[i] = z[i] + (n - i);
                r[i] = n - i;
            }
            for (int i = 0; i < n; ++i) dim *= Rational(l[i], r[i]);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    dim *= Rational(l[i] * l[i] - l[j] * l[j], r[i] * r[i] - r[j] * r[j]);
            break;
        }
        case GroupType::D: {
            std::vector<long long> l(n), r(n);
            for (int i = 0; i < n; ++i) {
                l[i] = z[i] + (n - i - 1);
                r[i] = n - i - 1;
            }
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    dim *= Rational(l[i] * l[i] - l[j] * l[j], r[i] * r[i] - r[j] * r[j]);
            break;
        }
    }
    if (!dim.is_integer() || dim.sign() <= 0)
        throw std::logic_error("weyl_dimension: non-integral result");
    return dim.to_ll();
}

}  // namespace homspec
