#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <vector>

#include "homspec/family.hpp"
#include "homspec/rootdata.hpp"

namespace homspec {

// One spectral contributor: an admissible (base weight, fiber weights) tuple
// together with its branching multiplicity and, where meaningful, the coupling
// integer k.
struct SphericalRep {
    std::vector<int> base;   // base-group highest weight, full rank
    std::vector<int> fiber;  // one entry per fiber factor
    long long branch_mult = 1;
    int k = 0;

    bool is_trivial() const {
        for (int v : base)
            if (v) return false;
        for (int v : fiber)
            if (v) return false;
        return true;
    }

    friend bool operator<(const SphericalRep& a, const SphericalRep& b) {
        if (a.base != b.base) return a.base < b.base;
        return a.fiber < b.fiber;
    }
    friend bool operator==(const SphericalRep& a, const SphericalRep& b) {
        return a.base == b.base && a.fiber == b.fiber;
    }
};

// ---- Family-normalized Casimir constants ------------------------------------
//
// c_base is the Casimir of the base representation in the normalization in
// which the eigenvalue reads eta = (c_base - sum c_fiber)/t0 + sum c_fiber/t_i.
// The per-family factor relative to the raw Freudenthal value <l, l+2rho>:
// Sasaki A and C scale by 2, Sasaki B/D by 4, the Stiefel families by 1.

inline Rational casimir_base(const FamilyId& id, const std::vector<int>& base) {
    Rational raw = casimir_freudenthal(id.base_root_data(), base);
    switch (id.family) {
        case Family::SasakiA:
        case Family::SasakiCSphere:
        case Family::SasakiCProjective: return Rational(2) * raw;
        case Family::SasakiBD: return Rational(4) * raw;
        case Family::StiefelReal:
        case Family::StiefelComplex: return raw;
    }
    throw std::logic_error("casimir_base: unreachable");
}

inline std::vector<Rational> casimir_fibers(const FamilyId& id, const std::vector<int>& fiber) {
    switch (id.family) {
        case Family::SasakiA:
        case Family::SasakiBD:
        case Family::SasakiCSphere:
        case Family::SasakiCProjective:
            return {Rational(fiber.at(0)) * Rational(fiber.at(0) + 2)};
        case Family::StiefelReal:
            return {Rational(fiber.at(0)) * Rational(fiber.at(0)) / Rational(2)};
        case Family::StiefelComplex: {
            int n = id.rank;
            Rational c_su2 = Rational(fiber.at(0)) * Rational(fiber.at(0) + 2) / Rational(2);
            Rational c_u1 = Rational(n + 1, 2LL * (n - 1)) * Rational(fiber.at(1)) *
                            Rational(fiber.at(1));
            return {c_su2, c_u1};
        }
    }
    throw std::logic_error("casimir_fibers: unreachable");
}

// ---- Admissibility predicates ----------------------------------------------

// Type A_n, SU(n+1)/S(U(n-1) x U(1)): case split on n = 2 / n = 3 / n >= 4.
inline std::optional<SphericalRep> is_spherical_a(int n, const std::vector<int>& base,
                                                  int z_fiber) {
    if (n < 2) throw std::domain_error("is_spherical_a: n must be >= 2");
    RootData rd{GroupType::A, n};
    if (!is_dominant(rd, base)) throw std::domain_error("is_spherical_a: non-dominant weight");
    if (z_fiber < 0) return std::nullopt;
    if (z_fiber % 2) return std::nullopt;
    if (n == 2) {
        int z1 = base[0], z2 = base[1];
        if ((z1 + z2) % 3) return std::nullopt;
        int lhs = 2 * std::abs(z1 - 2 * z2);
        int rhs = 2 * std::min(2 * z1 - z2, z1 + z2);
        if (!(lhs <= 3 * z_fiber && 3 * z_fiber <= rhs)) return std::nullopt;
        return SphericalRep{base, {z_fiber}, 1, (z1 + z2) / 3};
    }
    int z1 = base[0], z2 = base[1], zn = base[n - 1];
    int s = z1 + z2 + zn;
    if (s % 4) return std::nullopt;
    int k = s / 4;
    for (int i = 2; i < n - 1; ++i)
        if (base[i] != k) return std::nullopt;
    if (n == 3 && !(zn <= k && k <= z2)) return std::nullopt;
    if (!(std::abs(z1 - z2 - zn) <= z_fiber && z_fiber <= z1 - z2 + zn)) return std::nullopt;
    return SphericalRep{base, {z_fiber}, 1, k};
}

// Type B/D, SO(m)/(SO(m-4) x Sp(1)): multiplicity formula (*).
inline std::optional<SphericalRep> is_spherical_bd(int m, const std::vector<int>& base,
                                                   int z_fiber) {
    if (m < 5) throw std::domain_error("is_spherical_bd: m must be >= 5");
    RootData rd{m % 2 ? GroupType::B : GroupType::D, m / 2};
    if (!is_dominant(rd, base)) throw std::domain_error("is_spherical_bd: non-dominant weight");
    if (z_fiber < 0 || z_fiber % 2) return std::nullopt;
    for (std::size_t i = 2; i < base.size(); ++i)
        if (base[i] != 0) return std::nullopt;
    int z1 = base[0], z2 = base[1], f = z_fiber / 2;
    if (m == 5) {
        if (z2 != f) return std::nullopt;
        return SphericalRep{base, {z_fiber}, 1, 0};
    }
    if (z2 < f) return std::nullopt;
    Rational mult = Rational(z1 - z2 + 1, m - 5) * binomial(z1 + m - 5 - f, m - 6) *
                    binomial(z2 + m - 6 - f, m - 6);
    if (!mult.is_integer() || mult.sign() <= 0)
        throw std::logic_error("is_spherical_bd: non-integral branching multiplicity");
    return SphericalRep{base, {z_fiber}, mult.to_ll(), 0};
}

// Type C_n, Sp(n)/Sp(n-1) (sphere) and Sp(n)/(Sp(n-1) x Z_2) (projective).
inline std::optional<SphericalRep> is_spherical_c(int n, bool projective,
                                                  const std::vector<int>& base, int z_fiber) {
    if (n < 2) throw std::domain_error("is_spherical_c: n must be >= 2");
    RootData rd{GroupType::C, n};
    if (!is_dominant(rd, base)) throw std::domain_error("is_spherical_c: non-dominant weight");
    if (z_fiber < 0) return std::nullopt;
    for (int i = 2; i < n; ++i)
        if (base[i] != 0) return std::nullopt;
    if (z_fiber != base[0] - base[1]) return std::nullopt;
    if (projective && (base[0] - base[1]) % 2) return std::nullopt;
    return SphericalRep{base, {z_fiber}, 1, 0};
}

// Real Stiefel V_2(R^m) = SO(m)/SO(m-2); the SO(2) fiber weight is signed.
inline std::optional<SphericalRep> is_spherical_stiefel_real(int m, const std::vector<int>& base,
                                                             int z_fiber) {
    if (m < 3) throw std::domain_error("is_spherical_stiefel_real: m must be >= 3");
    RootData rd{m % 2 ? GroupType::B : GroupType::D, m / 2};
    if (!is_dominant(rd, base))
        throw std::domain_error("is_spherical_stiefel_real: non-dominant weight");
    int z1 = base[0];
    int z2 = base.size() >= 2 ? base[1] : 0;  // convention z2 = 0 for m = 3
    for (std::size_t i = 2; i < base.size(); ++i)
        if (base[i] != 0) return std::nullopt;
    if (std::abs(z_fiber) > z1 - std::abs(z2)) return std::nullopt;
    if (((z_fiber - (z1 - z2)) % 2 + 2) % 2) return std::nullopt;
    return SphericalRep{base, {z_fiber}, 1, 0};
}

// Complex Stiefel V_2(C^{n+1}) = SU(n+1)/SU(n-1); fiber = (SU(2), U(1)).
inline std::optional<SphericalRep> is_spherical_stiefel_complex(int n,
                                                                const std::vector<int>& base,
                                                                int z_su2, int z_u1) {
    if (n < 2) throw std::domain_error("is_spherical_stiefel_complex: n must be >= 2");
    RootData rd{GroupType::A, n};
    if (!is_dominant(rd, base))
        throw std::domain_error("is_spherical_stiefel_complex: non-dominant weight");
    if (z_su2 < 0) return std::nullopt;
    if (((z_su2 - z_u1) % 2 + 2) % 2) return std::nullopt;
    if (!(z_u1 <= -z_su2 && -z_su2 <= 0)) return std::nullopt;
    if (n == 2) {
        int z1 = base[0], z2 = base[1];
        if (!(2 * z1 >= z_su2 - z_u1 && z_su2 - z_u1 >= 2 * z2 && 2 * z2 >= -z_su2 - z_u1 &&
              -z_su2 - z_u1 >= 0))
            return std::nullopt;
        return SphericalRep{base, {z_su2, z_u1}, 1, z1 + z2 + z_u1};
    }
    int z1 = base[0], z2 = base[1], zn = base[n - 1];
    long long twok = static_cast<long long>(z1) + z2 + zn + z_u1;
    if (twok < 0 || twok % 2) return std::nullopt;
    int k = static_cast<int>(twok / 2);
    for (int i = 2; i < n - 1; ++i)
        if (base[i] != k) return std::nullopt;
    int y1_twice = z_su2 - z_u1;  // even by the parity condition
    int y1 = y1_twice / 2;
    if (!(y1 <= z1 && z1 <= y1 + k)) return std::nullopt;
    if (!(y1 + k - z1 <= zn && zn <= k)) return std::nullopt;
    if (!(k <= z2 && z2 <= y1 + k - zn)) return std::nullopt;
    return SphericalRep{base, {z_su2, z_u1}, 1, k};
}

// Dispatcher over the family tag.
inline std::optional<SphericalRep> is_spherical(const FamilyId& id, const std::vector<int>& base,
                                                const std::vector<int>& fiber) {
    switch (id.family) {
        case Family::SasakiA: return is_spherical_a(id.rank, base, fiber.at(0));
        case Family::SasakiBD: return is_spherical_bd(id.rank, base, fiber.at(0));
        case Family::SasakiCSphere: return is_spherical_c(id.rank, false, base, fiber.at(0));
        case Family::SasakiCProjective: return is_spherical_c(id.rank, true, base, fiber.at(0));
        case Family::StiefelReal: return is_spherical_stiefel_real(id.rank, base, fiber.at(0));
        case Family::StiefelComplex:
            return is_spherical_stiefel_complex(id.rank, base, fiber.at(0), fiber.at(1));
    }
    throw std::logic_error("is_spherical: unreachable");
}

// ---- Enumeration ------------------------------------------------------------

// Proven lower bound on c_base over admissible representations whose top base
// entry equals z1; monotone increasing in z1. Used to close the weight box.
inline Rational casimir_base_floor(const FamilyId& id, long long z1) {
    int n = id.rank;
    switch (id.family) {
        case Family::SasakiA: return Rational(z1) * Rational(z1 + 2 * n);
        case Family::SasakiBD: return Rational(2) * Rational(z1) * Rational(z1 + n - 2);
        case Family::SasakiCSphere:
        case Family::SasakiCProjective: return Rational(z1) * Rational(z1 + 2 * n);
        case Family::StiefelReal: return Rational(z1) * Rational(z1 + n - 2) / Rational(2);
        case Family::StiefelComplex:
            return Rational(z1) * Rational(z1) / Rational(2) + Rational(n) * Rational(z1);
    }
    throw std::logic_error("casimir_base_floor: unreachable");
}

namespace detail {

template <typename F>
void for_each_admissible(const FamilyId& id, int z1, F&& visit) {
    int n = id.rank;
    switch (id.family) {
        case Family::SasakiA: {
            if (n == 2) {
                for (int z2 = 0; z2 <= z1; ++z2) {
                    if ((z1 + z2) % 3) continue;
                    for (int f = 0; 3 * f <= 2 * std::min(2 * z1 - z2, z1 + z2); f += 2)
                        if (auto r = is_spherical_a(n, {z1, z2}, f)) visit(*r);
                }
                break;
            }
            for (int z2 = 0; z2 <= z1; ++z2) {
                for (int zn = 0; zn <= z2; ++zn) {
                    if ((z1 + z2 + zn) % 4) continue;
                    int k = (z1 + z2 + zn) / 4;
                    if (!(zn <= k && k <= z2)) continue;
                    std::vector<int> base(n, k);
                    base[0] = z1;
                    base[1] = z2;
                    base[n - 1] = zn;
                    for (int f = 0; f <= z1 - z2 + zn; f += 2)
                        if (auto r = is_spherical_a(n, base, f)) visit(*r);
                }
            }
            break;
        }
        case Family::SasakiBD: {
            int m = id.rank;
            std::vector<int> base(m / 2, 0);
            base[0] = z1;
            for (int z2 = 0; z2 <= z1; ++z2) {
                base[1] = z2;
                if (m == 5) {
                    if (auto r = is_spherical_bd(m, base, 2 * z2)) visit(*r);
                } else {
                    for (int f = 0; f <= 2 * z2; f += 2)
                        if (auto r = is_spherical_bd(m, base, f)) visit(*r);
                }
            }
            break;
        }
        case Family::SasakiCSphere:
        case Family::SasakiCProjective: {
            bool proj = id.family == Family::SasakiCProjective;
            std::vector<int> base(n, 0);
            base[0] = z1;
            for (int z2 = 0; z2 <= z1; ++z2) {
                base[1] = z2;
                if (auto r = is_spherical_c(n, proj, base, z1 - z2)) visit(*r);
            }
            break;
        }
        case Family::StiefelReal: {
            int m = id.rank;
            if (m == 3) {
                for (int f = -z1; f <= z1; ++f)
                    if (auto r = is_spherical_stiefel_real(m, {z1}, f)) visit(*r);
                break;
            }
            int z2lo = m == 4 ? -z1 : 0;
            std::vector<int> base(m / 2, 0);
            base[0] = z1;
            for (int z2 = z2lo; z2 <= z1; ++z2) {
                base[1] = z2;
                for (int f = -(z1 - std::abs(z2)); f <= z1 - std::abs(z2); ++f)
                    if (auto r = is_spherical_stiefel_real(m, base, f)) visit(*r);
            }
            break;
        }
        case Family::StiefelComplex: {
            if (n == 2) {
                for (int z2 = 0; z2 <= z1; ++z2)
                    for (int y1 = z2; y1 <= z1; ++y1)
                        for (int y2 = 0; y2 <= z2; ++y2)
                            if (auto r = is_spherical_stiefel_complex(n, {z1, z2}, y1 - y2,
                                                                      -(y1 + y2)))
                                visit(*r);
                break;
            }
            for (int z2 = 0; z2 <= z1; ++z2) {
                for (int zn = 0; zn <= z2; ++zn) {
                    for (int y1 = 0; y1 <= z1; ++y1) {
                        for (int y2 = 0; y2 <= y1; ++y2) {
                            long long twok =
                                static_cast<long long>(z1) + z2 + zn - y1 - y2;
                            if (twok < 0 || twok % 2) continue;
                            int k = static_cast<int>(twok / 2);
                            if (!(zn <= k && k <= z2)) continue;
                            std::vector<int> base(n, k);
                            base[0] = z1;
                            base[1] = z2;
                            base[n - 1] = zn;
                            if (auto r = is_spherical_stiefel_complex(n, base, y1 - y2,
                                                                      -(y1 + y2)))
                                visit(*r);
                        }
                    }
                }
            }
            break;
        }
    }
}

}  // namespace detail

// Every admissible representation with family-normalized base Casimir at most
// `bound`, duplicate-free, in lexicographic (base, fiber) order. The trivial
// representation is included.
inline std::vector<SphericalRep> enumerate_spherical(const FamilyId& id, const Rational& bound) {
    if (bound.sign() <= 0) throw std::domain_error("enumerate_spherical: bound must be positive");
    std::vector<SphericalRep> out;
    for (int z1 = 0;; ++z1) {
        if (z1 > 0 && casimir_base_floor(id, z1) > bound) break;
        detail::for_each_admissible(id, z1, [&](const SphericalRep& r) {
            if (casimir_base(id, r.base) <= bound) out.push_back(r);
        });
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace homspec
