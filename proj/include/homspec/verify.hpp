#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "homspec/characters.hpp"
#include "homspec/partition.hpp"
#include "homspec/spectrum.hpp"
#include "homspec/spin_branching.hpp"

namespace homspec {

// First counterexample of an oracle sweep, or empty when everything matched.
struct SweepResult {
    std::optional<std::string> counterexample;
    long long checked = 0;

    bool ok() const { return !counterexample.has_value(); }
};

namespace detail {

inline void partitions_of(int n, int max_part, int max_depth, std::vector<Partition>& out,
                          Partition& cur) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    if (max_depth == 0) return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(n - p, p, max_depth - 1, out, cur);
        cur.pop_back();
    }
}

inline std::vector<Partition> partitions_of(int n, int max_depth = 64) {
    std::vector<Partition> out;
    Partition cur;
    partitions_of(n, n == 0 ? 1 : n, max_depth, out, cur);
    if (n == 0) out.assign(1, Partition{});
    return out;
}

inline std::string join_weight(const std::vector<int>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

template <typename F>
void for_each_dominant(GroupType type, int rank, int w_max, F&& visit) {
    std::vector<int> z(rank, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == rank) {
            visit(z);
            return;
        }
        int hi = i == 0 ? w_max : z[i - 1];
        int lo = 0;
        if (type == GroupType::D && i == rank - 1) lo = -z[i - 1];
        for (int v = lo; v <= hi; ++v) {
            z[i] = v;
            self(self, i + 1);
        }
        z[i] = 0;
    };
    rec(rec, 0);
}

}  // namespace detail

// Littlewood-Richardson self-checks: pinned small values, symmetry in the two
// tensor factors, and reciprocity against interlacing chains.
inline SweepResult sweep_lr(int max_size) {
    SweepResult res;
    auto fail = [&](const std::string& s) { res.counterexample = s; };
    // symmetry c^lambda_{mu nu} = c^lambda_{nu mu}
    for (int n = 0; n <= max_size && res.ok(); ++n) {
        for (const auto& lambda : detail::partitions_of(n)) {
            for (int k = 0; k <= n && res.ok(); ++k) {
                for (const auto& mu : detail::partitions_of(k)) {
                    for (const auto& nu : detail::partitions_of(n - k)) {
                        long long a = lr_coefficient(lambda, mu, nu);
                        long long b = lr_coefficient(lambda, nu, mu);
                        ++res.checked;
                        if (a != b) {
                            fail("lr symmetry: lambda=" + detail::join_weight(lambda) +
                                 " mu=" + detail::join_weight(mu) +
                                 " nu=" + detail::join_weight(nu) + " -> " + std::to_string(a) +
                                 " vs " + std::to_string(b));
                            return res;
                        }
                    }
                }
            }
        }
    }
    // reciprocity: GL(m+n) restriction multiplicities match LR coefficients
    for (int n = 0; n <= std::min(max_size, 8) && res.ok(); ++n) {
        for (const auto& lambda : detail::partitions_of(n)) {
            for (auto [m, nn] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{2, 3}}) {
                if (static_cast<int>(lambda.size()) > m + nn) continue;
                for (int k = 0; k <= n; ++k) {
                    for (const auto& mu : detail::partitions_of(k)) {
                        if (static_cast<int>(mu.size()) > m) continue;
                        auto mults = gl_restriction_multiplicities(lambda, mu, m, nn);
                        for (const auto& nu : detail::partitions_of(n - k)) {
                            if (static_cast<int>(nu.size()) > nn) continue;  // outside the lemma
                            long long lr = lr_coefficient(lambda, mu, nu);
                            auto it = mults.find(nu);
                            long long br = it == mults.end() ? 0 : it->second;
                            ++res.checked;
                            if (br != lr) {
                                fail("reciprocity: lambda=" + detail::join_weight(lambda) +
                                     " mu=" + detail::join_weight(mu) +
                                     " nu=" + detail::join_weight(nu) + " m=" + std::to_string(m) +
                                     " n=" + std::to_string(nn) + " branch=" + std::to_string(br) +
                                     " lr=" + std::to_string(lr));
                                return res;
                            }
                        }
                    }
                }
            }
        }
    }
    return res;
}

// Dimension conservation through one branching step, plus the rectangular
// tensor decomposition against brute-force LR.
inline SweepResult sweep_branching(int w_max) {
    SweepResult res;
    // gl_branch_step conserves dimension
    for (int rank = 2; rank <= 4 && res.ok(); ++rank) {
        detail::for_each_dominant(GroupType::A, rank, std::min(w_max, 3), [&](
                                                                              const std::vector<
                                                                                  int>& z) {
            if (!res.ok()) return;
            // GL(rank) dimension via the SU(rank) irrep with the same
            // highest-weight differences
            std::vector<int> su(z.begin(), z.end() - 1);
            for (auto& v : su) v -= z.back();
            RootData rd_top{GroupType::A, rank - 1};
            long long total = weyl_dimension(rd_top, su);
            long long acc = 0;
            for (const auto& [x, w] : gl_branch_step(z)) {
                (void)w;
                if (x.size() <= 1) {
                    acc += 1;
                    continue;
                }
                std::vector<int> sux(x.begin(), x.end() - 1);
                for (auto& v : sux) v -= x.back();
                acc += weyl_dimension(RootData{GroupType::A, static_cast<int>(x.size()) - 1}, sux);
            }
            ++res.checked;
            if (acc != total)
                res.counterexample = "gl_branch_step dimension: z=" + detail::join_weight(z) +
                                     " sum=" + std::to_string(acc) +
                                     " dim=" + std::to_string(total);
        });
    }
    // spin_branch_step conserves dimension
    for (int m = 4; m <= 8 && res.ok(); ++m) {
        GroupType t = m % 2 ? GroupType::B : GroupType::D;
        detail::for_each_dominant(t, m / 2, std::min(w_max, 3), [&](const std::vector<int>& z) {
            if (!res.ok()) return;
            long long total = weyl_dimension(RootData{t, m / 2}, z);
            long long acc = 0;
            GroupType t2 = (m - 1) % 2 ? GroupType::B : GroupType::D;
            for (const auto& x : spin_branch_step(m, z))
                acc += weyl_dimension(RootData{t2, (m - 1) / 2}, x);
            ++res.checked;
            if (acc != total)
                res.counterexample = "spin_branch_step dimension: m=" + std::to_string(m) +
                                     " z=" + detail::join_weight(z) + " sum=" + std::to_string(acc) +
                                     " dim=" + std::to_string(total);
        });
    }
    // rectangular tensor decomposition vs LR, multiplicity-free
    for (int n = 3; n <= 5 && res.ok(); ++n) {
        for (int k = 0; k <= std::min(w_max, 3) && res.ok(); ++k) {
            for (int a = k; a <= 2 * k && res.ok(); ++a) {
                int b = 2 * k - a;
                auto listed = tensor_decompose_rect(a, b, k, n);
                Partition rect(n - 1, k);
                // brute force: all lambda of the right size with depth <= n+1
                std::vector<Partition> brute;
                for (const auto& lambda : detail::partitions_of(static_cast<int>(2 * k + part_size(
                                                                    normalized(rect))))) {
                    if (static_cast<int>(lambda.size()) > n + 1) continue;
                    long long c = lr_coefficient(lambda, {a, b}, rect);
                    ++res.checked;
                    if (c >= 2) {
                        res.counterexample = "tensor_decompose_rect: multiplicity " +
                                             std::to_string(c) + " at lambda=" +
                                             detail::join_weight(lambda);
                        return res;
                    }
                    if (c == 1) brute.push_back(lambda);
                }
                std::sort(brute.begin(), brute.end());
                if (brute != listed) {
                    res.counterexample = "tensor_decompose_rect mismatch at (a,b,k,n)=(" +
                                         std::to_string(a) + "," + std::to_string(b) + "," +
                                         std::to_string(k) + "," + std::to_string(n) + ")";
                    return res;
                }
            }
        }
    }
    return res;
}

// Type A closed-form classification against the reciprocity + LR oracle.
inline long long oracle_mult_sasaki_a(int n, const std::vector<int>& base, int f) {
    if (f < 0 || f % 2) return 0;
    long long size = 0;
    for (int v : base) size += v;
    if (size % (n + 1)) return 0;
    int k = static_cast<int>(size / (n + 1));
    int y1 = k + f / 2, y2 = k - f / 2;
    if (y2 < 0) return 0;
    Partition rect(n - 1, k);
    return lr_coefficient(normalized(base), normalized({y1, y2}), normalized(rect));
}

inline SweepResult sweep_spherical_a(int n_max, int w_max) {
    SweepResult res;
    for (int n = 2; n <= n_max && res.ok(); ++n) {
        detail::for_each_dominant(GroupType::A, n, w_max, [&](const std::vector<int>& z) {
            if (!res.ok()) return;
            for (int f = 0; f <= 2 * w_max + 2; ++f) {
                long long oracle = oracle_mult_sasaki_a(n, z, f);
                auto pred = is_spherical_a(n, z, f);
                long long closed = pred ? pred->branch_mult : 0;
                ++res.checked;
                if (oracle > 1 || oracle != closed) {
                    res.counterexample = "spherical-a: n=" + std::to_string(n) + " base=" +
                                         detail::join_weight(z) + " fiber=" + std::to_string(f) +
                                         " oracle=" + std::to_string(oracle) +
                                         " closed=" + std::to_string(closed);
                    return;
                }
            }
        });
    }
    return res;
}

// Type B/D classification and multiplicity formula against the interlacing
// chain oracle, including zero cases.
inline SweepResult sweep_spherical_bd(int m_max, int w_max) {
    SweepResult res;
    for (int m = 5; m <= m_max && res.ok(); ++m) {
        for (int z1 = 0; z1 <= w_max && res.ok(); ++z1) {
            for (int z2 = 0; z2 <= z1 && res.ok(); ++z2) {
                std::vector<int> base(m / 2, 0);
                base[0] = z1;
                base[1] = z2;
                for (int f = 0; f <= 2 * z2 + 4; f += 2) {
                    long long oracle = so4_invariant_mult(m, z1, z2, f / 2);
                    auto pred = is_spherical_bd(m, base, f);
                    long long closed = pred ? pred->branch_mult : 0;
                    ++res.checked;
                    if (oracle != closed) {
                        res.counterexample =
                            "spherical-bd: m=" + std::to_string(m) + " base=(" +
                            std::to_string(z1) + "," + std::to_string(z2) + ") fiber=" +
                            std::to_string(f) + " oracle=" + std::to_string(oracle) +
                            " closed=" + std::to_string(closed);
                        return res;
                    }
                }
            }
        }
    }
    return res;
}

// Type C classification against the Weyl-character decomposition oracle,
// including the projective parity filter.
inline SweepResult sweep_spherical_c(int w_max) {
    SweepResult res;
    for (int n : {2, 3}) {
        if (!res.ok()) break;
        detail::for_each_dominant(GroupType::C, n, w_max, [&](const std::vector<int>& z) {
            if (!res.ok()) return;
            auto decomp = character_decompose_sp(n, z);
            std::vector<int> zero(n - 1, 0);
            for (int f = 0; f <= 2 * w_max + 2; ++f) {
                auto it = decomp.find({zero, f});
                long long oracle = it == decomp.end() ? 0 : it->second;
                long long sphere = is_spherical_c(n, false, z, f) ? 1 : 0;
                long long proj = is_spherical_c(n, true, z, f) ? 1 : 0;
                ++res.checked;
                if (oracle > 1 || sphere != oracle || proj != (oracle > 0 && f % 2 == 0 ? 1 : 0)) {
                    res.counterexample = "spherical-c: n=" + std::to_string(n) + " base=" +
                                         detail::join_weight(z) + " fiber=" + std::to_string(f) +
                                         " oracle=" + std::to_string(oracle) + " sphere=" +
                                         std::to_string(sphere) + " proj=" + std::to_string(proj);
                    return;
                }
            }
        });
    }
    return res;
}

// Real Stiefel classification against iterated spin interlacing: the number of
// chains ending at the trivial SO(m-2) weight equals the predicate's count of
// admissible fiber weights.
inline SweepResult sweep_stiefel_real(int m_max, int w_max) {
    SweepResult res;
    for (int m = 4; m <= m_max && res.ok(); ++m) {
        GroupType t = m % 2 ? GroupType::B : GroupType::D;
        detail::for_each_dominant(t, m / 2, w_max, [&](const std::vector<int>& z) {
            if (!res.ok()) return;
            long long chains = so_chain_invariant_dim(m, z);
            long long pred_total = 0;
            for (int f = -(w_max + 2); f <= w_max + 2; ++f)
                if (is_spherical_stiefel_real(m, z, f)) ++pred_total;
            ++res.checked;
            if (chains != pred_total) {
                res.counterexample = "stiefel-real: m=" + std::to_string(m) + " base=" +
                                     detail::join_weight(z) + " chains=" + std::to_string(chains) +
                                     " predicate-total=" + std::to_string(pred_total);
            }
        });
    }
    return res;
}

// Complex Stiefel classification against the reciprocity + LR oracle.
inline long long oracle_mult_stiefel_complex(int n, const std::vector<int>& base, int z_su2,
                                             int z_u1) {
    if (z_su2 < 0) return 0;
    if (((z_su2 - z_u1) % 2 + 2) % 2) return 0;
    int y1 = (z_su2 - z_u1) / 2, y2 = (-z_su2 - z_u1) / 2;
    if (y2 < 0 || y1 < y2) return 0;
    long long size = 0;
    for (int v : base) size += v;
    long long knum = size + z_u1;
    if (n >= 3) {
        if (knum % (n - 1)) return 0;
        knum /= (n - 1);
    }
    if (knum < 0) return 0;
    Partition rect(n - 1, static_cast<int>(knum));
    return lr_coefficient(normalized(base), normalized({y1, y2}), normalized(rect));
}

inline SweepResult sweep_stiefel_complex(int n_max, int w_max) {
    SweepResult res;
    for (int n = 2; n <= n_max && res.ok(); ++n) {
        detail::for_each_dominant(GroupType::A, n, w_max, [&](const std::vector<int>& z) {
            if (!res.ok()) return;
            for (int su2 = 0; su2 <= 2 * w_max + 2 && res.ok(); ++su2) {
                for (int u1 = -(2 * w_max + 2); u1 <= 1; ++u1) {
                    long long oracle = oracle_mult_stiefel_complex(n, z, su2, u1);
                    long long closed = is_spherical_stiefel_complex(n, z, su2, u1) ? 1 : 0;
                    ++res.checked;
                    if (oracle > 1 || oracle != closed) {
                        res.counterexample = "stiefel-complex: n=" + std::to_string(n) + " base=" +
                                             detail::join_weight(z) + " su2=" +
                                             std::to_string(su2) + " u1=" + std::to_string(u1) +
                                             " oracle=" + std::to_string(oracle) +
                                             " closed=" + std::to_string(closed);
                        return;
                    }
                }
            }
        });
    }
    return res;
}

// Type C spectrum against the quaternionic Berger sphere normal form: under
// 2 alpha delta = 2, delta^2 = 1/t^2, k = z1 + z2, l = z1 - z2 the eigenvalue
// and multiplicity agree with the rearranged published expressions.
inline SweepResult sweep_blp22(int n_max, int w_max) {
    SweepResult res;
    for (int n = 2; n <= n_max && res.ok(); ++n) {
        FamilyId id(Family::SasakiCSphere, n);
        for (int z1 = 0; z1 <= w_max && res.ok(); ++z1) {
            for (int z2 = 0; z2 <= z1; ++z2) {
                std::vector<int> base(n, 0);
                base[0] = z1;
                base[1] = z2;
                Rational c_base = casimir_base(id, base);
                Rational c_fib = casimir_fibers(id, {z1 - z2}).at(0);
                long long k = z1 + z2, l = z1 - z2;
                Rational lhs_const = Rational(2) * (c_base - c_fib);
                Rational rhs_const = Rational(k) * Rational(k + 4 * n - 2) -
                                     Rational(l) * Rational(l + 2);
                Rational lhs_t = c_fib;
                Rational rhs_t = Rational(l) * Rational(l + 2);
                ++res.checked;
                if (lhs_const != rhs_const || lhs_t != rhs_t) {
                    res.counterexample = "blp22 eigenvalue: n=" + std::to_string(n) + " (z1,z2)=(" +
                                         std::to_string(z1) + "," + std::to_string(z2) + ")";
                    return res;
                }
                if (z1 == 0 && z2 == 0) continue;
                auto rep = is_spherical_c(n, false, base, z1 - z2);
                long long ours = multiplicity(id, *rep);
                Rational theirs = Rational(l + 1) *
                                  (Rational(z1 + z2 + 2 * n - 1) * Rational(z1 - z2 + 1) /
                                   (Rational(2 * n - 1) * Rational(z1 + 1))) *
                                  binomial(z1 + 2 * n - 2, z1) * binomial(z2 + 2 * n - 3, z2);
                if (!theirs.is_integer() || theirs.to_ll() != ours) {
                    res.counterexample = "blp22 multiplicity: n=" + std::to_string(n) +
                                         " (z1,z2)=(" + std::to_string(z1) + "," +
                                         std::to_string(z2) + ") ours=" + std::to_string(ours) +
                                         " theirs=" + theirs.to_string();
                    return res;
                }
            }
        }
    }
    return res;
}

}  // namespace homspec
