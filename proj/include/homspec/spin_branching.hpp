#pragma once

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <vector>

#include "homspec/rootdata.hpp"

namespace homspec {

// One multiplicity-free interlacing step SO(m) -> SO(m-1), integral weights
// only. Input length is rank(SO(m)) = floor(m/2); for even m the last entry
// may be negative.
inline std::vector<std::vector<int>> spin_branch_step(int m, const std::vector<int>& z) {
    if (m < 3) throw std::domain_error("spin_branch_step: m must be >= 3");
    int n = m / 2;
    if (static_cast<int>(z.size()) != n) throw std::domain_error("spin_branch_step: rank mismatch");
    RootData rd{m % 2 ? GroupType::B : GroupType::D, n};
    if (!is_dominant(rd, z)) throw std::domain_error("spin_branch_step: non-dominant weight");

    std::vector<std::vector<int>> out;
    if (m % 2) {
        // Spin(2n+1) -> Spin(2n): z1 >= x1 >= z2 >= ... >= x_{n-1} >= z_n >= |x_n|
        std::vector<int> x(n, 0);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == n - 1) {
                for (int v = -z[n - 1]; v <= z[n - 1]; ++v) {
                    x[n - 1] = v;
                    out.push_back(x);
                }
                return;
            }
            for (int v = z[i + 1]; v <= z[i]; ++v) {
                x[i] = v;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    } else {
        // Spin(2n) -> Spin(2n-1): z1 >= x1 >= z2 >= ... >= x_{n-1} >= |z_n|
        std::vector<int> x(n - 1, 0);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == n - 1) {
                out.push_back(x);
                return;
            }
            int lo = i + 2 <= n - 1 ? z[i + 1] : std::abs(z[n - 1]);
            for (int v = lo; v <= z[i]; ++v) {
                x[i] = v;
                self(self, i + 1);
            }
        };
        if (n == 1)
            out.push_back(x);  // SO(2) -> SO(1): nothing to track
        else
            rec(rec, 0);
    }
    return out;
}

// Multiplicity of rho_{SO(4)}(x, -x) in rho_{SO(m)}(z1, z2, 0, ...) computed by
// iterating the interlacing chain down to SO(4).
inline long long so4_invariant_mult(int m, int z1, int z2, int x) {
    if (m < 5) throw std::domain_error("so4_invariant_mult: m must be >= 5");
    if (z1 < z2 || z2 < 0) throw std::domain_error("so4_invariant_mult: need z1 >= z2 >= 0");
    if (x < 0) throw std::domain_error("so4_invariant_mult: need x >= 0");
    std::vector<int> start(m / 2, 0);
    start[0] = z1;
    if (m / 2 >= 2) start[1] = z2;
    std::map<std::vector<int>, long long> level{{start, 1}};
    for (int cur = m; cur > 4; --cur) {
        std::map<std::vector<int>, long long> next;
        for (const auto& [w, c] : level)
            for (const auto& v : spin_branch_step(cur, w)) next[v] += c;
        level = std::move(next);
    }
    std::vector<int> target{x, -x};
    auto it = level.find(target);
    return it == level.end() ? 0 : it->second;
}

// Dimension of the SO(m-2)-invariant subspace of rho_{SO(m)}(weight), counted
// as the number of two-step interlacing chains ending at the zero weight.
inline long long so_chain_invariant_dim(int m, const std::vector<int>& z) {
    if (m < 4) throw std::domain_error("so_chain_invariant_dim: m must be >= 4");
    std::map<std::vector<int>, long long> level{{z, 1}};
    for (int cur = m; cur > m - 2; --cur) {
        std::map<std::vector<int>, long long> next;
        for (const auto& [w, c] : level)
            for (const auto& v : spin_branch_step(cur, w)) next[v] += c;
        level = std::move(next);
    }
    std::vector<int> zero((m - 2) / 2, 0);
    auto it = level.find(zero);
    return it == level.end() ? 0 : it->second;
}

}  // namespace homspec
