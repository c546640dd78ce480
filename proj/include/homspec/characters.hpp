#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "homspec/partition.hpp"
#include "homspec/rootdata.hpp"

namespace homspec {

// Sparse Laurent polynomial in `rank` torus variables.
using Laurent = std::map<std::vector<int>, long long>;

namespace detail {

// Alternating Weyl-orbit sum over the hyperoctahedral group (all sign flips
// for B/C, even flips for D). Entries of mu must make mu regular.
inline Laurent weyl_alternant(GroupType type, int rank, const std::vector<int>& mu) {
    Laurent out;
    std::vector<int> perm(rank);
    for (int i = 0; i < rank; ++i) perm[i] = i;
    do {
        int psign = 1;
        for (int i = 0; i < rank; ++i)
            for (int j = i + 1; j < rank; ++j)
                if (perm[i] > perm[j]) psign = -psign;
        for (int mask = 0; mask < (1 << rank); ++mask) {
            int flips = __builtin_popcount(static_cast<unsigned>(mask));
            if (type == GroupType::D && flips % 2) continue;
            int det = psign;
            if (type != GroupType::D && flips % 2) det = -det;
            std::vector<int> e(rank);
            for (int i = 0; i < rank; ++i) e[i] = (mask >> i & 1) ? -mu[perm[i]] : mu[perm[i]];
            poly_add_term(out, e, det);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Exact division of Laurent polynomials; the divisor's lex-leading coefficient
// must be 1 and the division must be exact.
inline Laurent laurent_divide(Laurent num, const Laurent& den) {
    Laurent q;
    const auto& dlead = *den.rbegin();
    if (dlead.second != 1) throw std::logic_error("laurent_divide: divisor lead != 1");
    while (!num.empty()) {
        auto lead = *num.rbegin();
        std::vector<int> qe(lead.first);
        for (std::size_t i = 0; i < qe.size(); ++i) qe[i] -= dlead.first[i];
        long long qc = lead.second;
        poly_add_term(q, qe, qc);
        for (const auto& [e, c] : den) {
            std::vector<int> t(qe);
            for (std::size_t i = 0; i < t.size(); ++i) t[i] += e[i];
            poly_add_term(num, t, -qc * c);
        }
    }
    return q;
}

}  // namespace detail

// Weyl character of the irreducible representation with the given highest
// weight, as an exact Laurent polynomial on the standard maximal torus.
// Supported for types B, C, D (type B uses a doubled exponent lattice
// internally to absorb the half-integral rho).
inline const Laurent& weyl_character(GroupType type, int rank, const std::vector<int>& weight) {
    if (type == GroupType::A) throw std::domain_error("weyl_character: type A unsupported here");
    RootData rd{type, rank};
    if (!is_dominant(rd, weight)) throw std::domain_error("weyl_character: non-dominant weight");
    static std::map<std::tuple<GroupType, int, std::vector<int>>, Laurent> memo;
    auto key = std::make_tuple(type, rank, weight);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int scale = type == GroupType::B ? 2 : 1;
    std::vector<int> rho(rank), mu(rank);
    for (int i = 0; i < rank; ++i) {
        switch (type) {
            case GroupType::B: rho[i] = 2 * (rank - i - 1) + 1; break;  // doubled
            case GroupType::C: rho[i] = rank - i; break;
            case GroupType::D: rho[i] = rank - i - 1; break;
            default: break;
        }
        mu[i] = scale * weight[i] + rho[i];
    }
    Laurent quot = detail::laurent_divide(detail::weyl_alternant(type, rank, mu),
                                          detail::weyl_alternant(type, rank, rho));
    if (scale == 2) {
        Laurent halved;
        for (const auto& [e, c] : quot) {
            std::vector<int> h(e);
            for (auto& v : h) {
                if (v % 2) throw std::logic_error("weyl_character: odd doubled exponent");
                v /= 2;
            }
            poly_add_term(halved, h, c);
        }
        quot = std::move(halved);
    }
    return memo.emplace(std::move(key), std::move(quot)).first->second;
}

namespace detail {

// Greedy decomposition of a nonnegative combination of products
// chi_sub(x_2..x_n) * chi_1(x_1), where chi_sub is a character of the group
// `sub_type`/`sub rank` and chi_1 is either an Sp(1) character (sp1 = true) or
// a plain SO(2) torus character x^w (sp1 = false).
inline std::map<std::pair<std::vector<int>, int>, long long> split_first_factor(
    Laurent rest, GroupType sub_type, int sub_rank, bool sp1) {
    std::map<std::pair<std::vector<int>, int>, long long> result;
    while (!rest.empty()) {
        // pick the term maximal in (tail lex, head)
        auto best = rest.begin();
        for (auto jt = rest.begin(); jt != rest.end(); ++jt) {
            std::vector<int> tb(best->first.begin() + 1, best->first.end());
            std::vector<int> tj(jt->first.begin() + 1, jt->first.end());
            if (tj > tb || (tj == tb && jt->first[0] > best->first[0])) best = jt;
        }
        std::vector<int> tail(best->first.begin() + 1, best->first.end());
        int head = best->first[0];
        long long mult = best->second;
        if (mult < 0) throw std::logic_error("split_first_factor: negative multiplicity");
        if (sp1 && head < 0) throw std::logic_error("split_first_factor: negative Sp(1) weight");
        const Laurent& sub = weyl_character(sub_type, sub_rank, tail);
        for (const auto& [e, c] : sub) {
            if (sp1) {
                for (int j = 0; j <= head; ++j) {
                    std::vector<int> full(1, head - 2 * j);
                    full.insert(full.end(), e.begin(), e.end());
                    poly_add_term(rest, full, -mult * c);
                }
            } else {
                std::vector<int> full(1, head);
                full.insert(full.end(), e.begin(), e.end());
                poly_add_term(rest, full, -mult * c);
            }
        }
        result[{tail, head}] += mult;
    }
    return result;
}

}  // namespace detail

// Restriction Sp(n) -> Sp(n-1) x Sp(1) decomposed via exact Weyl characters.
// The Sp(1) factor sits on the first torus coordinate. Keys are
// (Sp(n-1) highest weight, Sp(1) highest weight).
inline std::map<std::pair<std::vector<int>, int>, long long> character_decompose_sp(
    int n, const std::vector<int>& weight) {
    if (n != 2 && n != 3) throw std::domain_error("character_decompose_sp: rank must be 2 or 3");
    for (int v : weight)
        if (v > 6) throw std::domain_error("character_decompose_sp: weight outside supported box");
    Laurent chi = weyl_character(GroupType::C, n, weight);
    return detail::split_first_factor(std::move(chi), GroupType::C, n - 1, /*sp1=*/true);
}

// Restriction SO(m) -> SO(2) x SO(m-2) decomposed via exact Weyl characters;
// the SO(2) factor sits on the first torus coordinate. Keys are
// (SO(m-2) highest weight, SO(2) weight).
inline std::map<std::pair<std::vector<int>, int>, long long> character_decompose_so2(
    int m, const std::vector<int>& weight) {
    if (m < 5 || m > 8) throw std::domain_error("character_decompose_so2: m outside supported box");
    GroupType type = m % 2 ? GroupType::B : GroupType::D;
    GroupType sub_type = (m - 2) % 2 ? GroupType::B : GroupType::D;
    Laurent chi = weyl_character(type, m / 2, weight);
    return detail::split_first_factor(std::move(chi), sub_type, (m - 2) / 2, /*sp1=*/false);
}

}  // namespace homspec
