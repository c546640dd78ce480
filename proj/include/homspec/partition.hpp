#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace homspec {

// Weakly decreasing nonnegative integer sequence, trailing zeros stripped.
using Partition = std::vector<int>;

inline Partition normalized(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] < p[i + 1]) throw std::domain_error("partition: not weakly decreasing");
    if (!p.empty() && p.back() < 0) throw std::domain_error("partition: negative part");
    return p;
}

inline long long part_size(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0LL);
}

inline bool contains(const Partition& outer, const Partition& inner) {
    if (inner.size() > outer.size()) return false;
    for (std::size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

// Number of Littlewood-Richardson skew tableaux of shape lambda/nu and content
// mu; equivalently the coefficient c^lambda_{mu nu}. Returns 0 on size or
// containment mismatch.
//
// Letter j is placed as a horizontal strip on the shape left by letter j-1;
// the lattice-word condition becomes: the count of j's in rows <= r never
// exceeds the count of (j-1)'s in rows <= r-1.
inline long long lr_coefficient(const Partition& lambda_in, const Partition& mu_in,
                                const Partition& nu_in) {
    Partition lambda = normalized(lambda_in);
    Partition mu = normalized(mu_in);
    Partition nu = normalized(nu_in);
    if (part_size(lambda) != part_size(mu) + part_size(nu)) return 0;
    if (!contains(lambda, nu)) return 0;
    if (mu.empty()) return lambda == nu ? 1 : 0;

    const std::size_t rows = lambda.size();
    std::vector<int> shape(rows, 0);
    for (std::size_t i = 0; i < nu.size(); ++i) shape[i] = nu[i];
    std::vector<std::vector<int>> placed(mu.size(), std::vector<int>(rows, 0));
    long long total = 0;

    auto rec = [&](auto&& self, std::size_t letter, std::size_t row, int remaining,
                   const std::vector<int> base) -> void {  // by value: snapshot per letter
        if (remaining == 0) {
            if (letter + 1 == mu.size()) {
                if (shape == lambda) ++total;
                return;
            }
            self(self, letter + 1, 0, mu[letter + 1], shape);
            return;
        }
        if (row >= rows) return;
        int hi = std::min(lambda[row] - shape[row], remaining);
        if (row > 0) hi = std::min(hi, base[row - 1] - shape[row]);  // horizontal strip
        for (int c = 0; c <= hi; ++c) {
            if (letter > 0) {
                int cum_cur = c, cum_prev = 0;
                for (std::size_t r = 0; r < row; ++r) cum_cur += placed[letter][r];
                for (std::size_t r = 0; r < row; ++r) cum_prev += placed[letter - 1][r];
                if (cum_cur > cum_prev) continue;  // lattice condition
            }
            shape[row] += c;
            placed[letter][row] = c;
            self(self, letter, row + 1, remaining - c, base);
            placed[letter][row] = 0;
            shape[row] -= c;
        }
    };
    rec(rec, 0, 0, mu[0], shape);
    return total;
}

// All lambda with c^lambda_{(a,b),(k^{n-1})} = 1 for GL(n+1), listed by the
// explicit inequality chains of the rectangular tensor decomposition. Requires
// a >= b >= 0 with a + b = 2k and n >= 3.
inline std::vector<Partition> tensor_decompose_rect(int a, int b, int k, int n) {
    if (n < 3) throw std::domain_error("tensor_decompose_rect: n must be >= 3");
    if (a < b || b < 0) throw std::domain_error("tensor_decompose_rect: need a >= b >= 0");
    if (a + b != 2 * k) throw std::domain_error("tensor_decompose_rect: a + b != 2k");
    std::vector<Partition> out;
    for (int i1 = std::max(0, a - k); i1 <= a; ++i1) {
        for (int i3 = a - i1; i3 <= k; ++i3) {
            for (int i2 = 0; i2 <= a - i3; ++i2) {
                int i4 = 2 * k - i1 - i2 - i3;
                if (i4 < 0 || i4 > a - i1) continue;
                Partition lambda;
                lambda.push_back(k + i1);
                lambda.push_back(k + i2);
                for (int j = 0; j < n - 3; ++j) lambda.push_back(k);
                lambda.push_back(i3);
                lambda.push_back(i4);
                out.push_back(normalized(lambda));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// One interlacing step GL(N) -> GL(N-1) x GL(1). Input must be weakly
// decreasing; each branch carries the GL(1) weight sum(z) - sum(x).
inline std::vector<std::pair<std::vector<int>, int>> gl_branch_step(const std::vector<int>& z) {
    for (std::size_t i = 0; i + 1 < z.size(); ++i)
        if (z[i] < z[i + 1]) throw std::domain_error("gl_branch_step: non-dominant weight");
    if (z.empty()) throw std::domain_error("gl_branch_step: empty weight");
    std::vector<std::pair<std::vector<int>, int>> out;
    std::vector<int> x(z.size() - 1, 0);
    long long total = std::accumulate(z.begin(), z.end(), 0LL);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == x.size()) {
            long long xs = std::accumulate(x.begin(), x.end(), 0LL);
            out.emplace_back(x, static_cast<int>(total - xs));
            return;
        }
        for (int v = z[i + 1]; v <= z[i]; ++v) {
            x[i] = v;
            self(self, i + 1);
        }
        x[i] = 0;
    };
    if (x.empty())
        out.emplace_back(x, static_cast<int>(total));
    else
        rec(rec, 0);
    return out;
}

// Polynomial in N commuting variables with integer coefficients, sparse.
using IntPoly = std::map<std::vector<int>, long long>;

inline void poly_add_term(IntPoly& p, const std::vector<int>& e, long long c) {
    auto it = p.find(e);
    if (it == p.end()) {
        if (c != 0) p.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

// Schur polynomial s_nu(y_1..y_N) via the Gelfand-Tsetlin recursion.
inline const IntPoly& schur_poly(const Partition& nu, int nvars) {
    static std::map<std::pair<Partition, int>, IntPoly> memo;
    auto key = std::make_pair(nu, nvars);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    IntPoly result;
    if (static_cast<int>(nu.size()) > nvars) {
        // too many rows: zero polynomial
    } else if (nvars == 0) {
        result[{}] = 1;
    } else {
        std::vector<int> padded(nu);
        padded.resize(nvars, 0);
        for (const auto& [x, w] : gl_branch_step(padded)) {
            const IntPoly& sub = schur_poly(normalized(x), nvars - 1);
            for (const auto& [e, c] : sub) {
                std::vector<int> e2(e);
                e2.push_back(w);
                poly_add_term(result, e2, c);
            }
        }
    }
    return memo.emplace(std::move(key), std::move(result)).first->second;
}

// Multiplicities mult(mu (x) nu, lambda restricted to GL(m) x GL(n)) for all nu
// at once, computed by peeling n GL(1) factors with gl_branch_step and then
// decomposing the resulting GL(n) torus character into Schur polynomials.
inline std::map<Partition, long long> gl_restriction_multiplicities(const Partition& lambda,
                                                                    const Partition& mu, int m,
                                                                    int n) {
    std::vector<int> start(lambda);
    start.resize(m + n, 0);
    // multiset of (current weight, exponent vector of peeled GL(1) weights)
    std::map<std::pair<std::vector<int>, std::vector<int>>, long long> states;
    states[{start, {}}] = 1;
    for (int step = 0; step < n; ++step) {
        std::map<std::pair<std::vector<int>, std::vector<int>>, long long> next;
        for (const auto& [st, cnt] : states) {
            for (const auto& [x, w] : gl_branch_step(st.first)) {
                std::vector<int> e = st.second;
                e.insert(e.begin(), w);  // earlier peel = later variable
                next[{x, e}] += cnt;
            }
        }
        states = std::move(next);
    }
    IntPoly p_mu;
    std::vector<int> mu_padded(mu);
    mu_padded.resize(m, 0);
    for (const auto& [st, cnt] : states)
        if (st.first == mu_padded) poly_add_term(p_mu, st.second, cnt);
    // greedy decomposition of the GL(n) character into Schur polynomials
    std::map<Partition, long long> mults;
    while (!p_mu.empty()) {
        auto lead = std::max_element(p_mu.begin(), p_mu.end(), [](const auto& a, const auto& b) {
            return a.first < b.first;
        });
        Partition nu = normalized(lead->first);
        long long c = lead->second;
        if (c < 0) throw std::logic_error("gl_restriction_multiplicities: negative multiplicity");
        const IntPoly& s = schur_poly(nu, n);
        for (const auto& [e, coef] : s) poly_add_term(p_mu, e, -c * coef);
        mults[nu] += c;
    }
    return mults;
}

// Reciprocity self-test: branching multiplicity computed through interlacing
// chains must match the Littlewood-Richardson coefficient. Requires depths of
// mu, nu, lambda at most m, n, m+n.
inline bool reciprocity_check(const Partition& lambda, const Partition& mu, const Partition& nu,
                              int m, int n) {
    if (static_cast<int>(normalized(mu).size()) > m ||
        static_cast<int>(normalized(nu).size()) > n ||
        static_cast<int>(normalized(lambda).size()) > m + n)
        throw std::domain_error("reciprocity_check: partition depth exceeds group rank");
    long long lr = lr_coefficient(lambda, mu, nu);
    auto mults = gl_restriction_multiplicities(normalized(lambda), normalized(mu), m, n);
    auto it = mults.find(normalized(nu));
    long long branch = it == mults.end() ? 0 : it->second;
    return branch == lr;
}

}  // namespace homspec
