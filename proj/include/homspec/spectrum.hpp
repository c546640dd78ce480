#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "homspec/family.hpp"
#include "homspec/spherical.hpp"

namespace homspec {

// Exact coefficient vector of an eigenvalue over the basis {1/t0, 1/t1[, 1/t2]}:
// eta = a0/t0 + a1/t1 [+ a2/t2] with a0 = c_base - sum(c_fibers), ai = c_fiber_i.
struct EigenvalueTerm {
    std::vector<Rational> coeffs;
    Rational c_base;
    std::vector<Rational> c_fibers;
};

inline EigenvalueTerm eigenvalue_term(const FamilyId& id, const SphericalRep& rep) {
    auto check = is_spherical(id, rep.base, rep.fiber);
    if (!check) throw std::domain_error("eigenvalue_term: representation not admissible");
    EigenvalueTerm t;
    t.c_base = casimir_base(id, rep.base);
    t.c_fibers = casimir_fibers(id, rep.fiber);
    Rational a0 = t.c_base;
    for (const auto& c : t.c_fibers) a0 -= c;
    t.coeffs.push_back(a0);
    for (const auto& c : t.c_fibers) t.coeffs.push_back(c);
    return t;
}

inline QuadExt evaluate(const EigenvalueTerm& term, const MetricParams& params) {
    if (term.coeffs.size() != params.scales.size())
        throw std::domain_error("evaluate: coefficient/scale arity mismatch");
    QuadExt v(0);
    for (std::size_t i = 0; i < term.coeffs.size(); ++i)
        v += QuadExt(term.coeffs[i]) / params.scales[i];
    return v;
}

namespace detail {

// Unified closed form for dim rho_{SO(m)}(z1, z2), m >= 5.
inline Rational so_dimension_closed(int m, int z1, int z2) {
    return Rational(z1 + z2 + m - 3) * Rational(z1 - z2 + 1) * Rational(2 * z1 + m - 2) *
           Rational(2 * z2 + m - 4) /
           (Rational(m - 2) * Rational(m - 3) * Rational(m - 4) * Rational(m - 4)) *
           binomial(z1 + m - 4, m - 5) * binomial(z2 + m - 5, m - 5);
}

// Shared closed form for the SU(n+1) families with constant inner block k.
inline Rational su_block_mult_closed(int n, int z1, int z2, int zn, int k, int f) {
    return Rational(f + 1) * Rational(z1 + n) * Rational(z2 + n - 1) * Rational(zn + 1) *
           Rational(z1 - z2 + 1) * Rational(z1 - zn + n - 1) * Rational(z2 - zn + n - 2) /
           (Rational(n) * Rational(n - 1) * Rational(n - 1) * Rational(n - 2) * Rational(n - 2) *
            Rational(n - 2)) *
           binomial(k + n - 2, n - 3) * binomial(z1 - k + n - 2, n - 3) *
           binomial(z2 - k + n - 3, n - 3) * binomial(k - zn + n - 3, n - 3);
}

}  // namespace detail

// Total eigenvalue multiplicity branch_mult * dim(base) * prod dim(fiber),
// through the factored closed forms of the spectrum theorems.
inline long long multiplicity(const FamilyId& id, const SphericalRep& rep) {
    auto check = is_spherical(id, rep.base, rep.fiber);
    if (!check) throw std::domain_error("multiplicity: representation not admissible");
    int n = id.rank;
    Rational m(0);
    switch (id.family) {
        case Family::SasakiA: {
            int z1 = rep.base[0], z2 = rep.base[1], f = rep.fiber[0];
            if (n == 2)
                m = Rational(f + 1) * Rational(z1 - z2 + 1) * Rational(z1 + 2) * Rational(z2 + 1) /
                    Rational(2);
            else
                m = detail::su_block_mult_closed(n, z1, z2, rep.base[n - 1], check->k, f);
            break;
        }
        case Family::SasakiBD: {
            int z1 = rep.base[0], z2 = rep.base[1], f = rep.fiber[0];
            if (n == 5)
                m = Rational(z1 + z2 + 2) * Rational(z1 - z2 + 1) * Rational(2 * z1 + 3) *
                    Rational(2 * z2 + 1) * Rational(2 * z2 + 1) / Rational(6);
            else
                m = detail::so_dimension_closed(n, z1, z2) * Rational(f + 1) *
                    Rational(check->branch_mult);
            break;
        }
        case Family::SasakiCSphere:
        case Family::SasakiCProjective: {
            int z1 = rep.base[0], z2 = rep.base[1];
            m = Rational(z1 - z2 + 1) * Rational(z1 - z2 + 1) * Rational(z1 + z2 + 2 * n - 1) /
                (Rational(2 * n - 1) * Rational(2 * n - 2)) * binomial(z1 + 2 * n - 2, 2 * n - 3) *
                binomial(z2 + 2 * n - 3, 2 * n - 3);
            break;
        }
        case Family::StiefelReal: {
            int z1 = rep.base[0];
            int z2 = rep.base.size() >= 2 ? rep.base[1] : 0;
            if (n == 3)
                m = Rational(2 * z1 + 1);
            else if (n == 4)
                m = Rational(z1 + z2 + 1) * Rational(z1 - z2 + 1);
            else
                m = detail::so_dimension_closed(n, z1, z2);
            break;
        }
        case Family::StiefelComplex: {
            int z1 = rep.base[0], z2 = rep.base[1], f = rep.fiber[0];
            if (n == 2)
                m = Rational(f + 1) * Rational(z1 - z2 + 1) * Rational(z1 + 2) * Rational(z2 + 1) /
                    Rational(2);
            else
                m = detail::su_block_mult_closed(n, z1, z2, rep.base[n - 1], check->k, f);
            break;
        }
    }
    if (!m.is_integer() || m.sign() <= 0)
        throw std::logic_error("multiplicity: closed form did not produce a positive integer");
    return m.to_ll();
}

// ---- Complete spectrum below a cutoff ---------------------------------------

struct SpectrumContributor {
    SphericalRep rep;
    EigenvalueTerm term;
    long long mult;
};

struct SpectrumEntry {
    QuadExt value;
    long long total_mult;
    std::vector<SpectrumContributor> contributors;
};

struct CompletenessBound {
    long long weight_box = 0;  // largest top weight enumerated
    std::string justification;
};

struct SpectrumTable {
    FamilyId family;
    MetricParams params;
    QuadExt cutoff;
    std::vector<SpectrumEntry> entries;
    std::vector<SpectrumEntry> diagnostics;  // nonpositive evaluations, never dropped
    CompletenessBound bound;
};

class IncompleteEnumerationError : public std::runtime_error {
public:
    explicit IncompleteEnumerationError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Fiber-to-base Casimir ratio bounds r_i with c_fiber_i <= r_i * c_base over
// all admissible representations of the family.
inline std::vector<Rational> fiber_ratio_bounds(const FamilyId& id) {
    if (id.family == Family::StiefelComplex)
        return {Rational(1), Rational(4LL * (id.rank + 1), id.rank - 1)};
    return {Rational(1)};
}

struct QuadLess {
    bool operator()(const QuadExt& a, const QuadExt& b) const { return QuadExt::cmp(a, b) < 0; }
};

}  // namespace detail

// Every positive eigenvalue <= cutoff with aggregated multiplicity, sorted
// ascending, together with the certified weight box. box_scale > 1
// over-enumerates the box by that factor (used by the completeness tests).
inline SpectrumTable enumerate_spectrum(const FamilyId& id, const MetricParams& params,
                                        const QuadExt& cutoff, int box_scale = 1) {
    if (cutoff.sign() <= 0) throw std::domain_error("enumerate_spectrum: cutoff must be positive");
    if (static_cast<int>(params.scales.size()) != id.fiber_count() + 1)
        throw std::domain_error("enumerate_spectrum: parameter arity mismatch for family");

    std::vector<Rational> ratios = detail::fiber_ratio_bounds(id);
    QuadExt w0 = QuadExt(Rational(1)) / params.scales[0];
    QuadExt rho = w0;
    for (std::size_t i = 1; i < params.scales.size(); ++i) {
        QuadExt diff = QuadExt(Rational(1)) / params.scales[i] - w0;
        if (diff.sign() < 0) rho += QuadExt(ratios[i - 1]) * diff;
    }
    if (rho.sign() <= 0)
        throw IncompleteEnumerationError(
            "enumerate_spectrum: completeness bound fails for " + id.name() +
            ": eta >= c_base * rho with rho = 1/t0 + sum_i r_i * min(0, 1/t_i - 1/t0) <= 0 "
            "(fiber ratio bounds r = {1" +
            (ratios.size() > 1 ? ", " + ratios[1].to_string() : std::string()) +
            "}); the eigenvalue set below the cutoff cannot be certified finite");

    long long wbox = 0;
    while (QuadExt(casimir_base_floor(id, wbox + 1)) * rho <= cutoff) {
        ++wbox;
        if (wbox > 4000)
            throw IncompleteEnumerationError(
                "enumerate_spectrum: weight box exceeds hard limit 4000");
    }
    long long wmax = box_scale > 1 ? (wbox + 1) * box_scale - 1 : wbox;

    std::map<QuadExt, SpectrumEntry, detail::QuadLess> agg;
    std::vector<SpectrumEntry> diagnostics;
    for (long long z1 = 0; z1 <= wmax; ++z1) {
        detail::for_each_admissible(id, static_cast<int>(z1), [&](const SphericalRep& r) {
            if (r.is_trivial()) return;
            EigenvalueTerm term = eigenvalue_term(id, r);
            QuadExt v = evaluate(term, params);
            if (QuadExt::cmp(v, cutoff) > 0) return;
            long long mult = multiplicity(id, r);
            if (v.sign() <= 0) {
                SpectrumEntry e{v, mult, {{r, term, mult}}};
                diagnostics.push_back(std::move(e));
                return;
            }
            auto& entry = agg[v];
            entry.value = v;
            entry.total_mult += mult;
            entry.contributors.push_back({r, term, mult});
        });
    }

    SpectrumTable table{id, params, cutoff, {}, std::move(diagnostics), {}};
    for (auto& [v, e] : agg) table.entries.push_back(std::move(e));
    table.bound.weight_box = wmax;
    table.bound.justification =
        "certified: any admissible representation with top weight z1 > " +
        std::to_string(wbox) + " has eta >= casimir_floor(z1) * rho > cutoff; casimir_floor(" +
        std::to_string(wbox + 1) + ") = " + casimir_base_floor(id, wbox + 1).to_string();
    return table;
}

// First positive eigenvalue via the closed-form basic/mixed candidates, with
// the minimizing representations attached.
struct FirstEigenvalue {
    QuadExt value;
    std::vector<SphericalRep> witnesses;
};

inline FirstEigenvalue first_eigenvalue(const FamilyId& id, const MetricParams& params) {
    int n = id.rank;
    std::vector<SphericalRep> basic, mixed;
    auto admit = [&](std::vector<int> base, std::vector<int> fiber) -> SphericalRep {
        auto r = is_spherical(id, base, fiber);
        if (!r) throw std::logic_error("first_eigenvalue: candidate not admissible");
        return *r;
    };
    switch (id.family) {
        case Family::SasakiA: {
            std::vector<int> b(n, 1);
            b[0] = 2;
            basic.push_back(admit(b, {0}));
            mixed.push_back(admit(b, {2}));
            break;
        }
        case Family::SasakiBD: {
            std::vector<int> b(n / 2, 0);
            b[0] = 1;
            basic.push_back(admit(b, {0}));
            std::vector<int> bm(n / 2, 0);
            bm[0] = 1;
            bm[1] = 1;
            mixed.push_back(admit(bm, {2}));
            break;
        }
        case Family::SasakiCSphere: {
            std::vector<int> b(n, 0);
            b[0] = 1;
            b[1] = 1;
            basic.push_back(admit(b, {0}));
            std::vector<int> bm(n, 0);
            bm[0] = 1;
            mixed.push_back(admit(bm, {1}));
            break;
        }
        case Family::SasakiCProjective: {
            std::vector<int> b(n, 0);
            b[0] = 1;
            b[1] = 1;
            basic.push_back(admit(b, {0}));
            std::vector<int> bm(n, 0);
            bm[0] = 2;
            mixed.push_back(admit(bm, {2}));
            break;
        }
        case Family::StiefelReal: {
            int m = n;
            if (m == 3) {
                basic.push_back(admit({2}, {0}));
                mixed.push_back(admit({1}, {1}));
                mixed.push_back(admit({1}, {-1}));
            } else {
                std::vector<int> b(m / 2, 0);
                b[0] = 1;
                b[1] = 1;
                basic.push_back(admit(b, {0}));
                if (m == 4) {
                    std::vector<int> b2(2, 0);
                    b2[0] = 1;
                    b2[1] = -1;
                    basic.push_back(admit(b2, {0}));
                }
                std::vector<int> bm(m / 2, 0);
                bm[0] = 1;
                mixed.push_back(admit(bm, {1}));
                mixed.push_back(admit(bm, {-1}));
            }
            break;
        }
        case Family::StiefelComplex: {
            std::vector<int> b(n, 1);
            b[n - 1] = 0;
            basic.push_back(admit(b, {0, 0}));
            std::vector<int> bm(n, 0);
            bm[0] = 1;
            mixed.push_back(admit(bm, {1, -1}));
            break;
        }
    }
    QuadExt vb = evaluate(eigenvalue_term(id, basic[0]), params);
    QuadExt vm = evaluate(eigenvalue_term(id, mixed[0]), params);
    int c = QuadExt::cmp(vb, vm);
    FirstEigenvalue out;
    out.value = c <= 0 ? vb : vm;
    if (c <= 0)
        for (auto& r : basic) out.witnesses.push_back(r);
    if (c >= 0)
        for (auto& r : mixed) out.witnesses.push_back(r);
    return out;
}

}  // namespace homspec
