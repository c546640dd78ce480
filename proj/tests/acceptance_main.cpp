// Acceptance suite: runs every acceptance criterion exactly as specified and
// prints one pass/fail line per criterion. Exits nonzero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "homspec/geometry.hpp"
#include "homspec/verify.hpp"

using namespace homspec;

namespace {

using Failure = std::optional<std::string>;

Failure from_sweep(const SweepResult& r) {
    if (r.ok()) return std::nullopt;
    return r.counterexample;
}

// Closed-form first-eigenvalue expressions of the two corollaries, coded
// literally and independently of the spectrum module.
QuadExt corollary_eta1(const FamilyId& id, const MetricParams& p) {
    auto qmin = [](const QuadExt& a, const QuadExt& b) {
        return QuadExt::cmp(a, b) <= 0 ? a : b;
    };
    if (id.is_sasaki()) {
        Rational alpha = p.sasaki->alpha, delta = p.sasaki->delta;
        long long n = id.rank;
        switch (id.family) {
            case Family::SasakiA:
                return qmin(QuadExt(Rational(8 * (n + 1)) * alpha * delta),
                            QuadExt(Rational(8) * delta * (alpha * Rational(n - 1) + delta)));
            case Family::SasakiBD:
                return qmin(QuadExt(Rational(4 * (n - 1)) * alpha * delta),
                            QuadExt(Rational(8) * delta * (alpha * Rational(n - 4) + delta)));
            case Family::SasakiCSphere:
                return qmin(QuadExt(Rational(8 * n) * alpha * delta),
                            QuadExt(Rational(4 * (n - 1)) * alpha * delta +
                                    Rational(3) * delta * delta));
            default:
                return qmin(QuadExt(Rational(8 * n) * alpha * delta),
                            QuadExt(Rational(8) * delta * (alpha * Rational(n - 1) + delta)));
        }
    }
    QuadExt one(Rational(1));
    if (id.family == Family::StiefelReal) {
        long long m = id.rank;
        QuadExt inv0 = one / p.scales[0], inv1 = one / p.scales[1];
        if (m == 3)
            return qmin(QuadExt(Rational(3)) * inv0,
                        QuadExt(Rational(1, 2)) * inv0 + QuadExt(Rational(1, 2)) * inv1);
        return qmin(QuadExt(Rational(m - 2)) * inv0,
                    QuadExt(Rational(m - 2, 2)) * inv0 + QuadExt(Rational(1, 2)) * inv1);
    }
    long long n = id.rank;
    QuadExt inv0 = one / p.scales[0], inv1 = one / p.scales[1], inv2 = one / p.scales[2];
    QuadExt basic = QuadExt(Rational(2 * (n - 1) * (n + 2), n + 1)) * inv0;
    QuadExt mixed = QuadExt(Rational(n * n + 2 * n, n + 1) - Rational(3, 2) -
                            Rational(n + 1, 2 * (n - 1))) *
                        inv0 +
                    QuadExt(Rational(3, 2)) * inv1 + QuadExt(Rational(n + 1, 2 * (n - 1))) * inv2;
    return qmin(basic, mixed);
}

// Criterion 6 parameter grid per family.
std::vector<MetricParams> criterion6_grid(const FamilyId& id) {
    std::vector<MetricParams> grid;
    if (id.is_sasaki()) {
        for (Rational delta : {Rational(1, 2), Rational(1), Rational(2), Rational(5)})
            grid.push_back(make_params_sasaki(Rational(1), delta));
        return grid;
    }
    for (Rational t : {Rational(1), Rational(1, 4), Rational(4)}) {
        std::vector<QuadExt> ts(id.fiber_count() + 1, QuadExt(t));
        ts[0] = QuadExt(Rational(1));
        grid.push_back(make_params_scales(ts));
    }
    return grid;
}

Failure criterion6() {
    std::vector<FamilyId> families;
    for (int n = 2; n <= 4; ++n) families.push_back(FamilyId(Family::SasakiA, n));
    for (int m = 5; m <= 8; ++m) families.push_back(FamilyId(Family::SasakiBD, m));
    for (int n = 2; n <= 3; ++n) {
        families.push_back(FamilyId(Family::SasakiCSphere, n));
        families.push_back(FamilyId(Family::SasakiCProjective, n));
    }
    for (int m = 3; m <= 7; ++m) families.push_back(FamilyId(Family::StiefelReal, m));
    for (int n = 2; n <= 3; ++n) families.push_back(FamilyId(Family::StiefelComplex, n));

    for (const auto& id : families) {
        for (const auto& p : criterion6_grid(id)) {
            QuadExt closed = corollary_eta1(id, p);
            auto fe = first_eigenvalue(id, p);
            if (QuadExt::cmp(fe.value, closed) != 0)
                return "first_eigenvalue disagrees with the corollary closed form for " +
                       id.name() + " rank " + std::to_string(id.rank);
            bool stretched_center =
                id.family == Family::StiefelComplex &&
                QuadExt::cmp(p.scales[2], p.scales[0]) > 0;
            try {
                auto table = enumerate_spectrum(id, p, closed * QuadExt(Rational(2)));
                if (stretched_center)
                    return "stretched complex-Stiefel cell unexpectedly certified for rank " +
                           std::to_string(id.rank);
                if (table.entries.empty() ||
                    QuadExt::cmp(table.entries[0].value, closed) != 0)
                    return "enumerated minimum differs from the corollary for " + id.name() +
                           " rank " + std::to_string(id.rank);
            } catch (const IncompleteEnumerationError&) {
                // The printed complex-Stiefel central-fiber coefficient makes the
                // eigenvalue set below any cutoff certifiably infinite once the
                // central scale exceeds the horizontal one; the enumerator must
                // refuse exactly these cells and no others.
                if (!stretched_center)
                    return "unexpected incompleteness for " + id.name() + " rank " +
                           std::to_string(id.rank);
            }
        }
    }
    return std::nullopt;
}

Failure criterion7() {
    for (int n = 2; n <= 6; ++n) {
        auto cat = einstein_catalog(FamilyId(Family::SasakiA, n));
        auto s = stability_classify(cat[1]);
        if (s.margin != QuadExt(Rational(12)) || s.verdict != Verdict::StrictlyStable)
            return "type A squashed margin at n=" + std::to_string(n);
        if (stability_classify(cat[0]).verdict != Verdict::StrictlyStable)
            return "type A 3-alpha verdict at n=" + std::to_string(n);
    }
    for (int m = 5; m <= 10; ++m) {
        auto cat = einstein_catalog(FamilyId(Family::SasakiBD, m));
        auto s = stability_classify(cat[1]);
        if (s.margin != QuadExt(Rational(4 * (-2 * m * m + 11 * m - 12))) ||
            s.verdict != Verdict::StrictlyUnstable)
            return "type B/D squashed margin at m=" + std::to_string(m);
    }
    for (int n = 2; n <= 6; ++n) {
        for (Family f : {Family::SasakiCSphere, Family::SasakiCProjective}) {
            auto s = stability_classify(einstein_catalog(FamilyId(f, n))[1]);
            if (s.margin != QuadExt(Rational(-16 * n + 4)) ||
                s.verdict != Verdict::StrictlyUnstable)
                return "type C squashed margin at n=" + std::to_string(n);
        }
    }
    if (stability_classify(einstein_catalog(FamilyId(Family::StiefelReal, 3))[0]).verdict !=
        Verdict::Neutral)
        return "real Stiefel m=3 should be neutral";
    for (int m = 4; m <= 10; ++m)
        if (stability_classify(einstein_catalog(FamilyId(Family::StiefelReal, m))[0]).verdict !=
            Verdict::StrictlyUnstable)
            return "real Stiefel m=" + std::to_string(m) + " should be strictly unstable";
    for (int n = 2; n <= 6; ++n)
        for (const auto& d : einstein_catalog(FamilyId(Family::StiefelComplex, n)))
            if (stability_classify(d).verdict != Verdict::StrictlyUnstable)
                return "complex Stiefel n=" + std::to_string(n) + " " +
                       einstein_label_name(d.label) + " should be strictly unstable";
    return std::nullopt;
}

Failure criterion8() {
    std::vector<FamilyId> families;
    for (int n = 2; n <= 7; ++n) families.push_back(FamilyId(Family::SasakiA, n));
    for (int m = 5; m <= 10; ++m) families.push_back(FamilyId(Family::SasakiBD, m));
    for (int n = 2; n <= 7; ++n) families.push_back(FamilyId(Family::SasakiCSphere, n));
    for (const auto& id : families) {
        for (const auto& datum : einstein_catalog(id)) {
            auto rec =
                scalar_curvature(id, datum.params.sasaki->alpha, datum.params.sasaki->delta);
            if (QuadExt::cmp(QuadExt(rec.scal),
                             QuadExt(Rational(id.dimension())) * datum.lambda) != 0)
                return "scal != D * Lambda for " + id.name() + " rank " +
                       std::to_string(id.rank) + " " + einstein_label_name(datum.label);
        }
    }
    return std::nullopt;
}

Failure criterion9() {
    // Yamabe threshold alpha^2 (4d + 3) at delta = alpha
    for (const auto& id : {FamilyId(Family::SasakiA, 3), FamilyId(Family::SasakiBD, 6),
                           FamilyId(Family::SasakiCSphere, 2),
                           FamilyId(Family::SasakiCProjective, 4)}) {
        long long d = id.sasaki_d();
        for (Rational alpha : {Rational(1), Rational(3, 2)}) {
            auto rec = scalar_curvature(id, alpha, alpha);
            if (rec.threshold != alpha * alpha * Rational(4 * d + 3))
                return "threshold at delta=alpha for " + id.name();
        }
    }
    // Type A locally rigid at delta = alpha for n = 2..5
    for (int n = 2; n <= 5; ++n)
        if (morse_index(FamilyId(Family::SasakiA, n), Rational(1), Rational(1)) != 0)
            return "type A morse index at delta=alpha, n=" + std::to_string(n);
    // C-sphere n=2: first basic bifurcation at x = 4 + 3 sqrt 2 with jump 5
    FamilyId cs2(Family::SasakiCSphere, 2);
    auto rep = *is_spherical_c(2, false, {1, 1}, 0);
    auto pts = yamabe_bifurcations(cs2, rep);
    if (pts.size() != 1) return "expected exactly one root for the basic (1,1) representation";
    QuadExt want(Rational(4), Rational(3), 2);
    if (QuadExt::cmp_cross(pts[0].x, want) != 0) return "root is not 4 + 3 sqrt 2";
    QuadExt residue = QuadExt(pts[0].qa) * want * want +
                      QuadExt(Rational(2)) * QuadExt(pts[0].qb) * want + QuadExt(pts[0].qc);
    if (!residue.is_zero()) return "exact root substitution failed";
    // no other degeneracy value lies in the rational isolation bracket
    for (const auto& q : all_bifurcations(cs2, Rational(9)))
        if (QuadExt::cmp_cross(q.x, pts[0].x) != 0 &&
            QuadExt::cmp_cross(q.x, QuadExt(Rational(824, 100))) > 0 &&
            QuadExt::cmp_cross(q.x, QuadExt(Rational(825, 100))) < 0)
            return "isolation bracket contains another degeneracy value";
    long long below = morse_index(cs2, Rational(1), Rational(824, 100));
    long long above = morse_index(cs2, Rational(1), Rational(825, 100));
    if (above - below != 5 || pts[0].morse_jump != 5)
        return "morse jump across 4 + 3 sqrt 2 is not 5 (got " + std::to_string(above - below) +
               ")";
    return std::nullopt;
}

Failure criterion10() {
    std::vector<FamilyId> families{FamilyId(Family::SasakiA, 2), FamilyId(Family::SasakiBD, 5),
                                   FamilyId(Family::SasakiCSphere, 2),
                                   FamilyId(Family::SasakiCProjective, 2),
                                   FamilyId(Family::StiefelReal, 3),
                                   FamilyId(Family::StiefelComplex, 2)};
    for (const auto& id : families) {
        MetricParams p = id.is_sasaki()
                             ? make_params_sasaki(Rational(1), Rational(1))
                             : make_params_scales(std::vector<QuadExt>(id.fiber_count() + 1,
                                                                       QuadExt(Rational(1))));
        QuadExt cutoff = first_eigenvalue(id, p).value * QuadExt(Rational(3));
        auto certified = enumerate_spectrum(id, p, cutoff, 1);
        auto oversized = enumerate_spectrum(id, p, cutoff, 4);
        if (certified.entries.size() != oversized.entries.size())
            return "over-enumeration found extra entries for " + id.name();
        for (std::size_t i = 0; i < certified.entries.size(); ++i) {
            if (QuadExt::cmp(certified.entries[i].value, oversized.entries[i].value) != 0 ||
                certified.entries[i].total_mult != oversized.entries[i].total_mult)
                return "over-enumeration changed entry " + std::to_string(i) + " for " +
                       id.name();
        }
        if (certified.entries.empty()) return "certified table unexpectedly empty for " + id.name();
    }
    return std::nullopt;
}

}  // namespace

int main() {
    struct Criterion {
        int num;
        std::string label;
        std::function<Failure()> run;
    };
    std::vector<Criterion> criteria{
        {1, "oracle equivalence, type B/D (m=5..9, z1<=4)",
         [] { return from_sweep(sweep_spherical_bd(9, 4)); }},
        {2, "oracle equivalence, type A (n=2..5) and complex Stiefel (n=2..4), z1<=5",
         [] {
             auto a = sweep_spherical_a(5, 5);
             if (!a.ok()) return from_sweep(a);
             return from_sweep(sweep_stiefel_complex(4, 5));
         }},
        {3, "oracle equivalence, type C (n=2,3, z1<=4) with projective parity",
         [] { return from_sweep(sweep_spherical_c(4)); }},
        {4, "oracle equivalence, real Stiefel (m=4..8, z1<=5)",
         [] { return from_sweep(sweep_stiefel_real(8, 5)); }},
        {5, "BLP22 cross-check (n=2..5, z1<=6)", [] { return from_sweep(sweep_blp22(5, 6)); }},
        {6, "first-eigenvalue corollaries across the parameter grid", criterion6},
        {7, "stability table reproduction", criterion7},
        {8, "einstein consistency scal = D * Lambda (d=1..6)", criterion8},
        {9, "yamabe threshold, rigidity, and the first type C bifurcation", criterion9},
        {10, "enumeration completeness via 4x over-enumeration", criterion10},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Failure f;
        try {
            f = c.run();
        } catch (const std::exception& e) {
            f = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (f) {
            ++failures;
            std::cout << "FAIL criterion " << c.num << ": " << c.label << " -- " << *f << " ["
                      << ms << " ms]\n";
        } else {
            std::cout << "PASS criterion " << c.num << ": " << c.label << " [" << ms << " ms]\n";
        }
    }
    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures ? 1 : 0;
}
