#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "homspec/spectrum.hpp"

namespace homspec {

// ---- Scalar curvature and the Yamabe threshold ------------------------------

struct ScalRecord {
    FamilyId family;
    MetricParams params;
    Rational scal;
    Rational threshold;  // scal / (D - 1)
};

// scal = 2(8d(d+2) alpha delta - 6d alpha^2 + 3 delta^2) for the Sasaki
// families; the Stiefel scalar curvature functions are out of scope.
inline ScalRecord scalar_curvature(const FamilyId& id, const Rational& alpha,
                                   const Rational& delta) {
    if (!id.is_sasaki())
        throw std::domain_error("scalar_curvature: supported for Sasaki families only");
    long long d = id.sasaki_d();
    Rational scal = Rational(2) * (Rational(8 * d * (d + 2)) * alpha * delta -
                                   Rational(6 * d) * alpha * alpha +
                                   Rational(3) * delta * delta);
    ScalRecord rec{id, make_params_sasaki(alpha, delta), scal,
                   scal / Rational(id.dimension() - 1)};
    return rec;
}

// ---- Einstein parameter catalog ---------------------------------------------

enum class EinsteinLabel {
    Sasaki3Alpha,
    SasakiSquashed,
    StiefelJensen,
    StiefelComplexPlus,
    StiefelComplexMinus,
};

inline std::string einstein_label_name(EinsteinLabel l) {
    switch (l) {
        case EinsteinLabel::Sasaki3Alpha: return "3alpha";
        case EinsteinLabel::SasakiSquashed: return "squashed";
        case EinsteinLabel::StiefelJensen: return "jensen";
        case EinsteinLabel::StiefelComplexPlus: return "plus";
        case EinsteinLabel::StiefelComplexMinus: return "minus";
    }
    return "?";
}

struct EinsteinDatum {
    FamilyId family;
    EinsteinLabel label;
    MetricParams params;
    QuadExt lambda;  // Einstein constant
};

// Normalized at alpha = 1 for the Sasaki families and t0 = 1 for the Stiefel
// families.
inline std::vector<EinsteinDatum> einstein_catalog(const FamilyId& id) {
    std::vector<EinsteinDatum> out;
    if (id.is_sasaki()) {
        long long d = id.sasaki_d();
        out.push_back({id, EinsteinLabel::Sasaki3Alpha, make_params_sasaki(Rational(1), Rational(1)),
                       QuadExt(Rational(2 * (2 * d + 1)))});
        out.push_back({id, EinsteinLabel::SasakiSquashed,
                       make_params_sasaki(Rational(1), Rational(2 * d + 3)),
                       QuadExt(Rational(2 * (4 * d * d + 14 * d + 9)))});
        return out;
    }
    if (id.family == Family::StiefelReal) {
        long long m = id.rank;
        MetricParams p = make_params_scales(
            {QuadExt(Rational(1)), QuadExt(Rational(2 * (m - 2), m - 1))});
        out.push_back({id, EinsteinLabel::StiefelJensen, p,
                       QuadExt(Rational((m - 2) * (m - 2), m - 1))});
        return out;
    }
    long long n = id.rank;
    QuadExt x = QuadExt::sqrt_of(Rational(n * n - 2 * n, n * n - 1));
    for (bool plus : {true, false}) {
        QuadExt sx = plus ? x : -x;
        QuadExt t1 = QuadExt(Rational(1)) + sx;
        QuadExt t2 = QuadExt(Rational(n - 1, (n + 1) * (2 * n - 1))) *
                     (QuadExt(Rational(4 * n + 1)) - QuadExt(Rational(3)) * sx);
        MetricParams p = make_params_scales({QuadExt(Rational(1)), t1, t2});
        QuadExt lambda = QuadExt(Rational(n + 1, 2)) * t2;
        out.push_back({id,
                       plus ? EinsteinLabel::StiefelComplexPlus : EinsteinLabel::StiefelComplexMinus,
                       p, lambda});
    }
    return out;
}

// ---- Scalar nu-stability ----------------------------------------------------

enum class Verdict { StrictlyStable, Neutral, StrictlyUnstable };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::StrictlyStable: return "strictly-stable";
        case Verdict::Neutral: return "neutral";
        case Verdict::StrictlyUnstable: return "strictly-unstable";
    }
    return "?";
}

struct StabilityReport {
    EinsteinDatum datum;
    QuadExt eta1;
    QuadExt threshold;  // 2 Lambda
    QuadExt margin;     // eta1 - 2 Lambda
    Verdict verdict;
    std::vector<SphericalRep> witnesses;
    std::vector<std::string> notes;
};

inline StabilityReport stability_classify(const EinsteinDatum& datum) {
    FirstEigenvalue fe = first_eigenvalue(datum.family, datum.params);
    StabilityReport rep{datum, fe.value, QuadExt(Rational(2)) * datum.lambda, QuadExt(0),
                        Verdict::Neutral, fe.witnesses, {}};
    rep.margin = rep.eta1 - rep.threshold;
    int s = rep.margin.sign();
    rep.verdict = s > 0   ? Verdict::StrictlyStable
                  : s < 0 ? Verdict::StrictlyUnstable
                          : Verdict::Neutral;
    if (datum.family.family == Family::SasakiCSphere &&
        datum.label == EinsteinLabel::Sasaki3Alpha) {
        rep.notes.push_back(
            "round sphere: first eigenfunctions generate non-isometric conformal "
            "transformations, so the spectral verdict does not transfer to geometric "
            "nu-instability or Yamabe non-rigidity");
    }
    return rep;
}

// ---- Yamabe bifurcations and Morse index ------------------------------------

class DegeneratePointError : public std::runtime_error {
public:
    DegeneratePointError(const std::string& what, std::vector<SphericalRep> crossing)
        : std::runtime_error(what), crossing_reps(std::move(crossing)) {}
    std::vector<SphericalRep> crossing_reps;
};

struct BifurcationPoint {
    QuadExt x;  // degeneracy value of delta/alpha
    std::vector<SphericalRep> crossing_reps;
    long long morse_jump = 0;
    Rational qa, qb, qc;  // quadratic qa x^2 + 2 qb x + qc = 0
};

namespace detail {

// Quadratic coefficients of eta(x) - scal/(D-1) at alpha = 1, delta = x,
// derived by substituting the Sasaki eigenvalue formula into the threshold.
struct BifQuadratic {
    Rational a, b, c;  // a x^2 + 2 b x + c
};

inline BifQuadratic bifurcation_quadratic(const FamilyId& id, const Rational& c_base,
                                          const Rational& c_fiber) {
    long long d = id.sasaki_d();
    // eta(x) = c_fiber x^2 + 2 (c_base - c_fiber) x
    // T(x)  = (3 x^2 + 8 d (d+2) x - 6 d) / (2 d + 1)
    Rational a = c_fiber - Rational(3, 2 * d + 1);
    Rational b = c_base - c_fiber - Rational(4 * d * (d + 2), 2 * d + 1);
    Rational c = Rational(6 * d, 2 * d + 1);
    return {a, b, c};
}

// Printed master-equation coefficients; kept separate so the derivation above
// can be checked against them.
inline BifQuadratic bifurcation_quadratic_printed(long long d, const Rational& c_base,
                                                  const Rational& c_fiber) {
    return {c_fiber - Rational(3, 2 * d + 1),
            c_base - c_fiber - Rational(4 * d * (d + 2), 2 * d + 1), Rational(6 * d, 2 * d + 1)};
}

// Positive simple roots of f(x) = a x^2 + 2 b x + c, each tagged with the
// Morse index jump direction: +1 where f crosses from + to - (the eigenvalue
// drops below the threshold), -1 for the reverse. Tangential double roots do
// not change the Morse index and are not bifurcation points.
inline std::vector<std::pair<QuadExt, int>> positive_simple_roots(const BifQuadratic& q) {
    std::vector<std::pair<QuadExt, int>> roots;
    auto direction = [&](const QuadExt& x) {
        QuadExt deriv = QuadExt(q.a) * x + QuadExt(q.b);
        return -deriv.sign();
    };
    if (q.a.is_zero()) {
        if (q.b.is_zero()) return roots;
        Rational x = -q.c / (Rational(2) * q.b);
        if (x.sign() > 0) roots.emplace_back(QuadExt(x), direction(QuadExt(x)));
        return roots;
    }
    Rational disc = q.b * q.b - q.a * q.c;
    if (disc.sign() <= 0) return roots;  // no real crossing, or tangency
    QuadExt sq = QuadExt::sqrt_of(disc);
    for (int s : {-1, 1}) {
        QuadExt x = (QuadExt(-q.b) + (s > 0 ? sq : -sq)) / QuadExt(q.a);
        if (x.sign() > 0) roots.emplace_back(x, direction(x));
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return QuadExt::cmp_cross(a.first, b.first) < 0; });
    return roots;
}

// Rational upper bound for the base Casimir of any representation that can
// cross the threshold at some x in (0, x_hi]. From c_fiber <= c_base,
// eta(x) >= c_base * phi(x) with phi(x) = min(x^2, 2x), so a crossing needs
// c_base <= T(x)/phi(x); that ratio vanishes at the threshold root, is
// unimodal in x on (0, 2] and increasing on [2, oo), so its maximum over the
// window is attained at one of finitely many rational candidates.
inline Rational crossing_casimir_bound(const FamilyId& id, const Rational& x_hi) {
    long long d = id.sasaki_d();
    auto threshold_at = [&](const Rational& x) {
        return (Rational(3) * x * x + Rational(8 * d * (d + 2)) * x - Rational(6 * d)) /
               Rational(2 * d + 1);
    };
    std::vector<Rational> candidates{Rational(3, 2 * (d + 2)), Rational(2), x_hi};
    Rational cap(0);
    for (const Rational& x : candidates) {
        if (x.sign() <= 0 || x > x_hi) continue;
        Rational t = threshold_at(x);
        if (t.sign() <= 0) continue;
        Rational phi = x < Rational(2) ? x * x : Rational(2) * x;
        Rational ratio = t / phi;
        if (ratio > cap) cap = ratio;
    }
    return cap;
}

}  // namespace detail

// All symmetry-breaking degeneracy values x = delta/alpha of one admissible
// representation, each with the complete list of simultaneously crossing
// representations and the resulting Morse index jump.
inline std::vector<BifurcationPoint> yamabe_bifurcations(const FamilyId& id,
                                                         const SphericalRep& rep) {
    if (!id.is_sasaki())
        throw std::domain_error("yamabe_bifurcations: supported for Sasaki families only");
    auto check = is_spherical(id, rep.base, rep.fiber);
    if (!check) throw std::domain_error("yamabe_bifurcations: representation not admissible");
    // the zero eigenvalue of the trivial representation is not a spectral
    // line; the quadratic's root there is where the threshold itself vanishes
    if (rep.is_trivial()) return {};
    Rational c_base = casimir_base(id, rep.base);
    Rational c_fiber = casimir_fibers(id, rep.fiber).at(0);
    auto q = detail::bifurcation_quadratic(id, c_base, c_fiber);
    std::vector<BifurcationPoint> out;
    for (const auto& [x, dir] : detail::positive_simple_roots(q)) {
        (void)dir;
        BifurcationPoint pt;
        pt.x = x;
        pt.qa = q.a;
        pt.qb = q.b;
        pt.qc = q.c;
        // gather every representation crossing at this exact x
        Rational x_hi_bound = Rational(x.scaled_floor(0).to_ll() + 2);
        Rational cap = detail::crossing_casimir_bound(id, x_hi_bound);
        Rational floor_cap = cap.sign() > 0 ? cap : Rational(1);
        for (const SphericalRep& other : enumerate_spherical(id, floor_cap)) {
            if (other.is_trivial()) continue;
            auto q2 = detail::bifurcation_quadratic(id, casimir_base(id, other.base),
                                                    casimir_fibers(id, other.fiber).at(0));
            for (const auto& [y, dir2] : detail::positive_simple_roots(q2)) {
                if (QuadExt::cmp_cross(x, y) == 0) {
                    pt.crossing_reps.push_back(other);
                    pt.morse_jump += dir2 * multiplicity(id, other);
                }
            }
        }
        out.push_back(std::move(pt));
    }
    return out;
}

// Every bifurcation point with x <= x_max across all representations,
// deduplicated and sorted by x.
inline std::vector<BifurcationPoint> all_bifurcations(const FamilyId& id, const Rational& x_max) {
    if (!id.is_sasaki())
        throw std::domain_error("all_bifurcations: supported for Sasaki families only");
    if (x_max.sign() <= 0) throw std::domain_error("all_bifurcations: x_max must be positive");
    Rational cap = detail::crossing_casimir_bound(id, x_max);
    std::vector<BifurcationPoint> out;
    if (cap.sign() <= 0) return out;
    std::vector<std::tuple<QuadExt, int, SphericalRep>> hits;
    for (const SphericalRep& rep : enumerate_spherical(id, cap)) {
        if (rep.is_trivial()) continue;
        auto q = detail::bifurcation_quadratic(id, casimir_base(id, rep.base),
                                               casimir_fibers(id, rep.fiber).at(0));
        for (const auto& [x, dir] : detail::positive_simple_roots(q))
            if (QuadExt::cmp_cross(x, QuadExt(x_max)) <= 0) hits.emplace_back(x, dir, rep);
    }
    std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
        int c = QuadExt::cmp_cross(std::get<0>(a), std::get<0>(b));
        if (c) return c < 0;
        return std::get<2>(a) < std::get<2>(b);
    });
    for (std::size_t i = 0; i < hits.size();) {
        std::size_t j = i;
        BifurcationPoint pt;
        pt.x = std::get<0>(hits[i]);
        while (j < hits.size() && QuadExt::cmp_cross(std::get<0>(hits[j]), pt.x) == 0) {
            pt.crossing_reps.push_back(std::get<2>(hits[j]));
            pt.morse_jump += std::get<1>(hits[j]) * multiplicity(id, std::get<2>(hits[j]));
            ++j;
        }
        auto q = detail::bifurcation_quadratic(
            id, casimir_base(id, pt.crossing_reps[0].base),
            casimir_fibers(id, pt.crossing_reps[0].fiber).at(0));
        pt.qa = q.a;
        pt.qb = q.b;
        pt.qc = q.c;
        out.push_back(std::move(pt));
        i = j;
    }
    return out;
}

// Number of positive eigenvalues strictly below scal/(D-1), with multiplicity.
inline long long morse_index(const FamilyId& id, const Rational& alpha, const Rational& delta) {
    if (!id.is_sasaki()) throw std::domain_error("morse_index: supported for Sasaki families only");
    ScalRecord rec = scalar_curvature(id, alpha, delta);
    if (rec.threshold.sign() <= 0) return 0;
    SpectrumTable table =
        enumerate_spectrum(id, rec.params, QuadExt(rec.threshold));
    long long count = 0;
    for (const auto& e : table.entries) {
        int c = QuadExt::cmp(e.value, QuadExt(rec.threshold));
        if (c == 0) {
            std::vector<SphericalRep> crossing;
            for (const auto& contrib : e.contributors) crossing.push_back(contrib.rep);
            throw DegeneratePointError("morse_index: degeneracy value, eigenvalue " +
                                           rec.threshold.to_string() +
                                           " equals the Yamabe threshold",
                                       std::move(crossing));
        }
        if (c < 0) count += e.total_mult;
    }
    return count;
}

}  // namespace homspec
