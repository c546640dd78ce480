#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "homspec/exact.hpp"
#include "homspec/rootdata.hpp"

namespace homspec {

enum class Family {
    SasakiA,            // SU(n+1)/S(U(n-1) x U(1)), n >= 2
    SasakiBD,           // SO(m)/(SO(m-4) x Sp(1)), m >= 5
    SasakiCSphere,      // Sp(n)/Sp(n-1) = S^{4n-1}, n >= 2
    SasakiCProjective,  // Sp(n)/(Sp(n-1) x Z_2) = RP^{4n-1}, n >= 2
    StiefelReal,        // SO(m)/SO(m-2) = V_2(R^m), m >= 3
    StiefelComplex,     // SU(n+1)/SU(n-1) = V_2(C^{n+1}), n >= 2
};

// One of the six homogeneous-bundle families together with its rank parameter
// (n for the unitary/symplectic families, m for the orthogonal ones).
struct FamilyId {
    Family family;
    int rank;

    FamilyId(Family f, int r) : family(f), rank(r) {
        int lo = min_rank(f);
        if (r < lo)
            throw std::domain_error("FamilyId: rank " + std::to_string(r) + " below minimum " +
                                    std::to_string(lo) + " for " + name());
    }

    static int min_rank(Family f) {
        switch (f) {
            case Family::SasakiBD: return 5;
            case Family::StiefelReal: return 3;
            default: return 2;
        }
    }

    bool is_sasaki() const {
        return family == Family::SasakiA || family == Family::SasakiBD ||
               family == Family::SasakiCSphere || family == Family::SasakiCProjective;
    }

    // Total manifold dimension.
    int dimension() const {
        switch (family) {
            case Family::SasakiA: return 4 * rank - 1;
            case Family::SasakiBD: return 4 * rank - 13;
            case Family::SasakiCSphere:
            case Family::SasakiCProjective: return 4 * rank - 1;
            case Family::StiefelReal: return 2 * rank - 3;
            case Family::StiefelComplex: return 4 * rank;
        }
        return 0;
    }

    // Sasaki dimension parameter d with dim = 4d + 3.
    int sasaki_d() const {
        switch (family) {
            case Family::SasakiA:
            case Family::SasakiCSphere:
            case Family::SasakiCProjective: return rank - 1;
            case Family::SasakiBD: return rank - 4;
            default: throw std::domain_error("sasaki_d: not a Sasaki family");
        }
    }

    // Number of independently scaled fiber factors.
    int fiber_count() const { return family == Family::StiefelComplex ? 2 : 1; }

    RootData base_root_data() const {
        switch (family) {
            case Family::SasakiA: return {GroupType::A, rank};
            case Family::SasakiBD: return {rank % 2 ? GroupType::B : GroupType::D, rank / 2};
            case Family::SasakiCSphere:
            case Family::SasakiCProjective: return {GroupType::C, rank};
            case Family::StiefelReal:
                return {rank % 2 ? GroupType::B : GroupType::D, rank / 2};
            case Family::StiefelComplex: return {GroupType::A, rank};
        }
        throw std::logic_error("base_root_data: unreachable");
    }

    std::string name() const {
        switch (family) {
            case Family::SasakiA: return "sasaki-a";
            case Family::SasakiBD: return "sasaki-bd";
            case Family::SasakiCSphere: return "sasaki-c-sphere";
            case Family::SasakiCProjective: return "sasaki-c-proj";
            case Family::StiefelReal: return "stiefel-real";
            case Family::StiefelComplex: return "stiefel-complex";
        }
        return "?";
    }

    static std::optional<FamilyId> parse(const std::string& name, int rank) {
        Family f;
        if (name == "sasaki-a")
            f = Family::SasakiA;
        else if (name == "sasaki-bd")
            f = Family::SasakiBD;
        else if (name == "sasaki-c-sphere")
            f = Family::SasakiCSphere;
        else if (name == "sasaki-c-proj")
            f = Family::SasakiCProjective;
        else if (name == "stiefel-real")
            f = Family::StiefelReal;
        else if (name == "stiefel-complex")
            f = Family::StiefelComplex;
        else
            return std::nullopt;
        return FamilyId(f, rank);
    }
};

struct SasakiView {
    Rational alpha;
    Rational delta;
};

// Scales (t0, t1[, t2]) of a generalized canonical variation, with the Sasaki
// (alpha, delta) view attached when the parameters came from that dictionary.
struct MetricParams {
    std::vector<QuadExt> scales;
    std::optional<SasakiView> sasaki;

    const QuadExt& t(std::size_t i) const { return scales.at(i); }
};

// t0 = 1/(2 alpha delta), t1 = 1/delta^2.
inline MetricParams make_params_sasaki(const Rational& alpha, const Rational& delta) {
    if (alpha.sign() <= 0 || delta.sign() <= 0)
        throw std::domain_error("make_params_sasaki: parameters must be positive");
    MetricParams p;
    p.scales.push_back(QuadExt(Rational(1) / (Rational(2) * alpha * delta)));
    p.scales.push_back(QuadExt(Rational(1) / (delta * delta)));
    p.sasaki = SasakiView{alpha, delta};
    return p;
}

inline MetricParams make_params_scales(std::vector<QuadExt> ts) {
    MetricParams p;
    for (const auto& t : ts)
        if (t.sign() <= 0) throw std::domain_error("metric scales must be positive");
    p.scales = std::move(ts);
    return p;
}

}  // namespace homspec
