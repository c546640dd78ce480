#pragma once

#include <sstream>
#include <string>

#include "json.hpp"

#include "homspec/geometry.hpp"
#include "homspec/spectrum.hpp"

namespace homspec {

using ordered_json = nlohmann::ordered_json;

inline std::string to_exact_string(const QuadExt& v) { return v.to_string(); }

// 30 significant digits, computed from the exact scaled floor.
inline std::string to_decimal_string(const QuadExt& v, int sig = 30) {
    if (v.is_zero()) return "0";
    bool neg = v.sign() < 0;
    QuadExt a = neg ? -v : v;
    const unsigned scale = 40;
    std::string digits = a.scaled_floor(scale).to_string();
    // value = digits * 10^-scale
    int point = static_cast<int>(digits.size()) - static_cast<int>(scale);  // digits before point
    // round to `sig` significant digits
    int keep = sig;
    std::string rounded = digits.substr(0, std::min<std::size_t>(digits.size(), keep));
    if (static_cast<int>(digits.size()) > keep && digits[keep] >= '5') {
        int i = static_cast<int>(rounded.size()) - 1;
        while (i >= 0 && rounded[i] == '9') rounded[i--] = '0';
        if (i < 0) {
            rounded.insert(rounded.begin(), '1');
            ++point;
        } else {
            ++rounded[i];
        }
    }
    while (rounded.size() > 1 && rounded.back() == '0' &&
           static_cast<int>(rounded.size()) > point)
        rounded.pop_back();  // trim trailing fraction zeros
    std::string out = neg ? "-" : "";
    if (point <= 0) {
        out += "0.";
        out += std::string(-point, '0');
        out += rounded;
    } else if (point >= static_cast<int>(rounded.size())) {
        out += rounded;
        out += std::string(point - rounded.size(), '0');
    } else {
        out += rounded.substr(0, point) + "." + rounded.substr(point);
    }
    return out;
}

inline ordered_json params_to_json(const FamilyId& id, const MetricParams& p) {
    ordered_json j;
    if (p.sasaki) {
        j["alpha"] = p.sasaki->alpha.to_string();
        j["delta"] = p.sasaki->delta.to_string();
    }
    for (std::size_t i = 0; i < p.scales.size(); ++i)
        j["t" + std::to_string(i)] = to_exact_string(p.scales[i]);
    (void)id;
    return j;
}

inline ordered_json contributor_to_json(const SpectrumContributor& c) {
    ordered_json j;
    j["base"] = c.rep.base;
    j["fiber"] = c.rep.fiber;
    j["branch_mult"] = c.rep.branch_mult;
    ordered_json term;
    term["a0"] = c.term.coeffs[0].to_string();
    term["a1"] = c.term.coeffs[1].to_string();
    if (c.term.coeffs.size() > 2) term["a2"] = c.term.coeffs[2].to_string();
    j["term"] = term;
    return j;
}

inline ordered_json table_to_json(const SpectrumTable& t) {
    ordered_json j;
    j["family"] = t.family.name();
    j["rank"] = t.family.rank;
    j["params"] = params_to_json(t.family, t.params);
    j["cutoff"] = to_exact_string(t.cutoff);
    j["complete"] = true;
    j["weight_box"] = t.bound.weight_box;
    j["completeness_bound"] = t.bound.justification;
    ordered_json entries = ordered_json::array();
    for (const auto& e : t.entries) {
        ordered_json je;
        je["value_exact"] = to_exact_string(e.value);
        je["value_decimal"] = to_decimal_string(e.value);
        je["multiplicity"] = e.total_mult;
        ordered_json cs = ordered_json::array();
        for (const auto& c : e.contributors) cs.push_back(contributor_to_json(c));
        je["contributors"] = cs;
        entries.push_back(je);
    }
    j["entries"] = entries;
    if (!t.diagnostics.empty()) {
        ordered_json ds = ordered_json::array();
        for (const auto& e : t.diagnostics) {
            ordered_json je;
            je["value_exact"] = to_exact_string(e.value);
            je["multiplicity"] = e.total_mult;
            je["note"] = "nonpositive eigenvalue from the printed coefficient formulas";
            ds.push_back(je);
        }
        j["diagnostics"] = ds;
    }
    return j;
}

inline std::string rep_to_string(const SphericalRep& r) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < r.base.size(); ++i) os << (i ? "," : "") << r.base[i];
    os << "|";
    for (std::size_t i = 0; i < r.fiber.size(); ++i) os << (i ? "," : "") << r.fiber[i];
    os << ")";
    return os.str();
}

inline std::string table_to_csv(const SpectrumTable& t) {
    std::ostringstream os;
    os << "value_decimal,value_exact,multiplicity,contributors\n";
    for (const auto& e : t.entries) {
        os << to_decimal_string(e.value) << ",\"" << to_exact_string(e.value) << "\","
           << e.total_mult << ",\"";
        for (std::size_t i = 0; i < e.contributors.size(); ++i)
            os << (i ? ";" : "") << rep_to_string(e.contributors[i].rep);
        os << "\"\n";
    }
    return os.str();
}

inline std::string table_to_pretty(const SpectrumTable& t) {
    std::ostringstream os;
    os << "spectrum of " << t.family.name() << " rank " << t.family.rank << " up to "
       << to_exact_string(t.cutoff) << "\n";
    os << "certified weight box: top weight <= " << t.bound.weight_box << "\n";
    for (const auto& e : t.entries) {
        os << "  " << to_decimal_string(e.value, 12) << "  = " << to_exact_string(e.value)
           << "  mult " << e.total_mult << "  [";
        for (std::size_t i = 0; i < e.contributors.size(); ++i)
            os << (i ? " " : "") << rep_to_string(e.contributors[i].rep);
        os << "]\n";
    }
    if (t.entries.empty()) os << "  (no eigenvalues at or below the cutoff)\n";
    return os.str();
}

inline ordered_json stability_to_json(const StabilityReport& r) {
    ordered_json j;
    j["family"] = r.datum.family.name();
    j["rank"] = r.datum.family.rank;
    j["metric"] = einstein_label_name(r.datum.label);
    j["params"] = params_to_json(r.datum.family, r.datum.params);
    j["einstein_constant"] = to_exact_string(r.datum.lambda);
    j["eta1_exact"] = to_exact_string(r.eta1);
    j["eta1_decimal"] = to_decimal_string(r.eta1);
    j["threshold_exact"] = to_exact_string(r.threshold);
    j["margin_exact"] = to_exact_string(r.margin);
    j["margin_decimal"] = to_decimal_string(r.margin);
    j["verdict"] = verdict_name(r.verdict);
    ordered_json ws = ordered_json::array();
    for (const auto& w : r.witnesses) ws.push_back(rep_to_string(w));
    j["witnesses"] = ws;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

inline std::string stability_to_pretty(const StabilityReport& r) {
    std::ostringstream os;
    os << r.datum.family.name() << " rank " << r.datum.family.rank << ", metric "
       << einstein_label_name(r.datum.label) << ":\n";
    os << "  eta1     = " << to_exact_string(r.eta1) << " = " << to_decimal_string(r.eta1, 12)
       << "\n";
    os << "  2*Lambda = " << to_exact_string(r.threshold) << " = "
       << to_decimal_string(r.threshold, 12) << "\n";
    os << "  margin   = " << to_exact_string(r.margin) << " = " << to_decimal_string(r.margin, 12)
       << "\n";
    os << "  verdict  = " << verdict_name(r.verdict) << "\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    return os.str();
}

inline ordered_json bifurcations_to_json(const FamilyId& id, const Rational& x_max,
                                         const std::vector<BifurcationPoint>& pts) {
    ordered_json j;
    j["family"] = id.name();
    j["rank"] = id.rank;
    j["x_max"] = x_max.to_string();
    ordered_json arr = ordered_json::array();
    for (const auto& p : pts) {
        ordered_json jp;
        jp["x_exact"] = to_exact_string(p.x);
        jp["x_decimal"] = to_decimal_string(p.x);
        jp["morse_jump"] = p.morse_jump;
        jp["quadratic"] = {{"a", p.qa.to_string()}, {"b", p.qb.to_string()},
                           {"c", p.qc.to_string()}};
        ordered_json cs = ordered_json::array();
        for (const auto& r : p.crossing_reps) cs.push_back(rep_to_string(r));
        jp["crossing_reps"] = cs;
        arr.push_back(jp);
    }
    j["bifurcations"] = arr;
    return j;
}

inline std::string bifurcations_to_pretty(const FamilyId& id, const Rational& x_max,
                                          const std::vector<BifurcationPoint>& pts) {
    std::ostringstream os;
    os << "yamabe bifurcation points of " << id.name() << " rank " << id.rank
       << " for x = delta/alpha <= " << x_max.to_string() << "\n";
    for (const auto& p : pts) {
        os << "  x = " << to_decimal_string(p.x, 12) << " = " << to_exact_string(p.x)
           << "  morse jump " << p.morse_jump << "  [";
        for (std::size_t i = 0; i < p.crossing_reps.size(); ++i)
            os << (i ? " " : "") << rep_to_string(p.crossing_reps[i]);
        os << "]\n";
    }
    if (pts.empty()) os << "  (none)\n";
    return os.str();
}

}  // namespace homspec
