// homspec: exact Laplace-Beltrami spectra of homogeneous principal bundles,
// with stability reports, Yamabe bifurcation tables, and oracle verification.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "homspec/io.hpp"
#include "homspec/verify.hpp"

namespace {

using namespace homspec;

constexpr int kExitUsage = 1;
constexpr int kExitIncomplete = 2;
constexpr int kExitVerifyFailed = 3;

Rational parse_rational(const std::string& s) {
    try {
        return Rational::from_string(s);
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected a rational literal like 3 or 5/2, got '" + s + "'");
    }
}

struct ParamFlags {
    std::string alpha, delta, t0, t1, t2;
};

// Sasaki families take --alpha/--delta, Stiefel families take --t0/--t1[/--t2].
MetricParams resolve_params(const FamilyId& id, const ParamFlags& f) {
    bool has_ad = !f.alpha.empty() || !f.delta.empty();
    bool has_t = !f.t0.empty() || !f.t1.empty() || !f.t2.empty();
    if (id.is_sasaki()) {
        if (has_t || !has_ad)
            throw std::domain_error("family " + id.name() + " takes --alpha and --delta");
        if (f.alpha.empty() || f.delta.empty())
            throw std::domain_error("both --alpha and --delta are required");
        return make_params_sasaki(parse_rational(f.alpha), parse_rational(f.delta));
    }
    if (has_ad || f.t0.empty() || f.t1.empty())
        throw std::domain_error("family " + id.name() + " takes --t0 and --t1" +
                                (id.fiber_count() == 2 ? " and --t2" : ""));
    std::vector<QuadExt> ts{QuadExt(parse_rational(f.t0)), QuadExt(parse_rational(f.t1))};
    if (id.fiber_count() == 2) {
        if (f.t2.empty()) throw std::domain_error("family " + id.name() + " also takes --t2");
        ts.push_back(QuadExt(parse_rational(f.t2)));
    } else if (!f.t2.empty()) {
        throw std::domain_error("family " + id.name() + " has no --t2 scale");
    }
    return make_params_scales(std::move(ts));
}

FamilyId resolve_family(const std::string& name, int rank) {
    auto id = FamilyId::parse(name, rank);
    if (!id) throw std::domain_error("unknown family '" + name + "'");
    return *id;
}

void read_thread_cap() {
    // computations are single-threaded; the cap is honored trivially but the
    // variable is still validated so misconfigurations surface early
    const char* env = std::getenv("HOMSPEC_THREADS");
    if (!env) return;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0)
        throw std::domain_error("HOMSPEC_THREADS must be a positive integer");
}

int run(int argc, char** argv) {
    CLI::App app{"exact Laplace spectra of homogeneous principal bundles"};
    app.require_subcommand(1);

    std::string family_name, format = "pretty", which = "all", suite = "all";
    int rank = 0, max_rank = 5, max_weight = 4;
    ParamFlags flags;
    std::string cutoff_str, x_max_str;

    auto add_family_opts = [&](CLI::App* cmd) {
        cmd->add_option("--family", family_name,
                        "sasaki-a|sasaki-bd|sasaki-c-sphere|sasaki-c-proj|stiefel-real|stiefel-"
                        "complex")
            ->required();
        cmd->add_option("--rank", rank, "n (unitary/symplectic) or m (orthogonal families)")
            ->required();
    };
    auto add_param_opts = [&](CLI::App* cmd) {
        cmd->add_option("--alpha", flags.alpha, "Sasaki alpha, rational p/q");
        cmd->add_option("--delta", flags.delta, "Sasaki delta, rational p/q");
        cmd->add_option("--t0", flags.t0, "horizontal scale, rational p/q");
        cmd->add_option("--t1", flags.t1, "first fiber scale, rational p/q");
        cmd->add_option("--t2", flags.t2, "second fiber scale (complex Stiefel), rational p/q");
    };

    CLI::App* spectrum = app.add_subcommand("spectrum", "complete spectrum below a cutoff");
    add_family_opts(spectrum);
    add_param_opts(spectrum);
    spectrum->add_option("--cutoff", cutoff_str, "rational cutoff")->required();
    spectrum->add_option("--format", format, "json|csv|pretty");

    CLI::App* stability = app.add_subcommand("stability", "scalar stability of Einstein metrics");
    add_family_opts(stability);
    stability->add_option("--which", which, "all|3alpha|squashed|jensen|plus|minus");
    stability->add_option("--format", format, "json|pretty");

    CLI::App* bifurcate = app.add_subcommand("bifurcate", "Yamabe bifurcation table");
    add_family_opts(bifurcate);
    bifurcate->add_option("--x-max", x_max_str, "largest delta/alpha ratio")->required();
    bifurcate->add_option("--format", format, "json|pretty");

    CLI::App* verify = app.add_subcommand("verify", "oracle-equivalence sweeps");
    verify->add_option("--suite", suite,
                       "lr|branching|spherical-a|spherical-bd|spherical-c|spherical-stiefel|"
                       "blp22|all");
    verify->add_option("--max-rank", max_rank, "largest rank parameter swept");
    verify->add_option("--max-weight", max_weight, "largest top weight swept");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    read_thread_cap();

    if (spectrum->parsed()) {
        FamilyId id = resolve_family(family_name, rank);
        MetricParams params = resolve_params(id, flags);
        Rational cutoff = parse_rational(cutoff_str);
        if (cutoff.sign() <= 0) throw std::domain_error("cutoff must be positive");
        try {
            SpectrumTable table = enumerate_spectrum(id, params, QuadExt(cutoff));
            if (format == "json")
                std::cout << table_to_json(table).dump(2) << "\n";
            else if (format == "csv")
                std::cout << table_to_csv(table);
            else if (format == "pretty")
                std::cout << table_to_pretty(table);
            else
                throw std::domain_error("unknown format '" + format + "'");
        } catch (const IncompleteEnumerationError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitIncomplete;
        }
        return 0;
    }

    if (stability->parsed()) {
        FamilyId id = resolve_family(family_name, rank);
        std::vector<StabilityReport> reports;
        for (const auto& datum : einstein_catalog(id)) {
            if (which != "all" && einstein_label_name(datum.label) != which) continue;
            reports.push_back(stability_classify(datum));
        }
        if (reports.empty())
            throw std::domain_error("metric label '" + which + "' does not exist for family " +
                                    id.name());
        if (format == "json") {
            ordered_json arr = ordered_json::array();
            for (const auto& r : reports) arr.push_back(stability_to_json(r));
            std::cout << arr.dump(2) << "\n";
        } else {
            for (const auto& r : reports) std::cout << stability_to_pretty(r);
        }
        return 0;
    }

    if (bifurcate->parsed()) {
        FamilyId id = resolve_family(family_name, rank);
        if (!id.is_sasaki())
            throw std::domain_error("bifurcate: Yamabe thresholds are computed for the Sasaki "
                                    "families only; the Stiefel scalar curvature functions are "
                                    "out of scope");
        Rational x_max = parse_rational(x_max_str);
        if (x_max.sign() <= 0) throw std::domain_error("x-max must be positive");
        auto pts = all_bifurcations(id, x_max);
        if (format == "json")
            std::cout << bifurcations_to_json(id, x_max, pts).dump(2) << "\n";
        else
            std::cout << bifurcations_to_pretty(id, x_max, pts);
        return 0;
    }

    // verify
    struct Suite {
        std::string name;
        SweepResult result;
    };
    std::vector<Suite> suites;
    auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
    if (want("lr")) suites.push_back({"lr", sweep_lr(std::min(max_weight * 2, 10))});
    if (want("branching")) suites.push_back({"branching", sweep_branching(max_weight)});
    if (want("spherical-a"))
        suites.push_back({"spherical-a", sweep_spherical_a(std::min(max_rank, 5), max_weight)});
    if (want("spherical-bd"))
        suites.push_back({"spherical-bd", sweep_spherical_bd(std::min(max_rank, 9), max_weight)});
    if (want("spherical-c"))
        suites.push_back({"spherical-c", sweep_spherical_c(std::min(max_weight, 4))});
    if (want("spherical-stiefel")) {
        suites.push_back(
            {"spherical-stiefel-real", sweep_stiefel_real(std::min(max_rank, 8), max_weight)});
        suites.push_back({"spherical-stiefel-complex",
                          sweep_stiefel_complex(std::min(max_rank, 4), std::min(max_weight, 5))});
    }
    if (want("blp22")) suites.push_back({"blp22", sweep_blp22(std::min(max_rank, 5), 6)});
    if (suites.empty()) throw std::domain_error("unknown suite '" + suite + "'");

    bool all_ok = true;
    for (const auto& s : suites) {
        if (s.result.ok()) {
            std::cout << "ok " << s.name << " (" << s.result.checked << " comparisons)\n";
        } else {
            all_ok = false;
            std::cout << "MISMATCH " << s.name << ": " << *s.result.counterexample << "\n";
        }
    }
    return all_ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
