// Command-line front end: every analysis is a subcommand emitting one JSON
// document or one CSV table on stdout (or --out). Exit codes: 0 success,
// 2 flag/domain validation error, 1 computation error.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lambshift/degeneracy.hpp"
#include "lambshift/dos.hpp"
#include "lambshift/oracle.hpp"
#include "lambshift/parallel.hpp"
#include "lambshift/stats.hpp"
#include "lambshift/subspace.hpp"
#include "lambshift/tridiag.hpp"

namespace {

using nlohmann::json;

struct Options {
    int n = 1;
    int twice_j = -1;
    std::int64_t k = 0;
    std::int64_t k_min = -1;
    std::int64_t k_max = 0;
    double omega_over_g = 500.0;
    double threshold = 0.1;
    double support_mass = 0.0;
    double sigma = 1e-3;
    int bins = 1000;
    int threads = 0;
    bool dense = false;
    std::string format = "json";
    std::string out = "-";
};

std::ostream& csv_stream(std::ostream& os) {
    os << std::setprecision(17);
    return os;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(opt.out);
    if (!file) throw std::runtime_error("cannot open output file: " + opt.out);
    file << text;
}

std::string regime_name(lambshift::BoundsReport::Regime r) {
    switch (r) {
        case lambshift::BoundsReport::Regime::large_kprime: return "large_kprime";
        case lambshift::BoundsReport::Regime::large_j: return "large_j";
        default: return "general";
    }
}

int run_spectrum(const Options& opt) {
    const lambshift::SubspaceIndex idx{opt.n, opt.twice_j, opt.k};
    const auto spectrum = lambshift::eigenvalues(lambshift::build_coupling_matrix(idx));
    if (opt.format == "csv") {
        std::ostringstream os;
        csv_stream(os) << "eigenvalue\n";
        for (double v : spectrum.eigenvalues) os << v << '\n';
        emit(opt, os.str());
    } else {
        json j{{"n", opt.n}, {"twice_j", opt.twice_j}, {"k", opt.k},
               {"eigenvalues", spectrum.eigenvalues}};
        emit(opt, j.dump(2) + "\n");
    }
    return 0;
}

int run_degeneracy(const Options& opt) {
    const auto table = lambshift::build_degeneracy_table(opt.n);
    if (opt.format == "csv") {
        std::ostringstream os;
        csv_stream(os) << "twice_j,count,log_count\n";
        for (const auto& e : table.entries)
            os << e.twice_j << ',' << (table.has_exact ? e.exact_count.str() : std::string())
               << ',' << e.log_count << '\n';
        emit(opt, os.str());
    } else {
        json entries = json::array();
        for (const auto& e : table.entries) {
            json row{{"twice_j", e.twice_j}, {"log_count", e.log_count}};
            if (table.has_exact) row["count"] = e.exact_count.str();
            entries.push_back(std::move(row));
        }
        json j{{"n", opt.n}, {"has_exact", table.has_exact}, {"entries", std::move(entries)}};
        emit(opt, j.dump(2) + "\n");
    }
    return 0;
}

int run_jstar(const Options& opt) {
    const int t_star = lambshift::j_star_exact(opt.n);
    const double asym = lambshift::j_star_asymptotic(opt.n);
    if (opt.format == "csv") {
        std::ostringstream os;
        csv_stream(os) << "n,twice_j_star,j_star_asymptotic\n"
                       << opt.n << ',' << t_star << ',' << asym << '\n';
        emit(opt, os.str());
    } else {
        json j{{"n", opt.n}, {"twice_j_star", t_star}, {"j_star_asymptotic", asym}};
        emit(opt, j.dump(2) + "\n");
    }
    return 0;
}

int run_variance_scan(const Options& opt) {
    const auto scan =
        lambshift::variance_scan(opt.n, opt.k_max, opt.support_mass, opt.threads);
    if (opt.format == "csv") {
        std::ostringstream os;
        csv_stream(os) << "k,variance\n";
        for (const auto& [k, v] : scan) os << k << ',' << v << '\n';
        emit(opt, os.str());
    } else {
        json points = json::array();
        for (const auto& [k, v] : scan) points.push_back({{"k", k}, {"variance", v}});
        json j{{"n", opt.n}, {"k_max", opt.k_max}, {"support_mass", opt.support_mass},
               {"points", std::move(points)}};
        emit(opt, j.dump(2) + "\n");
    }
    return 0;
}

int run_slope(Options opt) {
    if (opt.k_min < 0) opt.k_min = opt.n;
    if (opt.k_max <= 0) opt.k_max = 3 * static_cast<std::int64_t>(opt.n);
    const auto fit =
        lambshift::slope_fit(opt.n, opt.k_min, opt.k_max, opt.support_mass, opt.threads);
    if (opt.format == "csv") {
        std::ostringstream os;
        csv_stream(os) << "n,k_lo,k_hi,slope,intercept,r_squared\n"
                       << fit.n_spins << ',' << fit.k_lo << ',' << fit.k_hi << ',' << fit.slope
                       << ',' << fit.intercept << ',' << fit.r_squared << '\n';
        emit(opt, os.str());
    } else {
        json j{{"n", fit.n_spins},   {"k_lo", fit.k_lo},           {"k_hi", fit.k_hi},
               {"slope", fit.slope}, {"intercept", fit.intercept}, {"r_squared", fit.r_squared}};
        emit(opt, j.dump(2) + "\n");
    }
    return 0;
}

int run_dos(const Options& opt) {
    const lambshift::PhysicalParams params{opt.omega_over_g, 1.0};
    const auto hist =
        lambshift::build_dos(opt.n, opt.k_max, params, opt.bins, opt.sigma, opt.threads);
    std::ostringstream os;
    if (opt.format == "csv") lambshift::write_csv(hist, os);
    else lambshift::write_json(hist, os);
    emit(opt, os.str());
    return 0;
}

int run_bounds(const Options& opt) {
    const lambshift::SubspaceIndex idx{opt.n, opt.twice_j, opt.k};
    lambshift::validate(idx);
    const auto b = lambshift::pf_bounds(idx);
    if (opt.format == "csv") {
        std::ostringstream os;
        csv_stream(os)
            << "n,twice_j,k,pf_lower,pf_upper,asymptotic_general,asymptotic_large_kprime,"
               "asymptotic_large_j,regime\n"
            << opt.n << ',' << opt.twice_j << ',' << opt.k << ',' << b.pf_lower << ','
            << b.pf_upper << ',' << b.asymptotic_general << ',' << b.asymptotic_large_kprime
            << ',' << b.asymptotic_large_j << ',' << regime_name(b.regime) << '\n';
        emit(opt, os.str());
    } else {
        json j{{"n", opt.n},
               {"twice_j", opt.twice_j},
               {"k", opt.k},
               {"pf_lower", b.pf_lower},
               {"pf_upper", b.pf_upper},
               {"asymptotic_general", b.asymptotic_general},
               {"asymptotic_large_kprime", b.asymptotic_large_kprime},
               {"asymptotic_large_j", b.asymptotic_large_j},
               {"regime", regime_name(b.regime)}};
        emit(opt, j.dump(2) + "\n");
    }
    return 0;
}

int run_rwa_check(const Options& opt) {
    const lambshift::PhysicalParams params{opt.omega_over_g, 1.0};
    const auto r = lambshift::rwa_check(opt.n, opt.k, params, opt.threshold);
    if (opt.format == "csv") {
        std::ostringstream os;
        csv_stream(os) << "n,k,omega_over_g,threshold,max_shift,ratio,valid\n"
                       << opt.n << ',' << opt.k << ',' << opt.omega_over_g << ','
                       << opt.threshold << ',' << r.max_shift << ',' << r.ratio << ','
                       << (r.valid ? "true" : "false") << '\n';
        emit(opt, os.str());
    } else {
        json j{{"n", opt.n},
               {"k", opt.k},
               {"omega_over_g", opt.omega_over_g},
               {"threshold", opt.threshold},
               {"max_shift", r.max_shift},
               {"ratio", r.ratio},
               {"valid", r.valid}};
        emit(opt, j.dump(2) + "\n");
    }
    return 0;
}

int run_oracle_check(const Options& opt) {
    double max_err = 0.0;
    std::string mode;
    if (opt.dense) {
        mode = "dense";
        for (std::int64_t k = 0; k <= opt.k_max; ++k) {
            const auto dense = lambshift::dense_manifold_spectrum(opt.n, k);
            const auto split = lambshift::weighted_union_spectrum(opt.n, k);
            if (dense.size() != split.size())
                throw std::runtime_error("state count mismatch at k = " + std::to_string(k));
            for (std::size_t i = 0; i < dense.size(); ++i)
                max_err = std::max(max_err, std::abs(dense[i] - split[i]));
        }
    } else {
        mode = "analytic";
        if (opt.n < 1 || opt.n > 3)
            throw std::domain_error("analytic oracles exist for n in {1,2,3}; use --dense");
        for (std::int64_t k = 0; k <= opt.k_max; ++k) {
            lambshift::OracleSpectrum oracle;
            if (opt.n == 1) oracle = lambshift::oracle_n1(k);
            else if (opt.n == 2) oracle = lambshift::oracle_n2(k);
            else oracle = lambshift::oracle_n3(k);
            const auto expected = lambshift::flatten_sorted(oracle);
            const auto actual = lambshift::weighted_union_spectrum(opt.n, k);
            if (expected.size() != actual.size())
                throw std::runtime_error("state count mismatch at k = " + std::to_string(k));
            for (std::size_t i = 0; i < expected.size(); ++i)
                max_err = std::max(max_err, std::abs(expected[i] - actual[i]));
        }
    }
    const bool pass = max_err <= 1e-10;
    if (opt.format == "csv") {
        std::ostringstream os;
        csv_stream(os) << "n,k_max,mode,max_abs_error,pass\n"
                       << opt.n << ',' << opt.k_max << ',' << mode << ',' << max_err << ','
                       << (pass ? "true" : "false") << '\n';
        emit(opt, os.str());
    } else {
        json j{{"n", opt.n}, {"k_max", opt.k_max}, {"mode", mode},
               {"max_abs_error", max_err}, {"pass", pass}};
        emit(opt, j.dump(2) + "\n");
    }
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tavis-Cummings (j,k) subspace spectra, degeneracies and Lamb-shift statistics"};
    app.require_subcommand(1);

    Options opt;
    opt.threads = lambshift::default_thread_count();

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", opt.out, "Output path ('-' = stdout)");
        cmd->add_option("--threads", opt.threads, "Worker threads for scans")
            ->check(CLI::PositiveNumber);
    };

    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of one (j,k) coupling matrix");
    spectrum->add_option("--n", opt.n, "Number of spins")->required()->check(CLI::PositiveNumber);
    spectrum->add_option("--twice-j", opt.twice_j, "2j")->required();
    spectrum->add_option("--k", opt.k, "Total excitations")->required();
    add_common(spectrum);

    auto* degeneracy = app.add_subcommand("degeneracy", "Degeneracy table d_j for all allowed j");
    degeneracy->add_option("--n", opt.n, "Number of spins")->required()->check(CLI::PositiveNumber);
    add_common(degeneracy);

    auto* jstar = app.add_subcommand("jstar", "Maximally degenerate subspace (exact and asymptotic)");
    jstar->add_option("--n", opt.n, "Number of spins")->required()->check(CLI::PositiveNumber);
    add_common(jstar);

    auto* vscan = app.add_subcommand("variance-scan", "Degeneracy-averaged variance for k = 0..k_max");
    vscan->add_option("--n", opt.n, "Number of spins")->required()->check(CLI::PositiveNumber);
    vscan->add_option("--k-max", opt.k_max, "Largest excitation")->required();
    vscan->add_option("--support-mass", opt.support_mass,
                      "Truncate the j sum at this covered state fraction (0 = full sum)")
        ->check(CLI::Range(0.0, 1.0));
    add_common(vscan);

    auto* slope = app.add_subcommand("slope", "OLS slope of variance vs k in the linear regime");
    slope->add_option("--n", opt.n, "Number of spins")->required()->check(CLI::PositiveNumber);
    slope->add_option("--k-min", opt.k_min, "Fit range start (default n)");
    slope->add_option("--k-max", opt.k_max, "Fit range end (default 3n)");
    slope->add_option("--support-mass", opt.support_mass,
                      "Truncate the j sum at this covered state fraction (0 = full sum)")
        ->check(CLI::Range(0.0, 1.0));
    add_common(slope);

    auto* dos = app.add_subcommand("dos", "Degeneracy-weighted density of states histogram");
    dos->add_option("--n", opt.n, "Number of spins")->required()->check(CLI::PositiveNumber);
    dos->add_option("--k-max", opt.k_max, "Largest excitation")->required();
    dos->add_option("--omega-over-g", opt.omega_over_g, "omega0 / g0")->check(CLI::PositiveNumber);
    dos->add_option("--bins", opt.bins, "Histogram bins")->check(CLI::PositiveNumber);
    dos->add_option("--sigma", opt.sigma, "Gaussian broadening, units of omega0")
        ->check(CLI::PositiveNumber);
    add_common(dos);

    auto* bounds = app.add_subcommand("bounds", "Perron-Frobenius and asymptotic bounds on max |lambda|");
    bounds->add_option("--n", opt.n, "Number of spins")->required()->check(CLI::PositiveNumber);
    bounds->add_option("--twice-j", opt.twice_j, "2j")->required();
    bounds->add_option("--k", opt.k, "Total excitations")->required();
    add_common(bounds);

    auto* rwa = app.add_subcommand("rwa-check", "RWA validity at excitation k");
    rwa->add_option("--n", opt.n, "Number of spins")->required()->check(CLI::PositiveNumber);
    rwa->add_option("--k", opt.k, "Total excitations")->required();
    rwa->add_option("--omega-over-g", opt.omega_over_g, "omega0 / g0")->check(CLI::PositiveNumber);
    rwa->add_option("--threshold", opt.threshold, "Validity cutoff for max_shift/omega0")
        ->check(CLI::PositiveNumber);
    add_common(rwa);

    auto* oracle = app.add_subcommand("oracle-check",
                                      "Compare subspace spectra against closed-form or dense oracles");
    oracle->add_option("--n", opt.n, "Number of spins")->required()->check(CLI::PositiveNumber);
    oracle->add_option("--k-max", opt.k_max, "Largest excitation")->required();
    oracle->add_flag("--dense", opt.dense, "Use the dense Zeeman-manifold oracle (n <= 12)");
    add_common(oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help/diagnostic
        return code == 0 ? 0 : 2;      // help/version exit 0, bad flags exit 2
    }

    try {
        if (spectrum->parsed()) return run_spectrum(opt);
        if (degeneracy->parsed()) return run_degeneracy(opt);
        if (jstar->parsed()) return run_jstar(opt);
        if (vscan->parsed()) return run_variance_scan(opt);
        if (slope->parsed()) return run_slope(opt);
        if (dos->parsed()) return run_dos(opt);
        if (bounds->parsed()) return run_bounds(opt);
        if (rwa->parsed()) return run_rwa_check(opt);
        if (oracle->parsed()) return run_oracle_check(opt);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
