// Command-line frontend over the shannon library: entropy and mutual
// information of pmf/joint files, channel capacities, prefix codes,
// channel simulation, plug-in estimation, spectra, and figure CSVs.
//
// Exit codes: 0 success, 1 unknown subcommand or bad arguments,
// 2 validation error (malformed input), 3 convergence failure.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "shannon/channel.hpp"
#include "shannon/discrete.hpp"
#include "shannon/estimation.hpp"
#include "shannon/io.hpp"
#include "shannon/source_coding.hpp"
#include "shannon/spectral.hpp"

namespace {

using namespace shannon;

void print_kv(std::ostream& out, const std::string& key, double value) {
    out << key << "=" << format_sig(value) << "\n";
}

// Rounds through the 6-significant-figure display format so file output
// matches printed output exactly.
double rounded(double value) { return std::stod(format_sig(value)); }

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot open output file '" + path + "'");
    return out;
}

int cmd_entropy(const std::string& pmf_path) {
    const DiscretePmf pmf = load_pmf_json(pmf_path);
    const Bits h = entropy(pmf);
    print_kv(std::cout, "H_bits", h.value());
    print_kv(std::cout, "equiv_values", equivalent_equiprobable_count(h));
    return 0;
}

int cmd_joint(const std::string& joint_path) {
    const DiscreteJointPmf joint = load_joint_json(joint_path);
    print_kv(std::cout, "H_x", entropy(marginal_x(joint)).value());
    print_kv(std::cout, "H_y", entropy(marginal_y(joint)).value());
    print_kv(std::cout, "H_xy", joint_entropy(joint).value());
    print_kv(std::cout, "H_x_given_y", conditional_entropy_x_given_y(joint).value());
    print_kv(std::cout, "H_y_given_x", conditional_entropy_y_given_x(joint).value());
    print_kv(std::cout, "I", mutual_information(joint).value());
    return 0;
}

int cmd_capacity(double signal_power, double noise_power, std::optional<double> bandwidth) {
    const GaussianChannelSpec spec(signal_power, noise_power, bandwidth);
    const Bits c = gaussian_capacity(spec);
    print_kv(std::cout, bandwidth ? "C_bits_per_s" : "C_bits", c.value());
    return 0;
}

int cmd_dmc_capacity(const std::string& matrix_path, double tol, std::size_t max_iters) {
    const TransitionMatrix matrix = load_transition_json(matrix_path);
    const DmcCapacityResult result = dmc_capacity(matrix, tol, max_iters);
    print_kv(std::cout, "C_bits", result.capacity.value());
    std::cout << "iterations=" << result.iterations << "\n";
    print_kv(std::cout, "gap", result.gap);
    for (std::size_t i = 0; i < result.optimal_input.size(); ++i) {
        print_kv(std::cout, "p[" + result.optimal_input.symbol(i) + "]",
                 result.optimal_input.prob(i));
    }
    return 0;
}

int cmd_huffman(const std::string& pmf_path, std::size_t block) {
    const DiscretePmf source = load_pmf_json(pmf_path);
    const double block_bits =
        static_cast<double>(block) * log2_of(static_cast<double>(source.size()));
    if (block_bits > 24.0) {
        throw ResourceError("huffman: block exceeds the 24-bit product-alphabet bound");
    }
    const DiscretePmf coded = (block == 1) ? source : product_pmf(source, block);
    const PrefixCode code = build_optimal_code(coded);
    std::cout << "symbol,codeword,length,probability\n";
    for (std::size_t i = 0; i < coded.size(); ++i) {
        const std::string& word = code.codewords().at(coded.symbol(i));
        std::cout << coded.symbol(i) << "," << word << "," << word.size() << ","
                  << format_sig(coded.prob(i)) << "\n";
    }
    const double h = entropy(coded).value();
    const double average = code.average_length(coded);
    print_kv(std::cout, "H_bits", h);
    print_kv(std::cout, "L_digits", average);
    print_kv(std::cout, "redundancy", average - h);
    if (block > 1) {
        std::cout << "block=" << block << "\n";
        print_kv(std::cout, "rate_digits_per_symbol", average / static_cast<double>(block));
    }
    return 0;
}

int cmd_simulate(double signal_power, double noise_power, std::size_t n, std::uint64_t seed,
                 const std::string& out_path) {
    const GaussianChannelSpec spec(signal_power, noise_power);
    const ChannelSamples samples = simulate_additive_gaussian(spec, n, SeededStream{seed});
    std::ofstream file;
    if (!out_path.empty()) file = open_output(out_path);
    std::ostream& out = out_path.empty() ? std::cout : file;
    out << "x,y\n";
    for (std::size_t i = 0; i < n; ++i) {
        out << format_sig(samples.x[i]) << "," << format_sig(samples.y[i]) << "\n";
    }
    return 0;
}

int cmd_estimate(const std::string& samples_path, std::size_t bins,
                 std::optional<double> signal_power, std::optional<double> noise_power) {
    const ChannelSamples samples = load_samples_csv(samples_path);
    const Histogram2D hist = Histogram2D::with_quantile_edges(samples.x, samples.y, bins);
    const double h_x = plugin_entropy(hist.x_marginal()).value();
    const double h_y = plugin_entropy(hist.y_marginal()).value();
    const double mi = plugin_mutual_information(hist).value();
    const double h_xy = h_x + h_y - mi;

    double v_x = 0.0;
    double v_noise = 0.0;
    if (signal_power && noise_power) {
        v_x = *signal_power;
        v_noise = *noise_power;
    } else {
        // No channel spec given: plug sample moments into the closed form.
        std::vector<double> noise(samples.x.size());
        for (std::size_t i = 0; i < noise.size(); ++i) noise[i] = samples.y[i] - samples.x[i];
        v_x = sample_variance(samples.x);
        v_noise = sample_variance(noise);
    }
    const double analytic = gaussian_mutual_information(v_x, v_noise).value();

    nlohmann::json report;
    report["n"] = samples.x.size();
    report["bins"] = bins;
    report["H_x"] = rounded(h_x);
    report["H_y"] = rounded(h_y);
    report["H_xy"] = rounded(h_xy);
    report["I"] = rounded(mi);
    report["analytic_I"] = rounded(analytic);
    report["gap"] = rounded(analytic - mi);
    std::cout << report.dump(2) << "\n";
    return 0;
}

int cmd_spectrum(const std::string& signal_path) {
    const SampledSignal signal = load_signal_csv(signal_path);
    const FourierCoefficients coeffs = fourier_analyze(signal);
    std::cout << "f,S,phase\n";
    for (const SpectralLine& line : power_spectrum(coeffs)) {
        std::cout << format_sig(line.frequency) << "," << format_sig(line.power) << ","
                  << format_sig(line.phase) << "\n";
    }
    print_kv(std::cout, "x0", coeffs.mean);
    return 0;
}

int cmd_spectral_mi(const std::string& spectrum_path, std::optional<double> bandwidth) {
    const SpectrumData data = load_spectrum_csv(spectrum_path);
    const double w = bandwidth ? *bandwidth : data.frequencies.back();
    const SpectrumPair pair(data.frequencies, data.signal_power, data.noise_power, w);
    print_kv(std::cout, "I_bits_per_s", spectral_mutual_information(pair).value());
    return 0;
}

int cmd_figure(const std::string& which, std::size_t points, const std::string& out_path) {
    std::ofstream out = open_output(out_path);
    if (which == "coin-entropy") {
        out << "bias,H\n";
        for (const auto& [bias, h] : coin_entropy_curve(points)) {
            out << format_sig(bias) << "," << format_sig(h.value()) << "\n";
        }
    } else if (which == "capacity-vs-power") {
        if (points < 2) throw ValidationError("figure: need at least 2 points");
        out << "S,C\n";
        for (std::size_t i = 0; i < points; ++i) {
            const double s = 100.0 * static_cast<double>(i) / static_cast<double>(points - 1);
            const Bits c = gaussian_capacity(GaussianChannelSpec(s, 1.0));
            out << format_sig(s) << "," << format_sig(c.value()) << "\n";
        }
    } else {
        throw ValidationError("figure: unknown figure '" + which +
                              "' (expected coin-entropy or capacity-vs-power)");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Information-theory toolkit: entropy, capacity, coding, spectra"};
    app.require_subcommand(1);
    std::function<int()> action;

    // entropy <pmf.json>
    {
        auto* cmd = app.add_subcommand("entropy", "Entropy of a pmf JSON file");
        auto path = std::make_shared<std::string>();
        cmd->add_option("pmf", *path, "pmf JSON file")->required();
        cmd->callback([path, &action] { action = [path] { return cmd_entropy(*path); }; });
    }
    // joint <joint.json>
    {
        auto* cmd = app.add_subcommand("joint", "Entropy accounting of a joint pmf");
        auto path = std::make_shared<std::string>();
        cmd->add_option("joint", *path, "joint pmf JSON file")->required();
        cmd->callback([path, &action] { action = [path] { return cmd_joint(*path); }; });
    }
    // capacity --signal-power --noise-power [--bandwidth]
    {
        auto* cmd = app.add_subcommand("capacity", "Gaussian channel capacity");
        auto s = std::make_shared<double>();
        auto n = std::make_shared<double>();
        auto w = std::make_shared<double>();
        cmd->add_option("--signal-power", *s, "signal power S (J/s)")->required();
        cmd->add_option("--noise-power", *n, "noise power N (J/s)")->required();
        auto* wopt = cmd->add_option("--bandwidth", *w, "bandwidth W (Hz)");
        cmd->callback([s, n, w, wopt, &action] {
            const std::optional<double> bw =
                wopt->count() ? std::optional<double>(*w) : std::nullopt;
            action = [s, n, bw] { return cmd_capacity(*s, *n, bw); };
        });
    }
    // dmc-capacity <matrix.json> [--tol] [--max-iters]
    {
        auto* cmd = app.add_subcommand("dmc-capacity", "Capacity of a discrete channel");
        auto path = std::make_shared<std::string>();
        auto tol = std::make_shared<double>(1e-9);
        auto iters = std::make_shared<std::size_t>(10000);
        cmd->add_option("matrix", *path, "transition matrix JSON file")->required();
        cmd->add_option("--tol", *tol, "duality gap tolerance");
        cmd->add_option("--max-iters", *iters, "iteration cap");
        cmd->callback([path, tol, iters, &action] {
            action = [path, tol, iters] { return cmd_dmc_capacity(*path, *tol, *iters); };
        });
    }
    // huffman <pmf.json> [--block]
    {
        auto* cmd = app.add_subcommand("huffman", "Optimal prefix code for a pmf");
        auto path = std::make_shared<std::string>();
        auto block = std::make_shared<std::size_t>(1);
        cmd->add_option("pmf", *path, "pmf JSON file")->required();
        cmd->add_option("--block", *block, "symbols coded jointly")->check(CLI::PositiveNumber);
        cmd->callback([path, block, &action] {
            action = [path, block] { return cmd_huffman(*path, *block); };
        });
    }
    // simulate --signal-power --noise-power --n --seed [--out]
    {
        auto* cmd = app.add_subcommand("simulate", "Sample an additive Gaussian channel");
        auto s = std::make_shared<double>();
        auto n = std::make_shared<double>();
        auto count = std::make_shared<std::size_t>();
        auto seed = std::make_shared<std::uint64_t>(0);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--signal-power", *s, "signal power S")->required();
        cmd->add_option("--noise-power", *n, "noise power N")->required();
        cmd->add_option("--n", *count, "number of samples")->required();
        cmd->add_option("--seed", *seed, "random seed")->required();
        cmd->add_option("--out", *out, "output CSV (default stdout)");
        cmd->callback([s, n, count, seed, out, &action] {
            action = [s, n, count, seed, out] {
                return cmd_simulate(*s, *n, *count, *seed, *out);
            };
        });
    }
    // estimate <samples.csv> --bins [--signal-power --noise-power]
    {
        auto* cmd = app.add_subcommand("estimate", "Plug-in entropy/MI from samples");
        auto path = std::make_shared<std::string>();
        auto bins = std::make_shared<std::size_t>(64);
        auto s = std::make_shared<double>();
        auto n = std::make_shared<double>();
        cmd->add_option("samples", *path, "samples CSV file")->required();
        cmd->add_option("--bins", *bins, "quantile bins per axis (default 64)");
        auto* sopt = cmd->add_option("--signal-power", *s, "S for the analytic value");
        auto* nopt = cmd->add_option("--noise-power", *n, "N for the analytic value");
        cmd->callback([path, bins, s, n, sopt, nopt, &action] {
            const std::optional<double> sv =
                sopt->count() ? std::optional<double>(*s) : std::nullopt;
            const std::optional<double> nv =
                nopt->count() ? std::optional<double>(*n) : std::nullopt;
            action = [path, bins, sv, nv] { return cmd_estimate(*path, *bins, sv, nv); };
        });
    }
    // spectrum <signal.csv>
    {
        auto* cmd = app.add_subcommand("spectrum", "Power spectrum of a sampled signal");
        auto path = std::make_shared<std::string>();
        cmd->add_option("signal", *path, "signal CSV file (t,x)")->required();
        cmd->callback([path, &action] { action = [path] { return cmd_spectrum(*path); }; });
    }
    // spectral-mi <spectrum.csv> [--bandwidth]
    {
        auto* cmd = app.add_subcommand("spectral-mi", "Band-limited MI from S(f), N(f)");
        auto path = std::make_shared<std::string>();
        auto w = std::make_shared<double>();
        cmd->add_option("spectrum", *path, "spectrum CSV file (f,S,N)")->required();
        auto* wopt = cmd->add_option("--bandwidth", *w, "W in Hz (default: top of grid)");
        cmd->callback([path, w, wopt, &action] {
            const std::optional<double> bw =
                wopt->count() ? std::optional<double>(*w) : std::nullopt;
            action = [path, bw] { return cmd_spectral_mi(*path, bw); };
        });
    }
    // figure {coin-entropy|capacity-vs-power} --points --out
    {
        auto* cmd = app.add_subcommand("figure", "Figure-reproduction CSV data");
        auto which = std::make_shared<std::string>();
        auto points = std::make_shared<std::size_t>(101);
        auto out = std::make_shared<std::string>();
        cmd->add_option("name", *which, "coin-entropy or capacity-vs-power")->required();
        cmd->add_option("--points", *points, "number of rows (default 101)");
        cmd->add_option("--out", *out, "output CSV file")->required();
        cmd->callback([which, points, out, &action] {
            action = [which, points, out] { return cmd_figure(*which, *points, *out); };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        return action();
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
