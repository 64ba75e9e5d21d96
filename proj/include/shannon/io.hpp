#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "shannon/channel.hpp"
#include "shannon/estimation.hpp"
#include "shannon/pmf.hpp"
#include "shannon/spectral.hpp"

// File formats shared with the CLI:
//   pmf JSON        {"symbols":[...], "probs":[...]}
//   joint JSON      {"x_symbols":[...], "y_symbols":[...], "probs":[[...],...]}
//   transition JSON {"inputs":[...], "outputs":[...], "rows":[[...],...]}
//   signal CSV      header "t,x", one time/value pair per row
//   spectrum CSV    header "f,S,N"
//   samples CSV     header "x,y"
// Symbols may be JSON strings or numbers; numbers are canonicalized to
// their JSON text.

namespace shannon {

DiscretePmf load_pmf_json(const std::filesystem::path& path);
DiscreteJointPmf load_joint_json(const std::filesystem::path& path);
TransitionMatrix load_transition_json(const std::filesystem::path& path);

SampledSignal load_signal_csv(const std::filesystem::path& path);

struct SpectrumData {
    std::vector<double> frequencies;
    std::vector<double> signal_power;
    std::vector<double> noise_power;
};

SpectrumData load_spectrum_csv(const std::filesystem::path& path);
ChannelSamples load_samples_csv(const std::filesystem::path& path);

// 6 significant figures with trailing zeros kept ("3.27440", "2.00000"),
// the one numeric format every CLI surface uses.
std::string format_sig(double value);

}  // namespace shannon
