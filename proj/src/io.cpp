#include "shannon/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace shannon {

namespace {

using nlohmann::json;

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open file '" + path.string() + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError("file '" + path.string() + "' is not valid JSON: " + e.what());
    }
}

const json& field(const json& j, const char* name, const std::filesystem::path& path) {
    const auto it = j.find(name);
    if (it == j.end() || !it->is_array()) {
        throw ValidationError("file '" + path.string() + "': missing array field \"" +
                              name + "\"");
    }
    return *it;
}

// JSON symbols may be strings or numbers; numbers keep their JSON text.
std::vector<std::string> to_symbols(const json& arr, const char* name,
                                    const std::filesystem::path& path) {
    std::vector<std::string> symbols;
    symbols.reserve(arr.size());
    for (const auto& item : arr) {
        if (item.is_string()) {
            symbols.push_back(item.get<std::string>());
        } else if (item.is_number()) {
            symbols.push_back(item.dump());
        } else {
            throw ValidationError("file '" + path.string() + "': field \"" + name +
                                  "\" must contain strings or numbers");
        }
    }
    return symbols;
}

std::vector<double> to_numbers(const json& arr, const char* name,
                               const std::filesystem::path& path) {
    std::vector<double> values;
    values.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_number()) {
            throw ValidationError("file '" + path.string() + "': field \"" + name +
                                  "\" must contain numbers");
        }
        values.push_back(item.get<double>());
    }
    return values;
}

std::vector<std::vector<double>> to_grid(const json& arr, const char* name,
                                         const std::filesystem::path& path) {
    std::vector<std::vector<double>> grid;
    grid.reserve(arr.size());
    for (const auto& row : arr) {
        if (!row.is_array()) {
            throw ValidationError("file '" + path.string() + "': field \"" + name +
                                  "\" must be an array of arrays");
        }
        grid.push_back(to_numbers(row, name, path));
    }
    return grid;
}

// Parses "a,b[,c]" CSV rows of doubles under a fixed header.
std::vector<std::vector<double>> load_csv_columns(const std::filesystem::path& path,
                                                  const std::string& header,
                                                  std::size_t columns) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file '" + path.string() + "'");
    std::string line;
    if (!std::getline(in, line) || line != header) {
        throw ValidationError("file '" + path.string() + "': expected header \"" + header +
                              "\"");
    }
    std::vector<std::vector<double>> cols(columns);
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::stringstream row(line);
        std::string cell;
        for (std::size_t c = 0; c < columns; ++c) {
            if (!std::getline(row, cell, ',')) {
                std::ostringstream msg;
                msg << "file '" << path.string() << "' line " << line_no
                    << ": expected " << columns << " comma-separated values";
                throw ValidationError(msg.str());
            }
            try {
                std::size_t used = 0;
                cols[c].push_back(std::stod(cell, &used));
                if (used != cell.size()) throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                std::ostringstream msg;
                msg << "file '" << path.string() << "' line " << line_no << ": field "
                    << (c + 1) << " ('" << cell << "') is not a number";
                throw ValidationError(msg.str());
            }
        }
    }
    if (cols[0].empty()) {
        throw ValidationError("file '" + path.string() + "': no data rows");
    }
    return cols;
}

}  // namespace

DiscretePmf load_pmf_json(const std::filesystem::path& path) {
    const json j = load_json(path);
    return DiscretePmf(to_symbols(field(j, "symbols", path), "symbols", path),
                       to_numbers(field(j, "probs", path), "probs", path));
}

DiscreteJointPmf load_joint_json(const std::filesystem::path& path) {
    const json j = load_json(path);
    return DiscreteJointPmf(to_symbols(field(j, "x_symbols", path), "x_symbols", path),
                            to_symbols(field(j, "y_symbols", path), "y_symbols", path),
                            to_grid(field(j, "probs", path), "probs", path));
}

TransitionMatrix load_transition_json(const std::filesystem::path& path) {
    const json j = load_json(path);
    return TransitionMatrix(to_symbols(field(j, "inputs", path), "inputs", path),
                            to_symbols(field(j, "outputs", path), "outputs", path),
                            to_grid(field(j, "rows", path), "rows", path));
}

SampledSignal load_signal_csv(const std::filesystem::path& path) {
    const auto cols = load_csv_columns(path, "t,x", 2);
    const std::vector<double>& t = cols[0];
    if (t.size() < 2) {
        throw ValidationError("file '" + path.string() + "': need at least 2 samples");
    }
    const double dt = t[1] - t[0];
    if (!(dt > 0.0)) {
        throw ValidationError("file '" + path.string() + "': time column must increase");
    }
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (std::abs((t[i] - t[i - 1]) - dt) > 1e-9 * std::max(1.0, std::abs(dt))) {
            throw ValidationError("file '" + path.string() +
                                  "': time column is not uniformly spaced");
        }
    }
    return SampledSignal(cols[1], 1.0 / dt);
}

SpectrumData load_spectrum_csv(const std::filesystem::path& path) {
    const auto cols = load_csv_columns(path, "f,S,N", 3);
    return {cols[0], cols[1], cols[2]};
}

ChannelSamples load_samples_csv(const std::filesystem::path& path) {
    const auto cols = load_csv_columns(path, "x,y", 2);
    return {cols[0], cols[1]};
}

std::string format_sig(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%#.6g", value);
    return buffer;
}

}  // namespace shannon
