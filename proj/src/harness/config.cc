// Copyright 2026 The sdcircle Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sdcircle/harness/config.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "sdcircle/errors.h"

namespace sdcircle::harness {
namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Splits on commas and whitespace, dropping empty pieces.
std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::string current;
  for (char c : s) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

double parse_double(std::string_view key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw ConfigError("config: " + std::string(key) + ": '" + text +
                    "' is not a number");
}

long long parse_int(std::string_view key, const std::string& text) {
  long long value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("config: " + std::string(key) + ": '" + text +
                      "' is not an integer");
  }
  return value;
}

bool parse_bool(std::string_view key, const std::string& text) {
  std::string lower = text;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "true" || lower == "on" || lower == "yes" || lower == "1") {
    return true;
  }
  if (lower == "false" || lower == "off" || lower == "no" || lower == "0") {
    return false;
  }
  throw ConfigError("config: " + std::string(key) + ": '" + text +
                    "' is not a boolean");
}

// "k:a k:a ..." pairs of frequency and amplitude.
std::vector<std::pair<int, double>> parse_terms(std::string_view key,
                                                std::string_view value) {
  std::vector<std::pair<int, double>> out;
  for (const auto& item : split_list(value)) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw ConfigError("config: " + std::string(key) + ": term '" + item +
                        "' must look like frequency:amplitude");
    }
    const auto k = parse_int(key, item.substr(0, colon));
    if (k < 0) {
      throw ConfigError("config: " + std::string(key) +
                        ": negative frequency");
    }
    out.emplace_back(static_cast<int>(k),
                     parse_double(key, item.substr(colon + 1)));
  }
  return out;
}

void set_custom_signal(ExperimentConfig& config) {
  if (config.signal.name != "custom") {
    config.signal = SignalSpec{"custom", 0.0, {}};
  }
}

}  // namespace

SigmaDeltaScheme build_scheme(const SchemeSpec& spec) {
  if (!spec.taps.empty()) {
    return SigmaDeltaScheme(FeedbackFilter(spec.order, spec.taps));
  }
  if (!spec.positions.empty()) {
    return make_minimal_support(spec.order, spec.positions);
  }
  switch (spec.order) {
    case 1:
      return make_first_order();
    case 2:
      return make_second_order(spec.tabs);
    default: {
      std::vector<int> positions{1};
      for (int j = 1; j < spec.order; ++j) positions.push_back(8 * j);
      return make_minimal_support(spec.order, positions);
    }
  }
}

std::string scheme_label(const SchemeSpec& spec) {
  std::string label = "order" + std::to_string(spec.order);
  if (!spec.taps.empty()) return label + "_custom";
  if (!spec.positions.empty()) {
    label += "_p";
    for (std::size_t i = 0; i < spec.positions.size(); ++i) {
      label += (i ? "-" : "") + std::to_string(spec.positions[i]);
    }
    return label;
  }
  if (spec.order == 2) label += "_k" + std::to_string(spec.tabs);
  return label;
}

ExperimentConfig preset_config(std::string_view name) {
  if (name == "paper-fig1") {
    ExperimentConfig config;
    config.preset = std::string(name);
    config.signal = SignalSpec{};
    config.bandwidth = 15;
    config.n = 9002;
    config.schemes = {SchemeSpec{1, 1, {}, {}}, SchemeSpec{2, 4, {}, {}}};
    config.update = true;
    return config;
  }
  throw ConfigError("config: unknown preset '" + std::string(name) + "'");
}

void apply_setting(ExperimentConfig& config, std::string_view raw_key,
                   std::string_view raw_value) {
  const std::string key = trim(raw_key);
  const std::string value = trim(raw_value);
  if (key == "preset") {
    const auto out = config.out_dir;
    const auto seed = config.seed;
    config = preset_config(value);
    config.out_dir = out;
    config.seed = seed;
  } else if (key == "signal") {
    if (value == "figure1" || value == "zero") {
      config.signal = SignalSpec{value, 0.0, {}};
    } else if (value == "constant" || value == "custom") {
      if (config.signal.name != value) config.signal = SignalSpec{value, 0.0, {}};
    } else {
      throw ConfigError("config: signal: unknown signal '" + value + "'");
    }
  } else if (key == "signal.offset") {
    if (config.signal.name != "constant") set_custom_signal(config);
    config.signal.offset = parse_double(key, value);
  } else if (key == "signal.cos" || key == "signal.sin") {
    set_custom_signal(config);
    for (const auto& [k, a] : parse_terms(key, value)) {
      TrigTerm term{k, 0.0, 0.0};
      (key == "signal.cos" ? term.cos_amplitude : term.sin_amplitude) = a;
      config.signal.terms.push_back(term);
    }
  } else if (key == "bandwidth") {
    const auto k = parse_int(key, value);
    if (k < 0) throw ConfigError("config: bandwidth must be >= 0");
    config.bandwidth = static_cast<int>(k);
  } else if (key == "n") {
    config.n = static_cast<int>(parse_int(key, value));
  } else if (key == "sweep") {
    config.sweep.clear();
    if (value != "default") {
      for (const auto& item : split_list(value)) {
        config.sweep.push_back(static_cast<int>(parse_int(key, item)));
      }
    }
  } else if (key == "order") {
    std::vector<SchemeSpec> schemes;
    const int tabs = config.schemes.empty() ? 4 : config.schemes.back().tabs;
    for (const auto& item : split_list(value)) {
      const auto m = parse_int(key, item);
      if (m < 1) throw ConfigError("config: order must be >= 1");
      schemes.push_back(SchemeSpec{static_cast<int>(m), tabs, {}, {}});
    }
    if (schemes.empty()) throw ConfigError("config: order: empty list");
    config.schemes = std::move(schemes);
  } else if (key == "tabs") {
    const auto k = parse_int(key, value);
    for (auto& s : config.schemes) s.tabs = static_cast<int>(k);
  } else if (key == "taps") {
    std::vector<double> taps;
    for (const auto& item : split_list(value)) {
      taps.push_back(parse_double(key, item));
    }
    if (config.schemes.size() != 1) {
      throw ConfigError("config: taps needs exactly one order");
    }
    config.schemes.front().taps = std::move(taps);
  } else if (key == "positions") {
    std::vector<int> positions;
    for (const auto& item : split_list(value)) {
      positions.push_back(static_cast<int>(parse_int(key, item)));
    }
    if (config.schemes.size() != 1) {
      throw ConfigError("config: positions needs exactly one order");
    }
    config.schemes.front().positions = std::move(positions);
  } else if (key == "update") {
    config.update = parse_bool(key, value);
  } else if (key == "resolution") {
    config.grid_resolution = static_cast<int>(parse_int(key, value));
  } else if (key == "out") {
    config.out_dir = value;
  } else if (key == "seed") {
    config.seed = static_cast<std::uint64_t>(parse_int(key, value));
  } else if (key == "random_signals") {
    config.random_signals = static_cast<int>(parse_int(key, value));
  } else {
    throw ConfigError("config: unknown key '" + key + "'");
  }
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("config: cannot open '" + path.string() + "'");
  }
  ExperimentConfig config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                        ": expected key = value");
    }
    try {
      apply_setting(config, line.substr(0, eq), line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": " +
                        e.what());
    }
  }
  return config;
}

TorusSignal build_signal(const ExperimentConfig& config) {
  const int min_bandwidth = std::max(config.bandwidth, 0);
  TorusSignal signal;
  const auto& spec = config.signal;
  if (spec.name == "figure1") {
    signal = figure1_signal();
  } else if (spec.name == "zero") {
    signal = TorusSignal::constant(0.0);
  } else if (spec.name == "constant") {
    signal = TorusSignal::constant(spec.offset);
  } else if (spec.name == "custom") {
    signal = TorusSignal::trigonometric(spec.offset, spec.terms);
  } else {
    throw ConfigError("config: unknown signal '" + spec.name + "'");
  }
  if (config.bandwidth >= 0 && signal.bandwidth() > config.bandwidth) {
    throw ConfigError("config: signal bandwidth " +
                      std::to_string(signal.bandwidth()) +
                      " exceeds bandwidth = " +
                      std::to_string(config.bandwidth));
  }
  return signal.with_bandwidth(min_bandwidth);
}

std::vector<int> default_sweep(int bandwidth) {
  std::vector<int> out;
  for (int lambda = 10; lambda <= 320; lambda *= 2) {
    out.push_back(2 * lambda * std::max(bandwidth, 1) + 1);
  }
  return out;
}

void validate(const ExperimentConfig& config) {
  const int bandwidth = build_signal(config).bandwidth();
  const int required = 2 * bandwidth + 1;
  if (config.n < required) {
    throw ConfigError("config: n = " + std::to_string(config.n) +
                      " is below 2K+1 = " + std::to_string(required));
  }
  for (int n : config.sweep) {
    if (n < required) {
      throw ConfigError("config: sweep value " + std::to_string(n) +
                        " is below 2K+1 = " + std::to_string(required));
    }
  }
  if (config.schemes.empty()) throw ConfigError("config: no scheme selected");
  for (const auto& spec : config.schemes) {
    try {
      build_scheme(spec);
    } catch (const Error& e) {
      throw ConfigError(std::string("config: scheme ") + scheme_label(spec) +
                        ": " + e.what());
    }
  }
  if (config.grid_resolution < 0) {
    throw ConfigError("config: resolution must be >= 0");
  }
}

std::vector<int> sweep_values(const ExperimentConfig& config) {
  if (!config.sweep.empty()) return config.sweep;
  return default_sweep(build_signal(config).bandwidth());
}

int grid_points(const ExperimentConfig& config, int n) {
  if (config.grid_resolution == 0) return 10 * n;
  return std::max(config.grid_resolution, n);
}

}  // namespace sdcircle::harness
