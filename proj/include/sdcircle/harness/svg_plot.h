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

#ifndef SDCIRCLE_HARNESS_SVG_PLOT_H_
#define SDCIRCLE_HARNESS_SVG_PLOT_H_

#include <filesystem>
#include <string>
#include <vector>

namespace sdcircle::harness {

struct PlotSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

// Minimal static line plot. Dense series are reduced to a min/max envelope
// per pixel column so narrow spikes survive.
class SvgPlot {
 public:
  SvgPlot(std::string title, std::string x_label, std::string y_label);

  void add_series(PlotSeries series);
  void set_log_x(bool on) { log_x_ = on; }
  void set_log_y(bool on) { log_y_ = on; }
  void set_markers(bool on) { markers_ = on; }

  std::string render() const;
  void write(const std::filesystem::path& path) const;

 private:
  std::string title_;
  std::string x_label_;
  std::string y_label_;
  std::vector<PlotSeries> series_;
  bool log_x_ = false;
  bool log_y_ = false;
  bool markers_ = false;
};

}  // namespace sdcircle::harness

#endif  // SDCIRCLE_HARNESS_SVG_PLOT_H_
