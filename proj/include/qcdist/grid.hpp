// Parameter grids for sweeps: "start:stop:count" with linear or log spacing.
#pragma once

#include <cmath>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "qcdist/types.hpp"

namespace qcdist {

enum class Spacing { linear, log };

struct GridSpec {
  std::string name;
  double start = 0.0;
  double stop = 1.0;
  int count = 2;
  Spacing spacing = Spacing::linear;

  GridSpec() = default;
  GridSpec(std::string name_, double start_, double stop_, int count_, Spacing spacing_ = Spacing::linear)
      : name(std::move(name_)), start(start_), stop(stop_), count(count_), spacing(spacing_) {
    validate();
  }

  void validate() const {
    if (count < 2) throw usage_error("grid '" + name + "' needs count >= 2");
    if (!(start < stop)) throw usage_error("grid '" + name + "' needs start < stop");
    if (spacing == Spacing::log && !(start > 0.0)) throw usage_error("log grid '" + name + "' needs start > 0");
  }

  /// Points from start to stop inclusive.
  [[nodiscard]] std::vector<double> points() const {
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      const double f = static_cast<double>(i) / (count - 1);
      out[i] = spacing == Spacing::linear ? start + (stop - start) * f
                                          : std::exp(std::log(start) + (std::log(stop) - std::log(start)) * f);
    }
    out.back() = stop;
    return out;
  }
};

namespace detail {

inline double parse_double(std::string_view text, const std::string& what) {
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw usage_error("cannot parse " + what + " from '" + s + "'");
  return v;
}

}  // namespace detail

/// Parses "start:stop:count".
inline GridSpec parse_grid(const std::string& name, std::string_view text, Spacing spacing = Spacing::linear) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c1 == std::string_view::npos || c2 == std::string_view::npos)
    throw usage_error("grid '" + name + "' must look like start:stop:count, got '" + std::string(text) + "'");
  const double start = detail::parse_double(text.substr(0, c1), name + " start");
  const double stop = detail::parse_double(text.substr(c1 + 1, c2 - c1 - 1), name + " stop");
  const double count = detail::parse_double(text.substr(c2 + 1), name + " count");
  if (count != std::floor(count)) throw usage_error("grid '" + name + "' count must be an integer");
  return GridSpec(name, start, stop, static_cast<int>(count), spacing);
}

inline Spacing parse_spacing(const std::string& s) {
  if (s == "linear") return Spacing::linear;
  if (s == "log") return Spacing::log;
  throw usage_error("spacing must be 'linear' or 'log', got '" + s + "'");
}

}  // namespace qcdist
