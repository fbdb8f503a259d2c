#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shapeparts/linsys.hpp"

namespace shapeparts::cli {

/// Ordered "key = value" lines; no clock or host information, so reruns match byte for byte.
class Manifest {
 public:
  void set(std::string key, std::string value);
  void set(std::string key, double value);
  void set(std::string key, std::size_t value);
  void flag(std::string key, bool value);
  void set(std::string key, std::span<const double> values);
  void solver(const std::string& prefix, const SolverConfig& config, const SolveReport& report, std::size_t unknowns);

  std::string str() const;
  void write(const std::filesystem::path& dir) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

std::string join_reals(std::span<const double> values);

}  // namespace shapeparts::cli
