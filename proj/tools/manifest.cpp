#include "manifest.hpp"

#include "shapeparts/io.hpp"

namespace shapeparts::cli {

std::string join_reals(std::span<const double> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += io::format_real(values[i]);
  }
  return out;
}

void Manifest::set(std::string key, std::string value) { entries_.emplace_back(std::move(key), std::move(value)); }
void Manifest::set(std::string key, double value) { set(std::move(key), io::format_real(value)); }
void Manifest::set(std::string key, std::size_t value) { set(std::move(key), std::to_string(value)); }
void Manifest::flag(std::string key, bool value) { set(std::move(key), std::string(value ? "true" : "false")); }
void Manifest::set(std::string key, std::span<const double> values) { set(std::move(key), join_reals(values)); }

void Manifest::solver(const std::string& prefix, const SolverConfig& config, const SolveReport& report,
                      std::size_t unknowns) {
  set(prefix + "rel_tolerance", config.rel_tolerance);
  set(prefix + "max_iterations", config.max_iterations ? config.max_iterations : 10 * unknowns);
  set(prefix + "iterations", report.iterations);
  set(prefix + "residual_norm", report.residual_norm);
  set(prefix + "relative_residual", report.relative_residual());
  flag(prefix + "converged", report.converged);
}

std::string Manifest::str() const {
  std::string out;
  for (const auto& [key, value] : entries_) out += key + " = " + value + "\n";
  return out;
}

void Manifest::write(const std::filesystem::path& dir) const { io::write_text(dir / "manifest.txt", str()); }

}  // namespace shapeparts::cli
