#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "manifest.hpp"
#include "shapeparts/decompose.hpp"
#include "shapeparts/io.hpp"
#include "shapeparts/legacy.hpp"
#include "shapeparts/omega.hpp"
#include "shapeparts/saliency.hpp"

using namespace shapeparts;
using shapeparts::cli::Manifest;
namespace fs = std::filesystem;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string input;
  std::string out = ".";
  int threshold = io::kDefaultThreshold;
  bool invert = false;
  double tolerance = 1e-10;
  std::size_t max_iterations = 0;

  SolverConfig solver() const { return {.rel_tolerance = tolerance, .max_iterations = max_iterations}; }
};

/// Accepts decimals and simple fractions such as 1/64.
double parse_real(const std::string& text) {
  const auto slash = text.find('/');
  auto number = [&](std::string_view s) {
    double v = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || s.empty()) throw UsageError("not a number: '" + text + "'");
    return v;
  };
  if (slash == std::string::npos) return number(text);
  const double den = number(std::string_view(text).substr(slash + 1));
  if (den == 0.0) throw UsageError("zero denominator in '" + text + "'");
  return number(std::string_view(text).substr(0, slash)) / den;
}

std::vector<double> parse_reals(const std::vector<std::string>& items) {
  std::vector<double> out;
  for (const auto& s : items) out.push_back(parse_real(s));
  return out;
}

void add_common(CLI::App& cmd, Common& common) {
  cmd.add_option("input", common.input, "Silhouette image (PGM P2/P5 or PNG)")->required();
  cmd.add_option("-o,--out", common.out, "Output directory")->capture_default_str();
  cmd.add_option("--threshold", common.threshold, "Pixels darker than this are shape")
      ->check(CLI::Range(0, 255))
      ->capture_default_str();
  cmd.add_flag("--invert", common.invert, "Treat light pixels as shape");
  cmd.add_option("--tolerance", common.tolerance, "Relative residual target of the solver")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--max-iterations", common.max_iterations, "Solver iteration cap (0: 10 x unknowns)");
}

struct Input {
  BinaryMask mask;
  DomainPtr domain;
  fs::path out;
};

Input load(const Common& common, Manifest& manifest, const std::string& command) {
  auto mask = io::read_mask(common.input, common.threshold, common.invert);
  auto domain = build_domain(mask);
  fs::path out(common.out);
  fs::create_directories(out);
  manifest.set("command", command);
  manifest.set("input", common.input);
  manifest.set("threshold", std::to_string(common.threshold));
  manifest.flag("invert", common.invert);
  manifest.set("width", static_cast<std::size_t>(mask.width()));
  manifest.set("height", static_cast<std::size_t>(mask.height()));
  manifest.set("shape_pixels", mask.shape_count());
  manifest.set("interior_pixels", domain->omega_size());
  return {std::move(mask), std::move(domain), std::move(out)};
}

SaliencyTable attach_saliency(DecomposeResult& res) {
  if (res.no_peripheral) return {};
  return saliency_table(build_merge_tree(res.omega.omega, res.omega.negative), res.decomposition);
}

void describe(Manifest& m, const std::string& prefix, const DecomposeResult& res) {
  m.set(prefix + "negative_pixels", res.omega.negative.count());
  m.set(prefix + "zero_pixels", res.omega.zero.count());
  m.set(prefix + "positive_pixels", res.omega.positive.count());
  m.set(prefix + "sign_epsilon", res.omega.sign_epsilon);
  m.set(prefix + "peripheral_parts", res.decomposition.peripheral_count());
  m.set(prefix + "gross_parts", res.decomposition.gross_count());
}

std::string level_name(const char* stem, std::size_t index, const char* ext) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_%02zu.%s", stem, index, ext);
  return buf;
}

/// Union of level curves at `count` levels spread evenly inside (min, max).
RegionMask level_set_union(const ScalarField& v, int count) {
  std::vector<double> levels;
  for (int i = 1; i <= count; ++i) levels.push_back(v.min() + (v.max() - v.min()) * i / (count + 1.0));
  auto curves = level_curves(v, levels);
  RegionMask all = RegionMask::none(v.domain());
  for (const auto& c : curves) all = all | c;
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Part decomposition of binary silhouettes"};
  app.require_subcommand(1, 1);

  Common common;
  double c = 1.0;
  double w_bdy = 2.0;
  std::vector<std::string> c_list = {"1", "0.5", "0.125", "0.025"};
  std::vector<std::string> taus = {"-4", "-9", "-14", "-19", "-24", "-29", "-34", "-37"};
  std::vector<std::string> alphas = {"1/16", "1/64", "1/256"};
  std::string alpha = "1/64";
  std::string kind = "tsp_v";
  int levels = 10;
  double fraction = kDefaultSkeletonFraction;

  auto* decompose_cmd = app.add_subcommand("decompose", "Label peripheral and gross parts");
  auto* field_cmd = app.add_subcommand("field", "Write the omega and distance fields");
  auto* saliency_cmd = app.add_subcommand("saliency", "Sublevel snapshots and the saliency table");
  auto* sweep_cmd = app.add_subcommand("sweep-c", "Decompose once per global weight");
  auto* tsp_cmd = app.add_subcommand("tsp", "Legacy screened fields and their level curves");
  auto* skeleton_cmd = app.add_subcommand("skeleton", "Skeleton from the tsp_v gradient");

  for (auto* cmd : {decompose_cmd, field_cmd, saliency_cmd, sweep_cmd, tsp_cmd, skeleton_cmd}) add_common(*cmd, common);
  for (auto* cmd : {decompose_cmd, field_cmd, saliency_cmd}) {
    cmd->add_option("-c,--c", c, "Global weight")->check(CLI::NonNegativeNumber)->capture_default_str();
    cmd->add_option("--w-bdy", w_bdy, "Boundary weight of the diagnostic energy")->capture_default_str();
  }
  sweep_cmd->add_option("-c,--c", c_list, "Global weights")->delimiter(',')->capture_default_str();
  saliency_cmd->add_option("--taus", taus, "Sublevel thresholds")->delimiter(',')->capture_default_str();
  tsp_cmd->add_option("--alpha", alphas, "Screening values")->delimiter(',')->capture_default_str();
  tsp_cmd->add_option("--kind", kind, "tsp_v, poisson or screened_distance")->capture_default_str();
  tsp_cmd->add_option("--levels", levels, "Level curves per field")->check(CLI::Range(1, 1000))->capture_default_str();
  skeleton_cmd->add_option("--alpha", alpha, "Screening of the tsp_v field")->capture_default_str();
  skeleton_cmd->add_option("--threshold-fraction", fraction, "Keep strength above this share of the maximum")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "shapeparts: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Manifest m;
    const auto config = common.solver();
    m.set("palette_version", std::string(io::kPaletteVersion));

    if (decompose_cmd->parsed()) {
      const auto in = load(common, m, "decompose");
      auto res = decompose(compute_omega(in.domain, {.global_weight = c}, config));
      attach_saliency(res);
      io::write_labels_ppm(res.decomposition, in.out / "labels.ppm");
      io::write_text(in.out / "parts.csv", io::format_parts_csv(res.decomposition));
      m.set("c", c);
      m.set("w_bdy", w_bdy);
      m.set("energy", total_energy(res.omega.omega, res.omega.distance, w_bdy));
      m.solver("", config, res.omega.report, in.domain->omega_size());
      describe(m, "", res);
      m.write(in.out);
    } else if (field_cmd->parsed()) {
      const auto in = load(common, m, "field");
      const auto om = compute_omega(in.domain, {.global_weight = c}, config);
      io::write_field_text(om.omega, in.out / "omega.txt");
      io::write_field_pgm(om.omega, in.out / "omega.pgm");
      io::write_field_text(om.distance.field(), in.out / "distance.txt");
      io::write_region_pgm(om.negative, in.out / "negative.pgm");
      m.set("c", c);
      m.set("w_bdy", w_bdy);
      m.set("energy", total_energy(om.omega, om.distance, w_bdy));
      m.set("global_sum", om.global_sum);
      m.set("omega_min", om.omega.min());
      m.set("omega_max", om.omega.max());
      m.solver("", config, om.report, in.domain->omega_size());
      m.write(in.out);
    } else if (saliency_cmd->parsed()) {
      const auto tau_values = parse_reals(taus);
      const auto in = load(common, m, "saliency");
      auto res = decompose(compute_omega(in.domain, {.global_weight = c}, config));
      const auto table = attach_saliency(res);
      const auto snapshots = snapshot_series(res.omega, tau_values);
      for (std::size_t i = 0; i < snapshots.size(); ++i)
        io::write_region_pgm(snapshots[i], in.out / level_name("snapshot", i, "pgm"));
      io::write_text(in.out / "saliency.csv", io::format_saliency_csv(table));
      m.set("c", c);
      m.set("w_bdy", w_bdy);
      m.set("taus", tau_values);
      m.set("energy", total_energy(res.omega.omega, res.omega.distance, w_bdy));
      m.solver("", config, res.omega.report, in.domain->omega_size());
      describe(m, "", res);
      m.write(in.out);
    } else if (sweep_cmd->parsed()) {
      const auto weights = parse_reals(c_list);
      const auto in = load(common, m, "sweep-c");
      m.set("c", weights);
      std::string csv = "c,negative_pixels,peripheral_parts,gross_parts,iterations,relative_residual\n";
      for (std::size_t i = 0; i < weights.size(); ++i) {
        auto res = decompose(compute_omega(in.domain, {.global_weight = weights[i]}, config));
        attach_saliency(res);
        const auto name = "labels_c" + io::format_real(weights[i]) + ".ppm";
        io::write_labels_ppm(res.decomposition, in.out / name);
        const auto prefix = "c[" + std::to_string(i) + "].";
        m.set(prefix + "value", weights[i]);
        m.set(prefix + "labels", name);
        m.solver(prefix, config, res.omega.report, in.domain->omega_size());
        describe(m, prefix, res);
        csv += io::format_real(weights[i]) + ',' + std::to_string(res.omega.negative.count()) + ',' +
               std::to_string(res.decomposition.peripheral_count()) + ',' +
               std::to_string(res.decomposition.gross_count()) + ',' + std::to_string(res.omega.report.iterations) +
               ',' + io::format_real(res.omega.report.relative_residual()) + '\n';
      }
      io::write_text(in.out / "sweep.csv", csv);
      m.write(in.out);
    } else if (tsp_cmd->parsed()) {
      LegacyKind field_kind{};
      try {
        field_kind = parse_legacy_kind(kind);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      auto alpha_values = parse_reals(alphas);
      if (field_kind == LegacyKind::Poisson) alpha_values = {0.0};
      const auto in = load(common, m, "tsp");
      m.set("kind", std::string(to_string(field_kind)));
      m.set("alpha", alpha_values);
      m.set("levels", static_cast<std::size_t>(levels));
      for (std::size_t i = 0; i < alpha_values.size(); ++i) {
        const auto r = compute_legacy_field(in.domain, {field_kind, alpha_values[i]}, config);
        io::write_field_text(r.solution, in.out / level_name("field", i, "txt"));
        io::write_field_pgm(r.solution, in.out / level_name("field", i, "pgm"));
        io::write_region_pgm(level_set_union(r.solution, levels), in.out / level_name("levels", i, "pgm"));
        const auto prefix = "alpha[" + std::to_string(i) + "].";
        m.set(prefix + "value", alpha_values[i]);
        m.set(prefix + "min", r.solution.min());
        m.set(prefix + "max", r.solution.max());
        m.solver(prefix, config, r.report, in.domain->omega_size());
      }
      m.write(in.out);
    } else if (skeleton_cmd->parsed()) {
      const double a = parse_real(alpha);
      const auto in = load(common, m, "skeleton");
      const auto r = compute_legacy_field(in.domain, {LegacyKind::TspV, a}, config);
      const auto strength = skeleton_strength(r.solution);
      const auto sk = skeleton_mask(strength, fraction);
      io::write_field_text(r.solution, in.out / "tsp_v.txt");
      io::write_field_text(strength, in.out / "strength.txt");
      io::write_region_pgm(sk, in.out / "skeleton.pgm");
      m.set("alpha", a);
      m.set("threshold_fraction", fraction);
      m.set("skeleton_pixels", sk.count());
      m.solver("", config, r.report, in.domain->omega_size());
      m.write(in.out);
    }
  } catch (const UsageError& e) {
    std::cerr << "shapeparts: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "shapeparts: " << e.what() << "\n";
    return kExitData;
  }
  return 0;
}
