#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "shapeparts/decompose.hpp"
#include "shapeparts/io.hpp"
#include "shapeparts/legacy.hpp"
#include "shapeparts/saliency.hpp"

using namespace shapeparts;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string num(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

double max_abs_diff(const ScalarField& a, const ScalarField& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

struct Named {
  std::string name;
  BinaryMask mask;
};

std::vector<Named> fixture_suite(int size) {
  return {{"protrusions", fixtures::protrusions(size)},
          {"thin_neck", fixtures::thin_neck(size)},
          {"two_lobe", fixtures::two_lobe(size)},
          {"dumbbell", fixtures::dumbbell(size, size * 2 / 3, 0.08)},
          {"turtle", fixtures::turtle(size)},
          {"human", fixtures::human(size, false)},
          {"human_hole", fixtures::human(size, true)},
          {"three_blob", fixtures::three_blob(size, size / 2)},
          {"disk", fixtures::disk(size)},
          {"rectangle", fixtures::rectangle(size, size / 3, 2)}};
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto start = Clock::now();
  double worst = 0.0;
  for (const auto& mask : oracles::random_masks(oracles::seed_list(50), 20)) {
    const auto d = build_domain(mask);
    const auto rhs = distance_transform(d).field();
    const OperatorParams p{.global_weight = 1.0};
    worst = std::max(worst, max_abs_diff(solve_cg(p, rhs).solution, solve_dense_oracle(p, rhs)));
  }
  const double elapsed = seconds_since(start);
  o.require(worst < 1e-8, "max difference " + num(worst));
  o.require(elapsed < 10.0, "took " + num(elapsed) + " s");
  if (o.pass) o.detail = "max |cg - dense| = " + num(worst) + " over 50 masks in " + num(elapsed) + " s";
  return o;
}

Outcome analytic_fixtures() {
  Outcome o;
  const auto one = compute_omega(fixtures::filled(3, 3));
  o.require(std::abs(one.omega[0] - 0.2) <= 1e-12, "single pixel gives " + io::format_real(one.omega[0]));
  const auto five = compute_omega(fixtures::filled(5, 5));
  const double corner = 824.0 / 2096;
  const double edge = 572.0 / 1048;
  const double centre = 960.0 / 1048;
  const double expected[9] = {corner, edge, corner, edge, centre, edge, corner, edge, corner};
  double worst = 0.0;
  for (std::size_t k = 0; k < 9; ++k) worst = std::max(worst, std::abs(five.omega[k] - expected[k]));
  o.require(worst < 1e-8, "5x5 deviates by " + num(worst));
  if (o.pass) o.detail = "single pixel 0.2, 5x5 within " + num(worst);
  return o;
}

Outcome distance_exactness() {
  Outcome o;
  std::size_t masks = 0;
  std::vector<BinaryMask> all;
  for (const int size : {30, 60, 64})
    for (auto& f : fixture_suite(size)) all.push_back(std::move(f.mask));
  for (auto& m : oracles::random_masks(oracles::seed_list(40), 64)) all.push_back(std::move(m));
  for (const auto& mask : all) {
    const auto d = build_domain(mask);
    const auto t = distance_transform(d);
    const auto brute = oracles::brute_force_squared_distance(*d);
    o.require(std::equal(brute.begin(), brute.end(), t.squared().begin(), t.squared().end()),
              "mismatch on mask " + std::to_string(masks));
    ++masks;
  }
  if (o.pass) o.detail = std::to_string(masks) + " masks exact";
  return o;
}

Outcome merge_tree_cross_validation() {
  Outcome o;
  std::size_t levels = 0;
  std::vector<Named> suite = fixture_suite(30);
  suite.push_back({"filled", fixtures::filled(5, 5)});
  std::size_t r = 0;
  for (auto& m : oracles::random_masks(oracles::seed_list(20), 30)) suite.push_back({"random" + std::to_string(r++), m});
  for (const auto& f : suite) {
    auto res = decompose_shape(f.mask);
    const auto& om = res.omega;
    if (om.negative.empty()) {
      o.require(res.no_peripheral && res.decomposition.peripheral_count() == 0, f.name + ": parts without Omega-");
      continue;
    }
    const auto tree = build_merge_tree(om.omega, om.negative);
    const auto minima = regional_minima(om.omega, om.negative);
    o.require(res.decomposition.peripheral_count() == minima.size(), f.name + ": part count differs from minima count");
    o.require(tree.size() == minima.size(), f.name + ": tree size differs from minima count");
    std::set<double> taus{0.0};
    for (std::size_t k = 0; k < om.omega.size(); ++k) {
      if (!om.negative.contains(k)) continue;
      taus.insert(om.omega[k]);
      taus.insert(std::nextafter(om.omega[k], std::numeric_limits<double>::infinity()));
    }
    for (const double tau : taus) {
      std::vector<std::uint8_t> below(om.omega.size(), 0);
      for (std::size_t k = 0; k < below.size(); ++k) below[k] = om.negative.contains(k) && om.omega[k] < tau;
      const auto brute = oracles::brute_force_component_count(RegionMask(om.domain, below));
      o.require(tree.component_count(tau) == brute, f.name + ": count differs at tau " + io::format_real(tau));
      ++levels;
    }
  }
  if (o.pass) o.detail = std::to_string(suite.size()) + " masks, " + std::to_string(levels) + " thresholds";
  return o;
}

Outcome part_counts() {
  Outcome o;
  std::string summary;
  for (const int size : {60, 220}) {
    const auto res = decompose_shape(fixtures::protrusions(size));
    const auto& dec = res.decomposition;
    const auto& d = *res.omega.domain;
    const std::string tag = "protrusions " + std::to_string(size) + ": ";
    o.require(dec.peripheral_count() == 4, tag + std::to_string(dec.peripheral_count()) + " peripheral parts");
    o.require(dec.gross_count() == 1, tag + std::to_string(dec.gross_count()) + " gross parts");
    const int mid = size / 2;
    std::set<std::int32_t> tip_labels;
    for (const auto& [r0, c0, dr, dc] :
         {std::array{0, mid, 1, 0}, std::array{size - 1, mid, -1, 0}, std::array{mid, 0, 0, 1}, std::array{mid, size - 1, 0, -1}}) {
      int r = r0;
      int c = c0;
      while (d.mask().in_image(r, c) && d.interior_index(r, c) == DomainGrid::kNone) r += dr, c += dc;
      const auto k = d.interior_index(r, c);
      o.require(k != DomainGrid::kNone, tag + "arm without interior");
      if (k == DomainGrid::kNone) continue;
      const auto l = dec.labels[static_cast<std::size_t>(k)];
      o.require(dec.part(l).sign_class == SignClass::Peripheral, tag + "tip not peripheral");
      tip_labels.insert(l);
    }
    o.require(tip_labels.size() == 4, tag + "tips share parts");
    summary += tag + std::to_string(dec.peripheral_count()) + "/" + std::to_string(dec.gross_count()) + "; ";
  }
  const auto neck = decompose_shape(fixtures::thin_neck(60));
  o.require(neck.decomposition.gross_count() == 2,
            "thin neck: " + std::to_string(neck.decomposition.gross_count()) + " gross parts");
  if (o.pass) o.detail = summary + "thin neck gross 2";
  return o;
}

Outcome c_sweep() {
  Outcome o;
  const auto d = build_domain(fixtures::two_lobe(60));
  const std::vector<std::size_t> frozen = {602, 550, 252, 0};
  std::vector<std::size_t> counts;
  for (const double c : {1.0, 0.5, 0.125, 0.025}) counts.push_back(compute_omega(d, {.global_weight = c}).negative.count());
  std::string listed;
  for (const auto n : counts) listed += std::to_string(n) + " ";
  o.require(std::is_sorted(counts.rbegin(), counts.rend()), "counts increase: " + listed);
  o.require(counts == frozen, "counts changed: " + listed);
  if (o.pass) o.detail = "|Omega-| = " + listed;
  return o;
}

Outcome legacy_properties() {
  Outcome o;
  double screened_gap = 0.0;
  double relative_gap = 0.0;
  for (const auto& f : fixture_suite(60)) {
    const auto d = build_domain(f.mask);
    for (const double a : {1.0 / 16, 1.0 / 64, 1.0 / 256}) {
      const auto v = compute_legacy_field(d, {LegacyKind::TspV, a}).solution;
      o.require(v.min() > 0.0 && v.max() < 1.0, f.name + ": tsp_v leaves (0, 1)");
    }
    o.require(compute_legacy_field(d, {LegacyKind::Poisson, 0.0}).solution.min() > 0.0, f.name + ": poisson not positive");
    const auto w = compute_legacy_field(d, {LegacyKind::ScreenedDistance, 1e-8}).solution;
    const auto om = compute_omega(d, {.global_weight = 0.0, .rhs_scale = 2.0});
    const double gap = max_abs_diff(w, om.omega);
    screened_gap = std::max(screened_gap, gap);
    relative_gap = std::max(relative_gap, gap / om.omega.max_abs());
  }
  o.require(relative_gap < 1e-5, "screened distance differs from omega(c=0) by " + num(relative_gap) + " of max|omega|");
  if (o.pass) o.detail = "10 fixtures; screened gap " + num(screened_gap) + " abs, " + num(relative_gap) + " rel";
  return o;
}

/// True when the two labelings agree up to a bijection of label ids.
bool same_partition(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  std::map<std::int32_t, std::int32_t> ab, ba;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (ab.emplace(a[k], b[k]).first->second != b[k]) return false;
    if (ba.emplace(b[k], a[k]).first->second != a[k]) return false;
  }
  return true;
}

/// Pixels where two decompositions of the same field disagree. Peripheral
/// labels correspond through their seeds, gross labels by majority. A
/// disagreement is allowed only between peripheral parts whose seeds share
/// the same field value exactly, where the flood order alone breaks the tie.
/// Returns nullopt when some other pixel disagrees or the correspondence is
/// not a bijection.
std::optional<std::size_t> tie_only_mismatch(const DecomposeResult& a, const Decomposition& b,
                                             std::span<const std::int32_t> b_labels) {
  std::map<std::int32_t, std::int32_t> to_b;
  for (std::size_t s = 0; s < a.seeds.size(); ++s) to_b[static_cast<std::int32_t>(s + 1)] = b_labels[a.seeds[s].representative];
  std::map<std::int32_t, std::map<std::int32_t, std::size_t>> votes;
  for (std::size_t k = 0; k < a.decomposition.labels.size(); ++k)
    if (a.decomposition.part(a.decomposition.labels[k]).sign_class == SignClass::Gross) ++votes[a.decomposition.labels[k]][b_labels[k]];
  for (const auto& [la, row] : votes)
    to_b[la] = std::max_element(row.begin(), row.end(), [](auto x, auto y) { return x.second < y.second; })->first;
  std::set<std::int32_t> used;
  for (const auto& [la, lb] : to_b)
    if (!used.insert(lb).second) return std::nullopt;

  std::size_t mismatched = 0;
  for (std::size_t k = 0; k < b_labels.size(); ++k) {
    const auto la = a.decomposition.labels[k];
    if (to_b[la] == b_labels[k]) continue;
    const auto& pa = a.decomposition.part(la);
    const auto& pb = b.part(b_labels[k]);
    if (pa.sign_class != SignClass::Peripheral || pb.sign_class != SignClass::Peripheral) return std::nullopt;
    if (pa.min_omega != pb.min_omega) return std::nullopt;
    ++mismatched;
  }
  return mismatched;
}

/// The moved solve pulled back onto the base domain, so the pipeline after
/// the solve can be rerun on the field the moved decomposition actually saw.
OmegaResult pulled_back(const OmegaResult& base, const OmegaResult& moved, std::span<const std::size_t> map) {
  auto out = base;
  auto pull = [&](const RegionMask& m) {
    std::vector<std::uint8_t> cells(map.size());
    for (std::size_t k = 0; k < map.size(); ++k) cells[k] = m.contains(map[k]);
    return RegionMask(base.domain, std::move(cells));
  };
  for (std::size_t k = 0; k < map.size(); ++k) out.omega[k] = moved.omega[map[k]];
  out.positive = pull(moved.positive);
  out.negative = pull(moved.negative);
  out.zero = pull(moved.zero);
  return out;
}

Outcome symmetry() {
  Outcome o;
  double worst = 0.0;
  std::size_t cases = 0;
  std::size_t rounded = 0;
  std::size_t tied = 0;
  for (const auto& f : fixture_suite(60)) {
    const auto base = decompose_shape(f.mask);
    const auto& d = *base.omega.domain;
    for (const auto& t : oracles::transforms()) {
      const std::string name = t.name;
      if (name != "mirror" && name != "rotate90") continue;
      const auto moved = decompose_shape(t.apply(f.mask));
      const auto map = oracles::unknown_map(d, *moved.omega.domain, t);
      double gap = 0.0;
      bool t_exact = true;
      std::vector<std::int32_t> pulled(map.size());
      for (std::size_t k = 0; k < map.size(); ++k) {
        gap = std::max(gap, std::abs(base.omega.omega[k] - moved.omega.omega[map[k]]));
        t_exact = t_exact && base.omega.distance.squared()[k] == moved.omega.distance.squared()[map[k]];
        pulled[k] = moved.decomposition.labels[map[k]];
      }
      worst = std::max(worst, gap);
      o.require(gap < 1e-8, f.name + " " + name + ": omega asymmetry " + num(gap));
      o.require(t_exact, f.name + " " + name + ": distance not equivariant");
      o.require(moved.decomposition.peripheral_count() == base.decomposition.peripheral_count() &&
                    moved.decomposition.gross_count() == base.decomposition.gross_count(),
                f.name + " " + name + ": part counts differ");
      if (!same_partition(base.decomposition.labels, pulled)) {
        // Rerun on the moved field itself: what remains is tie-breaking.
        const auto rerun = decompose(pulled_back(base.omega, moved.omega, map));
        const auto ties = tie_only_mismatch(rerun, moved.decomposition, pulled);
        o.require(ties.has_value(), f.name + " " + name + ": labels differ");
        for (std::size_t k = 0; k < map.size(); ++k) rounded += rerun.decomposition.labels[k] != base.decomposition.labels[k];
        tied += ties.value_or(0);
      }
      ++cases;
    }
  }
  if (o.pass)
    o.detail = std::to_string(cases) + " cases, omega asymmetry " + num(worst) + ", labels moved by field roundoff " +
               std::to_string(rounded) + ", by exact seed ties " + std::to_string(tied);
  return o;
}

Outcome performance() {
  Outcome o;
  double times[2] = {0, 0};
  int i = 0;
  for (const auto& [size, budget] : {std::pair{60, 1.0}, std::pair{220, 10.0}}) {
    const auto mask = fixtures::protrusions(size);
    const auto start = Clock::now();
    auto res = decompose_shape(mask);
    if (!res.no_peripheral) (void)saliency_table(build_merge_tree(res.omega.omega, res.omega.negative), res.decomposition);
    (void)io::render_labels(res.decomposition);
    times[i] = seconds_since(start);
    o.require(times[i] < budget, std::to_string(size) + " px took " + num(times[i]) + " s");
    ++i;
  }
  if (o.pass) o.detail = "60 px " + num(times[0]) + " s, 220 px " + num(times[1]) + " s";
  return o;
}

std::map<std::string, std::string> snapshot_dir(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    std::ifstream in(e.path(), std::ios::binary);
    files[fs::relative(e.path(), dir).string()] = std::string(std::istreambuf_iterator<char>(in), {});
  }
  return files;
}

std::string shell_quoted(const fs::path& p) { return "'" + p.string() + "'"; }

Outcome determinism(const std::string& cli, const fs::path& work) {
  Outcome o;
  if (cli.empty()) {
    o.require(false, "no CLI binary given (--cli)");
    return o;
  }
  fs::remove_all(work);
  fs::create_directories(work);
  const auto input = work / "turtle.pgm";
  io::write_mask_pgm(fixtures::turtle(60), input);
  const char* commands[] = {"decompose", "field", "saliency", "sweep-c", "tsp", "skeleton"};
  for (const auto* run : {"run1", "run2"}) {
    for (const auto* cmd : commands) {
      const auto out = work / run / cmd;
      const auto line = shell_quoted(cli) + " " + cmd + " " + shell_quoted(input) + " --out " + shell_quoted(out) + " 2>&1";
      o.require(std::system(line.c_str()) == 0, std::string(cmd) + " failed");
    }
  }
  if (!o.pass) return o;
  const auto a = snapshot_dir(work / "run1");
  const auto b = snapshot_dir(work / "run2");
  o.require(!a.empty(), "no artifacts written");
  o.require(a == b, "artifact directories differ");
  if (o.pass) o.detail = std::to_string(a.size()) + " files byte-identical";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::string cli;
  std::string work = "acceptance_work";
  app.add_option("--cli", cli, "Path of the shapeparts binary");
  app.add_option("--work", work, "Scratch directory");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"oracle equivalence", oracle_equivalence},
      {"analytic fixtures", analytic_fixtures},
      {"distance transform exactness", distance_exactness},
      {"watershed and merge-tree cross-validation", merge_tree_cross_validation},
      {"sign split and part counts", part_counts},
      {"c sweep", c_sweep},
      {"legacy field properties", legacy_properties},
      {"symmetry", symmetry},
      {"performance", performance},
      {"determinism", [&] { return determinism(cli, work); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
