#include "shapeparts/linsys.hpp"

#include <cmath>
#include <string>

#include "summation.hpp"

namespace shapeparts {

namespace {

void check_params(const OperatorParams& params) {
  if (!(params.global_weight >= 0.0) || !std::isfinite(params.global_weight)) {
    throw Error(ErrorCode::InvalidArgument, "global weight must be finite and nonnegative");
  }
  if (!(params.screening >= 0.0) || !std::isfinite(params.screening)) {
    throw Error(ErrorCode::InvalidArgument, "screening must be finite and nonnegative");
  }
}

void apply_into(const OperatorParams& params, const DomainGrid& domain, std::span<const double> x,
                std::span<double> y) {
  const double diag = 4.0 + params.screening;
  const double coupling =
      params.global_weight / static_cast<double>(domain.omega_size()) * detail::compensated_sum(x);
  for (std::size_t k = 0; k < x.size(); ++k) {
    double acc = diag * x[k];
    for (const auto nb : domain.neighbors(k)) {
      if (nb != DomainGrid::kNone) acc -= x[static_cast<std::size_t>(nb)];
    }
    y[k] = acc + coupling;
  }
}

double residual_norm(const OperatorParams& params, const DomainGrid& domain, std::span<const double> x,
                     std::span<const double> b, std::span<double> scratch) {
  apply_into(params, domain, x, scratch);
  detail::CompensatedSum s;
  for (std::size_t k = 0; k < b.size(); ++k) {
    const double r = b[k] - scratch[k];
    s.add(r * r);
  }
  return std::sqrt(s.value());
}

}  // namespace

double dot(const ScalarField& a, const ScalarField& b) {
  require_same_domain(*a.domain(), *b.domain());
  return detail::compensated_dot(a.values(), b.values());
}

double norm2(const ScalarField& a) { return std::sqrt(dot(a, a)); }

ScalarField apply_operator(const OperatorParams& params, const ScalarField& x) {
  check_params(params);
  ScalarField y(x.domain());
  apply_into(params, *x.domain(), x.values(), y.values());
  return y;
}

SolveResult solve_cg(const OperatorParams& params, const ScalarField& rhs, const SolverConfig& config) {
  check_params(params);
  if (!(config.rel_tolerance > 0.0)) throw Error(ErrorCode::InvalidArgument, "rel_tolerance must be positive");
  const auto& domain = *rhs.domain();
  const std::size_t n = rhs.size();
  const std::size_t max_iter = config.max_iterations > 0 ? config.max_iterations : 10 * n;

  SolveReport report;
  ScalarField x(rhs.domain());
  const auto b = rhs.values();
  report.rhs_norm = std::sqrt(detail::compensated_dot(b, b));
  if (report.rhs_norm == 0.0) {
    report.converged = true;
    return {std::move(x), std::move(report)};
  }
  const double target = config.rel_tolerance * report.rhs_norm;

  std::vector<double> r(b.begin(), b.end());
  std::vector<double> p = r;
  std::vector<double> ap(n);
  double rr = detail::compensated_dot(r, r);
  auto xs = x.values();
  if (config.report_residual) report.residual_history.push_back(1.0);

  while (report.iterations < max_iter) {
    apply_into(params, domain, p, ap);
    const double pap = detail::compensated_dot(p, ap);
    if (!(pap > 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "operator is not positive definite for these parameters");
    }
    const double step = rr / pap;
    for (std::size_t k = 0; k < n; ++k) {
      xs[k] += step * p[k];
      r[k] -= step * ap[k];
    }
    ++report.iterations;
    double rr_next = detail::compensated_dot(r, r);
    if (config.report_residual) report.residual_history.push_back(std::sqrt(rr_next) / report.rhs_norm);

    if (std::sqrt(rr_next) <= target) {
      // The recurrence can drift from the true residual; confirm before accepting.
      const double true_norm = residual_norm(params, domain, xs, b, ap);
      if (true_norm <= target) {
        report.residual_norm = true_norm;
        report.converged = true;
        return {std::move(x), std::move(report)};
      }
      apply_into(params, domain, xs, ap);
      for (std::size_t k = 0; k < n; ++k) r[k] = b[k] - ap[k];
      p = r;
      rr = detail::compensated_dot(r, r);
      continue;
    }
    const double beta = rr_next / rr;
    for (std::size_t k = 0; k < n; ++k) p[k] = r[k] + beta * p[k];
    rr = rr_next;
  }

  report.residual_norm = residual_norm(params, domain, xs, b, ap);
  throw NoConvergenceError("conjugate gradients stopped after " + std::to_string(report.iterations) +
                               " iterations with relative residual " +
                               std::to_string(report.relative_residual()),
                           std::move(report));
}

ScalarField solve_dense_oracle(const OperatorParams& params, const ScalarField& rhs) {
  check_params(params);
  const auto& domain = *rhs.domain();
  const std::size_t n = rhs.size();
  if (n > kDenseOracleLimit) {
    throw Error(ErrorCode::TooLarge, "dense oracle limited to " + std::to_string(kDenseOracleLimit) + " unknowns");
  }
  const std::size_t cols = n + 1;
  std::vector<double> m(n * cols, params.global_weight / static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    m[k * cols + k] += 4.0 + params.screening;
    for (const auto nb : domain.neighbors(k)) {
      if (nb != DomainGrid::kNone) m[k * cols + static_cast<std::size_t>(nb)] -= 1.0;
    }
    m[k * cols + n] = rhs[k];
  }

  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(m[r * cols + c]) > std::abs(m[pivot * cols + c])) pivot = r;
    }
    if (std::abs(m[pivot * cols + c]) < 1e-13) throw Error(ErrorCode::SingularMatrix, "zero pivot in dense solve");
    if (pivot != c) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m[c * cols + j], m[pivot * cols + j]);
    }
    const double inv = 1.0 / m[c * cols + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = m[r * cols + c] * inv;
      if (f == 0.0) continue;
      for (std::size_t j = c; j < cols; ++j) m[r * cols + j] -= f * m[c * cols + j];
    }
  }
  ScalarField x(rhs.domain());
  for (std::size_t i = n; i-- > 0;) {
    double acc = m[i * cols + n];
    for (std::size_t j = i + 1; j < n; ++j) acc -= m[i * cols + j] * x[j];
    x[i] = acc / m[i * cols + i];
  }
  return x;
}

double total_energy(const ScalarField& omega, const DistanceField& t, double w_bdy) {
  require_same_domain(*omega.domain(), *t.domain());
  const auto& domain = *omega.domain();
  const double n = static_cast<double>(domain.omega_size());
  const double sum = detail::compensated_sum(omega.values());
  const double global_term = sum * sum / n;
  detail::CompensatedSum e;
  for (std::size_t k = 0; k < omega.size(); ++k) {
    const auto p = domain.pixel(k);
    const double local = omega.at(p.row + 1, p.col) * omega.at(p.row - 1, p.col) +
                         omega.at(p.row, p.col + 1) * omega.at(p.row, p.col - 1);
    const double d = omega[k] - t[k];
    e.add(global_term - local + w_bdy * d * d);
  }
  return e.value();
}

}  // namespace shapeparts
