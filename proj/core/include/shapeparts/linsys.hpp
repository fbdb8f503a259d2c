#pragma once

#include <cstddef>
#include <vector>

#include "shapeparts/distance.hpp"
#include "shapeparts/error.hpp"
#include "shapeparts/field.hpp"

namespace shapeparts {

/// Coefficients of A x = (4 + screening) x - sum(interior neighbours)
///                      + (global_weight / |Omega|) * sum(x).
struct OperatorParams {
  double global_weight = 1.0;
  double screening = 0.0;
};

struct SolverConfig {
  double rel_tolerance = 1e-10;
  /// 0 selects 10 * |Omega|.
  std::size_t max_iterations = 0;
  /// Keep the relative residual of the zero start and of every iteration.
  bool report_residual = false;
};

struct SolveReport {
  std::size_t iterations = 0;
  double residual_norm = 0.0;  // true residual ||A x - b||_2 at exit
  double rhs_norm = 0.0;
  bool converged = false;
  std::vector<double> residual_history;

  double relative_residual() const noexcept {
    return rhs_norm > 0.0 ? residual_norm / rhs_norm : residual_norm;
  }
};

struct SolveResult {
  ScalarField solution;
  SolveReport report;
};

class NoConvergenceError : public Error {
 public:
  NoConvergenceError(const std::string& message, SolveReport report)
      : Error(ErrorCode::NoConvergence, message), report_(std::move(report)) {}
  const SolveReport& report() const noexcept { return report_; }

 private:
  SolveReport report_;
};

ScalarField apply_operator(const OperatorParams& params, const ScalarField& x);

/// Unpreconditioned conjugate gradients. The rank-one term costs one global
/// reduction per application. Throws NoConvergenceError when the iteration
/// budget runs out.
SolveResult solve_cg(const OperatorParams& params, const ScalarField& rhs,
                     const SolverConfig& config = {});

/// Assembles A densely and solves by Gaussian elimination with partial
/// pivoting. Test oracle; refuses domains with more than kDenseOracleLimit unknowns.
inline constexpr std::size_t kDenseOracleLimit = 4096;
ScalarField solve_dense_oracle(const OperatorParams& params, const ScalarField& rhs);

/// Diagnostic energy: sum over interior pixels of
///   (1/|Omega|)(sum w)^2 - (w[i+1,j] w[i-1,j] + w[i,j+1] w[i,j-1]) + w_bdy (w - t)^2.
/// The linear system solution is not asserted to minimise this.
double total_energy(const ScalarField& omega, const DistanceField& t, double w_bdy);

double dot(const ScalarField& a, const ScalarField& b);
double norm2(const ScalarField& a);

}  // namespace shapeparts
