// Numerically locates members of the six-equal-angle family fitting a target
// triangle shape: either at a prescribed common angle theta, or at the
// circumcenter-coincidence configuration (D = P, E = Q, F = R).

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "morley/constructions.hpp"

namespace morley {

enum class SolveMode {
  six_angle_target,          // drive the common angle to theta
  circumcenter_coincidence,  // drive D,E,F onto P,Q,R
};

struct SolveRequest {
  double alpha = 0.0;  // target interior angles of ABC, radians, sum pi
  double beta = 0.0;
  double gamma = 0.0;
  SolveMode mode = SolveMode::six_angle_target;
  double theta = deg2rad(150.0);  // ignored in circumcenter_coincidence mode
  int max_iter = 200;
  double step_tol = 1e-12;
  double residual_tol = 1e-10;
  // admissible window for theta, interpreted through fold_angle
  double theta_min = deg2rad(120.0);
  double theta_max = deg2rad(200.0);
  ToleranceProfile tol;
};

struct SolveResult {
  ConverseParameters params;
  MorleyConfiguration cfg;  // posed inside the canonical target triangle
  double residual = 0.0;    // 2-norm of residual_vector at params
  int iterations = 0;
  bool converged = false;
  double alignment_residual = 0.0;  // |C' - C| / diameter of the similarity fit
};

// Mean of the six measured angles (they agree to rounding on any
// converse-constructed configuration).
double common_six_angle(const MorleyConfiguration& cfg,
                        const ToleranceProfile& tol = default_tol());

// (angle(A') - alpha, angle(B') - beta, common - fold(theta)); in
// circumcenter_coincidence mode the third component is
// max(|D-P|, |E-Q|, |F-R|) / diameter.
std::array<double, 3> residual_vector(const ConverseParameters& params,
                                      const SolveRequest& req);

struct NewtonOptions {
  int max_iter = 200;
  double step_tol = 1e-12;
  double residual_tol = 1e-10;
  double fd_step = 1e-7;       // forward-difference Jacobian step
  int max_halvings = 30;       // backtracking line search
  double cond_limit = 1e12;    // above this, fall back to a gradient step
  std::function<void(const std::vector<double>&, double)> on_iterate;
};

struct NewtonResult {
  std::vector<double> x;
  int iterations = 0;
  bool converged = false;
  double residual_norm = 0.0;
  int singular_steps = 0;  // iterations that fell back to gradient descent
};

// Damped Newton with forward-difference Jacobian and halving line search on
// the residual 2-norm. The callable may signal an infeasible point by
// returning an empty vector; the line search backs away from those.
NewtonResult damped_newton(
    const std::function<std::vector<double>(const std::vector<double>&)>& f,
    std::vector<double> x0, const NewtonOptions& opts = {});

// Continuation solve starting from the classic trisector parameters of the
// target shape. Non-convergence is reported through converged=false with the
// best iterate, not an exception.
SolveResult solve(const SolveRequest& req);

}  // namespace morley
