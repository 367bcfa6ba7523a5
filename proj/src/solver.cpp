#include "morley/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace morley {

namespace {

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Gaussian elimination with partial pivoting; returns false when the pivot
// ratio exceeds cond_limit or a pivot vanishes.
bool solve_linear(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>& out, double cond_limit) {
  const size_t n = b.size();
  double max_piv = 0.0, min_piv = std::numeric_limits<double>::infinity();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    double p = a[col][col];
    if (p == 0.0) return false;
    max_piv = std::max(max_piv, std::fabs(p));
    min_piv = std::min(min_piv, std::fabs(p));
    for (size_t r = col + 1; r < n; ++r) {
      double m = a[r][col] / p;
      for (size_t c = col; c < n; ++c) a[r][c] -= m * a[col][c];
      b[r] -= m * b[col];
    }
  }
  if (min_piv == 0.0 || max_piv / min_piv > cond_limit) return false;
  out.assign(n, 0.0);
  for (size_t i = n; i-- > 0;) {
    double s = b[i];
    for (size_t j = i + 1; j < n; ++j) s -= a[i][j] * out[j];
    out[i] = s / a[i][i];
  }
  return true;
}

constexpr double kAngleSumTol = 1e-9;

void validate_request(const SolveRequest& req) {
  if (!(req.alpha > 1e-6 && req.beta > 1e-6 && req.gamma > 1e-6) ||
      std::fabs(req.alpha + req.beta + req.gamma - kPi) > kAngleSumTol)
    throw GeomError(GeomErrc::invalid_request,
                    "solve: target angles must be positive and sum to pi");
  if (req.max_iter < 1 || !(req.step_tol > 0.0) || !(req.residual_tol > 0.0))
    throw GeomError(GeomErrc::invalid_request, "solve: bad iteration controls");
  if (!(req.tol.angle_tol > 0.0 && req.tol.length_tol_rel > 0.0 && req.tol.det_tol > 0.0))
    throw GeomError(GeomErrc::invalid_request, "solve: tolerances must be strictly positive");
  if (req.mode == SolveMode::six_angle_target &&
      !(req.theta > req.theta_min && req.theta < req.theta_max))
    throw GeomError(GeomErrc::invalid_request, "solve: theta outside the admissible window");
}

// The measured six angles on a converse configuration all equal
// fold(300deg - (d+e+f)/2); the signed form below is smooth in the
// parameters, which the fold of the measured angle is not at 180deg.
double signed_common_angle(const ConverseParameters& p) {
  return deg2rad(300.0) - (p.d + p.e + p.f) / 2.0;
}

}  // namespace

double common_six_angle(const MorleyConfiguration& cfg, const ToleranceProfile& tol) {
  std::array<double, 6> s = six_angles(cfg, tol);
  return (s[0] + s[1] + s[2] + s[3] + s[4] + s[5]) / 6.0;
}

std::array<double, 3> residual_vector(const ConverseParameters& params,
                                      const SolveRequest& req) {
  MorleyConfiguration cfg = converse_construct(params, req.tol);
  double ra = angle_at(cfg.A(), cfg.B(), cfg.C(), req.tol) - req.alpha;
  double rb = angle_at(cfg.B(), cfg.C(), cfg.A(), req.tol) - req.beta;
  double rc;
  if (req.mode == SolveMode::circumcenter_coincidence) {
    rc = std::max({distance(cfg.D(), cfg.P()), distance(cfg.E(), cfg.Q()),
                   distance(cfg.F(), cfg.R())}) /
         cfg.diameter();
  } else {
    rc = common_six_angle(cfg, req.tol) - fold_angle(req.theta);
  }
  return {ra, rb, rc};
}

NewtonResult damped_newton(
    const std::function<std::vector<double>(const std::vector<double>&)>& f,
    std::vector<double> x0, const NewtonOptions& opts) {
  NewtonResult res;
  res.x = std::move(x0);
  const size_t n = res.x.size();
  std::vector<double> fx = f(res.x);
  if (fx.empty())
    throw GeomError(GeomErrc::invalid_parameters, "damped_newton: infeasible start");
  res.residual_norm = norm2(fx);
  if (opts.on_iterate) opts.on_iterate(res.x, res.residual_norm);

  for (res.iterations = 0; res.iterations < opts.max_iter; ++res.iterations) {
    if (res.residual_norm < opts.residual_tol) {
      res.converged = true;
      return res;
    }
    // forward-difference Jacobian, falling back to backward differences at
    // feasibility boundaries
    std::vector<std::vector<double>> jac(fx.size(), std::vector<double>(n, 0.0));
    for (size_t j = 0; j < n; ++j) {
      std::vector<double> xp = res.x;
      xp[j] += opts.fd_step;
      std::vector<double> fp = f(xp);
      double denom = opts.fd_step;
      if (fp.empty()) {
        xp[j] = res.x[j] - opts.fd_step;
        fp = f(xp);
        denom = -opts.fd_step;
        if (fp.empty())
          throw GeomError(GeomErrc::invalid_parameters,
                          "damped_newton: feasible region thinner than the difference step");
      }
      for (size_t i = 0; i < fx.size(); ++i) jac[i][j] = (fp[i] - fx[i]) / denom;
    }

    std::vector<double> rhs(fx.size());
    for (size_t i = 0; i < fx.size(); ++i) rhs[i] = -fx[i];
    std::vector<double> step;
    if (!solve_linear(jac, rhs, step, opts.cond_limit)) {
      // steepest descent on 0.5|f|^2 with the exact minimizer of the local
      // linear model as the trial length
      ++res.singular_steps;
      std::vector<double> g(n, 0.0);
      for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < fx.size(); ++i) g[j] += jac[i][j] * fx[i];
      std::vector<double> jg(fx.size(), 0.0);
      for (size_t i = 0; i < fx.size(); ++i)
        for (size_t j = 0; j < n; ++j) jg[i] += jac[i][j] * g[j];
      double gg = 0.0, jg2 = 0.0;
      for (double v : g) gg += v * v;
      for (double v : jg) jg2 += v * v;
      if (gg == 0.0 || jg2 == 0.0) return res;  // flat: report best iterate
      step.assign(n, 0.0);
      for (size_t j = 0; j < n; ++j) step[j] = -(gg / jg2) * g[j];
    }

    double lambda = 1.0;
    bool accepted = false;
    for (int h = 0; h <= opts.max_halvings; ++h, lambda /= 2.0) {
      std::vector<double> xt = res.x;
      for (size_t j = 0; j < n; ++j) xt[j] += lambda * step[j];
      std::vector<double> ft = f(xt);
      if (ft.empty()) continue;  // infeasible trial point
      double nt = norm2(ft);
      if (nt < res.residual_norm) {
        double step_norm = 0.0;
        for (size_t j = 0; j < n; ++j) step_norm += (lambda * step[j]) * (lambda * step[j]);
        res.x = std::move(xt);
        fx = std::move(ft);
        res.residual_norm = nt;
        accepted = true;
        if (opts.on_iterate) opts.on_iterate(res.x, res.residual_norm);
        if (std::sqrt(step_norm) < opts.step_tol) {
          res.converged = res.residual_norm < opts.residual_tol;
          ++res.iterations;
          return res;
        }
        break;
      }
    }
    if (!accepted) break;  // stagnated; return best iterate
  }
  res.converged = res.residual_norm < opts.residual_tol;
  return res;
}

SolveResult solve(const SolveRequest& req) {
  validate_request(req);
  Triangle target = triangle_from_angles(req.alpha, req.beta, req.gamma);
  ConverseParameters guess = measure_apex_angles(classic_morley(target, req.tol), req.tol);
  guess.s = 1.0;

  // drive function: target angles plus the signed common angle toward a
  // continuation value theta_c; smooth through 180deg where the measured
  // (folded) angle is not
  auto drive = [&](double theta_c) {
    return [&, theta_c](const std::vector<double>& v) -> std::vector<double> {
      ConverseParameters p{v[0], v[1], v[2], 1.0};
      try {
        MorleyConfiguration cfg = converse_construct(p, req.tol);
        return {angle_at(cfg.A(), cfg.B(), cfg.C(), req.tol) - req.alpha,
                angle_at(cfg.B(), cfg.C(), cfg.A(), req.tol) - req.beta,
                signed_common_angle(p) - theta_c};
      } catch (const GeomError&) {
        return {};
      }
    };
  };

  const double theta_start = deg2rad(150.0);
  const double theta_goal = req.mode == SolveMode::circumcenter_coincidence
                                ? deg2rad(180.0)
                                : req.theta;
  // continuation in steps of at most 5 degrees (giving the documented six
  // steps for the 150 -> 180 coincidence path)
  int n_steps = std::max(1, (int)std::ceil(std::fabs(theta_goal - theta_start) / deg2rad(5.0)));

  NewtonOptions opts;
  opts.max_iter = req.max_iter;
  opts.step_tol = req.step_tol;
  // drive below the requested tolerance; convergence is judged on the
  // literal residual vector afterwards
  opts.residual_tol = std::max(1e-13, req.residual_tol / 100.0);

  std::vector<double> x{guess.d, guess.e, guess.f};
  int total_iterations = 0;
  for (int k = 1; k <= n_steps; ++k) {
    double theta_c = theta_start + (theta_goal - theta_start) * k / n_steps;
    NewtonResult nr = damped_newton(drive(theta_c), x, opts);
    total_iterations += nr.iterations;
    x = nr.x;
  }

  ConverseParameters best{x[0], x[1], x[2], 1.0};
  MorleyConfiguration canonical_cfg = converse_construct(best, req.tol);
  std::array<double, 3> rv = residual_vector(best, req);
  double residual = std::sqrt(rv[0] * rv[0] + rv[1] * rv[1] + rv[2] * rv[2]);

  Similarity sim = Similarity::from_two_points(canonical_cfg.A(), canonical_cfg.B(),
                                               target.v1(), target.v2(), req.tol);
  double align = distance(sim.apply(canonical_cfg.C()), target.v3()) / target.diameter();
  return SolveResult{best,
                     canonical_cfg.transformed(sim, req.tol),
                     residual,
                     total_iterations,
                     residual < req.residual_tol,
                     align};
}

}  // namespace morley
