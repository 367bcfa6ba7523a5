// Acceptance suite: runs each top-level verification criterion at its stated
// tolerance and prints one pass/fail line per criterion. Exit code is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "morley/barycentric.hpp"
#include "morley/constructions.hpp"
#include "morley/solver.hpp"
#include "morley/svg.hpp"
#include "morley/verifier.hpp"

using namespace morley;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void report(int criterion, const char* name, bool pass, const std::string& detail) {
  std::printf("criterion %d [%s] %s (%s)\n", criterion, name, pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

VerificationReport sweep(TheoremId id, int trials, uint64_t seed, double min_angle_deg = 5.0) {
  TrialPlan plan;
  plan.theorem = id;
  plan.trials = trials;
  plan.seed = seed;
  plan.min_angle = deg2rad(min_angle_deg);
  return run(plan);
}

void criterion1() {
  Timer timer;
  VerificationReport rep = sweep(TheoremId::t1, 10000, 1);
  bool pass = rep.pass_count == 10000 && rep.max_residual < 1e-9;
  report(1, "inner triangle equilateral, 10000 trials", pass,
         fmt("pass_count=%d max_residual=%.3e time=%.2fs", rep.pass_count, rep.max_residual,
             timer.seconds()));
}

void criterion2() {
  // each trial evaluates one classic and one converse configuration
  VerificationReport rep = sweep(TheoremId::t2, 1000, 2);
  bool pass = rep.pass_count == 1000 && rep.max_residual < 1e-9;
  report(2, "hypothesis residuals on classic and converse sources", pass,
         fmt("pass_count=%d max_residual=%.3e", rep.pass_count, rep.max_residual));
}

void criterion3() {
  VerificationReport rep = sweep(TheoremId::t3, 1000, 3);
  bool pass = rep.pass_count == 1000 && rep.max_residual < 1e-9;
  double worst_pattern = 0.0;
  for (uint64_t i = 0; i < 1000; ++i) {
    SplitRng rng = trial_rng(33, i);
    double p = 0.1 + next_unit(rng) * 9.9;
    double q = 0.1 + next_unit(rng) * 9.9;
    double r = 0.1 + next_unit(rng) * 9.9;
    worst_pattern = std::max(worst_pattern, perspector_pattern_residual(p, q, r));
  }
  pass = pass && worst_pattern < 1e-12;
  report(3, "cevian concurrency, Cartesian and barycentric routes", pass,
         fmt("pass_count=%d max_det=%.3e max_pattern=%.3e", rep.pass_count, rep.max_residual,
             worst_pattern));
}

void criterion4() {
  double worst_identity = 0.0, worst_wedge = 0.0, worst_half = 0.0;
  long resampled = 0;
  for (uint64_t i = 0; i < 1000; ++i) {
    SplitRng rng = trial_rng(4, i);
    ConverseParameters p = random_converse_params(rng, deg2rad(5), resampled);
    MorleyConfiguration cfg = converse_construct(p);
    HypothesisResiduals hr = hypothesis_residuals(cfg);
    for (double r : hr.angle_identity) worst_identity = std::max(worst_identity, r);
    // the wedge at A measures 120deg - (e+f)/2, and cyclic
    worst_wedge = std::max(
        worst_wedge,
        std::fabs(angle_at(cfg.A(), cfg.Z(), cfg.Y()) - (deg2rad(120) - (p.e + p.f) / 2.0)));
    worst_wedge = std::max(
        worst_wedge,
        std::fabs(angle_at(cfg.B(), cfg.X(), cfg.Z()) - (deg2rad(120) - (p.f + p.d) / 2.0)));
    worst_wedge = std::max(
        worst_wedge,
        std::fabs(angle_at(cfg.C(), cfg.Y(), cfg.X()) - (deg2rad(120) - (p.d + p.e) / 2.0)));
    for (double r : circumcenter_half_angle_check(cfg)) worst_half = std::max(worst_half, r);
  }
  bool pass = worst_identity < 1e-9 && worst_wedge < 1e-9 && worst_half < 1e-8;
  report(4, "converse identities, 1000 apex triples", pass,
         fmt("max_identity=%.3e max_wedge=%.3e max_half_angle=%.3e", worst_identity,
             worst_wedge, worst_half));
}

void criterion5() {
  VerificationReport rep = sweep(TheoremId::t5, 1000, 5);
  bool pass = rep.pass_count == 1000 && rep.max_residual < 1e-9;
  report(5, "six circumcenter angles equal 150 degrees on classic configurations", pass,
         fmt("pass_count=%d max_residual=%.3e", rep.pass_count, rep.max_residual));
}

void criterion6() {
  Timer timer;
  // symmetric case against the 1D bisection oracle
  auto offset = [](double t) {
    MorleyConfiguration cfg = converse_construct({t, t, t, 1.0});
    Vec2 axis = normalized(cfg.D() - midpoint(cfg.Y(), cfg.Z()));
    return dot(cfg.P() - cfg.D(), axis);
  };
  double lo = deg2rad(65), hi = deg2rad(115), flo = offset(lo);
  for (int i = 0; i < 80; ++i) {
    double mid = (lo + hi) / 2.0;
    if ((offset(mid) < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = offset(mid);
    } else {
      hi = mid;
    }
  }
  double t_star = (lo + hi) / 2.0;
  SolveRequest eq;
  eq.alpha = eq.beta = eq.gamma = kPi / 3.0;
  eq.mode = SolveMode::circumcenter_coincidence;
  SolveResult sym = solve(eq);
  double oracle_dev = std::max({std::fabs(sym.params.d - t_star), std::fabs(sym.params.e - t_star),
                                std::fabs(sym.params.f - t_star)});
  bool pass = sym.converged && oracle_dev < 1e-10;

  // 100 random triangles with angles >= 15 degrees
  int converged = 0, notconverged = 0;
  double worst_incidence = 0.0, worst_equilateral = 0.0;
  for (uint64_t i = 0; i < 100; ++i) {
    SplitRng rng = trial_rng(6, i);
    Triangle t = random_triangle(rng, deg2rad(15));
    SolveRequest req;
    req.alpha = angle_at(t.v1(), t.v2(), t.v3());
    req.beta = angle_at(t.v2(), t.v3(), t.v1());
    req.gamma = kPi - req.alpha - req.beta;
    req.mode = SolveMode::circumcenter_coincidence;
    SolveResult res = solve(req);
    if (!res.converged) {
      ++notconverged;
      std::printf("  t6 trial %llu NotConverged, residual %.3e\n", (unsigned long long)i,
                  res.residual);
      continue;
    }
    ++converged;
    const MorleyConfiguration& cfg = res.cfg;
    // independent recomputation from the output points
    double inc = std::max({distance(intersect(line_through(cfg.B(), cfg.Z()),
                                              line_through(cfg.C(), cfg.Y())),
                                    circumcenter(cfg.A(), cfg.Y(), cfg.Z())),
                           distance(intersect(line_through(cfg.C(), cfg.X()),
                                              line_through(cfg.A(), cfg.Z())),
                                    circumcenter(cfg.B(), cfg.Z(), cfg.X())),
                           distance(intersect(line_through(cfg.A(), cfg.Y()),
                                              line_through(cfg.B(), cfg.X())),
                                    circumcenter(cfg.C(), cfg.X(), cfg.Y()))}) /
                 cfg.diameter();
    worst_incidence = std::max(worst_incidence, inc);
    worst_equilateral = std::max(worst_equilateral, equilateral_residual(cfg.xyz()));
  }
  pass = pass && worst_incidence < 1e-8 && worst_equilateral < 1e-8;
  report(6, "circumcenter coincidence solver", pass,
         fmt("oracle_dev=%.3e converged=%d/100 notconverged=%d max_incidence=%.3e "
             "max_equilateral=%.3e time=%.2fs",
             oracle_dev, converged, notconverged, worst_incidence, worst_equilateral,
             timer.seconds()));
}

void criterion7() {
  double worst = 0.0;
  bool all_converged = true;
  for (uint64_t i = 0; i < 100; ++i) {
    SplitRng rng = trial_rng(7, i);
    Triangle t = random_triangle(rng, deg2rad(15));
    SolveRequest req;
    req.alpha = angle_at(t.v1(), t.v2(), t.v3());
    req.beta = angle_at(t.v2(), t.v3(), t.v1());
    req.gamma = kPi - req.alpha - req.beta;
    req.mode = SolveMode::six_angle_target;
    req.theta = deg2rad(150);
    SolveResult res = solve(req);
    all_converged = all_converged && res.converged;
    MorleyConfiguration classic = classic_morley(t);
    Similarity align =
        Similarity::from_two_points(res.cfg.A(), res.cfg.B(), classic.A(), classic.B());
    for (size_t k = 0; k < 12; ++k)
      worst = std::max(worst, distance(align.apply(res.cfg.points()[k]), classic.points()[k]) /
                                  classic.diameter());
  }
  bool pass = all_converged && worst < 1e-8;
  report(7, "theta=150 solutions reproduce the classic configuration", pass,
         fmt("all_converged=%d max_point_deviation=%.3e", (int)all_converged, worst));
}

void criterion8() {
  TrialPlan plan;
  plan.theorem = TheoremId::t3;
  plan.trials = 500;
  plan.seed = 8;
  std::string serial1 = report_text(run(plan));
  std::string serial2 = report_text(run(plan));
  plan.threads = 4;
  std::string parallel = report_text(run(plan));

  MorleyConfiguration cfg =
      classic_morley(triangle_from_angles(deg2rad(90), deg2rad(60), deg2rad(30)));
  RenderStyle style;
  style.circumcircles = true;
  bool svg_same = render_svg(cfg, style) == render_svg(cfg, style);

  bool pass = serial1 == serial2 && serial1 == parallel && svg_same;
  report(8, "bytewise-identical reports and renders", pass,
         fmt("serial_repeat=%d parallel=%d svg_repeat=%d", (int)(serial1 == serial2),
             (int)(serial1 == parallel), (int)svg_same));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  std::printf("acceptance: %d/8 criteria passed\n", 8 - failures);
  return failures;
}
