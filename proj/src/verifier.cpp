#include "morley/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <thread>

#include "morley/barycentric.hpp"
#include "morley/solver.hpp"

namespace morley {

const char* to_string(TheoremId id) {
  switch (id) {
    case TheoremId::t1: return "t1";
    case TheoremId::t2: return "t2";
    case TheoremId::t3: return "t3";
    case TheoremId::t4: return "t4";
    case TheoremId::t5: return "t5";
    case TheoremId::t6: return "t6";
  }
  return "?";
}

TheoremId theorem_from_string(const std::string& s) {
  for (TheoremId id : {TheoremId::t1, TheoremId::t2, TheoremId::t3, TheoremId::t4,
                       TheoremId::t5, TheoremId::t6})
    if (s == to_string(id)) return id;
  throw GeomError(GeomErrc::invalid_request, "unknown theorem id: " + s);
}

namespace {

uint64_t splitmix64(uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

SplitRng trial_rng(uint64_t seed, uint64_t trial_index) {
  uint64_t s = splitmix64(seed ^ (0x9E3779B97F4A7C15ull * (trial_index + 1)));
  if (s == 0) s = 0x9E3779B97F4A7C15ull;
  return SplitRng{s};
}

uint64_t next_u64(SplitRng& rng) {
  uint64_t x = rng.state;
  x ^= x >> 12;
  x ^= x << 25;
  x ^= x >> 27;
  rng.state = x;
  return x * 0x2545F4914F6CDD1Dull;
}

double next_unit(SplitRng& rng) {
  return (double)(next_u64(rng) >> 11) * 0x1.0p-53;
}

namespace {

std::array<double, 3> sample_angles(SplitRng& rng, double min_angle) {
  double u = next_unit(rng);
  double v = next_unit(rng);
  double lo = std::min(u, v), hi = std::max(u, v);
  double span = kPi - 3.0 * min_angle;
  return {min_angle + lo * span, min_angle + (hi - lo) * span, min_angle + (1.0 - hi) * span};
}

}  // namespace

Triangle random_triangle(SplitRng& rng, double min_angle) {
  if (!(min_angle > 1e-6 && min_angle < kPi / 3.0))
    throw GeomError(GeomErrc::invalid_request, "random_triangle: min_angle outside (floor, 60deg)");
  std::array<double, 3> a = sample_angles(rng, min_angle);
  return triangle_from_angles(a[0], a[1], a[2]);
}

ConverseParameters random_converse_params(SplitRng& rng, double margin, long& resampled,
                                          const ToleranceProfile& tol) {
  const double third = deg2rad(120.0);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    ConverseParameters p;
    p.d = margin + next_unit(rng) * (kPi - 2.0 * margin);
    p.e = margin + next_unit(rng) * (kPi - 2.0 * margin);
    p.f = margin + next_unit(rng) * (kPi - 2.0 * margin);
    p.s = 1.0;
    double x = third - (p.e + p.f) / 2.0;
    double y = third - (p.f + p.d) / 2.0;
    double z = third - (p.d + p.e) / 2.0;
    bool ok = x >= margin && y >= margin && z >= margin && kPi - y - z >= margin &&
              kPi - z - x >= margin && kPi - x - y >= margin && converse_validity(p, tol);
    if (ok) return p;
    ++resampled;
  }
  throw GeomError(GeomErrc::invalid_request,
                  "random_converse_params: margin leaves no acceptance region");
}

double default_pass_tol(TheoremId id) {
  return id == TheoremId::t6 ? 1e-8 : 1e-9;
}

namespace {

std::string hex_triangle(const Triangle& t) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "triangle A %a %a B %a %a C %a %a", t.v1().x, t.v1().y,
                t.v2().x, t.v2().y, t.v3().x, t.v3().y);
  return buf;
}

std::string hex_apex(const ConverseParameters& p) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "apex %a %a %a", p.d, p.e, p.f);
  return buf;
}

}  // namespace

double cartesian_concurrency_det(const MorleyConfiguration& cfg, const ToleranceProfile& tol) {
  Line rows[3] = {line_through(cfg.A(), cfg.X(), tol), line_through(cfg.B(), cfg.Y(), tol),
                  line_through(cfg.C(), cfg.Z(), tol)};
  double m[3][3];
  for (int i = 0; i < 3; ++i) {
    m[i][0] = rows[i].a;
    m[i][1] = rows[i].b;
    m[i][2] = rows[i].c / cfg.diameter();
  }
  return std::fabs(m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]));
}

double barycentric_concurrency_det(const MorleyConfiguration& cfg, const ToleranceProfile& tol) {
  ReferenceFrame frame{cfg.xyz()};
  HomogeneousTriple lax = bary_line(cartesian_to_bary(frame, cfg.A()), bary_point(1, 0, 0), tol);
  HomogeneousTriple lby = bary_line(cartesian_to_bary(frame, cfg.B()), bary_point(0, 1, 0), tol);
  HomogeneousTriple lcz = bary_line(cartesian_to_bary(frame, cfg.C()), bary_point(0, 0, 1), tol);
  double det = lax.u * (lby.v * lcz.w - lby.w * lcz.v) -
               lax.v * (lby.u * lcz.w - lby.w * lcz.u) +
               lax.w * (lby.u * lcz.v - lby.v * lcz.u);
  return std::fabs(det);
}

namespace {

double triple_deviation(const HomogeneousTriple& a, const HomogeneousTriple& b) {
  HomogeneousTriple ca = canonical(a), cb = canonical(b);
  return std::max({std::fabs(ca.u - cb.u), std::fabs(ca.v - cb.v), std::fabs(ca.w - cb.w)});
}

}  // namespace

double perspector_pattern_residual(double p, double q, double r, const ToleranceProfile& tol) {
  HomogeneousTriple X = bary_point(1, 0, 0), Y = bary_point(0, 1, 0), Z = bary_point(0, 0, 1);
  HomogeneousTriple D = bary_point(-p, 1, 1), E = bary_point(1, -q, 1), F = bary_point(1, 1, -r);
  HomogeneousTriple A = bary_intersect(bary_line(E, Z, tol), bary_line(F, Y, tol), tol);
  HomogeneousTriple B = bary_intersect(bary_line(F, X, tol), bary_line(D, Z, tol), tol);
  HomogeneousTriple C = bary_intersect(bary_line(D, Y, tol), bary_line(E, X, tol), tol);
  double dev = std::max({triple_deviation(A, bary_point(-1, q, r)),
                         triple_deviation(B, bary_point(p, -1, r)),
                         triple_deviation(C, bary_point(p, q, -1))});
  HomogeneousTriple lax = bary_line(A, X, tol), lby = bary_line(B, Y, tol),
                    lcz = bary_line(C, Z, tol);
  double det = lax.u * (lby.v * lcz.w - lby.w * lcz.v) -
               lax.v * (lby.u * lcz.w - lby.w * lcz.u) +
               lax.w * (lby.u * lcz.v - lby.v * lcz.u);
  double persp = triple_deviation(perspector(p, q, r, tol), bary_point(p, q, r));
  return std::max({dev, std::fabs(det), persp});
}

namespace {

struct TrialOutcome {
  double residual = 0.0;
  bool notconverged = false;
  long resampled = 0;
  std::string input;
};

TrialOutcome run_trial(const TrialPlan& plan, uint64_t index) {
  SplitRng rng = trial_rng(plan.seed, index);
  const ToleranceProfile& tol = plan.tol;
  const double margin = deg2rad(5.0);
  TrialOutcome out;
  for (int attempt = 0;; ++attempt) {
    try {
      switch (plan.theorem) {
        case TheoremId::t1: {
          Triangle t = random_triangle(rng, plan.min_angle);
          out.input = hex_triangle(t);
          out.residual = equilateral_residual(classic_morley(t, tol).xyz());
          return out;
        }
        case TheoremId::t2: {
          Triangle t = random_triangle(rng, plan.min_angle);
          ConverseParameters p = random_converse_params(rng, margin, out.resampled, tol);
          out.input = hex_triangle(t) + " " + hex_apex(p);
          double classic = hypothesis_residuals(classic_morley(t, tol), tol).max_residual();
          double conv = hypothesis_residuals(converse_construct(p, tol), tol).max_residual();
          out.residual = std::max(classic, conv);
          return out;
        }
        case TheoremId::t3: {
          Triangle t = random_triangle(rng, plan.min_angle);
          ConverseParameters p = random_converse_params(rng, margin, out.resampled, tol);
          double pp = 0.1 + next_unit(rng) * 9.9;
          double qq = 0.1 + next_unit(rng) * 9.9;
          double rr = 0.1 + next_unit(rng) * 9.9;
          char buf[128];
          std::snprintf(buf, sizeof buf, " pqr %a %a %a", pp, qq, rr);
          out.input = hex_triangle(t) + " " + hex_apex(p) + buf;
          MorleyConfiguration classic = classic_morley(t, tol);
          MorleyConfiguration conv = converse_construct(p, tol);
          out.residual = std::max({cartesian_concurrency_det(classic, tol),
                                   barycentric_concurrency_det(classic, tol),
                                   cartesian_concurrency_det(conv, tol),
                                   barycentric_concurrency_det(conv, tol),
                                   perspector_pattern_residual(pp, qq, rr, tol)});
          return out;
        }
        case TheoremId::t4: {
          ConverseParameters p = random_converse_params(rng, margin, out.resampled, tol);
          out.input = hex_apex(p);
          HypothesisResiduals hr = hypothesis_residuals(converse_construct(p, tol), tol);
          out.residual = std::max({hr.angle_identity[0], hr.angle_identity[1],
                                   hr.angle_identity[2]});
          return out;
        }
        case TheoremId::t5: {
          Triangle t = random_triangle(rng, plan.min_angle);
          out.input = hex_triangle(t);
          std::array<double, 6> s = six_angles(classic_morley(t, tol), tol);
          const double target = deg2rad(150.0);
          out.residual = 0.0;
          for (double a : s) out.residual = std::max(out.residual, std::fabs(a - target));
          return out;
        }
        case TheoremId::t6: {
          std::array<double, 3> a = sample_angles(rng, plan.min_angle);
          char buf[160];
          std::snprintf(buf, sizeof buf, "angles %a %a %a", a[0], a[1], a[2]);
          out.input = buf;
          SolveRequest req;
          req.alpha = a[0];
          req.beta = a[1];
          req.gamma = a[2];
          req.mode = SolveMode::circumcenter_coincidence;
          req.tol = tol;
          SolveResult sr = solve(req);
          // re-verify the incidences from scratch off the output points
          const MorleyConfiguration& cfg = sr.cfg;
          Point p2 = circumcenter(cfg.A(), cfg.Y(), cfg.Z(), tol);
          Point q2 = circumcenter(cfg.B(), cfg.Z(), cfg.X(), tol);
          Point r2 = circumcenter(cfg.C(), cfg.X(), cfg.Y(), tol);
          Point d2 = intersect(line_through(cfg.B(), cfg.Z(), tol),
                               line_through(cfg.C(), cfg.Y(), tol), tol);
          Point e2 = intersect(line_through(cfg.C(), cfg.X(), tol),
                               line_through(cfg.A(), cfg.Z(), tol), tol);
          Point f2 = intersect(line_through(cfg.A(), cfg.Y(), tol),
                               line_through(cfg.B(), cfg.X(), tol), tol);
          out.residual = std::max({distance(d2, p2), distance(e2, q2), distance(f2, r2)}) /
                         cfg.diameter();
          out.notconverged = !sr.converged;
          return out;
        }
      }
      throw GeomError(GeomErrc::invalid_request, "run: unknown theorem branch");
    } catch (const GeomError&) {
      // ill-conditioned draw: resample the whole trial from the same stream
      ++out.resampled;
      if (attempt > 256) throw;
    }
  }
}

}  // namespace

VerificationReport run(const TrialPlan& plan) {
  if (plan.trials < 1)
    throw GeomError(GeomErrc::invalid_request, "run: trials must be >= 1");
  if (!(plan.min_angle > 1e-6))
    throw GeomError(GeomErrc::invalid_request, "run: min_angle below the degeneracy floor");
  if (!(plan.tol.angle_tol > 0.0 && plan.tol.length_tol_rel > 0.0 && plan.tol.det_tol > 0.0))
    throw GeomError(GeomErrc::invalid_request, "run: tolerances must be strictly positive");
  auto t0 = std::chrono::steady_clock::now();

  VerificationReport rep;
  rep.theorem = plan.theorem;
  rep.trials = plan.trials;
  rep.seed = plan.seed;
  rep.min_angle = plan.min_angle;
  rep.pass_tol = plan.pass_tol > 0.0 ? plan.pass_tol : default_pass_tol(plan.theorem);

  std::vector<TrialOutcome> outcomes(plan.trials);
  int workers = std::max(1, plan.threads);
  if (workers == 1) {
    for (int i = 0; i < plan.trials; ++i) outcomes[i] = run_trial(plan, (uint64_t)i);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (int i = w; i < plan.trials; i += workers)
            outcomes[i] = run_trial(plan, (uint64_t)i);
        } catch (...) {
          errs[w] = std::current_exception();
        }
      });
    }
    for (std::thread& th : pool) th.join();
    for (const std::exception_ptr& e : errs)
      if (e) std::rethrow_exception(e);
  }

  rep.residuals.resize(plan.trials);
  rep.notconverged_flags.resize(plan.trials, 0);
  if (plan.keep_inputs) rep.inputs.resize(plan.trials);
  std::vector<double> converged_residuals;
  converged_residuals.reserve(plan.trials);
  int worst = -1;
  for (int i = 0; i < plan.trials; ++i) {
    rep.residuals[i] = outcomes[i].residual;
    rep.notconverged_flags[i] = outcomes[i].notconverged ? 1 : 0;
    if (plan.keep_inputs) rep.inputs[i] = outcomes[i].input;
    rep.resampled += outcomes[i].resampled;
    if (outcomes[i].notconverged) {
      ++rep.notconverged;
      continue;
    }
    converged_residuals.push_back(outcomes[i].residual);
    if (outcomes[i].residual < rep.pass_tol) ++rep.pass_count;
    if (worst < 0 || outcomes[i].residual > outcomes[worst].residual) worst = i;
  }
  if (!converged_residuals.empty()) {
    std::sort(converged_residuals.begin(), converged_residuals.end());
    size_t n = converged_residuals.size();
    size_t idx = (size_t)std::ceil(0.99 * (double)n);
    rep.p99_residual = converged_residuals[std::min(n - 1, idx == 0 ? 0 : idx - 1)];
    rep.max_residual = converged_residuals.back();
  }
  rep.worst_case_input = worst >= 0 ? outcomes[worst].input : "none";
  rep.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::string report_text(const VerificationReport& r) {
  char buf[512];
  std::string out;
  std::snprintf(buf, sizeof buf, "theorem %s trials %d seed %llu min_angle_deg %.17g pass_tol %.17g\n",
                to_string(r.theorem), r.trials, (unsigned long long)r.seed,
                rad2deg(r.min_angle), r.pass_tol);
  out += buf;
  std::snprintf(buf, sizeof buf, "pass_count %d\n", r.pass_count);
  out += buf;
  std::snprintf(buf, sizeof buf, "notconverged %d\n", r.notconverged);
  out += buf;
  std::snprintf(buf, sizeof buf, "resampled %ld\n", r.resampled);
  out += buf;
  std::snprintf(buf, sizeof buf, "max_residual %.17g\n", r.max_residual);
  out += buf;
  std::snprintf(buf, sizeof buf, "p99_residual %.17g\n", r.p99_residual);
  out += buf;
  out += "worst_case " + r.worst_case_input + "\n";
  return out;
}

std::string residual_dump(const VerificationReport& r) {
  std::string out;
  char buf[96];
  for (size_t i = 0; i < r.residuals.size(); ++i) {
    std::snprintf(buf, sizeof buf, "trial %zu residual %.17g", i, r.residuals[i]);
    out += buf;
    if (i < r.notconverged_flags.size() && r.notconverged_flags[i]) out += " notconverged";
    if (i < r.inputs.size() && !r.inputs[i].empty()) out += " " + r.inputs[i];
    out += "\n";
  }
  return out;
}

}  // namespace morley
