// Seeded randomized verification sweeps. Reports are a pure function of the
// plan: trials draw from per-index generator streams, so serial and parallel
// execution produce identical text.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "morley/constructions.hpp"

namespace morley {

enum class TheoremId { t1, t2, t3, t4, t5, t6 };

const char* to_string(TheoremId id);
TheoremId theorem_from_string(const std::string& s);

// xorshift64* with splitmix64-derived per-trial seeding; integer-only state,
// identical streams on every platform. Update equations documented in the
// README.
struct SplitRng {
  uint64_t state = 0x9E3779B97F4A7C15ull;
};

SplitRng trial_rng(uint64_t seed, uint64_t trial_index);
uint64_t next_u64(SplitRng& rng);
double next_unit(SplitRng& rng);  // [0, 1), 53-bit

// Interior angles uniform on the simplex {sum = pi, each >= min_angle},
// circumdiameter 1, canonical pose.
Triangle random_triangle(SplitRng& rng, double min_angle);

// Apex triple by rejection inside the validity region with `margin` slack on
// every derived-angle inequality; increments `resampled` per rejected draw.
ConverseParameters random_converse_params(SplitRng& rng, double margin, long& resampled,
                                          const ToleranceProfile& tol = default_tol());

struct TrialPlan {
  TheoremId theorem = TheoremId::t1;
  int trials = 1000;
  uint64_t seed = 0;
  double min_angle = deg2rad(5.0);
  ToleranceProfile tol;
  // per-trial pass threshold; 0 selects the per-theorem default
  // (1e-9, except 1e-8 for t6)
  double pass_tol = 0.0;
  int threads = 1;
  bool keep_inputs = false;  // retain per-trial inputs for residual_dump
};

struct VerificationReport {
  TheoremId theorem = TheoremId::t1;
  int trials = 0;
  uint64_t seed = 0;
  double min_angle = 0.0;
  double pass_tol = 0.0;
  int pass_count = 0;
  int notconverged = 0;  // t6 trials whose solve did not converge
  long resampled = 0;    // degenerate draws replaced before evaluation
  double max_residual = 0.0;
  double p99_residual = 0.0;
  std::string worst_case_input;
  double wall_time_s = 0.0;      // diagnostics only, never serialized
  std::vector<double> residuals; // per trial, index order
  std::vector<uint8_t> notconverged_flags;  // per trial, t6 only
  std::vector<std::string> inputs;          // per trial, when keep_inputs is set
};

VerificationReport run(const TrialPlan& plan);

double default_pass_tol(TheoremId id);

// |det| of the cevian lines A-X, B-Y, C-Z in canonical Cartesian form with
// dimensionless offsets; zero iff the cevians concur.
double cartesian_concurrency_det(const MorleyConfiguration& cfg,
                                 const ToleranceProfile& tol = default_tol());

// The same concurrency determinant computed through the barycentric route
// over the frame XYZ.
double barycentric_concurrency_det(const MorleyConfiguration& cfg,
                                   const ToleranceProfile& tol = default_tol());

// Worst deviation of the cross-product algebra from the coordinate patterns
// D=(-p:1:1) -> A=(-1:q:r) (cyclic), folding in the cevian concurrency
// determinant and the perspector incidence.
double perspector_pattern_residual(double p, double q, double r,
                                   const ToleranceProfile& tol = default_tol());

// Deterministic structured text: one header line plus one line per aggregate
// field. Excludes wall time so repeated runs are bytewise identical.
std::string report_text(const VerificationReport& report);

// Flag-gated per-trial residual dump, one line per trial.
std::string residual_dump(const VerificationReport& report);

}  // namespace morley
