// Command-line surface: construct configurations, solve for family members,
// run verification sweeps, render SVG figures.
//
// Exit codes: 0 success, 1 geometric error, 2 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "morley/constructions.hpp"
#include "morley/solver.hpp"
#include "morley/svg.hpp"
#include "morley/verifier.hpp"

namespace {

using namespace morley;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_csv(const std::string& text, size_t expect, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + ": cannot parse '" + item + "'");
    }
  }
  if (out.size() != expect)
    throw UsageError(std::string(what) + ": expected " + std::to_string(expect) + " values");
  return out;
}

std::array<double, 3> parse_triangle_angles(const std::string& text) {
  std::vector<double> a = parse_csv(text, 3, "--angles");
  if (std::fabs(a[0] + a[1] + a[2] - 180.0) > 1e-6)
    throw UsageError("--angles: values must sum to 180 degrees");
  for (double v : a)
    if (!(v > 0.0)) throw UsageError("--angles: values must be positive");
  return {deg2rad(a[0]), deg2rad(a[1]), deg2rad(a[2])};
}

RenderStyle style_from_layers(const std::string& layers) {
  RenderStyle st;
  if (layers.empty()) return st;
  st.trisectors = st.bisectors = st.flanks = st.circumcircles = st.labels = false;
  if (layers == "none") return st;
  std::stringstream ss(layers);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "trisectors") st.trisectors = true;
    else if (item == "bisectors") st.bisectors = true;
    else if (item == "flanks") st.flanks = true;
    else if (item == "circumcircles") st.circumcircles = true;
    else if (item == "labels") st.labels = true;
    else throw UsageError("--layers: unknown layer '" + item + "'");
  }
  return st;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << bytes;
  if (!os) throw std::runtime_error("write failed: " + path);
}

void emit_outputs(const MorleyConfiguration& cfg, const std::string& out_path,
                  const std::string& svg_path, const std::string& layers) {
  if (!out_path.empty()) write_file(out_path, to_record(cfg));
  if (!svg_path.empty()) write_file(svg_path, render_svg(cfg, style_from_layers(layers)));
}

void print_configuration_summary(const MorleyConfiguration& cfg) {
  InclinationAngles incl = inclination_angles(cfg);
  ConverseParameters apex = measure_apex_angles(cfg);
  std::printf("equilateral_residual %.6e\n", equilateral_residual(cfg.xyz()));
  std::printf("apex_deg %.12g %.12g %.12g\n", rad2deg(apex.d), rad2deg(apex.e), rad2deg(apex.f));
  std::printf("inclination_deg %.12g %.12g %.12g\n", rad2deg(incl.x), rad2deg(incl.y),
              rad2deg(incl.z));
  std::printf("common_six_angle_deg %.12g\n", rad2deg(common_six_angle(cfg)));
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Morley trisector configurations: construct, solve, verify, render"};
  app.require_subcommand(1);

  // construct
  CLI::App* construct = app.add_subcommand("construct", "build a configuration");
  construct->require_subcommand(1);
  std::string angles_text, out_path, svg_path, layers;
  CLI::App* cmorley = construct->add_subcommand("morley", "classic trisector configuration");
  cmorley->add_option("--angles", angles_text, "interior angles of ABC in degrees, e.g. 90,60,30")
      ->required();
  cmorley->add_option("--out", out_path, "write the point record here");
  cmorley->add_option("--svg", svg_path, "render an SVG figure here");
  cmorley->add_option("--layers", layers, "comma list: trisectors,bisectors,flanks,circumcircles,labels");

  std::string apex_text;
  double side = 1.0;
  CLI::App* cconv = construct->add_subcommand("converse", "outward isosceles construction");
  cconv->add_option("--apex", apex_text, "apex angles d,e,f in degrees")->required();
  cconv->add_option("--side", side, "side length of the equilateral XYZ (default 1)");
  cconv->add_option("--out", out_path, "write the point record here");
  cconv->add_option("--svg", svg_path, "render an SVG figure here");
  cconv->add_option("--layers", layers, "comma list: trisectors,bisectors,flanks,circumcircles,labels");

  // solve
  CLI::App* csolve = app.add_subcommand("solve", "fit a six-equal-angle family member");
  std::string solve_angles;
  double theta_deg = 0.0;
  bool theorem6 = false;
  csolve->add_option("--angles", solve_angles, "target interior angles in degrees")->required();
  CLI::Option* theta_opt = csolve->add_option("--theta", theta_deg, "common angle target, degrees");
  CLI::Option* t6_opt = csolve->add_flag("--theorem6", theorem6, "solve the circumcenter-coincidence configuration");
  theta_opt->excludes(t6_opt);
  csolve->add_option("--out", out_path, "write the point record here");
  csolve->add_option("--svg", svg_path, "render an SVG figure here");
  csolve->add_option("--layers", layers, "comma list: trisectors,bisectors,flanks,circumcircles,labels");

  // verify
  CLI::App* cverify = app.add_subcommand("verify", "seeded randomized verification sweep");
  std::string theorem_text, report_path, dump_path;
  int trials = 1000;
  unsigned long long seed = 0;
  double min_angle_deg = 5.0;
  int threads = 1;
  cverify->add_option("--theorem", theorem_text, "one of t1,t2,t3,t4,t5,t6")->required();
  cverify->add_option("--trials", trials, "number of trials")->required();
  cverify->add_option("--seed", seed, "64-bit seed")->required();
  cverify->add_option("--min-angle", min_angle_deg, "minimum sampled interior angle, degrees (default 5)");
  cverify->add_option("--report", report_path, "also write the report text here");
  cverify->add_option("--dump", dump_path, "write per-trial residuals here");
  cverify->add_option("--threads", threads, "worker threads (report is identical for any count)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // app.exit prints help for --help (code 0) or the diagnostic otherwise
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (cmorley->parsed()) {
    std::array<double, 3> a = parse_triangle_angles(angles_text);
    MorleyConfiguration cfg = classic_morley(triangle_from_angles(a[0], a[1], a[2]));
    print_configuration_summary(cfg);
    emit_outputs(cfg, out_path, svg_path, layers);
    return 0;
  }
  if (cconv->parsed()) {
    std::vector<double> a = parse_csv(apex_text, 3, "--apex");
    ConverseParameters params{deg2rad(a[0]), deg2rad(a[1]), deg2rad(a[2]), side};
    MorleyConfiguration cfg = converse_construct(params);
    print_configuration_summary(cfg);
    emit_outputs(cfg, out_path, svg_path, layers);
    return 0;
  }
  if (csolve->parsed()) {
    if (!theorem6 && theta_opt->count() == 0)
      throw UsageError("solve: pass either --theta or --theorem6");
    std::array<double, 3> a = parse_triangle_angles(solve_angles);
    SolveRequest req;
    req.alpha = a[0];
    req.beta = a[1];
    req.gamma = a[2];
    if (theorem6) {
      req.mode = SolveMode::circumcenter_coincidence;
    } else {
      req.mode = SolveMode::six_angle_target;
      req.theta = deg2rad(theta_deg);
    }
    SolveResult res = solve(req);
    std::printf("converged %s\n", res.converged ? "true" : "false");
    std::printf("iterations %d\n", res.iterations);
    std::printf("residual %.6e\n", res.residual);
    std::printf("alignment_residual %.6e\n", res.alignment_residual);
    std::printf("apex_deg %.12g %.12g %.12g\n", rad2deg(res.params.d), rad2deg(res.params.e),
                rad2deg(res.params.f));
    emit_outputs(res.cfg, out_path, svg_path, layers);
    return res.converged ? 0 : 1;
  }
  if (cverify->parsed()) {
    TrialPlan plan;
    plan.theorem = theorem_from_string(theorem_text);
    plan.trials = trials;
    plan.seed = seed;
    plan.min_angle = deg2rad(min_angle_deg);
    plan.threads = threads;
    plan.keep_inputs = !dump_path.empty();
    VerificationReport rep = run(plan);
    std::string text = report_text(rep);
    std::fputs(text.c_str(), stdout);
    std::fprintf(stderr, "wall_time_s %.3f\n", rep.wall_time_s);
    if (!report_path.empty()) write_file(report_path, text);
    if (!dump_path.empty()) write_file(dump_path, residual_dump(rep));
    bool clean = rep.pass_count + rep.notconverged == rep.trials;
    return clean ? 0 : 1;
  }
  throw UsageError("no subcommand selected");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const morley::GeomError& e) {
    // malformed requests come from the arguments, so they count as usage
    if (e.code() == morley::GeomErrc::invalid_request) {
      std::fprintf(stderr, "usage error: %s\n", e.what());
      return 2;
    }
    std::fprintf(stderr, "geometry error [%s]: %s\n", morley::to_string(e.code()), e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
