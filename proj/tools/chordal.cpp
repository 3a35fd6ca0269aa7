// chordal: generate, verify, and sweep chord-product identity instances.
//
// Exit codes: 0 identity-consistent, 1 violated, 2 degenerate input,
// 3 usage or parse error.

#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chordal/generate.hpp"
#include "chordal/instance.hpp"
#include "chordal/interpolation.hpp"
#include "chordal/report.hpp"
#include "chordal/verify.hpp"

namespace {

constexpr int kExitConsistent = 0;
constexpr int kExitViolated = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitUsage = 3;

int verdict_exit_code(chordal::Verdict v) {
  switch (v) {
    case chordal::Verdict::IdentityConsistent: return kExitConsistent;
    case chordal::Verdict::Violated: return kExitViolated;
    case chordal::Verdict::Degenerate: return kExitDegenerate;
  }
  return kExitUsage;
}

chordal::InstanceKind parse_kind(const std::string& s) {
  if (s == "circle") return chordal::InstanceKind::Circle;
  if (s == "line") return chordal::InstanceKind::Line;
  throw CLI::ValidationError("--kind", "expected 'circle' or 'line'");
}

struct VerifyOutcome {
  chordal::ResidualReport report;
  double wall_ms = 0.0;
};

VerifyOutcome run_verification(const chordal::InstanceFile& inst,
                               chordal::Backend backend, int precision,
                               bool escalate) {
  using namespace chordal;
  NumericContext ctx;
  ctx.backend = backend;
  ctx.precision_bits = precision;

  VerifyOutcome out;
  auto t0 = std::chrono::steady_clock::now();
  if (inst.kind == InstanceKind::Line) {
    out.report = verify_identity(inst.to_line(), ctx, escalate);
  } else if (inst.is_pythagorean()) {
    if (backend != Backend::GaussianRational && backend != Backend::ExactRational)
      throw std::invalid_argument(
          "m-parameter circle instances verify exactly; use --backend "
          "gaussian (or exact)");
    out.report = verify_identity(inst.to_pythagorean(), ctx);
  } else {
    if (backend != Backend::BigFloatBackend && backend != Backend::Interval)
      throw std::invalid_argument(
          "angle-based circle instances need --backend bigfloat or interval");
    out.report = verify_identity(inst.to_circle(precision), ctx, escalate);
  }
  auto t1 = std::chrono::steady_clock::now();
  out.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return out;
}

int cmd_gen(const std::string& kind, std::size_t n, const std::string& dist,
            std::uint64_t seed, const std::string& radius,
            const std::string& min_gap, const std::string& cluster_gap,
            long m_limit, long rational_limit, const std::string& out_path) {
  chordal::GenerateOptions opt;
  opt.kind = parse_kind(kind);
  opt.n = n;
  opt.distribution = dist;
  opt.seed = seed;
  opt.radius = chordal::ExactRational::parse(radius);
  opt.min_gap = chordal::ExactRational::parse(min_gap);
  opt.cluster_gap = chordal::ExactRational::parse(cluster_gap);
  opt.m_limit = m_limit;
  opt.rational_limit = rational_limit;

  chordal::InstanceFile inst = chordal::generate_instance(opt);
  if (out_path.empty()) {
    std::cout << inst.serialize();
  } else {
    inst.save(out_path);
    std::cout << "wrote " << out_path << " (digest "
              << chordal::instance_digest(inst) << ")\n";
  }
  return kExitConsistent;
}

int cmd_verify(const std::string& in_path, const std::string& backend_name,
               int precision, bool escalate, const std::string& report_path) {
  chordal::InstanceFile inst = chordal::InstanceFile::load(in_path);
  chordal::Backend backend = chordal::parse_backend(backend_name);

  VerifyOutcome out;
  try {
    out = run_verification(inst, backend, precision, escalate);
  } catch (const chordal::DegenerateConfiguration& e) {
    // degenerate before evaluation could start (e.g. coincident angles)
    out.report.verdict = chordal::Verdict::Degenerate;
    out.report.backend = backend;
    out.report.note = e.what();
  }

  chordal::ReportFile report;
  report.instance_digest = chordal::instance_digest(inst);
  report.result = out.report;
  report.wall_ms = out.wall_ms;
  if (!report_path.empty()) report.save(report_path);

  std::cout << chordal::verdict_name(out.report.verdict);
  if (!out.report.residual.empty())
    std::cout << " residual=" << out.report.residual;
  if (!out.report.note.empty()) std::cout << " (" << out.report.note << ")";
  std::cout << "\n";
  return verdict_exit_code(out.report.verdict);
}

struct SweepRange {
  std::size_t lo = 4, hi = 4, step = 2;
};

SweepRange parse_range(const std::string& s) {
  SweepRange r;
  std::istringstream in(s);
  std::string part;
  std::vector<long> parts;
  while (std::getline(in, part, ':')) parts.push_back(std::stol(part));
  if (parts.size() == 1) {
    r.lo = r.hi = static_cast<std::size_t>(parts[0]);
  } else if (parts.size() == 2 || parts.size() == 3) {
    r.lo = static_cast<std::size_t>(parts[0]);
    r.hi = static_cast<std::size_t>(parts[1]);
    if (parts.size() == 3) r.step = static_cast<std::size_t>(parts[2]);
  } else {
    throw CLI::ValidationError("--n-range", "expected lo:hi[:step]");
  }
  if (r.lo < 2 || r.hi < r.lo || r.step == 0)
    throw CLI::ValidationError("--n-range", "bad range");
  return r;
}

int cmd_sweep(const std::string& kind, const std::string& n_range,
              unsigned trials, const std::string& dist, std::uint64_t seed,
              const std::string& backend_name, int precision, bool escalate,
              const std::string& min_gap, const std::string& out_path) {
  SweepRange range = parse_range(n_range);
  chordal::Backend backend = chordal::parse_backend(backend_name);

  std::ostringstream csv;
  csv << "n,trial,seed,verdict,residual,relative_residual,precision_bits,"
         "min_gap,runtime_ms\n";
  for (std::size_t n = range.lo; n <= range.hi; n += range.step) {
    for (unsigned trial = 0; trial < trials; ++trial) {
      std::uint64_t trial_seed = chordal::derive_trial_seed(
          seed, static_cast<unsigned>(n), trial);
      chordal::GenerateOptions opt;
      opt.kind = parse_kind(kind);
      opt.n = n;
      opt.distribution = dist;
      opt.seed = trial_seed;
      opt.min_gap = chordal::ExactRational::parse(min_gap);
      chordal::InstanceFile inst = chordal::generate_instance(opt);
      VerifyOutcome out = run_verification(inst, backend, precision, escalate);
      csv << n << ',' << trial << ',' << trial_seed << ','
          << chordal::verdict_name(out.report.verdict) << ','
          << out.report.residual << ',' << out.report.relative_residual << ','
          << out.report.precision_bits << ',' << out.report.condition.min_gap
          << ',' << out.wall_ms << '\n';
    }
  }
  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << csv.str();
    std::cout << "wrote " << out_path << "\n";
  }
  return kExitConsistent;
}

int cmd_check_joseph(const std::string& in_path, unsigned long r) {
  std::ifstream in(in_path);
  if (!in) throw std::runtime_error("cannot open nodes file: " + in_path);
  nlohmann::json j = nlohmann::json::parse(in);
  std::vector<chordal::ExactRational> nodes;
  std::size_t i = 0;
  for (const auto& e : j.at("nodes"))
    nodes.push_back(chordal::detail::rational_from_json(
        e, "nodes[" + std::to_string(i++) + "]"));
  try {
    chordal::ExactRational v = chordal::power_sum_identity(nodes, r);
    bool zero = v.is_zero();
    std::cout << "power_sum(r=" << r << ", N=" << nodes.size()
              << ") = " << v.to_string()
              << (zero ? "  [exactly zero]" : "  [nonzero]") << "\n";
    return zero ? kExitConsistent : kExitViolated;
  } catch (const chordal::DuplicateNode& e) {
    std::cerr << "degenerate: " << e.what() << "\n";
    return kExitDegenerate;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chord-product identity toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  std::string g_kind = "circle", g_dist = "uniform", g_radius = "1";
  std::string g_min_gap = "0", g_cluster_gap = "0.001", g_out;
  std::size_t g_n = 4;
  std::uint64_t g_seed = 0;
  long g_mmax = 30, g_limit = 100;
  gen->add_option("--kind", g_kind, "circle | line");
  gen->add_option("--n", g_n, "point count (>= 2)")->required();
  gen->add_option("--dist", g_dist,
                  "uniform | clustered | regular | pythagorean | "
                  "uniform-line | rational-line");
  gen->add_option("--seed", g_seed, "generator seed");
  gen->add_option("--radius", g_radius, "circle radius (decimal or a/b)");
  gen->add_option("--min-gap", g_min_gap,
                  "half-angle gap floor for uniform circle instances");
  gen->add_option("--gap", g_cluster_gap, "cluster gap for clustered");
  gen->add_option("--mmax", g_mmax, "pythagorean m numerator/denominator bound");
  gen->add_option("--limit", g_limit, "rational-line numerator/denominator bound");
  gen->add_option("--out", g_out, "output path (stdout when omitted)");

  // verify
  auto* verify = app.add_subcommand("verify", "verify one instance file");
  std::string v_in, v_backend = "bigfloat", v_report;
  int v_precision = 64;
  bool v_escalate = false;
  verify->add_option("--in", v_in, "instance file")->required();
  verify->add_option("--backend", v_backend,
                     "exact | gaussian | bigfloat | interval");
  verify->add_option("--precision", v_precision, "working precision in bits");
  verify->add_flag("--escalate", v_escalate,
                   "re-evaluate along the precision schedule");
  verify->add_option("--report", v_report, "write a JSON report here");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "generate+verify a grid of trials");
  std::string s_kind = "circle", s_nrange, s_dist = "uniform";
  std::string s_backend = "bigfloat", s_min_gap = "0", s_out;
  std::size_t s_n = 0;
  unsigned s_trials = 1;
  std::uint64_t s_seed = 0;
  int s_precision = 64;
  bool s_escalate = false;
  sweep->add_option("--kind", s_kind, "circle | line");
  sweep->add_option("--n-range", s_nrange, "lo:hi[:step] point counts");
  sweep->add_option("--n", s_n, "single point count (alternative to --n-range)");
  sweep->add_option("--trials", s_trials, "trials per n")->required();
  sweep->add_option("--dist", s_dist, "distribution");
  sweep->add_option("--seed", s_seed, "master seed");
  sweep->add_option("--backend", s_backend, "arithmetic backend");
  sweep->add_option("--precision", s_precision, "working precision in bits");
  sweep->add_flag("--escalate", s_escalate, "escalate per trial");
  sweep->add_option("--min-gap", s_min_gap, "gap floor for uniform circles");
  sweep->add_option("--out", s_out, "CSV output path (stdout when omitted)");

  // check-joseph
  auto* joseph = app.add_subcommand(
      "check-joseph", "evaluate the power-sum identity on a nodes file");
  std::string j_in;
  unsigned long j_r = 0;
  joseph->add_option("--in", j_in, "JSON file with {\"nodes\": [...]}")
      ->required();
  joseph->add_option("--r", j_r, "power r >= 0")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen->parsed())
      return cmd_gen(g_kind, g_n, g_dist, g_seed, g_radius, g_min_gap,
                     g_cluster_gap, g_mmax, g_limit, g_out);
    if (verify->parsed())
      return cmd_verify(v_in, v_backend, v_precision, v_escalate, v_report);
    if (sweep->parsed()) {
      if (s_nrange.empty()) {
        if (s_n < 2) throw std::invalid_argument("sweep: give --n or --n-range");
        s_nrange = std::to_string(s_n);
      }
      return cmd_sweep(s_kind, s_nrange, s_trials, s_dist, s_seed, s_backend,
                       s_precision, s_escalate, s_min_gap, s_out);
    }
    if (joseph->parsed()) return cmd_check_joseph(j_in, j_r);
  } catch (const chordal::DegenerateConfiguration& e) {
    std::cerr << "degenerate: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
