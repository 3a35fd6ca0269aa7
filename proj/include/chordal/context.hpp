#pragma once

#include <exception>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chordal/bigfloat.hpp"
#include "chordal/errors.hpp"

namespace chordal {

enum class Backend { ExactRational, GaussianRational, BigFloatBackend, Interval };

inline std::string backend_name(Backend b) {
  switch (b) {
    case Backend::ExactRational: return "exact";
    case Backend::GaussianRational: return "gaussian";
    case Backend::BigFloatBackend: return "bigfloat";
    case Backend::Interval: return "interval";
  }
  return "?";
}

inline Backend parse_backend(const std::string& s) {
  if (s == "exact") return Backend::ExactRational;
  if (s == "gaussian") return Backend::GaussianRational;
  if (s == "bigfloat") return Backend::BigFloatBackend;
  if (s == "interval") return Backend::Interval;
  throw std::invalid_argument("unknown backend: " + s);
}

enum class Verdict { IdentityConsistent, Violated, Degenerate };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::IdentityConsistent: return "identity-consistent";
    case Verdict::Violated: return "violated";
    case Verdict::Degenerate: return "degenerate";
  }
  return "?";
}

constexpr int kPrecisionFloor = 24;
constexpr int kPrecisionCap = 4096;

/// Decision constants for the escalation verdict. A residual is at rounding
/// level when |r| <= 2^(-p + kNoiseMarginBits) * scale; an identity is
/// rejected when the relative residual stabilizes above
/// 2^(-kViolationFloorBits) over two consecutive precision doublings.
constexpr int kNoiseMarginBits = 8;
constexpr int kViolationFloorBits = 32;
constexpr double kDecaySlopeThreshold = -0.5;   // bits of residual per bit of precision
constexpr double kStallSlopeThreshold = -0.01;  // flatter than this = stabilized

struct NumericContext {
  Backend backend = Backend::BigFloatBackend;
  int precision_bits = 64;
  std::vector<int> escalation_schedule = {64, 128, 256, 512, 1024, 2048, 4096};

  void validate() const {
    if (backend == Backend::BigFloatBackend || backend == Backend::Interval) {
      if (precision_bits < kPrecisionFloor || precision_bits > kPrecisionCap)
        throw std::invalid_argument("precision must lie in [24, 4096] bits");
    }
    if (escalation_schedule.empty())
      throw std::invalid_argument("escalation schedule must be nonempty");
    int prev = 0;
    for (int p : escalation_schedule) {
      if (p < kPrecisionFloor || p > kPrecisionCap)
        throw std::invalid_argument("schedule precision out of [24, 4096]");
      if (p <= prev)
        throw std::invalid_argument("escalation schedule must be strictly increasing");
      prev = p;
    }
  }

  static NumericContext exact() {
    NumericContext c;
    c.backend = Backend::ExactRational;
    return c;
  }
  static NumericContext gaussian() {
    NumericContext c;
    c.backend = Backend::GaussianRational;
    return c;
  }
  static NumericContext bigfloat(int bits) {
    NumericContext c;
    c.backend = Backend::BigFloatBackend;
    c.precision_bits = bits;
    return c;
  }
  static NumericContext interval(int bits) {
    NumericContext c;
    c.backend = Backend::Interval;
    c.precision_bits = bits;
    return c;
  }
};

/// One residual evaluation: the raw residual plus the scale it is judged
/// against (for the chord identities, the sum of all reciprocal products).
struct ResidualSample {
  BigFloat residual;
  BigFloat scale;
};

struct EscalationStep {
  int precision_bits;
  BigFloat residual;
  BigFloat scale;
};

struct EscalationResult {
  std::vector<EscalationStep> trace;
  Verdict verdict = Verdict::Violated;
};

namespace detail {

inline double relative_log2(const EscalationStep& s) {
  return s.residual.log2_abs() - s.scale.log2_abs();
}

/// Least-squares slope of log2(relative residual) against precision.
inline double fit_slope(const std::vector<EscalationStep>& steps) {
  double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& s : steps) {
    if (s.residual.is_zero()) continue;
    double x = s.precision_bits;
    double y = relative_log2(s);
    n += 1; sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  if (n < 2) return 0.0;
  double denom = n * sxx - sx * sx;
  if (denom == 0) return 0.0;
  return (n * sxy - sx * sy) / denom;
}

inline bool at_noise_level(const EscalationStep& s) {
  BigFloat bound =
      mul(BigFloat::pow2(-s.precision_bits + kNoiseMarginBits, s.scale.precision()),
          s.scale, MPFR_RNDN);
  return s.residual.abs() <= bound;
}

inline bool above_violation_floor(const EscalationStep& s) {
  BigFloat floor_val = mul(BigFloat::pow2(-kViolationFloorBits, s.scale.precision()),
                           s.scale, MPFR_RNDN);
  return s.residual.abs() > floor_val;
}

}  // namespace detail

/// Verdict for a single evaluation with no escalation: the residual either
/// sits at rounding level for the precision used, or the identity fails.
inline Verdict single_step_verdict(const EscalationStep& step) {
  if (step.residual.is_zero()) return Verdict::IdentityConsistent;
  return detail::at_noise_level(step) ? Verdict::IdentityConsistent
                                      : Verdict::Violated;
}

namespace detail {

/// Verdicts that can be settled mid-schedule: an exactly-zero or
/// rounding-level residual settles identity-consistent; a relative residual
/// flat above the violation floor across two precision doublings settles
/// violated. Anything else keeps escalating.
inline std::optional<Verdict> decided_at_step(
    const std::vector<EscalationStep>& trace, std::size_t k) {
  const EscalationStep& s = trace[k];
  if (s.residual.is_zero() || at_noise_level(s))
    return Verdict::IdentityConsistent;
  if (k >= 2) {
    const EscalationStep& a = trace[k - 2];
    const EscalationStep& b = trace[k - 1];
    if (above_violation_floor(a) && above_violation_floor(b) &&
        above_violation_floor(s)) {
      double slope = (relative_log2(s) - relative_log2(a)) /
                     static_cast<double>(s.precision_bits - a.precision_bits);
      if (slope > kStallSlopeThreshold) return Verdict::Violated;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Recomputes the verdict implied by a recorded escalation trace. This is
/// the single source of truth for the decision rule; the escalation driver
/// and report consumers both reduce to it.
inline Verdict verdict_from_trace(const std::vector<EscalationStep>& trace) {
  if (trace.empty())
    throw std::invalid_argument("verdict_from_trace: empty trace");
  for (std::size_t k = 0; k < trace.size(); ++k)
    if (auto v = detail::decided_at_step(trace, k)) return *v;
  if (trace.size() == 1) return single_step_verdict(trace.front());
  return detail::fit_slope(trace) <= kDecaySlopeThreshold
             ? Verdict::IdentityConsistent
             : Verdict::Violated;
}

/// Runs the evaluator along the context's precision schedule, recording a
/// (precision, residual, scale) trace and classifying it. Stops as soon as
/// a step settles the verdict (see detail::decided_at_step); an exhausted
/// schedule falls back to the least-squares decay-slope fit.
inline EscalationResult escalate_precision(
    const std::function<ResidualSample(int)>& evaluator,
    const NumericContext& ctx) {
  ctx.validate();
  EscalationResult result;
  for (std::size_t k = 0; k < ctx.escalation_schedule.size(); ++k) {
    int p = ctx.escalation_schedule[k];
    ResidualSample sample;
    try {
      sample = evaluator(p);
    } catch (const std::exception& e) {
      std::throw_with_nested(EvaluationError(p, e.what()));
    }
    if (!(sample.scale.sign() > 0))
      throw std::invalid_argument("escalate_precision: scale must be positive");
    result.trace.push_back({p, sample.residual, sample.scale});
    if (auto v = detail::decided_at_step(result.trace, result.trace.size() - 1)) {
      result.verdict = *v;
      return result;
    }
  }
  result.verdict = verdict_from_trace(result.trace);
  return result;
}

}  // namespace chordal
