#pragma once

#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chordal/context.hpp"
#include "chordal/identities.hpp"
#include "chordal/interval.hpp"

namespace chordal {

struct ConditionDiagnostics {
  std::string min_gap;
  std::string min_chord;
  std::string max_inv_product;
};

struct IntervalStep {
  int precision_bits;
  IntervalValue enclosure;
  IntervalValue scale;
};

/// Everything verify_identity learned about one configuration: the verdict,
/// the residual at the final precision (lossless string form), the
/// escalation trace, and conditioning diagnostics. Degenerate inputs land
/// here as a verdict, not as an exception.
struct ResidualReport {
  Verdict verdict = Verdict::Degenerate;
  Backend backend = Backend::BigFloatBackend;
  bool escalated = false;
  bool exact = false;       // exact backend: residual is an exact scalar
  bool exact_zero = false;  // residual is exactly zero
  int precision_bits = 0;   // final precision used (0 for exact backends)
  std::string residual;
  std::string relative_residual;
  std::string note;  // e.g. odd-count control routing, degeneracy details
  std::vector<EscalationStep> trace;           // bigfloat backend
  std::vector<IntervalStep> interval_trace;    // interval backend
  std::optional<ExactRational> rational_residual;    // exact line backend
  std::optional<GaussianRational> gaussian_residual; // exact circle backend
  ConditionDiagnostics condition;
  std::vector<std::string> warnings;
};

namespace detail {

/// Schedule actually used: the requested precision, then every default
/// schedule entry above it.
inline std::vector<int> effective_schedule(const NumericContext& ctx) {
  std::vector<int> s{ctx.precision_bits};
  for (int p : ctx.escalation_schedule)
    if (p > ctx.precision_bits) s.push_back(p);
  return s;
}

inline void add_conditioning_warning(ResidualReport& rep, const BigFloat& min_gap,
                                     int prec) {
  BigFloat warn_threshold = BigFloat::pow2(-(prec / 4), prec);
  if (min_gap < warn_threshold)
    rep.warnings.push_back(
        "small half-angle gap (min_gap < 2^-" + std::to_string(prec / 4) +
        "): reciprocal chord products lose significance at " +
        std::to_string(prec) + " bits");
}

/// Shared driver for the bigfloat backend. The evaluator returns the
/// residual/scale pair at a precision and may fill diagnostics.
inline ResidualReport run_bigfloat(
    const NumericContext& ctx, bool escalate,
    const std::function<ResidualSample(int, ResidualReport&)>& evaluator) {
  ResidualReport rep;
  rep.backend = ctx.backend;
  rep.escalated = escalate;
  try {
    if (escalate) {
      NumericContext sched_ctx = ctx;
      sched_ctx.escalation_schedule = effective_schedule(ctx);
      EscalationResult res = escalate_precision(
          [&](int p) { return evaluator(p, rep); }, sched_ctx);
      rep.trace = res.trace;
      rep.verdict = res.verdict;
    } else {
      ResidualSample s;
      try {
        s = evaluator(ctx.precision_bits, rep);
      } catch (const std::exception& e) {
        std::throw_with_nested(EvaluationError(ctx.precision_bits, e.what()));
      }
      rep.trace.push_back({ctx.precision_bits, s.residual, s.scale});
      rep.verdict = single_step_verdict(rep.trace.front());
    }
    const EscalationStep& last = rep.trace.back();
    rep.precision_bits = last.precision_bits;
    rep.residual = last.residual.to_sci_string();
    rep.exact_zero = last.residual.is_zero();
    rep.relative_residual = (last.residual / last.scale).to_sci_string();
  } catch (const EvaluationError& e) {
    rep.verdict = Verdict::Degenerate;
    rep.note = e.what();
  } catch (const DegenerateConfiguration& e) {
    rep.verdict = Verdict::Degenerate;
    rep.note = e.what();
  }
  return rep;
}

/// Interval driver: a step that excludes zero refutes the identity
/// outright; an enclosure at rounding level confirms it; anything else
/// escalates. An exhausted schedule falls back to the magnitude-trace rule.
inline ResidualReport run_interval(
    const NumericContext& ctx, bool escalate,
    const std::function<std::pair<IntervalValue, IntervalValue>(
        int, ResidualReport&)>& evaluator) {
  ResidualReport rep;
  rep.backend = Backend::Interval;
  rep.escalated = escalate;
  std::vector<int> schedule =
      escalate ? effective_schedule(ctx) : std::vector<int>{ctx.precision_bits};
  try {
    std::optional<Verdict> decided;
    for (int p : schedule) {
      std::pair<IntervalValue, IntervalValue> step;
      try {
        step = evaluator(p, rep);
      } catch (const std::exception& e) {
        std::throw_with_nested(EvaluationError(p, e.what()));
      }
      auto& [enc, scale] = step;
      rep.interval_trace.push_back({p, enc, scale});
      if (!enc.contains_zero()) {
        decided = Verdict::Violated;
        break;
      }
      BigFloat noise = mul(BigFloat::pow2(-p + kNoiseMarginBits, p), scale.hi,
                           MPFR_RNDU);
      if (enc.mag() <= noise) {
        decided = Verdict::IdentityConsistent;
        break;
      }
      if (!escalate) {
        decided = Verdict::Violated;  // single shot, not at rounding level
        break;
      }
    }
    if (!decided) {
      std::vector<EscalationStep> mags;
      for (const auto& s : rep.interval_trace)
        mags.push_back({s.precision_bits, s.enclosure.mag(), s.scale.hi});
      decided = verdict_from_trace(mags);
    }
    rep.verdict = *decided;
    const IntervalStep& last = rep.interval_trace.back();
    rep.precision_bits = last.precision_bits;
    rep.residual = "[" + last.enclosure.lo.to_sci_string() + ", " +
                   last.enclosure.hi.to_sci_string() + "]";
    rep.exact_zero = last.enclosure.is_exact_zero();
    rep.relative_residual =
        div(last.enclosure.mag(), last.scale.lo, MPFR_RNDU).to_sci_string();
  } catch (const EvaluationError& e) {
    rep.verdict = Verdict::Degenerate;
    rep.note = e.what();
  } catch (const DegenerateConfiguration& e) {
    rep.verdict = Verdict::Degenerate;
    rep.note = e.what();
  }
  return rep;
}

}  // namespace detail

/// Verifies the chord-product identity for a circle configuration. Even
/// counts test the identity proper; odd counts are routed to the negative
/// control and reported as such. Degenerate inputs yield a degenerate
/// verdict rather than an exception.
inline ResidualReport verify_identity(const CircleConfig& config,
                                      const NumericContext& ctx,
                                      bool escalate = true) {
  ctx.validate();
  const bool odd = !config.even_count();

  if (ctx.backend == Backend::BigFloatBackend) {
    auto evaluator = [&](int p, ResidualReport& rep) -> ResidualSample {
      ChordProducts cp = chord_products(config, p);
      auto inv = detail::reciprocal_products(cp);
      BigFloat residual = detail::alternating_reciprocal_sum(inv, p);
      BigFloat scale = detail::reciprocal_scale(inv, p);
      rep.condition.min_gap = cp.min_gap.to_sci_string();
      rep.condition.min_chord = cp.min_chord.to_sci_string();
      BigFloat max_inv(p);
      for (const auto& x : inv) max_inv = max(max_inv, x);
      rep.condition.max_inv_product = max_inv.to_sci_string();
      rep.warnings.clear();
      detail::add_conditioning_warning(rep, cp.min_gap, p);
      return {residual, scale};
    };
    ResidualReport rep = detail::run_bigfloat(ctx, escalate, evaluator);
    if (odd && rep.note.empty()) {
      rep.note = "odd-count circle: negative-control alternating sum";
    }
    return rep;
  }

  if (ctx.backend == Backend::Interval) {
    auto evaluator = [&](int p, ResidualReport& rep)
        -> std::pair<IntervalValue, IntervalValue> {
      auto products = chord_products_enclosure(config, p);
      IntervalValue residual(p);
      IntervalValue scale(p);
      for (std::size_t k = 0; k < products.size(); ++k) {
        IntervalValue inv = products[k].reciprocal();
        residual = (k % 2 == 0) ? residual + inv : residual - inv;
        scale = scale + inv;
      }
      BigFloat min_gap = min_half_angle_gap(config, p);
      rep.condition.min_gap = min_gap.to_sci_string();
      rep.warnings.clear();
      detail::add_conditioning_warning(rep, min_gap, p);
      return {residual, scale};
    };
    ResidualReport rep = detail::run_interval(ctx, escalate, evaluator);
    if (odd && rep.note.empty())
      rep.note = "odd-count circle: negative-control alternating sum";
    return rep;
  }

  throw std::invalid_argument(
      "verify_identity: circle configurations given by angles need the "
      "bigfloat or interval backend (use m-parameter instances for exact "
      "verification)");
}

/// Exact verification of the unit-parameter route for an m-parameter
/// circle configuration: the sum must be exactly zero.
inline ResidualReport verify_identity(const PythagoreanCircle& config,
                                      const NumericContext& ctx,
                                      bool escalate = false) {
  (void)escalate;  // exact arithmetic has nothing to escalate
  if (ctx.backend != Backend::GaussianRational &&
      ctx.backend != Backend::ExactRational)
    throw std::invalid_argument(
        "verify_identity: m-parameter instances use the gaussian (or exact) "
        "backend");
  if (config.count() % 2 != 0)
    throw OddCount("verify_identity: the exact circle identity needs an "
                   "even point count");
  ResidualReport rep;
  rep.backend = Backend::GaussianRational;
  rep.exact = true;
  try {
    GaussianRational r = exact_jane_rhs(config.circle_points(),
                                        config.count() / 2);
    rep.residual = r.to_string();
    rep.relative_residual = rep.residual;
    rep.exact_zero = r.is_zero();
    rep.gaussian_residual = r;
    rep.verdict = rep.exact_zero ? Verdict::IdentityConsistent
                                 : Verdict::Violated;
  } catch (const DuplicateNode& e) {
    rep.verdict = Verdict::Degenerate;
    rep.note = e.what();
  }
  return rep;
}

/// Verifies the collinear counterpart, any count >= 2. Exact backends give
/// a hard zero; float backends escalate like the circle case.
inline ResidualReport verify_identity(const CollinearConfig& config,
                                      const NumericContext& ctx,
                                      bool escalate = true) {
  ctx.validate();
  if (ctx.backend == Backend::ExactRational ||
      ctx.backend == Backend::GaussianRational) {
    ResidualReport rep;
    rep.backend = Backend::ExactRational;
    rep.exact = true;
    ExactRational r = collinear_residual(config);
    rep.residual = r.to_string();
    rep.exact_zero = r.is_zero();
    rep.rational_residual = r;
    if (rep.exact_zero) {
      rep.relative_residual = "0";
    } else {
      ExactRational scale;
      const ExactRational one(1);
      for (std::size_t i = 0; i < config.count(); ++i) {
        ExactRational ri = one;
        for (std::size_t j = 0; j < config.count(); ++j) {
          if (j == i) continue;
          ri *= (j > i ? config.positions[j] - config.positions[i]
                       : config.positions[i] - config.positions[j]);
        }
        scale += one / ri;
      }
      rep.relative_residual = (r / scale).to_string();
    }
    rep.verdict =
        rep.exact_zero ? Verdict::IdentityConsistent : Verdict::Violated;
    return rep;
  }

  if (ctx.backend == Backend::BigFloatBackend) {
    auto evaluator = [&](int p, ResidualReport& rep) -> ResidualSample {
      std::vector<BigFloat> xs;
      xs.reserve(config.count());
      for (const auto& q : config.positions)
        xs.push_back(BigFloat::from_rational(q, p));
      BigFloat residual = collinear_residual_generic(xs);
      // scale: sum of reciprocal products, mirroring the circle case
      BigFloat scale(p);
      const BigFloat one = BigFloat::from_long(1, p);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        BigFloat r = one;
        for (std::size_t j = 0; j < xs.size(); ++j) {
          if (j == i) continue;
          r *= (j > i ? xs[j] - xs[i] : xs[i] - xs[j]);
        }
        scale += one / r;
      }
      (void)rep;
      return {residual, scale};
    };
    return detail::run_bigfloat(ctx, escalate, evaluator);
  }

  // interval backend
  auto evaluator = [&](int p, ResidualReport& rep)
      -> std::pair<IntervalValue, IntervalValue> {
    std::vector<IntervalValue> xs;
    xs.reserve(config.count());
    for (const auto& q : config.positions)
      xs.push_back(IntervalValue::from_rational(q, p));
    IntervalValue residual(p);
    IntervalValue scale(p);
    const IntervalValue one = IntervalValue::from_long(1, p);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      IntervalValue r = one;
      for (std::size_t j = 0; j < xs.size(); ++j) {
        if (j == i) continue;
        r = r * (j > i ? xs[j] - xs[i] : xs[i] - xs[j]);
      }
      IntervalValue inv = r.reciprocal();
      residual = (i % 2 == 0) ? residual + inv : residual - inv;
      scale = scale + inv;
    }
    (void)rep;
    return {residual, scale};
  };
  return detail::run_interval(ctx, escalate, evaluator);
}

}  // namespace chordal
