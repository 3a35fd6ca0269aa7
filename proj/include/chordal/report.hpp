#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chordal/gaussian.hpp"
#include "chordal/instance.hpp"
#include "chordal/verify.hpp"

namespace chordal {

/// Machine-readable verification report. Every number is serialized
/// losslessly: rationals as num/den decimal strings, floats as scientific
/// decimals with a full mantissa, at the precision recorded per row.
struct ReportFile {
  std::string instance_digest;
  ResidualReport result;
  double wall_ms = 0.0;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["format"] = "chordal-report-v1";
    j["instance_digest"] = instance_digest;
    j["backend"] = backend_name(result.backend);
    j["escalated"] = result.escalated;
    j["verdict"] = verdict_name(result.verdict);
    j["precision_bits"] = result.precision_bits;
    j["residual"] = result.residual;
    j["relative_residual"] = result.relative_residual;
    j["exact_zero"] = result.exact_zero;
    j["residual_convention"] = "odd-minus-even";
    if (!result.note.empty()) j["note"] = result.note;

    if (!result.trace.empty()) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& s : result.trace) {
        nlohmann::json row;
        row["precision"] = s.precision_bits;
        row["residual"] = s.residual.to_sci_string();
        row["scale"] = s.scale.to_sci_string();
        row["relative_residual"] = (s.residual / s.scale).to_sci_string();
        rows.push_back(row);
      }
      j["trace"] = rows;
    }
    if (!result.interval_trace.empty()) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& s : result.interval_trace) {
        nlohmann::json row;
        row["precision"] = s.precision_bits;
        row["lo"] = s.enclosure.lo.to_sci_string();
        row["hi"] = s.enclosure.hi.to_sci_string();
        row["scale_lo"] = s.scale.lo.to_sci_string();
        row["scale_hi"] = s.scale.hi.to_sci_string();
        rows.push_back(row);
      }
      j["interval_trace"] = rows;
    }
    if (result.rational_residual) {
      j["exact_residual"] = detail::rational_to_json(*result.rational_residual);
    } else if (result.gaussian_residual) {
      j["exact_residual"] = nlohmann::json{
          {"re", detail::rational_to_json(result.gaussian_residual->re)},
          {"im", detail::rational_to_json(result.gaussian_residual->im)}};
    }

    nlohmann::json cond;
    if (!result.condition.min_gap.empty())
      cond["min_gap"] = result.condition.min_gap;
    if (!result.condition.min_chord.empty())
      cond["min_chord"] = result.condition.min_chord;
    if (!result.condition.max_inv_product.empty())
      cond["max_inv_product"] = result.condition.max_inv_product;
    j["condition"] = cond;
    j["warnings"] = result.warnings;
    j["timings_ms"] = nlohmann::json{{"verify", wall_ms}};
    return j;
  }

  std::string serialize() const { return to_json().dump(2) + "\n"; }

  void save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report file: " + path);
    out << serialize();
  }
};

/// Re-derives the verdict from a serialized report's trace alone, using the
/// same decision rules as the verifier. Reports are self-consistent iff
/// this matches the stored verdict.
inline Verdict recompute_report_verdict(const nlohmann::json& j) {
  const std::string backend = j.at("backend").get<std::string>();
  const bool escalated = j.value("escalated", false);

  if (backend == "exact" || backend == "gaussian") {
    const auto& r = j.at("exact_residual");
    if (r.contains("re")) {
      GaussianRational g(detail::rational_from_json(r.at("re"), "re"),
                         detail::rational_from_json(r.at("im"), "im"));
      return g.is_zero() ? Verdict::IdentityConsistent : Verdict::Violated;
    }
    return detail::rational_from_json(r, "exact_residual").is_zero()
               ? Verdict::IdentityConsistent
               : Verdict::Violated;
  }

  if (backend == "bigfloat") {
    std::vector<EscalationStep> trace;
    for (const auto& row : j.at("trace")) {
      int p = row.at("precision").get<int>();
      trace.push_back(
          {p, BigFloat::from_string(row.at("residual").get<std::string>(), p),
           BigFloat::from_string(row.at("scale").get<std::string>(), p)});
    }
    if (trace.empty()) throw std::invalid_argument("report: empty trace");
    if (!escalated) return single_step_verdict(trace.front());
    return verdict_from_trace(trace);
  }

  if (backend == "interval") {
    std::vector<IntervalStep> trace;
    for (const auto& row : j.at("interval_trace")) {
      int p = row.at("precision").get<int>();
      IntervalValue enc(BigFloat::from_string(row.at("lo").get<std::string>(), p),
                        BigFloat::from_string(row.at("hi").get<std::string>(), p));
      IntervalValue sc(
          BigFloat::from_string(row.at("scale_lo").get<std::string>(), p),
          BigFloat::from_string(row.at("scale_hi").get<std::string>(), p));
      trace.push_back({p, enc, sc});
    }
    if (trace.empty()) throw std::invalid_argument("report: empty trace");
    for (const auto& s : trace) {
      if (!s.enclosure.contains_zero()) return Verdict::Violated;
      BigFloat noise =
          mul(BigFloat::pow2(-s.precision_bits + kNoiseMarginBits,
                             s.precision_bits),
              s.scale.hi, MPFR_RNDU);
      if (s.enclosure.mag() <= noise) return Verdict::IdentityConsistent;
    }
    if (!escalated) return Verdict::Violated;
    std::vector<EscalationStep> mags;
    for (const auto& s : trace)
      mags.push_back({s.precision_bits, s.enclosure.mag(), s.scale.hi});
    return verdict_from_trace(mags);
  }

  throw std::invalid_argument("report: unknown backend " + backend);
}

}  // namespace chordal
