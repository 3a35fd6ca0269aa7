#pragma once

#include <stdexcept>
#include <string>

namespace chordal {

/// Two points of a configuration coincide (or are too close to resolve
/// at the working precision), so chord products are meaningless.
class DegenerateConfiguration : public std::runtime_error {
 public:
  explicit DegenerateConfiguration(const std::string& what)
      : std::runtime_error(what) {}
};

/// Interpolation / power-sum nodes must be pairwise distinct.
class DuplicateNode : public std::runtime_error {
 public:
  explicit DuplicateNode(const std::string& what) : std::runtime_error(what) {}
};

/// Chord queries require two distinct indices.
class SamePoint : public std::invalid_argument {
 public:
  explicit SamePoint(const std::string& what) : std::invalid_argument(what) {}
};

/// The even-count alternating sum was requested for an odd configuration.
/// Odd counts must go through the explicitly named control path.
class OddCount : public std::invalid_argument {
 public:
  explicit OddCount(const std::string& what) : std::invalid_argument(what) {}
};

/// An evaluator failed inside the escalation driver; carries the precision
/// at which the failure occurred.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(int precision_bits, const std::string& what)
      : std::runtime_error("at " + std::to_string(precision_bits) +
                           " bits: " + what),
        precision_bits_(precision_bits) {}
  int precision_bits() const { return precision_bits_; }

 private:
  int precision_bits_;
};

}  // namespace chordal
