#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfpi {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text could not be turned into a value. `line` is 0 when the
/// position is not known (semantic errors inside an otherwise valid JSON).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Matrix or family dimensions disagree with what the structure requires.
class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(const std::string& field) : Error("shape mismatch: " + field), field_(field) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class NotAGroup : public Error {
 public:
  NotAGroup(std::string axiom, std::string witness)
      : Error("not a group: " + axiom + " fails at " + witness),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}
  const std::string& axiom() const noexcept { return axiom_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::string witness_;
};

/// A construction was asked to run on input that fails one of its hypotheses.
class PreconditionFailed : public Error {
 public:
  explicit PreconditionFailed(const std::string& clause)
      : Error("precondition failed: " + clause), clause_(clause) {}
  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

/// A solution space that must be closed under some structure map is not.
class ClosureViolation : public Error {
 public:
  explicit ClosureViolation(const std::string& what) : Error("closure violation: " + what) {}
};

/// The image of a restricted map escapes the subspace it must land in.
class ContainmentViolation : public Error {
 public:
  explicit ContainmentViolation(const std::string& what) : Error("containment violation: " + what) {}
};

class NotBijective : public Error {
 public:
  NotBijective(std::size_t alpha, std::size_t defect, const std::string& what)
      : Error("not bijective at component " + std::to_string(alpha) + " (defect " +
              std::to_string(defect) + "): " + what),
        alpha_(alpha),
        defect_(defect) {}
  std::size_t alpha() const noexcept { return alpha_; }
  std::size_t defect() const noexcept { return defect_; }

 private:
  std::size_t alpha_;
  std::size_t defect_;
};

class ModuleMapViolation : public Error {
 public:
  explicit ModuleMapViolation(const std::string& what) : Error("module map violation: " + what) {}
};

class NotNormal : public Error {
 public:
  explicit NotNormal(const std::string& what) : Error("subgroup is not normal: " + what) {}
};

class NotComplement : public Error {
 public:
  explicit NotComplement(const std::string& what) : Error("not a complement: " + what) {}
};

}  // namespace hopfpi
