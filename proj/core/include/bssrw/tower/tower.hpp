#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bssrw/algebraic/algebraic_number.hpp"
#include "bssrw/algebraic/number_field.hpp"

namespace bssrw {

// `algebraic` marks a proper step whose generator carries no radical witness
// (a cut answer of a non-monomial measure).
enum class StepKind { trivial, radical, sqrt, algebraic };

struct RadicalClaim {
  unsigned index = 0;
  AlgebraicNumber radicand;
};

struct ExtensionStep {
  AlgebraicNumber generator;
  StepKind kind = StepKind::trivial;
  unsigned radical_index = 0;                // radical steps only
  std::optional<AlgebraicNumber> radicand;   // radical steps only
  int degree = 1;
  std::string source;                        // "#k" for query k, or "mediator-sqrt"
};

// The chain Q = K_0 ⊂ K_1 ⊂ ... ⊂ K_k generated by successive values.
// Adjunction is sequential; a finished tower may be read from many threads.
class Tower {
 public:
  Tower();

  // Adjoins value. A radical claim (generator^index = radicand) is checked
  // exactly and recorded when the step is proper. Throws DegreeCapExceeded or
  // MembershipUndecidable when the degree cannot be established.
  const ExtensionStep& adjoin(const AlgebraicNumber& value, const std::string& source,
                              std::optional<RadicalClaim> claim = std::nullopt);
  // Square-root adjunction performed by a mediator rather than a query.
  const ExtensionStep& adjoin_sqrt(const AlgebraicNumber& radicand);

  bool contains(const AlgebraicNumber& value) const;
  // Whether the real p-th root of b lies in the current field.
  bool is_pth_power(const AlgebraicNumber& b, unsigned p) const;

  const std::vector<ExtensionStep>& steps() const noexcept { return steps_; }
  int total_degree() const noexcept { return field_->degree(); }
  const NumberField& field() const noexcept { return *field_; }
  std::shared_ptr<const NumberField> field_ptr() const noexcept { return field_; }
  // A primitive element of the current field.
  const AlgebraicNumber& primitive() const noexcept { return field_->generator(); }

  // One line per step: "step j: deg=<d> kind=<trivial|radical^n|sqrt|algebraic> source=<src>".
  std::string dump() const;

 private:
  std::shared_ptr<const NumberField> grow(const AlgebraicNumber& value) const;

  std::shared_ptr<const NumberField> field_;
  std::vector<ExtensionStep> steps_;
};

std::string to_string(const ExtensionStep& step, std::size_t position);

struct StepCheck {
  std::size_t position = 0;  // 1-based
  int degree = 1;
  bool ok = true;
};

struct StepDegreeReport {
  unsigned prime = 0;
  std::vector<StepCheck> steps;
  bool passed = true;
  std::string text() const;
};

// Every step degree must be 1 or p.
StepDegreeReport verify_step_degrees(const Tower& tower, unsigned p);

// True when target_degree has a prime factor outside allowed_primes, so no
// tower whose step degrees are products of allowed primes can contain it.
bool degree_obstruction(long target_degree, const std::vector<long>& allowed_primes);

}  // namespace bssrw
