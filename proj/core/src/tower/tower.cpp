#include "bssrw/tower/tower.hpp"

#include <algorithm>
#include <sstream>

#include "algebraic/node.hpp"
#include "bssrw/error.hpp"
#include "bssrw/exact/integer.hpp"

namespace bssrw {

Tower::Tower() : field_(NumberField::rationals()) {}

bool Tower::contains(const AlgebraicNumber& value) const {
  if (field_->represent(value)) return true;
  if (auto d = field_->radical_degree(*value.node())) return *d == 1;
  return grow(value)->degree() == field_->degree();
}

std::shared_ptr<const NumberField> Tower::grow(const AlgebraicNumber& value) const {
  if (field_->represent(value)) return field_;
  const auto& node = *value.node();
  if (node.is_atom()) {
    bool operands_known = true;
    if (node.op == detail::Op::root) operands_known = field_->represent(*node.lhs).has_value();
    for (const auto& c : node.coeffs) operands_known = operands_known && field_->represent(*c).has_value();
    if (operands_known) return field_->adjoin_atom(node);
  }
  return field_->adjoin_value(value);
}

const ExtensionStep& Tower::adjoin(const AlgebraicNumber& value, const std::string& source,
                                   std::optional<RadicalClaim> claim) {
  std::shared_ptr<const NumberField> next;
  try {
    next = grow(value);
  } catch (const DegreeCapExceeded&) {
    throw;
  } catch (const DivisionByZero&) {
    throw;
  } catch (const Error& e) {
    throw MembershipUndecidable(std::string("could not place value in the tower: ") + e.what());
  }
  const int old_degree = field_->degree();
  if (next->degree() % old_degree != 0)
    throw MembershipUndecidable("field degree is not a multiple of the previous degree");
  ExtensionStep step;
  step.generator = value;
  step.degree = next->degree() / old_degree;
  step.source = source;
  if (step.degree > 1 && claim) {
    if (alg_sign(pow(value, claim->index) - claim->radicand) != Sign::zero)
      throw DomainError("radical claim does not hold for " + value.expression());
    step.kind = StepKind::radical;
    step.radical_index = claim->index;
    step.radicand = claim->radicand;
  } else if (step.degree > 1 && value.node()->op == detail::Op::root) {
    step.kind = StepKind::radical;
    step.radical_index = value.node()->index;
    step.radicand = AlgebraicNumber(value.node()->lhs);
  } else if (step.degree > 1) {
    step.kind = StepKind::algebraic;
  }
  field_ = std::move(next);
  register_field(field_);
  steps_.push_back(std::move(step));
  return steps_.back();
}

const ExtensionStep& Tower::adjoin_sqrt(const AlgebraicNumber& radicand) {
  const AlgebraicNumber root = radicand.nth_root(2);
  auto next = grow(root);
  ExtensionStep step;
  step.generator = root;
  step.degree = next->degree() / field_->degree();
  step.kind = step.degree == 1 ? StepKind::trivial : StepKind::sqrt;
  step.radical_index = 2;
  step.radicand = radicand;
  step.source = "mediator-sqrt";
  field_ = std::move(next);
  register_field(field_);
  steps_.push_back(std::move(step));
  return steps_.back();
}

bool Tower::is_pth_power(const AlgebraicNumber& b, unsigned p) const {
  if (!field_->represent(b)) throw DomainError("is_pth_power: value is not in the current field");
  return contains(b.nth_root(p));
}

std::string to_string(const ExtensionStep& step, std::size_t position) {
  std::string kind;
  switch (step.kind) {
    case StepKind::trivial: kind = "trivial"; break;
    case StepKind::radical: kind = "radical^" + std::to_string(step.radical_index); break;
    case StepKind::algebraic: kind = "algebraic"; break;
    case StepKind::sqrt: kind = "sqrt"; break;
  }
  return "step " + std::to_string(position) + ": deg=" + std::to_string(step.degree) + " kind=" + kind +
         " source=" + step.source;
}

std::string Tower::dump() const {
  std::string out;
  for (std::size_t i = 0; i < steps_.size(); ++i) out += to_string(steps_[i], i + 1) + "\n";
  return out;
}

StepDegreeReport verify_step_degrees(const Tower& tower, unsigned p) {
  StepDegreeReport report;
  report.prime = p;
  for (std::size_t i = 0; i < tower.steps().size(); ++i) {
    const int d = tower.steps()[i].degree;
    const bool ok = d == 1 || d == static_cast<int>(p);
    report.steps.push_back({i + 1, d, ok});
    report.passed = report.passed && ok;
  }
  return report;
}

std::string StepDegreeReport::text() const {
  std::ostringstream os;
  os << "step degrees must lie in {1, " << prime << "}\n";
  for (const auto& s : steps)
    os << "step " << s.position << ": deg=" << s.degree << (s.ok ? " ok" : " VIOLATION") << "\n";
  os << (passed ? "PASS" : "FAIL") << "\n";
  return os.str();
}

bool degree_obstruction(long target_degree, const std::vector<long>& allowed_primes) {
  if (target_degree < 1) throw DomainError("degree_obstruction: target degree must be positive");
  for (long q : prime_factors(target_degree))
    if (std::find(allowed_primes.begin(), allowed_primes.end(), q) == allowed_primes.end()) return true;
  return false;
}

}  // namespace bssrw
