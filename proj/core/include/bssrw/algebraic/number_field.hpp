#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bssrw/algebraic/algebraic_number.hpp"
#include "bssrw/exact/interval.hpp"
#include "bssrw/exact/poly.hpp"

namespace bssrw {

// A real number field Q(theta) = Q[z]/(m) with a chosen real root theta of the
// monic irreducible modulus m. Elements are polynomials in z of degree < deg m.
// The field also remembers which radical and root atoms of the expression DAG
// it contains, together with their representations.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  using Element = Poly;

  static std::shared_ptr<const NumberField> rationals();

  int degree() const noexcept { return modulus_.degree(); }
  const Poly& modulus() const noexcept { return modulus_; }
  const AlgebraicNumber& generator() const noexcept { return theta_; }

  Element reduce(const Poly& p) const;
  Element multiply(const Element& a, const Element& b) const;
  // Throws DivisionByZero for the zero element.
  Element inverse(const Element& a) const;

  // Characteristic polynomial of multiplication by a (monic, degree = degree()).
  Poly charpoly(const Element& a) const;
  // Minimal polynomial over Q, primitive with positive leading coefficient.
  Poly element_minpoly(const Element& a) const;
  // The element evaluated as a real number.
  AlgebraicNumber value_of(const Element& a) const;
  Interval enclose(const Element& a, unsigned bits) const;

  // Representation of an expression whose atoms all belong to the field.
  std::optional<Element> represent(const detail::Node& node) const;
  std::optional<Element> represent(const AlgebraicNumber& x) const { return represent(*x.node()); }
  bool contains_atom(const detail::Node* atom) const;
  bool contains_atoms(const AlgebraicNumber& x) const;

  // The field generated over this one by the atom. The atom's own operands
  // must already be representable.
  std::shared_ptr<const NumberField> adjoin_atom(const detail::Node& atom) const;
  // Degree of a real radical of a rational over this field, without building
  // the extension. Only answered when this field is itself generated by real
  // radicals of rationals.
  std::optional<int> radical_degree(const detail::Node& atom) const;
  // Adjoins the value through a fresh root of its minimal polynomial and
  // records the value's own expression as equal to it.
  std::shared_ptr<const NumberField> adjoin_value(const AlgebraicNumber& value) const;

  const std::vector<std::pair<std::shared_ptr<const detail::Node>, Element>>& known() const noexcept {
    return known_;
  }
  // Atoms adjoined explicitly (generators introduced internally are excluded).
  const std::vector<const detail::Node*>& adjoined() const noexcept { return adjoined_; }

 private:
  NumberField() = default;

  Poly modulus_;
  AlgebraicNumber theta_;
  std::vector<std::pair<std::shared_ptr<const detail::Node>, Element>> known_;
  std::unordered_map<const detail::Node*, std::size_t> index_;
  std::vector<const detail::Node*> adjoined_;

  void add_known(std::shared_ptr<const detail::Node> node, Element rep);
  std::optional<Element> represent_memo(const detail::Node& node,
                                        std::unordered_map<const detail::Node*, Element>& memo) const;
};

// Smallest cached field containing every atom of x, building and caching one
// (by adjoining atoms in creation order) when none exists.
std::shared_ptr<const NumberField> field_containing(const AlgebraicNumber& x);
// Records a field so later lookups can reuse it.
void register_field(std::shared_ptr<const NumberField> field);

// Among the irreducible factors of the squarefree polynomial p, the one having
// a root inside every enclosure produced by `enclose`, plus that root's
// isolating interval. Factors only when cheap certificates fail.
std::pair<Poly, DyadicInterval> select_factor(const Poly& p,
                                              const std::function<Interval(unsigned)>& enclose);

// Isolating interval of the root of the squarefree p selected by `enclose`.
DyadicInterval locate_root(const Poly& p, const std::function<Interval(unsigned)>& enclose);

}  // namespace bssrw
