#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "bssrw/exact/interval.hpp"
#include "bssrw/exact/poly.hpp"

namespace bssrw::detail {

enum class Op {
  rational,
  add,
  sub,
  mul,
  div,
  root,          // real index-th root of lhs
  root_of_poly,  // unique root of `poly` in [lo, hi]; rational coefficients
  root_of_alg,   // unique root of sum coeffs[i] T^i in [lo, hi]; sign change at the ends
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

// Immutable DAG node. The mutable members are caches guarded by once_flag/mutex.
struct Node : std::enable_shared_from_this<Node> {
  Op op = Op::rational;
  Rational value{0};
  NodePtr lhs, rhs;
  unsigned index = 0;
  Poly poly;                    // squarefree primitive
  bool irreducible = false;     // root_of_poly whose poly is known irreducible
  std::vector<NodePtr> coeffs;  // root_of_alg
  Rational lo{0}, hi{0};
  std::uint64_t id = 0;
  // Every root/root_of node reachable from here (self included), sorted by id.
  std::vector<const Node*> atoms;

  bool is_atom() const { return op == Op::root || op == Op::root_of_poly || op == Op::root_of_alg; }

  mutable std::once_flag minpoly_once;
  mutable Poly minpoly;
  mutable DyadicInterval isolator;

  mutable std::mutex enclosure_mutex;
  mutable std::optional<Interval> enclosure;
  mutable unsigned enclosure_bits = 0;
};

NodePtr make_rational_node(const Rational& value);
NodePtr make_binary_node(Op op, NodePtr lhs, NodePtr rhs);
NodePtr make_root_node(NodePtr operand, unsigned index);
// `poly` must be squarefree with exactly one root in [lo, hi], none at the ends.
// When `irreducible` is set the minimal polynomial cache is filled directly.
NodePtr make_root_of_poly_node(const Poly& poly, const DyadicInterval& bracket, bool irreducible);
NodePtr make_root_of_alg_node(std::vector<NodePtr> coeffs, const Rational& lo, const Rational& hi);

// Enclosure at the given precision or nullopt if a divisor/radicand enclosure
// was not yet sharp enough. Widths tend to zero as bits grows.
std::optional<Interval> try_enclose(const Node& node, unsigned bits);
// Escalates precision until an enclosure exists with width <= 2^-bits.
Interval enclose(const Node& node, unsigned bits);

}  // namespace bssrw::detail
