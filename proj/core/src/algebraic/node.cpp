#include "algebraic/node.hpp"

#include <algorithm>
#include <atomic>

#include "bssrw/error.hpp"

namespace bssrw::detail {

namespace {

std::atomic<std::uint64_t> g_next_id{1};

std::shared_ptr<Node> fresh(Op op) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->id = g_next_id.fetch_add(1);
  return n;
}

void merge_atoms(std::vector<const Node*>& into, const std::vector<const Node*>& from) {
  std::vector<const Node*> out;
  out.reserve(into.size() + from.size());
  auto by_id = [](const Node* a, const Node* b) { return a->id < b->id; };
  std::set_union(into.begin(), into.end(), from.begin(), from.end(), std::back_inserter(out), by_id);
  into = std::move(out);
}

}  // namespace

NodePtr make_rational_node(const Rational& value) {
  auto n = fresh(Op::rational);
  n->value = value;
  n->value.canonicalize();
  return n;
}

NodePtr make_binary_node(Op op, NodePtr lhs, NodePtr rhs) {
  auto n = fresh(op);
  n->atoms = lhs->atoms;
  merge_atoms(n->atoms, rhs->atoms);
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

NodePtr make_root_node(NodePtr operand, unsigned index) {
  auto n = fresh(Op::root);
  n->index = index;
  n->atoms = operand->atoms;
  n->atoms.push_back(n.get());
  n->lhs = std::move(operand);
  return n;
}

NodePtr make_root_of_poly_node(const Poly& poly, const DyadicInterval& bracket, bool irreducible) {
  auto n = fresh(Op::root_of_poly);
  n->poly = primitive_part(squarefree_part(poly));
  n->lo = bracket.lo();
  n->hi = bracket.hi();
  n->atoms.push_back(n.get());
  n->enclosure = Interval{bracket.lo(), bracket.hi()};
  n->enclosure_bits = 0;
  n->irreducible = irreducible;
  if (irreducible) {
    std::call_once(n->minpoly_once, [&] {
      n->minpoly = n->poly;
      n->isolator = bracket;
    });
  }
  return n;
}

NodePtr make_root_of_alg_node(std::vector<NodePtr> coeffs, const Rational& lo, const Rational& hi) {
  auto n = fresh(Op::root_of_alg);
  for (const auto& c : coeffs) merge_atoms(n->atoms, c->atoms);
  n->atoms.push_back(n.get());
  n->coeffs = std::move(coeffs);
  n->lo = lo;
  n->hi = hi;
  n->enclosure = Interval{lo, hi};
  return n;
}

}  // namespace bssrw::detail
