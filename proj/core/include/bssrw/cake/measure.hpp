#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bssrw/algebraic/algebraic_number.hpp"
#include "bssrw/exact/poly.hpp"

namespace bssrw {

// A non-atomic probability measure on [0,1] given by its polynomial CDF
// f(x) = mu([0,x]). Construction checks f(0) = 0, f(1) = 1 and that f' keeps
// one sign on (0,1); violations raise InvalidMeasure.
class Measure {
 public:
  Measure(Poly cdf, std::string label);

  const Poly& cdf() const noexcept { return cdf_; }
  const Poly& density() const noexcept { return density_; }
  const std::string& label() const noexcept { return label_; }
  // d when the CDF is exactly x^d.
  std::optional<unsigned> monomial_degree() const noexcept { return monomial_; }

  // mu([a, b]) = f(b) - f(a).
  AlgebraicNumber value(const AlgebraicNumber& a, const AlgebraicNumber& b) const;
  AlgebraicNumber cdf_at(const AlgebraicNumber& x) const;

 private:
  Poly cdf_;
  Poly density_;
  std::string label_;
  std::optional<unsigned> monomial_;
};

// One measure per non-empty line, "name: <polynomial in x>"; '#' starts a comment.
std::vector<Measure> parse_measures(std::string_view text);

}  // namespace bssrw
