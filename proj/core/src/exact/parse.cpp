#include "bssrw/exact/parse.hpp"

#include <cctype>
#include <string>

#include "bssrw/error.hpp"

namespace bssrw {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, int line, int offset) : s_(text), line_(line), offset_(offset) {}

  Poly parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    Poly result;
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail(std::string("expected '+' or '-', found '") + peek() + "'");
      }
      result += term() * Rational(sign);
      first = false;
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, offset_ + static_cast<int>(pos_) + 1);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  Rational number() {
    std::string num = digits();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      std::string den = digits();
      if (Integer(den) == 0) {
        pos_ = at;
        fail("zero denominator");
      }
      return make_rational(Integer(num), Integer(den));
    }
    return Rational(Integer(num));
  }

  unsigned power() {
    skip_ws();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    skip_ws();
    std::size_t at = pos_;
    std::string e = digits();
    if (e.size() > 6) {
      pos_ = at;
      fail("exponent too large");
    }
    return static_cast<unsigned>(std::stoul(e));
  }

  Poly term() {
    skip_ws();
    if (at_end()) fail("expected a term");
    if (peek() == 'x') {
      ++pos_;
      return Poly::monomial(Rational(1), power());
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail(std::string("unexpected character '") + peek() + "'");
    }
    Rational c = number();
    skip_ws();
    if (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      if (at_end() || peek() != 'x') fail("expected 'x' after '*'");
      ++pos_;
      return Poly::monomial(c, power());
    }
    return Poly::constant(c);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
  int offset_;
};

}  // namespace

Poly parse_poly(std::string_view text, int line, int column_offset) {
  return PolyParser(text, line, column_offset).parse();
}

}  // namespace bssrw
