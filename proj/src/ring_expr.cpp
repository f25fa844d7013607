#include "pin2k/ring_expr.hpp"

#include <cctype>

namespace pin2k {

namespace {

class Parser {
public:
  Parser(const std::string& text, const GroupSpec& group) : text_(text), group_(group) {}

  RepElement parse() {
    RepElement e = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected input at position " + std::to_string(pos_) + ": '" +
                       text_.substr(pos_) + "'");
    return e;
  }

private:
  const std::string& text_;
  const GroupSpec& group_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  long digits() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected digits at position " + std::to_string(start));
    return std::stol(text_.substr(start, pos_ - start));
  }

  RepElement expr() {
    RepElement acc = term();
    while (true) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  RepElement term() {
    RepElement acc = power();
    while (eat('*')) acc *= power();
    return acc;
  }

  RepElement power() {
    RepElement base = unary();
    if (eat('^')) {
      long e = digits();
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  RepElement unary() {
    if (eat('-')) return -unary();
    return atom();
  }

  RepElement atom() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RepElement::one(group_, Rat(digits()));
    }
    if (c == '(') {
      eat('(');
      RepElement e = expr();
      if (!eat(')')) throw ParseError("missing ')' at position " + std::to_string(pos_));
      return e;
    }
    if (c == 't') {
      ++pos_;
      if (peek() != '1') throw ParseError("expected 't1'");
      ++pos_;
      return RepElement::one_tilde(group_);
    }
    if (c == 'h') {
      ++pos_;
      long i = digits();
      if (i < 1) throw ParseError("h index must be >= 1");
      return RepElement::h(group_, static_cast<int>(i));
    }
    if (c == 'z') {
      ++pos_;
      long f = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) f = digits();
      return RepElement::generator(group_, static_cast<size_t>(f));
    }
    throw ParseError(std::string("unexpected character '") + c + "' at position " +
                     std::to_string(pos_));
  }
};

}  // namespace

RepElement parse_ring_expression(const std::string& text, const GroupSpec& group) {
  if (group.is_odd()) {
    // Evaluate in the ambient ring, then check membership in the subring.
    GroupSpec ambient = GroupSpec::even({group.ambient_orders()[0]});
    RepElement e = Parser(text, ambient).parse();
    return e.to_odd_type();
  }
  return Parser(text, group).parse();
}

}  // namespace pin2k
