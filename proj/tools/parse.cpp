#include "parse.hpp"

#include <cctype>

namespace ehv::cli {

namespace {

// Product in U(L) as written, without reordering.
UEElement raw_product(const UEElement& a, const UEElement& b) {
  UEElement out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      UEMonomial m = ma;
      m.word.insert(m.word.end(), mb.word.begin(), mb.word.end());
      for (int i = 0; i < 3; ++i) m.central[i] += mb.central[i];
      out.add(m, ca * cb);
    }
  }
  return out;
}

UEElement scalar_elem(const Scalar& s) {
  return UEElement::monomial(UEMonomial{}, s);
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  UEElement parse() {
    UEElement e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at offset " + std::to_string(pos_) + ": " +
                     what + " in \"" + s_ + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  UEElement expr() {
    UEElement e = term();
    while (true) {
      if (eat('+')) {
        e += term();
      } else if (eat('-')) {
        e -= term();
      } else {
        return e;
      }
    }
  }

  UEElement term() {
    UEElement e = factor();
    while (eat('*')) e = raw_product(e, factor());
    return e;
  }

  UEElement factor() {
    UEElement base = atom();
    if (eat('^')) {
      long n = integer();
      if (n < 0) fail("negative exponent");
      UEElement out = UEElement::one();
      for (long i = 0; i < n; ++i) out = raw_product(out, base);
      return out;
    }
    return base;
  }

  UEElement atom() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return atom() * Scalar(-1);
    }
    if (c == '(') {
      ++pos_;
      UEElement e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return scalar_elem(Scalar(rational()));
    if (std::isalpha(static_cast<unsigned char>(c))) return name();
    fail("expected a number, name or '('");
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  Rational rational() {
    long num = integer();
    std::size_t save = pos_;
    if (eat('/')) {
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        long den = integer();
        if (den == 0) fail("zero denominator");
        return Rational(num, den);
      }
      pos_ = save;  // not a fraction: leave the '/' unconsumed
    }
    return Rational(num);
  }

  UEElement name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
    }
    std::string id = s_.substr(start, pos_ - start);
    if (id == "C1" || id == "C2" || id == "C3") {
      UEMonomial m;
      m.central[id[1] - '1'] = 1;
      return UEElement::monomial(m);
    }
    if (id == "L" || id == "J" || id == "G") {
      if (!eat('(')) fail("expected '(' after generator name " + id);
      long idx = integer();
      if (!eat(')')) fail("expected ')' after generator index");
      GenKind k = id == "L" ? GenKind::L : (id == "J" ? GenKind::J : GenKind::G);
      UEMonomial m;
      m.word = {Generator{k, static_cast<int>(idx)}};
      return UEElement::monomial(m);
    }
    if (auto p = parameter_from_name(id)) {
      return scalar_elem(Scalar::parameter(*p));
    }
    fail("unknown name \"" + id + "\"");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

UEElement parse_expression(const std::string& text) { return Parser(text).parse(); }

Scalar parse_scalar(const std::string& text) {
  UEElement e = parse_expression(text);
  Scalar out;
  for (const auto& [m, c] : e.terms()) {
    if (!m.word.empty() || m.central != std::array<int, 3>{0, 0, 0}) {
      throw ParseError("expected a scalar, got \"" + text + "\"");
    }
    out = out + c;
  }
  return out;
}

LieElement parse_lie_element(const UEElement& e, const std::string& text) {
  LieElement out;
  for (const auto& [m, c] : e.terms()) {
    int centrals = m.central[0] + m.central[1] + m.central[2];
    if (m.word.size() + centrals != 1) {
      throw ParseError("expected a Lie algebra element (degree-1 terms), got \"" +
                       text + "\"");
    }
    if (centrals == 1) {
      for (int i = 0; i < 3; ++i) {
        if (m.central[i] == 1) out.add(C(i + 1), c);
      }
    } else {
      out.add(m.word[0], c);
    }
  }
  return out;
}

LieElement parse_lie_element(const std::string& text) {
  return parse_lie_element(parse_expression(text), text);
}

Substitution parse_bindings(const std::string& text) {
  Substitution out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(pos, comma - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw ParseError("binding \"" + item + "\" is not name=value");
    }
    std::string key = item.substr(0, eq);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.front()))) key.erase(0, 1);
    auto p = parameter_from_name(key);
    if (!p) throw ParseError("unknown parameter \"" + key + "\"");
    out[*p] = parse_scalar(item.substr(eq + 1));
    pos = comma + 1;
  }
  return out;
}

}  // namespace ehv::cli
