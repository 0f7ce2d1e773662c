#include "c2coh/expression.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "c2coh/errors.hpp"

namespace c2coh {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

namespace {

struct Token {
  enum Kind { ident, number, symbol, end } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = s[i];
    if (std::isspace(c)) {
      ++i;
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::ident, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::number, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::string_view("+*^()[],").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Token::symbol, std::string(1, static_cast<char>(c)), i});
      ++i;
    } else {
      throw ParseError("unexpected character", i, std::string(1, static_cast<char>(c)));
    }
  }
  out.push_back({Token::end, "", s.size()});
  return out;
}

int to_int(const Token& t, int limit = 1 << 20) {
  if (t.kind != Token::number) throw ParseError("expected integer", t.pos, t.text);
  if (t.text.size() > 8 || std::stoi(t.text) > limit)
    throw ParseError("integer too large", t.pos, t.text);
  return std::stoi(t.text);
}

// Recursive descent over + * ^ ( ) with a grammar-specific atom parser.
template <class V>
class Parser {
 public:
  using Atom = std::function<V(Parser&)>;
  using Mul = std::function<V(const V&, const V&)>;

  Parser(std::string_view text, V zero, V one, Atom atom, Mul mul)
      : tokens_(tokenize(text)), zero_(std::move(zero)), one_(std::move(one)),
        atom_(std::move(atom)), mul_(std::move(mul)) {}

  V parse() {
    if (peek().kind == Token::end) throw ParseError("empty expression", peek().pos, "");
    V v = expr();
    if (peek().kind != Token::end) throw ParseError("unexpected token", peek().pos, peek().text);
    return v;
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  void expect(const char* sym) {
    const Token& t = next();
    if (t.kind != Token::symbol || t.text != sym)
      throw ParseError(std::string("expected '") + sym + "'", t.pos, t.text);
  }
  const V& zero() const { return zero_; }
  const V& one() const { return one_; }

 private:
  bool at_symbol(const char* s) const { return peek().kind == Token::symbol && peek().text == s; }

  V expr() {
    V v = term();
    while (at_symbol("+")) {
      next();
      v += term();
    }
    return v;
  }

  V term() {
    V v = factor();
    while (at_symbol("*")) {
      next();
      v = mul_(v, factor());
    }
    return v;
  }

  V factor() {
    V base;
    if (at_symbol("(")) {
      next();
      base = expr();
      expect(")");
    } else if (peek().kind == Token::number) {
      const Token& t = next();
      if (t.text == "0") {
        base = zero_;
      } else if (t.text == "1") {
        base = one_;
      } else {
        throw ParseError("only 0 and 1 are scalars over F_2", t.pos, t.text);
      }
    } else if (peek().kind == Token::ident) {
      base = atom_(*this);
    } else {
      throw ParseError("unexpected token", peek().pos, peek().text);
    }
    if (at_symbol("^")) {
      next();
      int e = to_int(next(), 4096);
      V r = one_;
      for (int k = 0; k < e; ++k) r = mul_(r, base);
      return r;
    }
    return base;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  V zero_, one_;
  Atom atom_;
  Mul mul_;
};

// split "x12" into ("x", 12)
std::optional<std::pair<char, int>> indexed_name(const Token& t) {
  if (t.text.size() < 2) return std::nullopt;
  for (std::size_t k = 1; k < t.text.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(t.text[k]))) return std::nullopt;
  if (t.text.size() > 4) throw ParseError("index too large", t.pos, t.text);
  return std::make_pair(t.text[0], std::stoi(t.text.substr(1)));
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const GeneratorLookup& lookup) {
  Parser<Polynomial> p(
      text, Polynomial{}, Polynomial::one(),
      [&](Parser<Polynomial>& parser) {
        const Token& t = parser.next();
        auto g = lookup(t.text);
        if (!g) throw ParseError("unknown generator", t.pos, t.text);
        return Polynomial(Monomial::generator(*g));
      },
      [](const Polynomial& x, const Polynomial& y) { return x * y; });
  return p.parse();
}

CoeffElem parse_coefficient(std::string_view text) {
  Parser<CoeffElem> p(
      text, CoeffElem{}, CoeffElem::one(),
      [](Parser<CoeffElem>& parser) {
        const Token& t = parser.next();
        if (t.text == "a") return CoeffElem(CoeffMono::pos(1, 0));
        if (t.text == "u") return CoeffElem(CoeffMono::pos(0, 1));
        if (t.text == "th") {
          parser.expect("[");
          const Token& ti = parser.next();
          int i = to_int(ti);
          parser.expect(",");
          const Token& tj = parser.next();
          int j = to_int(tj);
          parser.expect("]");
          if (j < 2) throw ParseError("theta class needs j >= 2", tj.pos, tj.text);
          return CoeffElem(CoeffMono::neg(i, j));
        }
        throw ParseError("unknown coefficient symbol", t.pos, t.text);
      },
      [](const CoeffElem& x, const CoeffElem& y) { return x * y; });
  return p.parse();
}

namespace {

EqElement eq_product(const EqElement& x, const EqElement& y) {
  if (x.terms().size() == 1 && y.terms().size() == 1)
    return EqElement(x.terms()[0] * y.terms()[0]);
  return multiply(normal_form(x), normal_form(y));
}

EqElement eq_atom(Parser<EqElement>& parser, bool allow_coefficients, bool allow_zeta) {
  const Token& t = parser.next();
  if (t.text == "a" || t.text == "u") {
    if (!allow_coefficients) throw ParseError("coefficients not allowed here", t.pos, t.text);
    return EqElement(EqMonomial::coefficient(t.text == "a", t.text == "u"));
  }
  auto named = indexed_name(t);
  if (named) {
    auto [c, i] = *named;
    if (c == 'x' && i >= 1) return EqElement(EqMonomial::xi_gen(i));
    if (c == 't') return EqElement(EqMonomial::tau_gen(i));
    if (c == 'z' && allow_zeta) return psi_generator(i);
  }
  throw ParseError("unknown symbol", t.pos, t.text);
}

}  // namespace

EqElement parse_eq_expression(std::string_view text) {
  Parser<EqElement> p(
      text, EqElement{}, EqElement::one(),
      [](Parser<EqElement>& parser) { return eq_atom(parser, true, true); }, eq_product);
  return p.parse();
}

EqMonomial parse_eq_monomial(std::string_view text) {
  Parser<EqElement> p(
      text, EqElement{}, EqElement::one(),
      [](Parser<EqElement>& parser) { return eq_atom(parser, false, false); },
      [](const EqElement& x, const EqElement& y) {
        std::vector<EqMonomial> out;
        for (const auto& m : x.terms())
          for (const auto& n : y.terms()) out.push_back(m * n);
        return EqElement::from_terms(std::move(out));
      });
  EqElement e = p.parse();
  if (e.terms().size() != 1) throw ParseError("expected a single monomial", 0, std::string(text));
  return e.terms()[0];
}

}  // namespace c2coh
