#include "pcurves/poly/parse.hpp"

#include <cctype>
#include <set>

namespace pcurves {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  std::unique_ptr<PolyExprAST> run() {
    auto e = expr();
    skip();
    if (i_ != s_.size()) throw SyntaxError(i_, std::string("unexpected '") + s_[i_] + "'");
    return e;
  }

 private:
  using Node = std::unique_ptr<PolyExprAST>;

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw SyntaxError(i_, std::string("expected '") + c + "'");
    ++i_;
  }
  bool digit_at(std::size_t k) const { return k < s_.size() && std::isdigit(static_cast<unsigned char>(s_[k])); }

  static Node make(PolyExprAST::Kind k, std::size_t pos) {
    auto n = std::make_unique<PolyExprAST>();
    n->kind = k;
    n->pos = pos;
    return n;
  }

  Node expr() {
    Node lhs = term();
    while (true) {
      skip();
      if (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) {
        auto k = s_[i_] == '+' ? PolyExprAST::Kind::Add : PolyExprAST::Kind::Sub;
        Node n = make(k, i_++);
        n->kids.push_back(std::move(lhs));
        n->kids.push_back(term());
        lhs = std::move(n);
      } else {
        return lhs;
      }
    }
  }

  Node term() {
    Node lhs = factor();
    while (peek('*')) {
      Node n = make(PolyExprAST::Kind::Mul, i_++);
      n->kids.push_back(std::move(lhs));
      n->kids.push_back(factor());
      lhs = std::move(n);
    }
    return lhs;
  }

  Node factor() {
    Node b = base();
    if (peek('^')) {
      Node n = make(PolyExprAST::Kind::Pow, i_++);
      skip();
      std::size_t ppos = i_;
      mpz_class p = uint_lit();
      if (p > 256) throw SyntaxError(ppos, "exponent too large");
      n->power = static_cast<unsigned>(p.get_ui());
      n->kids.push_back(std::move(b));
      return n;
    }
    return b;
  }

  mpz_class uint_lit() {
    skip();
    std::size_t start = i_;
    while (digit_at(i_)) ++i_;
    if (start == i_) throw SyntaxError(i_, "expected unsigned integer");
    return mpz_class(s_.substr(start, i_ - start));
  }

  mpz_class int_lit() {
    skip();
    bool neg = false;
    if (i_ < s_.size() && s_[i_] == '-') {
      neg = true;
      ++i_;
    }
    if (!digit_at(i_)) throw SyntaxError(i_, "expected integer");
    mpz_class v = uint_lit();
    return neg ? mpz_class(-v) : v;
  }

  Node base() {
    skip();
    if (i_ >= s_.size()) throw SyntaxError(i_, "unexpected end of input");
    std::size_t pos = i_;
    char c = s_[i_];
    if (c == 'z') {
      if (i_ + 1 < s_.size() && s_[i_ + 1] >= '0' && s_[i_ + 1] <= '2' && !digit_at(i_ + 2)) {
        Node n = make(PolyExprAST::Kind::Var, pos);
        n->var = s_[i_ + 1] - '0';
        i_ += 2;
        return n;
      }
      throw SyntaxError(i_, "unknown variable");
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '-' && digit_at(i_ + 1))) {
      Node n = make(PolyExprAST::Kind::Num, pos);
      n->value = Rational(int_lit());
      return n;
    }
    if (c == '(') {
      // '(' int '/' uint ')' or '(' expr ')'
      std::size_t save = i_;
      ++i_;
      skip();
      if (i_ < s_.size() && (digit_at(i_) || (s_[i_] == '-' && digit_at(i_ + 1)))) {
        std::size_t after_open = i_;
        mpz_class num = int_lit();
        if (peek('/')) {
          ++i_;
          std::size_t dpos = i_;
          mpz_class den = uint_lit();
          if (den == 0) throw SyntaxError(dpos, "zero denominator");
          expect(')');
          Node n = make(PolyExprAST::Kind::Num, pos);
          n->value = Rational(num, den);
          n->value.canonicalize();
          return n;
        }
        i_ = after_open;
      }
      i_ = save + 1;
      Node inner = expr();
      expect(')');
      return inner;
    }
    throw SyntaxError(i_, std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

using Sparse = std::map<Exponent, Rational, GradedLexGreater>;

void add_into(Sparse& a, const Sparse& b, int sign) {
  for (const auto& [e, c] : b) {
    Rational& t = a[e];
    t += sign > 0 ? c : Rational(-c);
    if (t == 0) a.erase(e);
  }
}

Sparse mul(const Sparse& a, const Sparse& b) {
  Sparse r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      Rational& t = r[e];
      t += ca * cb;
      if (t == 0) r.erase(e);
    }
  return r;
}

}  // namespace

std::unique_ptr<PolyExprAST> parse_poly_ast(const std::string& text) { return Parser(text).run(); }

Sparse expand(const PolyExprAST& n) {
  using K = PolyExprAST::Kind;
  switch (n.kind) {
    case K::Num: {
      Sparse r;
      if (n.value != 0) r[{0, 0, 0}] = n.value;
      return r;
    }
    case K::Var: {
      Sparse r;
      Exponent e{0, 0, 0};
      e[n.var] = 1;
      r[e] = 1;
      return r;
    }
    case K::Add:
    case K::Sub: {
      Sparse r = expand(*n.kids[0]);
      add_into(r, expand(*n.kids[1]), n.kind == K::Add ? 1 : -1);
      return r;
    }
    case K::Mul:
      return mul(expand(*n.kids[0]), expand(*n.kids[1]));
    case K::Pow: {
      Sparse b = expand(*n.kids[0]);
      Sparse r;
      r[{0, 0, 0}] = 1;
      for (unsigned k = 0; k < n.power; ++k) r = mul(r, b);
      return r;
    }
  }
  return {};
}

HomPoly parse_poly(const std::string& text) {
  auto ast = parse_poly_ast(text);
  Sparse s = expand(*ast);
  std::set<int> degs;
  for (const auto& [e, c] : s) degs.insert(total_degree(e));
  if (degs.size() > 1) throw NotHomogeneous(std::vector<int>(degs.begin(), degs.end()));
  std::vector<std::pair<Exponent, Rational>> ts(s.begin(), s.end());
  return HomPoly::from_terms(ts);
}

}  // namespace pcurves
