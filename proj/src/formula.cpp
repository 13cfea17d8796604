#include "glat/formula.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace glat {

struct Formula::Node {
  enum Kind { Number, Variable, Neg, Add, Sub, Mul, Div, Pow, Gcd, Binom, Prod } kind;
  Rational value;
  std::string name;
  std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using NodePtr = std::shared_ptr<const Formula::Node>;

NodePtr make(Formula::Node::Kind k, std::vector<NodePtr> args, std::string name = {}, Rational value = 0) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = k;
  n->args = std::move(args);
  n->name = std::move(name);
  n->value = value;
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodePtr parse() {
    NodePtr n = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw UnknownFormula("formula \"" + s_ + "\": " + msg + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  NodePtr expr() {
    NodePtr n = term();
    while (true) {
      if (accept('+')) n = make(Formula::Node::Add, {n, term()});
      else if (accept('-')) n = make(Formula::Node::Sub, {n, term()});
      else return n;
    }
  }

  NodePtr term() {
    NodePtr n = unary();
    while (true) {
      if (accept('*')) n = make(Formula::Node::Mul, {n, unary()});
      else if (accept('/')) n = make(Formula::Node::Div, {n, unary()});
      else return n;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Formula::Node::Neg, {unary()});
    NodePtr base = primary();
    if (accept('^')) return make(Formula::Node::Pow, {base, unary()});
    return base;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (accept('(')) {
      NodePtr n = expr();
      expect(')');
      return n;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return make(Formula::Node::Number, {}, {}, Rational(BigInt(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string word = s_.substr(start, pos_ - start);
      if (!accept('(')) return make(Formula::Node::Variable, {}, word);
      if (word == "gcd" || word == "binom") {
        NodePtr a = expr();
        expect(',');
        NodePtr b = expr();
        expect(')');
        return make(word == "gcd" ? Formula::Node::Gcd : Formula::Node::Binom, {a, b});
      }
      if (word == "prod") {
        skip();
        const std::size_t vstart = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string var = s_.substr(vstart, pos_ - vstart);
        if (var.empty()) fail("prod needs an index variable");
        expect(',');
        NodePtr lo = expr();
        expect(',');
        NodePtr hi = expr();
        expect(',');
        NodePtr body = expr();
        expect(')');
        return make(Formula::Node::Prod, {lo, hi, body}, var);
      }
      fail("unknown function " + word);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

BigInt as_integer(const Rational& x, const std::string& what) {
  if (x.get_den() != 1) throw UnknownFormula(what + " must be an integer");
  return x.get_num();
}

Rational eval(const Formula::Node& n, Bindings& vars) {
  using K = Formula::Node::Kind;
  switch (n.kind) {
    case K::Number:
      return n.value;
    case K::Variable: {
      auto it = vars.find(n.name);
      if (it == vars.end()) throw UnknownFormula("unbound variable " + n.name);
      return it->second;
    }
    case K::Neg:
      return -eval(*n.args[0], vars);
    case K::Add:
      return eval(*n.args[0], vars) + eval(*n.args[1], vars);
    case K::Sub:
      return eval(*n.args[0], vars) - eval(*n.args[1], vars);
    case K::Mul:
      return eval(*n.args[0], vars) * eval(*n.args[1], vars);
    case K::Div: {
      const Rational d = eval(*n.args[1], vars);
      if (d == 0) throw UnknownFormula("division by zero");
      return eval(*n.args[0], vars) / d;
    }
    case K::Pow: {
      const Rational base = eval(*n.args[0], vars);
      const Rational e = eval(*n.args[1], vars);
      if (e == Rational(1, 2)) {
        BigInt num, den;
        if (!mpz_perfect_square_p(base.get_num_mpz_t()) || !mpz_perfect_square_p(base.get_den_mpz_t()) || base < 0)
          throw UnknownFormula("square root of a non-square");
        mpz_sqrt(num.get_mpz_t(), base.get_num_mpz_t());
        mpz_sqrt(den.get_mpz_t(), base.get_den_mpz_t());
        return Rational(num, den);
      }
      const BigInt k = as_integer(e, "exponent");
      if (!k.fits_slong_p()) throw UnknownFormula("exponent out of range");
      const long kk = k.get_si();
      if (kk < 0 && base == 0) throw UnknownFormula("division by zero");
      const unsigned long ak = static_cast<unsigned long>(kk < 0 ? -kk : kk);
      BigInt num, den;
      mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), ak);
      mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), ak);
      Rational r(num, den);
      r.canonicalize();
      return kk < 0 ? Rational(1) / r : r;
    }
    case K::Gcd: {
      BigInt g;
      const BigInt a = as_integer(eval(*n.args[0], vars), "gcd argument");
      const BigInt b = as_integer(eval(*n.args[1], vars), "gcd argument");
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      return Rational(g);
    }
    case K::Binom: {
      const BigInt a = as_integer(eval(*n.args[0], vars), "binom argument");
      const BigInt b = as_integer(eval(*n.args[1], vars), "binom argument");
      if (b < 0 || !b.fits_ulong_p()) return 0;
      BigInt r;
      mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), b.get_ui());
      return Rational(r);
    }
    case K::Prod: {
      const BigInt lo = as_integer(eval(*n.args[0], vars), "prod bound");
      const BigInt hi = as_integer(eval(*n.args[1], vars), "prod bound");
      const auto saved = vars.find(n.name) == vars.end() ? std::optional<Rational>() : vars[n.name];
      Rational acc = 1;
      for (BigInt i = lo; i <= hi; ++i) {
        vars[n.name] = Rational(i);
        acc *= eval(*n.args[2], vars);
      }
      if (saved) vars[n.name] = *saved;
      else vars.erase(n.name);
      return acc;
    }
  }
  throw UnknownFormula("unreachable");
}

}  // namespace

Formula::Formula(const std::string& text) : text_(text), root_(Parser(text_).parse()) {}

Rational Formula::evaluate(const Bindings& vars) const {
  Bindings scope = vars;
  return eval(*root_, scope);
}

BigInt ceil_rational(const Rational& x) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

BigInt floor_rational(const Rational& x) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

}  // namespace glat
