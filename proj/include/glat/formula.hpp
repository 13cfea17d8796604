#pragma once

#include <map>
#include <memory>
#include <string>

#include <gmpxx.h>

#include "glat/errors.hpp"
#include "glat/int_matrix.hpp"

namespace glat {

using Rational = mpq_class;
using Bindings = std::map<std::string, Rational>;

/// Parsed arithmetic expression over the rationals.
///
/// Grammar: + - * / ^, unary minus, parentheses, integer literals, variables,
/// gcd(a, b), binom(a, b) and prod(var, lo, hi, expr). Exponents must be
/// integers, or 1/2 applied to a perfect square. Parse and evaluation
/// failures throw UnknownFormula.
class Formula {
 public:
  explicit Formula(const std::string& text);

  const std::string& text() const { return text_; }
  Rational evaluate(const Bindings& vars) const;

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

BigInt ceil_rational(const Rational& x);
BigInt floor_rational(const Rational& x);

}  // namespace glat
