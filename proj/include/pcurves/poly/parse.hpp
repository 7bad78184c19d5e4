#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pcurves/poly/hompoly.hpp"

namespace pcurves {

/// Parse tree for the polynomial grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := 'z0' | 'z1' | 'z2' | rational | '(' expr ')'
///   rational := int | '(' int '/' uint ')'
/// where int may carry a leading '-'.
struct PolyExprAST {
  enum class Kind { Add, Sub, Mul, Pow, Num, Var };
  Kind kind = Kind::Num;
  std::vector<std::unique_ptr<PolyExprAST>> kids;
  Rational value;     // Num
  int var = 0;        // Var
  unsigned power = 0; // Pow
  std::size_t pos = 0;
};

std::unique_ptr<PolyExprAST> parse_poly_ast(const std::string& text);

/// Expanded polynomial as a map that may mix degrees.
std::map<Exponent, Rational, GradedLexGreater> expand(const PolyExprAST& ast);

/// Parses and expands; rejects inhomogeneous input with NotHomogeneous.
HomPoly parse_poly(const std::string& text);

}  // namespace pcurves
