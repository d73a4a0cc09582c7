#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "chow/class_expr.hpp"
#include "chow/models.hpp"
#include "chow/rational.hpp"

namespace chow {

/// Parse tree for class expressions.
///
///   expr     := ['+'|'-'] term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := atom ('^' nat)?
///   atom     := rational | ident | '(' expr ')'
///   rational := int ('/' posint)?
///
/// Identifiers are generator names of the active model or the named
/// constants D, D_0..D_{m-1}, P0, Pinf. Juxtaposition is an error.
struct ExprAst {
  enum class Kind { sum, difference, product, power, negate, rational, identifier };

  Kind kind = Kind::rational;
  std::size_t position = 0;
  std::vector<ExprAst> children;
  unsigned exponent = 0;  // power
  Rational value;         // rational
  std::string name;       // identifier
};

/// Throws ParseError with the offending position.
ExprAst parse_ast(std::string_view src);

enum class LowerMode {
  /// Free ring arithmetic; parse_expr(render(x)) == x.
  free,
  /// Reduce products and powers in the model's ring as they are formed.
  /// Equals normal_form of the free lowering, but stays small for large
  /// powers.
  reduced,
};

/// Throws AlphabetError (as ParseError) for identifiers the model lacks.
ClassExpr lower(const ExprAst& ast, const RingModel& model, LowerMode mode = LowerMode::free);
ClassExpr parse_expr(std::string_view src, const RingModel& model, LowerMode mode = LowerMode::free);

/// "base(g=4,n=1)", "poincare(g=4,n=1)", "level(g=3,n=1,m=2)".
RingModel parse_model_descriptor(std::string_view src);

}  // namespace chow
