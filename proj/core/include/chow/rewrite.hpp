#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "chow/class_expr.hpp"

namespace chow {

/// pattern -> replacement, read as the relation pattern = replacement.
struct RewriteRule {
  Monomial pattern;
  ClassExpr replacement;
  /// Short human-readable tag used in reports, e.g. "xi^2 = -alpha*xi".
  std::string label;
};

/// Monomial rewrite system over a generator table with a top degree.
///
/// Construction validates every rule: patterns mention geometric generators
/// only, replacements are homogeneous of the pattern's degree, and every
/// replacement monomial is strictly smaller than its pattern in the
/// lexicographic order that compares exponents starting from the highest
/// generator id. That order is a well-order, so reduction terminates.
/// Confluence is not checked here; see check_local_confluence.
class RewriteSystem {
 public:
  RewriteSystem(GeneratorTable table, std::vector<RewriteRule> rules, std::uint32_t dimension);

  const GeneratorTable& table() const { return table_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  std::uint32_t dimension() const { return dimension_; }

 private:
  GeneratorTable table_;
  std::vector<RewriteRule> rules_;
  std::uint32_t dimension_;
};

/// Strict order used for the termination check; true iff a < b.
bool termination_less(const Monomial& a, const Monomial& b);

/// Picks one of the applicable rule indices for a monomial.
using RuleChooser = std::function<std::size_t(std::span<const std::size_t> applicable)>;

struct ReductionOptions {
  /// Empty means "first applicable rule".
  RuleChooser chooser;
  /// Abort with RuleError after this many rewrite steps (0 = unbounded).
  std::size_t max_steps = 0;
  /// Filled with the number of rewrite steps performed, if non-null.
  std::size_t* steps_out = nullptr;
};

/// Reduces x modulo the rules, dropping monomials above the dimension.
ClassExpr normal_form(const ClassExpr& x, const RewriteSystem& sys);
ClassExpr normal_form(const ClassExpr& x, const RewriteSystem& sys, const ReductionOptions& options);

/// normal_form(a*b), reducing the product as it is formed.
ClassExpr reduced_mul(const ClassExpr& a, const ClassExpr& b, const RewriteSystem& sys);
/// normal_form(a^k) by repeated squaring with reduction after each product.
ClassExpr reduced_pow(const ClassExpr& a, unsigned k, const RewriteSystem& sys);

/// Terms of geometric degree exactly d.
ClassExpr homogeneous_part(const ClassExpr& x, std::uint32_t d, const GeneratorTable& table);

struct Overlap {
  std::size_t first_rule;
  std::size_t second_rule;
  Monomial witness;  // lcm of the two patterns
  ClassExpr via_first;
  ClassExpr via_second;
  bool joinable() const { return via_first == via_second; }
};

struct ConfluenceReport {
  std::vector<Overlap> overlaps;
  std::vector<Overlap> failures() const;
  bool passed() const { return failures().empty(); }
};

/// Reduces the lcm of every pair of rules sharing a generator in both
/// orders and records whether the results agree.
ConfluenceReport check_local_confluence(const RewriteSystem& sys);

}  // namespace chow
