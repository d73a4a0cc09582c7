#include "chow/rewrite.hpp"

#include <algorithm>

#include "chow/errors.hpp"

namespace chow {

bool termination_less(const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto i = fa.rbegin();
  auto j = fb.rbegin();
  while (i != fa.rend() && j != fb.rend()) {
    if (i->first != j->first) return i->first < j->first;
    if (i->second != j->second) return i->second < j->second;
    ++i;
    ++j;
  }
  return i == fa.rend() && j != fb.rend();
}

RewriteSystem::RewriteSystem(GeneratorTable table, std::vector<RewriteRule> rules,
                             std::uint32_t dimension)
    : table_(std::move(table)), rules_(std::move(rules)), dimension_(dimension) {
  for (const auto& rule : rules_) {
    const std::string tag = rule.label.empty() ? render(rule.pattern, table_) : rule.label;
    if (rule.pattern.is_one()) throw RuleError("rule '" + tag + "' has an empty pattern");
    table_.require_contains(rule.pattern);
    for (const auto& [id, e] : rule.pattern.factors()) {
      if (table_[id].kind != GeneratorKind::geometric) {
        throw RuleError("rule '" + tag + "' mentions unknown '" + table_[id].name + "'");
      }
    }
    const auto degree = table_.degree(rule.pattern);
    for (const auto& [m, c] : rule.replacement.terms()) {
      table_.require_contains(m);
      if (table_.degree(m) != degree) throw RuleError("rule '" + tag + "' is not homogeneous");
      if (!termination_less(m, rule.pattern)) {
        throw RuleError("rule '" + tag + "' does not decrease the termination order");
      }
    }
  }
}

namespace {

std::vector<std::size_t> applicable_rules(const Monomial& m, const RewriteSystem& sys) {
  std::vector<std::size_t> out;
  const auto& rules = sys.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (rules[i].pattern.divides(m)) out.push_back(i);
  }
  return out;
}

const RewriteRule* first_applicable(const Monomial& m, const RewriteSystem& sys) {
  for (const auto& rule : sys.rules()) {
    if (rule.pattern.divides(m)) return &rule;
  }
  return nullptr;
}

}  // namespace

ClassExpr normal_form(const ClassExpr& x, const RewriteSystem& sys) {
  return normal_form(x, sys, ReductionOptions{});
}

ClassExpr normal_form(const ClassExpr& x, const RewriteSystem& sys, const ReductionOptions& options) {
  const auto& table = sys.table();
  ClassExpr::Terms pending;
  auto push = [&](const Monomial& m, const Rational& c) {
    if (c.is_zero() || table.degree(m) > sys.dimension()) return;
    auto [it, inserted] = pending.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) pending.erase(it);
    }
  };
  for (const auto& [m, c] : x.terms()) {
    table.require_contains(m);
    push(m, c);
  }

  ClassExpr result;
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto node = pending.extract(std::prev(pending.end()));
    const Monomial& m = node.key();
    const Rational& c = node.mapped();

    const RewriteRule* rule = nullptr;
    if (options.chooser) {
      const auto candidates = applicable_rules(m, sys);
      if (!candidates.empty()) {
        const std::size_t pick = options.chooser(candidates);
        rule = &sys.rules().at(candidates.at(pick));
      }
    } else {
      rule = first_applicable(m, sys);
    }

    if (rule == nullptr) {
      result.add_term(m, c);
      continue;
    }
    if (options.max_steps != 0 && steps >= options.max_steps) {
      throw RuleError("reduction exceeded " + std::to_string(options.max_steps) + " steps");
    }
    ++steps;
    const Monomial cofactor = rule->pattern.quotient_of(m);
    for (const auto& [rm, rc] : rule->replacement.terms()) push(cofactor * rm, c * rc);
  }
  if (options.steps_out != nullptr) *options.steps_out = steps;
  return result;
}

ClassExpr reduced_mul(const ClassExpr& a, const ClassExpr& b, const RewriteSystem& sys) {
  return normal_form(a * b, sys);
}

ClassExpr reduced_pow(const ClassExpr& a, unsigned k, const RewriteSystem& sys) {
  ClassExpr result = normal_form(ClassExpr::one(), sys);
  ClassExpr base = normal_form(a, sys);
  while (k > 0) {
    if (k & 1u) result = reduced_mul(result, base, sys);
    k >>= 1u;
    if (k > 0) base = reduced_mul(base, base, sys);
  }
  return result;
}

ClassExpr homogeneous_part(const ClassExpr& x, std::uint32_t d, const GeneratorTable& table) {
  ClassExpr out;
  for (const auto& [m, c] : x.terms()) {
    if (table.degree(m) == d) out.add_term(m, c);
  }
  return out;
}

std::vector<Overlap> ConfluenceReport::failures() const {
  std::vector<Overlap> out;
  std::copy_if(overlaps.begin(), overlaps.end(), std::back_inserter(out),
               [](const Overlap& o) { return !o.joinable(); });
  return out;
}

ConfluenceReport check_local_confluence(const RewriteSystem& sys) {
  ConfluenceReport report;
  const auto& rules = sys.rules();
  auto one_step = [&](const RewriteRule& rule, const Monomial& m) {
    ClassExpr stepped = ClassExpr(rule.pattern.quotient_of(m)) * rule.replacement;
    return normal_form(stepped, sys);
  };
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = i + 1; j < rules.size(); ++j) {
      const auto& pi = rules[i].pattern.factors();
      const auto& pj = rules[j].pattern.factors();
      const bool shares = std::any_of(pi.begin(), pi.end(), [&](const auto& f) {
        return std::any_of(pj.begin(), pj.end(), [&](const auto& h) { return h.first == f.first; });
      });
      if (!shares) continue;
      const Monomial witness = lcm(rules[i].pattern, rules[j].pattern);
      report.overlaps.push_back(
          {i, j, witness, one_step(rules[i], witness), one_step(rules[j], witness)});
    }
  }
  return report;
}

}  // namespace chow
