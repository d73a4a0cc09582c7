#include "chow/derivations.hpp"

#include <algorithm>
#include <set>

#include "chow/errors.hpp"
#include "chow/rewrite.hpp"

namespace chow {

std::map<GenId, Rational> solve_linear_constraints(const std::vector<ClassExpr>& equations,
                                                   const GeneratorTable& table) {
  std::set<GenId> variables;
  for (const auto& eq : equations) {
    for (const auto& [m, c] : eq.terms()) {
      if (m.is_one()) continue;
      if (m.factors().size() != 1 || m.factors().front().second != 1 ||
          table[m.factors().front().first].kind != GeneratorKind::unknown) {
        throw SolverError("constraint term '" + render(m, table) + "' is not linear in the unknowns");
      }
      variables.insert(m.factors().front().first);
    }
  }
  const std::vector<GenId> vars(variables.begin(), variables.end());
  const std::size_t cols = vars.size();

  // Augmented rows [coefficients | rhs].
  std::vector<std::vector<Rational>> rows;
  for (const auto& eq : equations) {
    std::vector<Rational> row(cols + 1);
    for (const auto& [m, c] : eq.terms()) {
      if (m.is_one()) {
        row[cols] -= c;
      } else {
        const auto pos = std::lower_bound(vars.begin(), vars.end(), m.factors().front().first) - vars.begin();
        row[static_cast<std::size_t>(pos)] += c;
      }
    }
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational lead = rows[rank][col];
    for (auto& v : rows[rank]) v /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const Rational factor = rows[r][col];
      for (std::size_t k = 0; k <= cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (!rows[r][cols].is_zero()) throw SolverError("inconsistent constraint system: 0 = " + rows[r][cols].str());
  }

  std::map<GenId, Rational> solution;
  for (std::size_t r = 0; r < rank; ++r) {
    bool determined = true;
    for (std::size_t k = 0; k < cols; ++k) {
      if (k != pivot_cols[r] && !rows[r][k].is_zero()) determined = false;
    }
    if (determined) solution.emplace(vars[pivot_cols[r]], rows[r][cols]);
  }
  return solution;
}

namespace {

std::map<GenId, ClassExpr> as_images(const std::map<GenId, Rational>& values) {
  std::map<GenId, ClassExpr> out;
  for (const auto& [id, v] : values) out.emplace(id, ClassExpr(v));
  return out;
}

Rational require(const std::map<GenId, Rational>& values, GenId id, const GeneratorTable& table) {
  auto it = values.find(id);
  if (it == values.end()) throw SolverError("constraints leave '" + table[id].name + "' undetermined");
  return it->second;
}

}  // namespace

ThetaSolution solve_theta_coefficients(int g, int n) {
  const RingModel bundle = make_poincare_ring(g, n);
  const RingModel base = base_of(bundle);
  const auto& table = bundle.generators();
  auto gen = [](GenId id) { return ClassExpr::generator(id); };

  const ClassExpr generic = gen(gens::c_xi) * gen(bundle.xi()) + gen(gens::c_mu) * gen(gens::mu) +
                            gen(gens::c_alpha) * gen(gens::alpha) + gen(gens::c_eta) * gen(gens::eta);
  ThetaSolution sol;
  sol.c_xi = Rational(1);
  const ClassExpr divisor = substitute(generic, {{gens::c_xi, ClassExpr(sol.c_xi)}});

  const ClassExpr on_zero = restrict_section(bundle, divisor, Section::zero);
  const ClassExpr on_infinity = restrict_section(bundle, divisor, Section::infinity);
  const ClassExpr gluing = on_zero - shift_pullback(on_infinity, 1);

  for (const auto& [m, c] : gluing.terms()) {
    sol.gluing_equations[table.geometric_part(m)].add_term(table.unknown_part(m), c);
  }
  std::vector<ClassExpr> equations;
  for (const auto& [m, eq] : sol.gluing_equations) equations.push_back(eq);
  const auto first = solve_linear_constraints(equations, table);
  sol.c_mu = require(first, gens::c_mu, table);
  sol.c_alpha = require(first, gens::c_alpha, table);

  const ClassExpr partially = substitute(on_infinity, as_images(first));
  sol.vanishing_equation = evaluate_top(base, base.pow(partially, static_cast<unsigned>(g)));
  auto second = solve_linear_constraints({sol.vanishing_equation}, table);
  sol.c_eta = require(second, gens::c_eta, table);

  const std::map<GenId, ClassExpr> all = {{gens::c_mu, ClassExpr(sol.c_mu)},
                                          {gens::c_alpha, ClassExpr(sol.c_alpha)},
                                          {gens::c_eta, ClassExpr(sol.c_eta)}};
  sol.gluing_residual = substitute(gluing, all);
  sol.vanishing_residual = substitute(sol.vanishing_equation, all);
  if (!sol.gluing_residual.is_zero() || !sol.vanishing_residual.is_zero()) {
    throw SolverError("theta constraints have non-zero residuals");
  }
  return sol;
}

ClassExpr theta_class(const RingModel& model, int component) {
  if (model.kind() == ModelKind::base) {
    throw ModelError("theta class lives on a bundle model, got " + model.descriptor());
  }
  const ThetaSolution sol = solve_theta_coefficients(model.g(), model.n());
  const Rational scale(model.m());
  ClassExpr out = ClassExpr::generator(model.xi(component)) * sol.c_xi;
  out += ClassExpr::generator(gens::mu) * (scale * sol.c_mu);
  out += ClassExpr::generator(gens::alpha) * (scale * sol.c_alpha);
  out += ClassExpr::generator(gens::eta) * (scale * sol.c_eta);
  return out;
}

Rational trick_T(const Rational& a, const Rational& b, int g, int n) {
  if (g < 2) throw ModelError("trick T needs g >= 2");
  const auto ug = static_cast<unsigned>(g);
  const Rational cubic = pow(b, 3) - pow(b - Rational(1), 3);
  return -(Rational(n) * factorial(ug + 1) / Rational(3)) * pow(a, ug - 2) * cubic;
}

Rational trick_T_expanded(const Rational& a, const Rational& b, int g, int n) {
  const RingModel bundle = make_poincare_ring(g, n);
  const ClassExpr linear = ClassExpr::generator(bundle.xi()) + ClassExpr::generator(gens::mu) * a +
                           ClassExpr::generator(gens::alpha) * b;
  return evaluate_top_number(bundle, bundle.pow(linear, static_cast<unsigned>(g + 1)));
}

DerivedNumber mumford_boundary_number(int g, int n) {
  const RingModel bundle = make_poincare_ring(g, n);
  const ClassExpr d = theta_class(bundle);
  DerivedNumber out;
  out.computed = evaluate_top_number(bundle, bundle.pow(d, static_cast<unsigned>(g + 1)));
  out.expected = Rational(n) * factorial(static_cast<unsigned>(g + 1)) / Rational(6);
  return out;
}

BoundaryDecomposition mumford_decomposition(int g, int n) {
  const RingModel bundle = make_poincare_ring(g, n);
  const ClassExpr d = theta_class(bundle);
  const ClassExpr eta_part(Monomial::generator(gens::eta), d.coefficient(Monomial::generator(gens::eta)));
  const ClassExpr rest = d - eta_part;
  const auto ug = static_cast<unsigned>(g);
  BoundaryDecomposition out;
  out.eta_term = evaluate_top_number(
      bundle, reduced_mul(eta_part * Rational(g + 1), bundle.pow(rest, ug), bundle.system()));
  out.trick_term = evaluate_top_number(bundle, bundle.pow(rest, ug + 1));
  return out;
}

Rational level_component_number(int g, int n, int m, int component) {
  const RingModel level = make_level_ring(g, n, m);
  return evaluate_top_number(level, level.pow(theta_class(level, component), static_cast<unsigned>(g + 1)));
}

DerivedNumber level_branch_number(int g, int n, int m) {
  const RingModel level = make_level_ring(g, n, m);
  const ThetaSolution sol = solve_theta_coefficients(g, n);
  ClassExpr sum;
  for (int i = 0; i < m; ++i) {
    ClassExpr d = ClassExpr::generator(level.xi(i)) * sol.c_xi;
    d += ClassExpr::generator(gens::mu) * (Rational(m) * sol.c_mu);
    d += ClassExpr::generator(gens::alpha) * (Rational(m) * sol.c_alpha);
    d += ClassExpr::generator(gens::eta) * (Rational(m) * sol.c_eta);
    sum += level.pow(d, static_cast<unsigned>(g + 1));
  }
  DerivedNumber out;
  out.computed = evaluate_top_number(level, sum);
  out.expected = pow(Rational(m), static_cast<unsigned>(g + 1)) * Rational(n) *
                 factorial(static_cast<unsigned>(g + 1)) / Rational(6);
  return out;
}

ChernExpansion chern_relative_tangent(const RingModel& model) {
  if (model.kind() != ModelKind::poincare) {
    throw ModelError("relative tangent Chern class needs a poincare model, got " + model.descriptor());
  }
  const auto& table = model.generators();
  const auto top = model.dimension();
  const ClassExpr xi = ClassExpr::generator(model.xi());
  const ClassExpr alpha = ClassExpr::generator(gens::alpha);

  // c_{t/(1+xi t)}(P) = 1 + alpha * sum_k (-xi)^k, truncated at the dimension.
  ClassExpr twisted = ClassExpr::one();
  ClassExpr power = ClassExpr::one();
  for (std::uint32_t k = 0; k + 1 <= top; ++k) {
    twisted += alpha * power;
    power = power * (-xi);
  }
  const ClassExpr product = pow(ClassExpr::one() + xi, 2) * twisted;

  ChernExpansion out;
  for (std::uint32_t d = 0; d <= top; ++d) {
    ClassExpr raw = homogeneous_part(product, d, table);
    ClassExpr reduced = model.normal_form(raw);
    if (d >= 2 && !reduced.is_zero()) {
      throw ModelError("degree-" + std::to_string(d) + " Chern part " + model.render(reduced) +
                       " does not vanish modulo xi^2 = -alpha*xi");
    }
    out.total += reduced;
    out.raw_parts.push_back(std::move(raw));
    out.reduced_parts.push_back(std::move(reduced));
  }
  return out;
}

}  // namespace chow
