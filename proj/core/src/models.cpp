#include "chow/models.hpp"

#include <algorithm>
#include <cstdlib>

#include "chow/errors.hpp"

namespace chow {

namespace {

void check_params(int g, int n) {
  if (g < 2) throw ModelError("g must be at least 2 (got " + std::to_string(g) + ")");
  if (n < 1) throw ModelError("n must be at least 1 (got " + std::to_string(n) + ")");
}

std::vector<GeneratorEntry> base_entries() {
  using K = GeneratorKind;
  return {
      {"mu", 1, K::geometric, std::nullopt},     {"alpha", 1, K::geometric, std::nullopt},
      {"eta", 1, K::geometric, std::nullopt},    {"c_xi", 0, K::unknown, std::nullopt},
      {"c_mu", 0, K::unknown, std::nullopt},     {"c_alpha", 0, K::unknown, std::nullopt},
      {"c_eta", 0, K::unknown, std::nullopt},
  };
}

std::vector<RewriteRule> base_rules() {
  return {
      {Monomial::generator(gens::eta, 2), ClassExpr(), "eta^2 = 0"},
      {Monomial{{gens::alpha, 1}, {gens::eta, 1}}, ClassExpr(), "alpha*eta = 0"},
  };
}

RewriteSystem checked(RewriteSystem sys, std::string_view what) {
  const auto report = check_local_confluence(sys);
  if (!report.passed()) {
    const auto bad = report.failures().front();
    throw ModelError(std::string(what) + " rewrite system is not locally confluent at " +
                     render(bad.witness, sys.table()));
  }
  return sys;
}

}  // namespace

RingModel make_base_ring(int g, int n) {
  check_params(g, n);
  RewriteSystem sys(GeneratorTable(base_entries()), base_rules(), static_cast<std::uint32_t>(g));
  return RingModel(ModelKind::base, g, n, 1, checked(std::move(sys), "base"));
}

RingModel make_poincare_ring(int g, int n) {
  check_params(g, n);
  auto entries = base_entries();
  entries.push_back({"xi", 1, GeneratorKind::geometric, 0});
  auto rules = base_rules();
  const GenId xi = gens::first_xi;
  rules.push_back({Monomial::generator(xi, 2),
                   -ClassExpr(Monomial{{gens::alpha, 1}, {xi, 1}}), "xi^2 = -alpha*xi"});
  RewriteSystem sys(GeneratorTable(std::move(entries)), std::move(rules),
                    static_cast<std::uint32_t>(g + 1));
  return RingModel(ModelKind::poincare, g, n, 1, checked(std::move(sys), "poincare"));
}

RingModel make_level_ring(int g, int n, int m) {
  check_params(g, n);
  if (m < 1) throw ModelError("m must be at least 1 (got " + std::to_string(m) + ")");
  auto entries = base_entries();
  for (int i = 0; i < m; ++i) {
    entries.push_back({"xi_" + std::to_string(i), 1, GeneratorKind::geometric, i});
  }
  auto rules = base_rules();
  for (int i = 0; i < m; ++i) {
    const auto xi = static_cast<GenId>(gens::first_xi + i);
    const std::string name = "xi_" + std::to_string(i);
    // alpha' = m*alpha on every component.
    rules.push_back({Monomial::generator(xi, 2),
                     ClassExpr(Monomial{{gens::alpha, 1}, {xi, 1}}, Rational(-m)),
                     name + "^2 = -" + std::to_string(m) + "*alpha*" + name});
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const auto xi = static_cast<GenId>(gens::first_xi + i);
      const auto xj = static_cast<GenId>(gens::first_xi + j);
      rules.push_back({Monomial{{xi, 1}, {xj, 1}}, ClassExpr(),
                       "xi_" + std::to_string(i) + "*xi_" + std::to_string(j) + " = 0"});
    }
  }
  RewriteSystem sys(GeneratorTable(std::move(entries)), std::move(rules),
                    static_cast<std::uint32_t>(g + 1));
  return RingModel(ModelKind::level, g, n, m, checked(std::move(sys), "level"));
}

RingModel base_of(const RingModel& model) { return make_base_ring(model.g(), model.n()); }

int RingModel::components() const {
  switch (kind_) {
    case ModelKind::base:
      return 0;
    case ModelKind::poincare:
      return 1;
    case ModelKind::level:
      return m_;
  }
  return 0;
}

GenId RingModel::xi(int component) const {
  if (component < 0 || component >= components()) {
    throw ModelError("model " + descriptor() + " has no bundle component " + std::to_string(component));
  }
  return static_cast<GenId>(gens::first_xi + component);
}

ClassExpr RingModel::gen(std::string_view name) const { return ClassExpr::generator(generators().id(name)); }

std::string RingModel::descriptor() const {
  std::string out = std::string(to_string(kind_)) + "(g=" + std::to_string(g_) + ",n=" + std::to_string(n_);
  if (kind_ == ModelKind::level) out += ",m=" + std::to_string(m_);
  return out + ")";
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// Top-degree functional on CH^g(B x C):
//   mu^{g-1} eta   -> n (g-1)!
//   mu^{g-2} alpha^2 -> -2 n (g-2)!
// and every other normal-form monomial -> 0.
Rational base_top_value(int g, int n, const Monomial& m) {
  const auto e_mu = m.exponent(gens::mu);
  const auto e_alpha = m.exponent(gens::alpha);
  const auto e_eta = m.exponent(gens::eta);
  const auto ug = static_cast<std::uint32_t>(g);
  if (e_mu + e_alpha + e_eta != m.total_exponent()) return Rational(0);
  if (e_eta == 1 && e_alpha == 0 && e_mu == ug - 1) return Rational(n) * factorial(ug - 1);
  if (e_eta == 0 && e_alpha == 2 && e_mu == ug - 2) return Rational(-2 * n) * factorial(ug - 2);
  return Rational(0);
}

}  // namespace

ClassExpr evaluate_top(const RingModel& model, const ClassExpr& x) {
  const auto& table = model.generators();
  for (const auto& [m, c] : x.terms()) table.require_contains(m);
  const ClassExpr reduced = model.normal_form(x);

  ClassExpr out;
  for (const auto& [m, c] : reduced.terms()) {
    const auto degree = table.degree(m);
    if (degree != model.dimension()) {
      throw DegreeError("evaluate_top on " + model.descriptor() + " needs degree " +
                        std::to_string(model.dimension()) + ", got term '" + render(m, table) +
                        "' of degree " + std::to_string(degree));
    }
    const Monomial geometric = table.geometric_part(m);
    const Monomial unknowns = table.unknown_part(m);

    Monomial on_base = geometric;
    if (model.kind() != ModelKind::base) {
      // Normal forms carry at most one fiber factor; pullback classes have
      // zero top intersection, and xi * P evaluates as P on B x C.
      int fiber_power = 0;
      std::vector<Monomial::Factor> rest;
      for (const auto& f : geometric.factors()) {
        if (f.first >= gens::first_xi) {
          fiber_power += static_cast<int>(f.second);
        } else {
          rest.push_back(f);
        }
      }
      if (fiber_power == 0) continue;
      if (fiber_power > 1) {
        throw ModelError("monomial '" + render(m, table) + "' survived reduction with several fiber factors");
      }
      on_base = Monomial(std::move(rest));
    }
    out.add_term(unknowns, c * base_top_value(model.g(), model.n(), on_base));
  }
  return out;
}

Rational evaluate_top_number(const RingModel& model, const ClassExpr& x) {
  const ClassExpr value = evaluate_top(model, x);
  if (value.is_zero()) return Rational(0);
  if (value.size() != 1 || !value.terms().begin()->first.is_one()) {
    throw DegreeError("top evaluation still depends on unknowns: " + model.render(value));
  }
  return value.terms().begin()->second;
}

// ---------------------------------------------------------------------------
// Sections, shift, pairing

ClassExpr section_class(const RingModel& model, Section which, int component) {
  const ClassExpr fiber = ClassExpr::generator(model.xi(component));
  if (which == Section::infinity) return fiber;
  return fiber + ClassExpr::generator(gens::alpha) * Rational(model.m());
}

ClassExpr restrict_section(const RingModel& model, const ClassExpr& x, Section which) {
  if (model.kind() != ModelKind::poincare) {
    throw ModelError("section restriction needs a poincare model, got " + model.descriptor());
  }
  const auto& table = model.generators();
  const ClassExpr reduced = model.normal_form(x);
  for (const auto& [m, c] : reduced.terms()) {
    if (table.degree(m) != 1) {
      throw DegreeError("section restriction is defined on divisor classes; term '" + render(m, table) +
                        "' has degree " + std::to_string(table.degree(m)));
    }
  }
  const ClassExpr image = which == Section::zero ? ClassExpr() : -ClassExpr::generator(gens::alpha);
  return substitute(reduced, {{model.xi(0), image}});
}

namespace {

std::map<GenId, ClassExpr> shift_images(bool inverse) {
  const ClassExpr mu = ClassExpr::generator(gens::mu);
  const ClassExpr alpha = ClassExpr::generator(gens::alpha);
  const ClassExpr eta = ClassExpr::generator(gens::eta);
  if (!inverse) return {{gens::mu, mu + alpha + eta}, {gens::alpha, alpha + eta * Rational(2)}};
  return {{gens::mu, mu - alpha + eta}, {gens::alpha, alpha - eta * Rational(2)}};
}

}  // namespace

ClassExpr shift_pullback(const ClassExpr& x, int N) {
  for (const auto& [m, c] : x.terms()) {
    if (!m.is_one() && m.factors().back().first >= gens::first_xi) {
      throw AlphabetError("shift pullback acts on classes of B x C; got a fiber generator");
    }
  }
  const auto images = shift_images(N < 0);
  ClassExpr out = x;
  for (int step = 0; step < std::abs(N); ++step) out = substitute(out, images);
  return out;
}

CurvePairing curve_pairing(const RingModel& model) {
  const Rational n(model.n());
  const Rational z(0);
  return CurvePairing{{{{n, z, z}, {z, n, z}, {n, n, n * Rational(2)}}}};
}

Rational pair_with_curve(const RingModel& model, const ClassExpr& x, TestCurve curve) {
  const auto pairing = curve_pairing(model);
  const auto& row = pairing.matrix[static_cast<std::size_t>(curve)];
  Rational out;
  for (const auto& [m, c] : x.terms()) {
    if (m.factors().size() != 1 || m.factors().front().second != 1) {
      throw DegreeError("curve pairing needs a divisor class over mu, eta, alpha");
    }
    switch (m.factors().front().first) {
      case gens::mu:
        out += c * row[0];
        break;
      case gens::eta:
        out += c * row[1];
        break;
      case gens::alpha:
        out += c * row[2];
        break;
      default:
        throw AlphabetError("curve pairing is defined on mu, eta, alpha only");
    }
  }
  return out;
}

std::size_t matrix_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                              [col](const auto& r) { return !r[col].is_zero(); });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
    const auto& p = rows[rank];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const Rational factor = rows[r][col] / p[col];
      for (std::size_t k = col; k < cols; ++k) rows[r][k] -= factor * p[k];
    }
    ++rank;
  }
  return rank;
}

std::size_t ns_generation_check(const RingModel& model) {
  const auto pairing = curve_pairing(model);
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : pairing.matrix) rows.emplace_back(r.begin(), r.end());
  return matrix_rank(std::move(rows));
}

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::base:
      return "base";
    case ModelKind::poincare:
      return "poincare";
    case ModelKind::level:
      return "level";
  }
  return "?";
}

std::string_view to_string(TestCurve curve) {
  switch (curve) {
    case TestCurve::mu_star:
      return "mu_star";
    case TestCurve::eta_star:
      return "eta_star";
    case TestCurve::delta_star:
      return "delta_star";
  }
  return "?";
}

}  // namespace chow
