// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons.

#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chow/derivations.hpp"
#include "chow/models.hpp"
#include "chow/oracle.hpp"
#include "chow/rewrite.hpp"

namespace {

using namespace chow;

const ClassExpr kMu = ClassExpr::generator(gens::mu);
const ClassExpr kAlpha = ClassExpr::generator(gens::alpha);
const ClassExpr kEta = ClassExpr::generator(gens::eta);
const ClassExpr kXi = ClassExpr::generator(gens::first_xi);

// Collects the first few mismatches of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) {
      ++failed_;
      if (notes_.size() < 3) notes_.push_back(what);
    }
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (got == want) {
      expect(true, what);
    } else {
      std::ostringstream os;
      os << what << ": got " << got << ", want " << want;
      expect(false, os.str());
    }
  }
  bool passed() const { return failed_ == 0 && count_ > 0; }
  std::size_t count() const { return count_; }
  std::string summary() const {
    std::string s = std::to_string(count_) + " comparisons";
    if (failed_ > 0) s += ", " + std::to_string(failed_) + " failed";
    for (const auto& n : notes_) s += "; " + n;
    return s;
  }

 private:
  std::size_t count_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> notes_;
};

std::ostream& operator<<(std::ostream& os, const ClassExpr& x) { return os << x.size() << "-term class"; }

std::string params(int g, int n) { return "g=" + std::to_string(g) + ",n=" + std::to_string(n); }
unsigned u(int v) { return static_cast<unsigned>(v); }

void intersection_table(Check& c) {
  for (int n = 1; n <= 4; ++n) {
    const RingModel base = make_base_ring(3, n);
    const Rational nn(n), z(0);
    const std::array<std::array<Rational, 3>, 3> want{{{nn, z, z}, {z, nn, z}, {nn, nn, nn * Rational(2)}}};
    const std::array<ClassExpr, 3> divisors{kMu, kEta, kAlpha};
    const std::array<TestCurve, 3> curves{TestCurve::mu_star, TestCurve::eta_star, TestCurve::delta_star};
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t k = 0; k < 3; ++k) {
        c.equal(pair_with_curve(base, divisors[k], curves[r]), want[r][k],
                "n=" + std::to_string(n) + " entry " + std::to_string(r) + std::to_string(k));
      }
    }
    c.equal(ns_generation_check(base), std::size_t{3}, "rank n=" + std::to_string(n));
  }
}

void shift_family(Check& c) {
  for (int N = -5; N <= 5; ++N) {
    const ClassExpr mu_n = kMu + kAlpha * Rational(N) + kEta * Rational(N * N);
    c.equal(shift_pullback(kMu, N), mu_n, "s^N*(mu) N=" + std::to_string(N));
    for (int g = 2; g <= 8; ++g) {
      for (int n = 1; n <= 4; ++n) {
        const RingModel base = make_base_ring(g, n);
        c.equal(evaluate_top_number(base, base.pow(mu_n, u(g))), Rational(0),
                "mu_N^g " + params(g, n) + ",N=" + std::to_string(N));
      }
    }
  }
}

void theta_solver(Check& c) {
  for (int g = 2; g <= 10; ++g) {
    for (int n = 1; n <= 4; ++n) {
      const ThetaSolution sol = solve_theta_coefficients(g, n);
      c.equal(sol.c_xi, Rational(1), "c_xi " + params(g, n));
      c.equal(sol.c_mu, Rational(1), "c_mu " + params(g, n));
      c.equal(sol.c_alpha, Rational(1, 2), "c_alpha " + params(g, n));
      c.equal(sol.c_eta, Rational(1, 4), "c_eta " + params(g, n));
      c.expect(sol.gluing_residual.is_zero() && sol.vanishing_residual.is_zero(), "residuals " + params(g, n));
      const RingModel bundle = make_poincare_ring(g, n);
      const ClassExpr d = theta_class(bundle);
      c.equal(restrict_section(bundle, d, Section::zero),
              shift_pullback(restrict_section(bundle, d, Section::infinity), 1), "gluing " + params(g, n));
    }
  }
}

void vanishing_on_sections(Check& c) {
  for (int g = 2; g <= 10; ++g) {
    for (int n = 1; n <= 4; ++n) {
      const RingModel bundle = make_poincare_ring(g, n);
      const RingModel base = base_of(bundle);
      const ClassExpr d = theta_class(bundle);
      for (Section s : {Section::zero, Section::infinity}) {
        c.equal(evaluate_top_number(base, base.pow(restrict_section(bundle, d, s), u(g))), Rational(0),
                std::string(s == Section::zero ? "P0 " : "Pinf ") + params(g, n));
      }
    }
  }
}

void trick(Check& c) {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  std::vector<std::pair<Rational, Rational>> pairs;
  for (int i = 0; i < 50; ++i) pairs.emplace_back(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
  for (int g = 2; g <= 10; ++g) {
    const RingModel bundle = make_poincare_ring(g, 1);
    const Rational closed_scale = -(factorial(u(g + 1)) / Rational(3));
    for (const auto& [a, b] : pairs) {
      const ClassExpr linear = kXi + kMu * a + kAlpha * b;
      const Rational expanded = evaluate_top_number(bundle, bundle.pow(linear, u(g + 1)));
      const Rational closed = closed_scale * pow(a, u(g - 2)) * (pow(b, 3) - pow(b - Rational(1), 3));
      c.equal(expanded, closed, "g=" + std::to_string(g) + ",a=" + a.str() + ",b=" + b.str());
      c.equal(trick_T(a, b, g, 1), closed, "trick_T g=" + std::to_string(g));
    }
  }
}

void mumford(Check& c) {
  for (int g = 2; g <= 12; ++g) {
    for (int n = 1; n <= 4; ++n) {
      const Rational want = Rational(n) * factorial(u(g + 1)) / Rational(6);
      const DerivedNumber value = mumford_boundary_number(g, n);
      c.equal(value.computed, want, "R(f) " + params(g, n));
      const BoundaryDecomposition parts = mumford_decomposition(g, n);
      c.equal(parts.eta_term, Rational(n) * factorial(u(g + 1)) / Rational(4), "eta term " + params(g, n));
      c.equal(parts.trick_term, trick_T(Rational(1), Rational(1, 2), g, n), "T term " + params(g, n));
      c.equal(parts.eta_term + parts.trick_term, want, "sum " + params(g, n));
    }
  }
}

void level_branch(Check& c) {
  for (int g = 2; g <= 8; ++g) {
    for (int n = 1; n <= 3; ++n) {
      for (int m = 1; m <= 5; ++m) {
        const std::string p = params(g, n) + ",m=" + std::to_string(m);
        const Rational want = pow(Rational(m), u(g + 1)) * Rational(n) * factorial(u(g + 1)) / Rational(6);
        const DerivedNumber value = level_branch_number(g, n, m);
        c.equal(value.computed, want, p);
        c.equal(value.computed, Rational(m) * level_component_number(g, n, m, 0), "m x single " + p);
      }
    }
  }
}

void chern(Check& c) {
  for (int g = 2; g <= 8; ++g) {
    const RingModel bundle = make_poincare_ring(g, 1);
    const ChernExpansion e = chern_relative_tangent(bundle);
    const std::string p = "g=" + std::to_string(g);
    c.equal(e.reduced_parts.at(1), kXi * Rational(2) + kAlpha, "degree-1 " + p);
    c.expect(e.reduced_parts.at(2).is_zero(), "degree-2 vanishes " + p);
    c.equal(e.reduced_parts.at(1),
            section_class(bundle, Section::zero) + section_class(bundle, Section::infinity), "P0+Pinf " + p);
  }
}

void rewrite_soundness(Check& c) {
  std::mt19937_64 rng(314);
  const std::vector<RingModel> models{make_base_ring(5, 2), make_poincare_ring(5, 2), make_level_ring(4, 2, 3)};
  for (const auto& model : models) {
    c.expect(check_local_confluence(model.system()).passed(), "confluence " + model.descriptor());
    for (int i = 0; i < 500; ++i) {
      const ClassExpr x = random_class(model, rng, 6, model.dimension() + 1, true);
      const ClassExpr nf = model.normal_form(x);
      ReductionOptions shuffled;
      shuffled.chooser = [&rng](std::span<const std::size_t> cand) {
        return std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(rng);
      };
      c.expect(normal_form(x, model.system(), shuffled) == nf, "order " + model.descriptor());
      c.expect(model.normal_form(nf) == nf, "idempotent " + model.descriptor());
    }
  }
}

void oracle_equivalence(Check& c) {
  std::mt19937_64 rng(1618);
  for (int g = 2; g <= 6; ++g) {
    const std::vector<RingModel> models{make_base_ring(g, 2), make_poincare_ring(g, 2), make_level_ring(g, 2, 3)};
    for (const auto& model : models) {
      for (int i = 0; i < 200; ++i) {
        const auto factors = random_top_factors(model, rng);
        ClassExpr product = ClassExpr::one();
        for (const auto& f : factors) product = reduced_mul(product, f, model.system());
        c.equal(brute_force_oracle(model, factors, rng()), evaluate_top_number(model, product),
                model.descriptor() + " sample " + std::to_string(i));
      }
    }
  }
}

void performance(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  const DerivedNumber value = mumford_boundary_number(64, 1);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(value.matches(), "g=64 value");
  std::ostringstream os;
  os << "g=64 took " << seconds << " s";
  c.expect(seconds < 1.0, os.str());
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"1 intersection table and NS rank", intersection_table},
      {"2 shift family and mu_N^g = 0", shift_family},
      {"3 theta coefficients and gluing", theta_solver},
      {"4 theta vanishes on both sections", vanishing_on_sections},
      {"5 trick T closed form", trick},
      {"6 boundary number n(g+1)!/6", mumford},
      {"7 level-m branch number", level_branch},
      {"8 relative tangent Chern cancellation", chern},
      {"9 rewrite confluence, order independence, idempotence", rewrite_soundness},
      {"10 brute-force oracle agreement", oracle_equivalence},
      {"11 boundary number at g=64 under 1 s", performance},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Check check;
    try {
      fn(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (check.passed() ? "PASS  " : "FAIL  ") << name << "  (" << check.summary() << ")\n";
    if (!check.passed()) ++failures;
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failures) << "/" << criteria.size()
            << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
