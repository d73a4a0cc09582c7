#include <random>

#include <gtest/gtest.h>

#include "chow/errors.hpp"
#include "chow/models.hpp"
#include "chow/oracle.hpp"
#include "chow/rewrite.hpp"

namespace chow {
namespace {

const ClassExpr kMu = ClassExpr::generator(gens::mu);
const ClassExpr kAlpha = ClassExpr::generator(gens::alpha);
const ClassExpr kEta = ClassExpr::generator(gens::eta);
const ClassExpr kXi = ClassExpr::generator(gens::first_xi);

TEST(NormalForm, ZeroSectionTimesInfinitySection) {
  const RingModel model = make_poincare_ring(4, 1);
  EXPECT_TRUE(model.normal_form(kXi * kXi + kAlpha * kXi).is_zero());
}

TEST(NormalForm, XiCubed) {
  const RingModel model = make_poincare_ring(4, 1);
  EXPECT_EQ(model.normal_form(pow(kXi, 3)), kAlpha * kAlpha * kXi);
  // At g = 2 the class is top-degree; the dense oracle agrees.
  const RingModel small = make_poincare_ring(2, 1);
  EXPECT_EQ(brute_force_oracle(small, pow(kXi, 3)), evaluate_top_number(small, kAlpha * kAlpha * kXi));
  EXPECT_EQ(brute_force_oracle(small, pow(kXi, 3)), Rational(-2));
}

TEST(NormalForm, EtaSquaredVanishes) {
  for (int g = 2; g <= 6; ++g) {
    const RingModel base = make_base_ring(g, 2);
    EXPECT_TRUE(base.normal_form(kEta * kEta * pow(kMu, static_cast<unsigned>(g - 2))).is_zero());
  }
}

TEST(NormalForm, TruncatesAboveDimension) {
  const RingModel model = make_poincare_ring(2, 1);
  EXPECT_TRUE(model.normal_form(pow(kXi, 4)).is_zero());
  EXPECT_TRUE(model.normal_form(pow(kMu, 4)).is_zero());
  EXPECT_EQ(model.normal_form(pow(kMu, 3)), pow(kMu, 3));
}

TEST(NormalForm, UnknownsPassThrough) {
  const RingModel model = make_poincare_ring(3, 1);
  const ClassExpr c_eta = ClassExpr::generator(gens::c_eta);
  EXPECT_EQ(model.normal_form(c_eta * kXi * kXi), -(c_eta * kAlpha * kXi));
  EXPECT_TRUE(model.normal_form(c_eta * c_eta * kEta * kEta).is_zero());
}

TEST(LocalConfluence, BaseSystem) {
  const RingModel base = make_base_ring(4, 1);
  const auto report = check_local_confluence(base.system());
  ASSERT_EQ(report.overlaps.size(), 1u);
  EXPECT_EQ(report.overlaps[0].witness, (Monomial{{gens::alpha, 1}, {gens::eta, 2}}));
  EXPECT_TRUE(report.overlaps[0].via_first.is_zero());
  EXPECT_TRUE(report.overlaps[0].via_second.is_zero());
  EXPECT_TRUE(report.passed());
}

TEST(LocalConfluence, PoincareAndLevelSystems) {
  const RingModel bundle = make_poincare_ring(4, 1);
  const auto report = check_local_confluence(bundle.system());
  EXPECT_TRUE(report.passed());
  // xi^2 shares no generator with eta^2 or alpha*eta.
  EXPECT_EQ(report.overlaps.size(), 1u);

  const RingModel level = make_level_ring(3, 1, 3);
  const auto level_report = check_local_confluence(level.system());
  EXPECT_TRUE(level_report.passed());
  EXPECT_GT(level_report.overlaps.size(), 3u);
}

TEST(LocalConfluence, ContradictoryRulesFail) {
  const RingModel bundle = make_poincare_ring(3, 1);
  const Monomial xi2 = Monomial::generator(gens::first_xi, 2);
  RewriteSystem bad(bundle.generators(),
                    {{xi2, ClassExpr(Monomial::generator(gens::mu, 2)), "xi^2 = mu^2"}, {xi2, ClassExpr(), "xi^2 = 0"}},
                    4);
  const auto report = check_local_confluence(bad);
  EXPECT_FALSE(report.passed());
  ASSERT_EQ(report.failures().size(), 1u);
  EXPECT_EQ(report.failures()[0].witness, xi2);
}

TEST(RewriteSystem, RejectsMalformedRules) {
  const RingModel model = make_poincare_ring(3, 1);
  const auto& table = model.generators();
  const Monomial xi2 = Monomial::generator(gens::first_xi, 2);
  // Degree changes.
  EXPECT_THROW(RewriteSystem(table, {{xi2, kAlpha, ""}}, 4), RuleError);
  // Does not decrease: alpha^2 -> alpha*xi raises the leading generator.
  EXPECT_THROW(
      RewriteSystem(table, {{Monomial::generator(gens::alpha, 2), kAlpha * kXi, ""}}, 4), RuleError);
  // Unknowns never appear in patterns.
  EXPECT_THROW(RewriteSystem(table, {{Monomial::generator(gens::c_mu), ClassExpr(), ""}}, 4), RuleError);
  EXPECT_THROW(RewriteSystem(table, {{Monomial(), ClassExpr(), ""}}, 4), RuleError);
}

TEST(HomogeneousPart, Examples) {
  const RingModel model = make_poincare_ring(3, 1);
  const auto& t = model.generators();
  const ClassExpr x = ClassExpr::one() + kXi * Rational(2) + kAlpha + kXi * kXi;
  EXPECT_EQ(homogeneous_part(x, 1, t), kXi * Rational(2) + kAlpha);
  const ClassExpr mu_n = kMu + kAlpha * Rational(5) + kEta * Rational(25);
  EXPECT_EQ(homogeneous_part(mu_n, 1, t), mu_n);
  const ClassExpr c_eta_eta = ClassExpr::generator(gens::c_eta) * kEta;
  EXPECT_EQ(homogeneous_part(c_eta_eta, 1, t), c_eta_eta);
  EXPECT_TRUE(homogeneous_part(c_eta_eta, 0, t).is_zero());
}

std::vector<RingModel> sample_models() {
  return {make_base_ring(4, 2), make_poincare_ring(4, 1), make_level_ring(3, 2, 3)};
}

TEST(NormalFormProperty, TerminatesWithinStepBound) {
  std::mt19937_64 rng(5);
  for (const auto& model : sample_models()) {
    for (int i = 0; i < 100; ++i) {
      const ClassExpr x = random_class(model, rng, 6, model.dimension() + 1, true);
      std::size_t steps = 0;
      ReductionOptions opts;
      opts.max_steps = 10000;
      opts.steps_out = &steps;
      EXPECT_NO_THROW(normal_form(x, model.system(), opts));
      EXPECT_LE(steps, 10000u);
    }
  }
}

TEST(NormalFormProperty, OrderIndependent) {
  std::mt19937_64 rng(6);
  for (const auto& model : sample_models()) {
    for (int i = 0; i < 100; ++i) {
      const ClassExpr x = random_class(model, rng, 6, model.dimension(), true);
      ReductionOptions random_order;
      random_order.chooser = [&rng](std::span<const std::size_t> candidates) {
        return std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng);
      };
      ReductionOptions last_rule;
      last_rule.chooser = [](std::span<const std::size_t> candidates) { return candidates.size() - 1; };
      const ClassExpr expected = model.normal_form(x);
      EXPECT_EQ(normal_form(x, model.system(), random_order), expected) << model.render(x);
      EXPECT_EQ(normal_form(x, model.system(), last_rule), expected);
    }
  }
}

TEST(NormalFormProperty, RingMapIdempotentGraded) {
  std::mt19937_64 rng(7);
  for (const auto& model : sample_models()) {
    const auto& t = model.generators();
    for (int i = 0; i < 60; ++i) {
      const ClassExpr a = random_class(model, rng, 4, 3);
      const ClassExpr b = random_class(model, rng, 4, 3);
      const ClassExpr nf_ab = model.normal_form(a * b);
      EXPECT_EQ(nf_ab, model.normal_form(model.normal_form(a) * model.normal_form(b)));
      EXPECT_EQ(model.normal_form(nf_ab), nf_ab);
      for (std::uint32_t d = 0; d <= model.dimension() + 2; ++d) {
        const ClassExpr part = model.normal_form(homogeneous_part(a * b, d, t));
        EXPECT_EQ(homogeneous_part(part, d, t), part);
        EXPECT_EQ(homogeneous_part(nf_ab, d, t), part);
      }
    }
  }
}

TEST(NormalFormProperty, NoPatternSurvives) {
  std::mt19937_64 rng(8);
  for (const auto& model : sample_models()) {
    for (int i = 0; i < 100; ++i) {
      const ClassExpr x = model.normal_form(random_class(model, rng, 6, model.dimension()));
      for (const auto& [m, c] : x.terms()) {
        for (const auto& rule : model.system().rules()) EXPECT_FALSE(rule.pattern.divides(m));
        EXPECT_LE(model.generators().degree(m), model.dimension());
      }
    }
  }
}

TEST(ReducedPow, MatchesNormalFormOfFreePower) {
  std::mt19937_64 rng(9);
  const RingModel model = make_poincare_ring(4, 1);
  for (int i = 0; i < 20; ++i) {
    const ClassExpr a = random_divisor(model, rng);
    for (unsigned k = 0; k <= 6; ++k) EXPECT_EQ(model.pow(a, k), model.normal_form(pow(a, k)));
  }
}

}  // namespace
}  // namespace chow
