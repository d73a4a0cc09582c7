#include <random>

#include <gtest/gtest.h>

#include "chow/derivations.hpp"
#include "chow/errors.hpp"
#include "chow/expr_parser.hpp"
#include "chow/models.hpp"
#include "chow/oracle.hpp"

namespace chow {
namespace {

const ClassExpr kMu = ClassExpr::generator(gens::mu);
const ClassExpr kAlpha = ClassExpr::generator(gens::alpha);
const ClassExpr kEta = ClassExpr::generator(gens::eta);
const ClassExpr kXi = ClassExpr::generator(gens::first_xi);

TEST(ParseExpr, Examples) {
  const RingModel base = make_base_ring(4, 2);
  EXPECT_EQ(parse_expr("eta*mu^3", base), kEta * pow(kMu, 3));

  const RingModel bundle = make_poincare_ring(4, 1);
  const ClassExpr d = kXi + kMu + kAlpha * Rational(1, 2) + kEta * Rational(1, 4);
  EXPECT_EQ(parse_expr("(xi + mu + 1/2*alpha + 1/4*eta)^5", bundle), pow(d, 5));
  EXPECT_EQ(parse_expr("D^5", bundle), pow(d, 5));

  const RingModel level = make_level_ring(3, 1, 2);
  try {
    parse_expr("xi_2^2", level);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 0u);
    EXPECT_NE(std::string(e.what()).find("xi_2"), std::string::npos);
  }
}

TEST(ParseExpr, NamedConstants) {
  const RingModel bundle = make_poincare_ring(3, 1);
  EXPECT_EQ(parse_expr("P0", bundle), kXi + kAlpha);
  EXPECT_EQ(parse_expr("Pinf", bundle), kXi);
  EXPECT_TRUE(parse_expr("P0*Pinf", bundle, LowerMode::reduced).is_zero());
  const RingModel level = make_level_ring(3, 1, 2);
  EXPECT_EQ(parse_expr("D_1", level), theta_class(level, 1));
  EXPECT_THROW(parse_expr("D", level), ParseError);
  EXPECT_THROW(parse_expr("D_01", level), ParseError);
  EXPECT_THROW(parse_expr("D_0", bundle), ParseError);
  EXPECT_THROW(parse_expr("xi", make_base_ring(3, 1)), ParseError);
}

TEST(ParseExpr, SyntaxErrors) {
  const RingModel bundle = make_poincare_ring(3, 1);
  auto position_of = [&](const char* src) -> std::size_t {
    try {
      parse_expr(src, bundle);
    } catch (const ParseError& e) {
      return e.position();
    }
    ADD_FAILURE() << "no error for " << src;
    return 0;
  };
  EXPECT_EQ(position_of("2mu"), 1u);          // implicit multiplication
  EXPECT_EQ(position_of("mu alpha"), 3u);
  EXPECT_EQ(position_of("mu^-1"), 3u);        // exponent must be a natural number
  EXPECT_EQ(position_of("mu^1/2"), 4u);
  EXPECT_EQ(position_of("mu^alpha"), 3u);
  EXPECT_EQ(position_of("(mu + alpha"), 11u);
  EXPECT_EQ(position_of("mu/2"), 2u);
  EXPECT_EQ(position_of("1/0*mu"), 2u);
  EXPECT_EQ(position_of("mu + "), 5u);
  EXPECT_EQ(position_of("mu $ eta"), 3u);
  EXPECT_EQ(position_of("mu^2^3"), 4u);
}

TEST(ParseExpr, Precedence) {
  const RingModel bundle = make_poincare_ring(3, 1);
  EXPECT_EQ(parse_expr("mu + alpha*xi^2", bundle), parse_expr("mu + (alpha*(xi^2))", bundle));
  EXPECT_EQ(parse_expr("mu - alpha - eta", bundle), parse_expr("(mu - alpha) - eta", bundle));
  EXPECT_EQ(parse_expr("-mu^2", bundle), -(kMu * kMu));
  EXPECT_EQ(parse_expr("2/3^2", bundle), ClassExpr(Rational(4, 9)));
  EXPECT_EQ(parse_expr("mu^0", bundle), ClassExpr::one());
}

TEST(ParseExpr, ReducedModeEqualsNormalForm) {
  const RingModel bundle = make_poincare_ring(4, 1);
  for (const char* src : {"D^5", "xi^3 + alpha*xi", "(P0 + eta)^4*mu", "-(xi + mu)^7"}) {
    EXPECT_EQ(parse_expr(src, bundle, LowerMode::reduced), bundle.normal_form(parse_expr(src, bundle))) << src;
  }
}

TEST(ParseExprProperty, RenderRoundTrip) {
  std::mt19937_64 rng(17);
  const std::vector<RingModel> models{make_base_ring(4, 1), make_poincare_ring(4, 1), make_level_ring(3, 1, 3)};
  for (const auto& model : models) {
    for (int i = 0; i < 100; ++i) {
      const ClassExpr x = random_class(model, rng, 6, 4, true);
      EXPECT_EQ(parse_expr(model.render(x), model), x) << model.render(x);
    }
  }
}

TEST(ParseModelDescriptor, Forms) {
  const RingModel b = parse_model_descriptor("base(g=4,n=1)");
  EXPECT_EQ(b.kind(), ModelKind::base);
  EXPECT_EQ(b.g(), 4);
  const RingModel p = parse_model_descriptor(" poincare( g = 4 , n = 2 ) ");
  EXPECT_EQ(p.kind(), ModelKind::poincare);
  EXPECT_EQ(p.n(), 2);
  const RingModel l = parse_model_descriptor("level(g=3,n=1,m=2)");
  EXPECT_EQ(l.m(), 2);
  EXPECT_EQ(l.descriptor(), "level(g=3,n=1,m=2)");
  EXPECT_THROW(parse_model_descriptor("level(g=3,n=1)"), ParseError);
  EXPECT_THROW(parse_model_descriptor("base(g=3,n=1,m=2)"), ParseError);
  EXPECT_THROW(parse_model_descriptor("torus(g=3,n=1)"), ParseError);
  EXPECT_THROW(parse_model_descriptor("base(g=3,g=4,n=1)"), ParseError);
  EXPECT_THROW(parse_model_descriptor("base(g=3,n=1"), ParseError);
  EXPECT_THROW(parse_model_descriptor("base(g=1,n=1)"), ModelError);
}

}  // namespace
}  // namespace chow
