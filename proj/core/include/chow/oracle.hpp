#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "chow/class_expr.hpp"
#include "chow/models.hpp"
#include "chow/rational.hpp"

namespace chow {

/// Independent evaluation path for top intersections. Multiplies the
/// factors out densely with no truncation, then substitutes the defining
/// relations of the model (rebuilt here from its kind and parameters, not
/// taken from its rewrite system) in a random order until none applies, and
/// finally reads off each surviving monomial from the intersection table.
/// Factors must not contain unknowns; the product must be homogeneous of
/// the model's dimension.
Rational brute_force_oracle(const RingModel& model, std::span<const ClassExpr> factors,
                            std::uint64_t seed = 1);
Rational brute_force_oracle(const RingModel& model, const ClassExpr& x, std::uint64_t seed = 1);

/// Random divisor with small rational coefficients on every geometric
/// generator of the model.
ClassExpr random_divisor(const RingModel& model, std::mt19937_64& rng);

/// `model.dimension()` random divisors; their product is a random class of
/// top degree.
std::vector<ClassExpr> random_top_factors(const RingModel& model, std::mt19937_64& rng);

/// Random class with up to `max_terms` monomials of geometric degree up to
/// `max_degree`, optionally multiplied by theta unknowns.
ClassExpr random_class(const RingModel& model, std::mt19937_64& rng, std::size_t max_terms,
                       std::uint32_t max_degree, bool with_unknowns = false);

}  // namespace chow
