#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chow/class_expr.hpp"
#include "chow/rational.hpp"
#include "chow/rewrite.hpp"

namespace chow {

enum class ModelKind { base, poincare, level };
enum class Section { zero, infinity };
enum class TestCurve { mu_star, eta_star, delta_star };

/// Fixed generator layout shared by every model. The base alphabet and the
/// theta unknowns form a prefix, so classes pulled back from B x C keep the
/// same ids in the bundle models.
namespace gens {
inline constexpr GenId mu = 0;
inline constexpr GenId alpha = 1;
inline constexpr GenId eta = 2;
inline constexpr GenId c_xi = 3;
inline constexpr GenId c_mu = 4;
inline constexpr GenId c_alpha = 5;
inline constexpr GenId c_eta = 6;
inline constexpr GenId first_xi = 7;
}  // namespace gens

/// A presented Chow ring together with its parameters:
///   base      CH*(B x C), dimension g, generators mu, alpha, eta;
///   poincare  the P^1-bundle P(E + P) over B x C, dimension g+1, adds xi;
///   level     m bundle components xi_0..xi_{m-1} over the level cover.
/// Immutable once built.
class RingModel {
 public:
  ModelKind kind() const { return kind_; }
  int g() const { return g_; }
  int n() const { return n_; }
  /// Level; 1 for base and poincare models.
  int m() const { return m_; }
  std::uint32_t dimension() const { return system_.dimension(); }
  const GeneratorTable& generators() const { return system_.table(); }
  const RewriteSystem& system() const { return system_; }

  /// Number of bundle components: 0 (base), 1 (poincare) or m (level).
  int components() const;
  /// Generator id of the fiber class of component i.
  GenId xi(int component = 0) const;
  ClassExpr gen(std::string_view name) const;

  ClassExpr normal_form(const ClassExpr& x) const { return chow::normal_form(x, system_); }
  ClassExpr pow(const ClassExpr& x, unsigned k) const { return reduced_pow(x, k, system_); }
  std::string render(const ClassExpr& x) const { return chow::render(x, generators()); }
  /// e.g. "level(g=3,n=1,m=2)".
  std::string descriptor() const;

 private:
  friend RingModel make_base_ring(int g, int n);
  friend RingModel make_poincare_ring(int g, int n);
  friend RingModel make_level_ring(int g, int n, int m);

  RingModel(ModelKind kind, int g, int n, int m, RewriteSystem system)
      : kind_(kind), g_(g), n_(n), m_(m), system_(std::move(system)) {}

  ModelKind kind_;
  int g_;
  int n_;
  int m_;
  RewriteSystem system_;
};

/// Throws ModelError for g < 2 or n < 1.
RingModel make_base_ring(int g, int n);
RingModel make_poincare_ring(int g, int n);
/// Throws ModelError additionally for m < 1.
RingModel make_level_ring(int g, int n, int m);
/// Base model with the same (g, n).
RingModel base_of(const RingModel& model);

/// Top-degree evaluation. The result is a class in the unknowns only (a
/// constant when x has none). Throws DegreeError if the normal form of x has
/// a term of geometric degree below the dimension.
ClassExpr evaluate_top(const RingModel& model, const ClassExpr& x);
/// evaluate_top for classes without unknowns.
Rational evaluate_top_number(const RingModel& model, const ClassExpr& x);

/// Class of the zero or infinity section of a bundle component:
/// P_inf = xi_i and P_0 = xi_i + m*alpha.
ClassExpr section_class(const RingModel& model, Section which, int component = 0);

/// Restriction of a divisor class on a poincare model to one of its
/// sections, identified with B x C: xi -> 0 on P_0 and xi -> -alpha on P_inf.
ClassExpr restrict_section(const RingModel& model, const ClassExpr& x, Section which);

/// N-fold pullback under the shift (z, b) -> (z + b, b) of B x C:
/// mu -> mu + alpha + eta, alpha -> alpha + 2 eta, eta -> eta. Negative N
/// applies the inverse. Unknowns pass through; throws AlphabetError on
/// fiber generators.
ClassExpr shift_pullback(const ClassExpr& x, int N);

/// Intersection numbers of mu, eta, alpha with the curves mu*, eta*, delta*.
struct CurvePairing {
  /// Rows (mu*, eta*, delta*), columns (mu, eta, alpha).
  std::array<std::array<Rational, 3>, 3> matrix;
};

CurvePairing curve_pairing(const RingModel& model);
/// Linear extension of the pairing; x must be a rational divisor class over
/// mu, eta, alpha.
Rational pair_with_curve(const RingModel& model, const ClassExpr& x, TestCurve curve);

std::size_t matrix_rank(std::vector<std::vector<Rational>> rows);
/// Rank of the curve pairing; 3 means mu, alpha, eta span NS(B x C).
std::size_t ns_generation_check(const RingModel& model);

std::string_view to_string(ModelKind kind);
std::string_view to_string(TestCurve curve);

}  // namespace chow
