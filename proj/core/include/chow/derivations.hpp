#pragma once

#include <map>
#include <vector>

#include "chow/class_expr.hpp"
#include "chow/models.hpp"
#include "chow/rational.hpp"

namespace chow {

/// Solves linear equations (each a class in unknowns, set equal to zero).
/// Returns the unknowns the system pins down uniquely; unknowns left free
/// are omitted. Throws SolverError on inconsistency or non-linear terms.
std::map<GenId, Rational> solve_linear_constraints(const std::vector<ClassExpr>& equations,
                                                   const GeneratorTable& table);

/// Coefficients of the universal theta divisor
///   D = c_xi*xi + c_mu*mu + c_alpha*alpha + c_eta*eta
/// on the poincare model, with the constraint data that produced them.
struct ThetaSolution {
  Rational c_xi;
  Rational c_mu;
  Rational c_alpha;
  Rational c_eta;
  /// Gluing constraint D|P0 - s*(D|Pinf), keyed by base monomial; each
  /// value is a linear class in the unknowns that must vanish.
  std::map<Monomial, ClassExpr> gluing_equations;
  /// Top evaluation of (D|Pinf)^g after the gluing solution is substituted.
  ClassExpr vanishing_equation;
  ClassExpr gluing_residual;
  ClassExpr vanishing_residual;
};

/// c_xi = 1 is taken as input. The gluing constraint identifies D|P0 with
/// the shift pullback of D|Pinf and fixes c_mu, c_alpha; the vanishing of
/// (D|Pinf)^g then fixes c_eta.
ThetaSolution solve_theta_coefficients(int g, int n);

/// Theta class of a poincare model, or of bundle component `component` of a
/// level model (the poincare class with mu, alpha, eta scaled by m and xi
/// replaced by xi_i). Throws ModelError on a base model.
ClassExpr theta_class(const RingModel& model, int component = 0);

/// Closed form -(n (g+1)!/3) a^{g-2} (b^3 - (b-1)^3) of the top
/// intersection (xi + a*mu + b*alpha)^{g+1}.
Rational trick_T(const Rational& a, const Rational& b, int g, int n);
/// The same number by expanding and evaluating on the poincare model.
Rational trick_T_expanded(const Rational& a, const Rational& b, int g, int n);

struct DerivedNumber {
  Rational computed;
  Rational expected;
  bool matches() const { return computed == expected; }
};

/// D^{g+1} on the poincare model against n (g+1)!/6.
DerivedNumber mumford_boundary_number(int g, int n);

/// Splitting D = A + eta/4 gives D^{g+1} = (g+1)(eta/4) A^g + A^{g+1}; the
/// second summand is trick_T at the theta coefficients.
struct BoundaryDecomposition {
  Rational eta_term;
  Rational trick_term;
};
BoundaryDecomposition mumford_decomposition(int g, int n);

/// D_i^{g+1} for one component of the level model.
Rational level_component_number(int g, int n, int m, int component);
/// Sum over components of D_i^{g+1} against m^{g+1} n (g+1)!/6.
DerivedNumber level_branch_number(int g, int n, int m);

struct ChernExpansion {
  /// Homogeneous parts of the unreduced product, indexed by degree.
  std::vector<ClassExpr> raw_parts;
  /// Each part after normal form.
  std::vector<ClassExpr> reduced_parts;
  /// Sum of the reduced parts; 1 + 2 xi + alpha.
  ClassExpr total;
};

/// Total Chern class of the relative tangent bundle of the poincare model
/// over C, computed as (1 + xi)^2 c_{1/(1+xi)}(P) up to the dimension.
/// Throws ModelError if a part of degree >= 2 survives reduction.
ChernExpansion chern_relative_tangent(const RingModel& model);

}  // namespace chow
