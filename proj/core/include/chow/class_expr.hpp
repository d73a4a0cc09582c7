#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chow/rational.hpp"

namespace chow {

/// Interned generator identifier; an index into a GeneratorTable.
using GenId = std::uint16_t;

/// Power product of generators, stored sparsely as (id, exponent) pairs
/// sorted by id with no zero exponents.
class Monomial {
 public:
  using Factor = std::pair<GenId, std::uint32_t>;

  Monomial() = default;
  Monomial(std::initializer_list<Factor> factors);
  explicit Monomial(std::vector<Factor> factors);

  static Monomial generator(GenId id, std::uint32_t exponent = 1);

  bool is_one() const { return factors_.empty(); }
  std::uint32_t exponent(GenId id) const;
  const std::vector<Factor>& factors() const { return factors_; }
  /// Sum of all exponents, regardless of generator kind.
  std::uint32_t total_exponent() const;

  bool divides(const Monomial& other) const;
  /// other / *this; precondition: divides(other).
  Monomial quotient_of(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Linear combination of monomials with exact rational coefficients; the
/// canonical sparse form stores no zero coefficients.
class ClassExpr {
 public:
  using Terms = std::map<Monomial, Rational>;

  ClassExpr() = default;
  ClassExpr(const Rational& constant);  // NOLINT(google-explicit-constructor)
  ClassExpr(int constant) : ClassExpr(Rational(constant)) {}  // NOLINT
  explicit ClassExpr(const Monomial& m, const Rational& coefficient = Rational(1));

  static ClassExpr generator(GenId id) { return ClassExpr(Monomial::generator(id)); }
  static ClassExpr one() { return ClassExpr(Rational(1)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;

  /// Adds c*m, dropping the term if the coefficient cancels.
  void add_term(const Monomial& m, const Rational& c);

  ClassExpr operator-() const;
  ClassExpr& operator+=(const ClassExpr& rhs);
  ClassExpr& operator-=(const ClassExpr& rhs);
  ClassExpr& operator*=(const Rational& scalar);

  friend ClassExpr operator+(ClassExpr a, const ClassExpr& b) { return a += b; }
  friend ClassExpr operator-(ClassExpr a, const ClassExpr& b) { return a -= b; }
  friend ClassExpr operator*(ClassExpr a, const Rational& s) { return a *= s; }
  friend ClassExpr operator*(const Rational& s, ClassExpr a) { return a *= s; }
  /// Free commutative product; no relations are applied.
  friend ClassExpr operator*(const ClassExpr& a, const ClassExpr& b);
  friend bool operator==(const ClassExpr&, const ClassExpr&) = default;

 private:
  Terms terms_;
};

inline ClassExpr add(const ClassExpr& a, const ClassExpr& b) { return a + b; }
inline ClassExpr mul(const ClassExpr& a, const ClassExpr& b) { return a * b; }
/// Free power by repeated squaring; pow(a, 0) is the unit.
ClassExpr pow(const ClassExpr& a, unsigned k);

/// Ring homomorphism fixing every generator not in `images`.
ClassExpr substitute(const ClassExpr& x, const std::map<GenId, ClassExpr>& images);

enum class GeneratorKind { geometric, unknown };

struct GeneratorEntry {
  std::string name;
  int degree = 1;  // 0 or 1
  GeneratorKind kind = GeneratorKind::geometric;
  std::optional<int> component;
};

/// Names, degrees and kinds of a ring's generators, indexed by GenId.
class GeneratorTable {
 public:
  GeneratorTable() = default;
  /// Throws ModelError on duplicate names or a degree-1 unknown.
  explicit GeneratorTable(std::vector<GeneratorEntry> entries);

  std::size_t size() const { return entries_.size(); }
  const GeneratorEntry& operator[](GenId id) const;
  const std::vector<GeneratorEntry>& entries() const { return entries_; }
  std::optional<GenId> find(std::string_view name) const;
  /// Like find, but throws AlphabetError.
  GenId id(std::string_view name) const;

  bool contains(const Monomial& m) const;
  /// Throws AlphabetError when m mentions an id outside the table.
  void require_contains(const Monomial& m) const;
  /// Sum of exponents of degree-1 generators.
  std::uint32_t degree(const Monomial& m) const;
  /// m with every unknown factor removed.
  Monomial geometric_part(const Monomial& m) const;
  Monomial unknown_part(const Monomial& m) const;

 private:
  std::vector<GeneratorEntry> entries_;
};

/// Canonical text form: terms sorted by geometric degree, then by descending
/// lexicographic exponent vector in table order; e.g.
/// "mu + 1/2*alpha + 1/4*eta + xi".
std::string render(const ClassExpr& x, const GeneratorTable& table);
std::string render(const Monomial& m, const GeneratorTable& table);

}  // namespace chow
