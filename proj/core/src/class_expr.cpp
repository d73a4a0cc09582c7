#include "chow/class_expr.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "chow/errors.hpp"

namespace chow {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::initializer_list<Factor> factors)
    : Monomial(std::vector<Factor>(factors)) {}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& [id, e] : factors) {
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == id) {
      factors_.back().second += e;
    } else {
      factors_.emplace_back(id, e);
    }
  }
}

Monomial Monomial::generator(GenId id, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(id, exponent);
  return m;
}

std::uint32_t Monomial::exponent(GenId id) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{id, 0});
  return (it != factors_.end() && it->first == id) ? it->second : 0;
}

std::uint32_t Monomial::total_exponent() const {
  std::uint32_t sum = 0;
  for (const auto& f : factors_) sum += f.second;
  return sum;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.factors_.begin();
  for (const auto& [id, e] : factors_) {
    while (it != other.factors_.end() && it->first < id) ++it;
    if (it == other.factors_.end() || it->first != id || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out;
  auto mine = factors_.begin();
  for (const auto& [id, e] : other.factors_) {
    while (mine != factors_.end() && mine->first < id) ++mine;
    std::uint32_t sub = (mine != factors_.end() && mine->first == id) ? mine->second : 0;
    if (e > sub) out.factors_.emplace_back(id, e - sub);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Factor> merged(a.factors_);
  for (const auto& [id, e] : b.factors_) {
    auto it = std::find_if(merged.begin(), merged.end(),
                           [id = id](const auto& f) { return f.first == id; });
    if (it == merged.end()) {
      merged.emplace_back(id, e);
    } else {
      it->second = std::max(it->second, e);
    }
  }
  return Monomial(std::move(merged));
}

// ---------------------------------------------------------------------------
// ClassExpr

ClassExpr::ClassExpr(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial(), constant);
}

ClassExpr::ClassExpr(const Monomial& m, const Rational& coefficient) {
  if (!coefficient.is_zero()) terms_.emplace(m, coefficient);
}

Rational ClassExpr::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ClassExpr::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ClassExpr ClassExpr::operator-() const {
  ClassExpr out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

ClassExpr& ClassExpr::operator+=(const ClassExpr& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

ClassExpr& ClassExpr::operator-=(const ClassExpr& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

ClassExpr& ClassExpr::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

ClassExpr operator*(const ClassExpr& a, const ClassExpr& b) {
  ClassExpr out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

ClassExpr pow(const ClassExpr& a, unsigned k) {
  ClassExpr result = ClassExpr::one();
  ClassExpr base = a;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

ClassExpr substitute(const ClassExpr& x, const std::map<GenId, ClassExpr>& images) {
  ClassExpr out;
  for (const auto& [m, c] : x.terms()) {
    std::vector<Monomial::Factor> kept;
    ClassExpr image = ClassExpr::one();
    for (const auto& [id, e] : m.factors()) {
      auto it = images.find(id);
      if (it == images.end()) {
        kept.emplace_back(id, e);
      } else {
        image = image * pow(it->second, e);
      }
    }
    out += image * ClassExpr(Monomial(std::move(kept)), c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// GeneratorTable

GeneratorTable::GeneratorTable(std::vector<GeneratorEntry> entries) : entries_(std::move(entries)) {
  std::unordered_set<std::string> seen;
  for (const auto& e : entries_) {
    if (!seen.insert(e.name).second) throw ModelError("duplicate generator name '" + e.name + "'");
    if (e.degree != 0 && e.degree != 1) {
      throw ModelError("generator '" + e.name + "' must have degree 0 or 1");
    }
    if (e.kind == GeneratorKind::unknown && e.degree != 0) {
      throw ModelError("unknown '" + e.name + "' must have degree 0");
    }
  }
}

const GeneratorEntry& GeneratorTable::operator[](GenId id) const {
  if (id >= entries_.size()) throw AlphabetError("generator id " + std::to_string(id) + " out of range");
  return entries_[id];
}

std::optional<GenId> GeneratorTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].name == name) return static_cast<GenId>(i);
  }
  return std::nullopt;
}

GenId GeneratorTable::id(std::string_view name) const {
  if (auto found = find(name)) return *found;
  throw AlphabetError("unknown generator '" + std::string(name) + "'");
}

bool GeneratorTable::contains(const Monomial& m) const {
  return m.is_one() || m.factors().back().first < entries_.size();
}

void GeneratorTable::require_contains(const Monomial& m) const {
  if (!contains(m)) {
    throw AlphabetError("monomial uses generator id " + std::to_string(m.factors().back().first) +
                        " outside an alphabet of size " + std::to_string(entries_.size()));
  }
}

std::uint32_t GeneratorTable::degree(const Monomial& m) const {
  std::uint32_t d = 0;
  for (const auto& [id, e] : m.factors()) d += static_cast<std::uint32_t>((*this)[id].degree) * e;
  return d;
}

Monomial GeneratorTable::geometric_part(const Monomial& m) const {
  std::vector<Monomial::Factor> kept;
  for (const auto& f : m.factors()) {
    if ((*this)[f.first].kind == GeneratorKind::geometric) kept.push_back(f);
  }
  return Monomial(std::move(kept));
}

Monomial GeneratorTable::unknown_part(const Monomial& m) const {
  std::vector<Monomial::Factor> kept;
  for (const auto& f : m.factors()) {
    if ((*this)[f.first].kind == GeneratorKind::unknown) kept.push_back(f);
  }
  return Monomial(std::move(kept));
}

// ---------------------------------------------------------------------------
// Rendering

std::string render(const Monomial& m, const GeneratorTable& table) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [id, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += table[id].name;
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string render(const ClassExpr& x, const GeneratorTable& table) {
  if (x.is_zero()) return "0";

  struct Entry {
    std::uint32_t degree;
    std::vector<std::uint32_t> exponents;
    const Monomial* monomial;
    const Rational* coefficient;
  };
  std::vector<Entry> entries;
  entries.reserve(x.size());
  for (const auto& [m, c] : x.terms()) {
    table.require_contains(m);
    std::vector<std::uint32_t> dense(table.size(), 0);
    for (const auto& [id, e] : m.factors()) dense[id] = e;
    entries.push_back({table.degree(m), std::move(dense), &m, &c});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.exponents > b.exponents;
  });

  std::ostringstream os;
  bool first = true;
  for (const auto& e : entries) {
    const Rational& c = *e.coefficient;
    const Rational magnitude = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (e.monomial->is_one()) {
      os << magnitude;
    } else if (magnitude.is_one()) {
      os << render(*e.monomial, table);
    } else {
      os << magnitude << '*' << render(*e.monomial, table);
    }
  }
  return os.str();
}

}  // namespace chow
