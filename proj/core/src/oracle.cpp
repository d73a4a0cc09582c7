#include "chow/oracle.hpp"

#include <map>

#include "chow/errors.hpp"

namespace chow {

namespace {

using Dense = std::vector<int>;
using DensePoly = std::map<Dense, Rational>;

struct Relation {
  Dense pattern;
  std::vector<std::pair<Dense, Rational>> replacement;
};

DensePoly to_dense(const ClassExpr& x, const GeneratorTable& table) {
  DensePoly out;
  for (const auto& [m, c] : x.terms()) {
    Dense e(table.size(), 0);
    for (const auto& [id, k] : m.factors()) {
      if (table[id].kind == GeneratorKind::unknown) {
        throw ModelError("brute-force oracle does not accept unknowns");
      }
      e[id] = static_cast<int>(k);
    }
    out[e] += c;
  }
  return out;
}

DensePoly dense_mul(const DensePoly& a, const DensePoly& b) {
  DensePoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Dense e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Dense unit(std::size_t size, std::initializer_list<std::pair<std::size_t, int>> entries) {
  Dense e(size, 0);
  for (const auto& [i, k] : entries) e[i] = k;
  return e;
}

std::vector<Relation> relations_for(const RingModel& model) {
  const std::size_t size = model.generators().size();
  const std::size_t alpha = 1, eta = 2;
  std::vector<Relation> rel;
  rel.push_back({unit(size, {{eta, 2}}), {}});
  rel.push_back({unit(size, {{alpha, 1}, {eta, 1}}), {}});
  const int comps = model.kind() == ModelKind::base ? 0 : model.m();
  const std::size_t first = size - static_cast<std::size_t>(comps);
  for (int i = 0; i < comps; ++i) {
    const std::size_t xi = first + static_cast<std::size_t>(i);
    rel.push_back({unit(size, {{xi, 2}}), {{unit(size, {{alpha, 1}, {xi, 1}}), Rational(-model.m())}}});
    for (int j = i + 1; j < comps; ++j) {
      rel.push_back({unit(size, {{xi, 1}, {first + static_cast<std::size_t>(j), 1}}), {}});
    }
  }
  return rel;
}

bool divides(const Dense& p, const Dense& e) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > e[i]) return false;
  }
  return true;
}

Rational falling(int from, int count) {
  Rational out(1);
  for (int k = 0; k < count; ++k) out *= Rational(from - k);
  return out;
}

}  // namespace

Rational brute_force_oracle(const RingModel& model, std::span<const ClassExpr> factors,
                            std::uint64_t seed) {
  const auto& table = model.generators();
  DensePoly poly;
  poly[Dense(table.size(), 0)] = Rational(1);
  for (const auto& f : factors) poly = dense_mul(poly, to_dense(f, table));

  const auto relations = relations_for(model);
  std::mt19937_64 rng(seed);
  while (true) {
    std::vector<std::pair<const Dense*, std::size_t>> moves;
    for (const auto& [e, c] : poly) {
      for (std::size_t r = 0; r < relations.size(); ++r) {
        if (divides(relations[r].pattern, e)) moves.emplace_back(&e, r);
      }
    }
    if (moves.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    const auto [where, which] = moves[pick(rng)];
    const Dense e = *where;
    const Rational c = poly.at(e);
    poly.erase(e);
    const auto& rel = relations[which];
    for (const auto& [rep, rc] : rel.replacement) {
      Dense next(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) next[i] = e[i] - rel.pattern[i] + rep[i];
      Rational& slot = poly[next];
      slot += c * rc;
      if (slot.is_zero()) poly.erase(next);
    }
  }

  const int g = model.g();
  const int n = model.n();
  const int top = model.kind() == ModelKind::base ? g : g + 1;
  const int comps = model.kind() == ModelKind::base ? 0 : model.m();
  const std::size_t first = table.size() - static_cast<std::size_t>(comps);
  Rational total;
  for (const auto& [e, c] : poly) {
    int degree = 0;
    int fiber = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      degree += e[i];
      if (i >= first) fiber += e[i];
    }
    if (degree != top) throw DegreeError("brute-force oracle needs a homogeneous class of top degree");
    if (comps > 0 && fiber != 1) continue;
    // Intersection table on B x C.
    if (e[0] == g - 1 && e[2] == 1 && e[1] == 0) {
      total += c * Rational(n) * falling(g - 1, g - 1);
    } else if (e[0] == g - 2 && e[1] == 2 && e[2] == 0) {
      total += c * Rational(-2 * n) * falling(g - 2, g - 2);
    }
  }
  return total;
}

Rational brute_force_oracle(const RingModel& model, const ClassExpr& x, std::uint64_t seed) {
  return brute_force_oracle(model, std::span<const ClassExpr>(&x, 1), seed);
}

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  return Rational(num(rng), den(rng));
}

std::vector<GenId> geometric_ids(const GeneratorTable& table) {
  std::vector<GenId> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[static_cast<GenId>(i)].kind == GeneratorKind::geometric) out.push_back(static_cast<GenId>(i));
  }
  return out;
}

}  // namespace

ClassExpr random_divisor(const RingModel& model, std::mt19937_64& rng) {
  ClassExpr out;
  for (GenId id : geometric_ids(model.generators())) out += ClassExpr::generator(id) * random_rational(rng);
  return out;
}

std::vector<ClassExpr> random_top_factors(const RingModel& model, std::mt19937_64& rng) {
  std::vector<ClassExpr> out;
  for (std::uint32_t i = 0; i < model.dimension(); ++i) out.push_back(random_divisor(model, rng));
  return out;
}

ClassExpr random_class(const RingModel& model, std::mt19937_64& rng, std::size_t max_terms,
                       std::uint32_t max_degree, bool with_unknowns) {
  const auto ids = geometric_ids(model.generators());
  std::uniform_int_distribution<std::size_t> count(0, max_terms);
  std::uniform_int_distribution<std::uint32_t> degree(0, max_degree);
  std::uniform_int_distribution<std::size_t> which(0, ids.size() - 1);
  std::uniform_int_distribution<int> unknown(gens::c_xi, gens::c_eta + 1);
  ClassExpr out;
  const std::size_t terms = count(rng);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<Monomial::Factor> factors;
    const auto d = degree(rng);
    for (std::uint32_t k = 0; k < d; ++k) factors.emplace_back(ids[which(rng)], 1);
    if (with_unknowns) {
      const int u = unknown(rng);
      if (u <= gens::c_eta) factors.emplace_back(static_cast<GenId>(u), 1);
    }
    out.add_term(Monomial(std::move(factors)), random_rational(rng));
  }
  return out;
}

}  // namespace chow
