#include "chow/verify.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <sstream>

#include <json.hpp>

#include "chow/derivations.hpp"
#include "chow/errors.hpp"
#include "chow/models.hpp"
#include "chow/oracle.hpp"

namespace chow {

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.pass; }));
}

namespace {

std::string gn(int g, int n) { return "g=" + std::to_string(g) + ",n=" + std::to_string(n); }

class Recorder {
 public:
  void equal(std::string name, std::string params, const Rational& expected, const Rational& got) {
    records_.push_back({std::move(name), std::move(params), expected.str(), got.str(), expected == got});
  }
  void text(std::string name, std::string params, std::string expected, std::string got) {
    const bool pass = expected == got;
    records_.push_back({std::move(name), std::move(params), std::move(expected), std::move(got), pass});
  }
  // Runs fn and records an exception as a failed check.
  template <typename Fn>
  void guarded(const std::string& name, const std::string& params, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      records_.push_back({name, params, "no error", e.what(), false});
    }
  }
  std::vector<CheckRecord> take() { return std::move(records_); }

 private:
  std::vector<CheckRecord> records_;
};

std::vector<CheckRecord> checks_for_g(int g, const VerifyConfig& cfg) {
  Recorder rec;
  std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(g));
  const ClassExpr mu = ClassExpr::generator(gens::mu);
  const ClassExpr alpha = ClassExpr::generator(gens::alpha);
  const ClassExpr eta = ClassExpr::generator(gens::eta);

  for (int n = 1; n <= cfg.nmax; ++n) {
    const std::string p = gn(g, n);
    rec.guarded("models", p, [&] {
      const RingModel base = make_base_ring(g, n);
      const RingModel bundle = make_poincare_ring(g, n);

      if (g == 2) {
        const auto pairing = curve_pairing(base);
        const Rational nn(n);
        const std::array<std::array<Rational, 3>, 3> want{{{nn, 0, 0}, {0, nn, 0}, {nn, nn, nn * Rational(2)}}};
        rec.text("pairing_table", "n=" + std::to_string(n), "match",
                 pairing.matrix == want ? "match" : "mismatch");
        rec.equal("ns_rank", "n=" + std::to_string(n), Rational(3),
                  Rational(static_cast<long>(ns_generation_check(base))));
      }

      for (int N = -5; N <= 5; ++N) {
        const ClassExpr mu_n = mu + alpha * Rational(N) + eta * Rational(N * N);
        rec.text("shift_family", p + ",N=" + std::to_string(N), base.render(mu_n),
                 base.render(shift_pullback(mu, N)));
        rec.equal("shift_family_vanishes", p + ",N=" + std::to_string(N), Rational(0),
                  evaluate_top_number(base, base.pow(mu_n, static_cast<unsigned>(g))));
      }

      const ThetaSolution sol = solve_theta_coefficients(g, n);
      rec.text("theta_coefficients", p, "1,1,1/2,1/4",
               sol.c_xi.str() + "," + sol.c_mu.str() + "," + sol.c_alpha.str() + "," + sol.c_eta.str());
      const ClassExpr d = theta_class(bundle);
      const ClassExpr on_zero = restrict_section(bundle, d, Section::zero);
      const ClassExpr on_inf = restrict_section(bundle, d, Section::infinity);
      rec.text("theta_gluing", p, base.render(on_zero), base.render(shift_pullback(on_inf, 1)));
      rec.equal("theta_vanishes_on_P0", p, Rational(0),
                evaluate_top_number(base, base.pow(on_zero, static_cast<unsigned>(g))));
      rec.equal("theta_vanishes_on_Pinf", p, Rational(0),
                evaluate_top_number(base, base.pow(on_inf, static_cast<unsigned>(g))));

      for (int k = 0; k < 3; ++k) {
        const Rational a(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 3) + 1);
        const Rational b(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 3) + 1);
        rec.equal("trick_T", p + ",a=" + a.str() + ",b=" + b.str(), trick_T(a, b, g, n),
                  trick_T_expanded(a, b, g, n));
      }

      const DerivedNumber mumford = mumford_boundary_number(g, n);
      rec.equal("mumford_boundary", p, mumford.expected, mumford.computed);
      const BoundaryDecomposition parts = mumford_decomposition(g, n);
      rec.equal("mumford_eta_term", p,
                Rational(n) * factorial(static_cast<unsigned>(g + 1)) / Rational(4), parts.eta_term);
      rec.equal("mumford_trick_term", p, trick_T(sol.c_mu, sol.c_alpha, g, n), parts.trick_term);

      const ChernExpansion chern = chern_relative_tangent(bundle);
      rec.text("chern_relative_tangent", p,
               bundle.render(ClassExpr::one() + section_class(bundle, Section::zero) +
                             section_class(bundle, Section::infinity)),
               bundle.render(chern.total));

      for (int m = 1; m <= cfg.mmax; ++m) {
        const DerivedNumber branch = level_branch_number(g, n, m);
        rec.equal("level_branch", p + ",m=" + std::to_string(m), branch.expected, branch.computed);
      }
    });
  }

  // Rewrite soundness and oracle agreement at n = 1.
  rec.guarded("rewrite", gn(g, 1), [&] {
    std::vector<RingModel> models{make_base_ring(g, 1), make_poincare_ring(g, 1)};
    if (cfg.mmax >= 2) models.push_back(make_level_ring(g, 1, std::min(cfg.mmax, 3)));
    for (const auto& model : models) {
      rec.text("local_confluence", model.descriptor(), "pass",
               check_local_confluence(model.system()).passed() ? "pass" : "fail");
      if (g > cfg.oracle_gmax) continue;
      for (std::size_t s = 0; s < cfg.oracle_samples; ++s) {
        const auto factors = random_top_factors(model, rng);
        ClassExpr product = ClassExpr::one();
        for (const auto& f : factors) product = reduced_mul(product, f, model.system());
        rec.equal("oracle_agreement", model.descriptor() + ",sample=" + std::to_string(s),
                  brute_force_oracle(model, factors, rng()), evaluate_top_number(model, product));
      }
    }
  });
  return rec.take();
}

}  // namespace

VerificationReport run_verification(const VerifyConfig& config) {
  if (config.gmax < 2 || config.nmax < 1 || config.mmax < 1) {
    throw ModelError("verify needs gmax >= 2, nmax >= 1, mmax >= 1");
  }
  std::vector<std::future<std::vector<CheckRecord>>> tasks;
  for (int g = 2; g <= config.gmax; ++g) {
    tasks.push_back(std::async(std::launch::async, checks_for_g, g, std::cref(config)));
  }
  VerificationReport report;
  for (auto& t : tasks) {
    auto part = t.get();
    report.records.insert(report.records.end(), std::make_move_iterator(part.begin()),
                          std::make_move_iterator(part.end()));
  }
  return report;
}

std::string to_text(const VerificationReport& report) {
  std::size_t wn = 4, wp = 6, we = 8;
  for (const auto& r : report.records) {
    wn = std::max(wn, r.name.size());
    wp = std::max(wp, r.params.size());
    we = std::max(we, r.expected.size());
  }
  std::ostringstream os;
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  os << pad("check", wn) << "  " << pad("params", wp) << "  " << pad("expected", we) << "  got\n";
  for (const auto& r : report.records) {
    os << pad(r.name, wn) << "  " << pad(r.params, wp) << "  " << pad(r.expected, we) << "  " << r.got
       << (r.pass ? "" : "  FAIL") << '\n';
  }
  os << report.records.size() << " checks, " << report.failures() << " failures\n";
  return os.str();
}

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& r : report.records) {
    nlohmann::ordered_json item;
    item["name"] = r.name;
    item["params"] = r.params;
    item["expected"] = r.expected;
    item["got"] = r.got;
    item["pass"] = r.pass;
    checks.push_back(std::move(item));
  }
  nlohmann::ordered_json doc;
  doc["checks"] = std::move(checks);
  doc["total"] = report.records.size();
  doc["failures"] = report.failures();
  return doc.dump(2) + "\n";
}

}  // namespace chow
