#include "cutcx/verify_suite.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include "cutcx/errors.hpp"
#include "cutcx/homology.hpp"
#include "cutcx/parallel.hpp"
#include "cutcx/serialize.hpp"

namespace cutcx {
namespace {

constexpr int kVerifyMinN = 4;
constexpr int kVerifyMaxN = 24;
constexpr int kRecurrenceRMax = 8;
constexpr int kRecurrenceKMax = 40;
constexpr int kSharpRMax = 12;
constexpr int kGenFunTerms = 50;

constexpr std::array<Scope, 6> kAllScopes = {Scope::kProfile,    Scope::kFVector, Scope::kHomology,
                                             Scope::kRecurrence, Scope::kGenFun,  Scope::kHilbert};

using Task = std::function<CheckResult()>;

std::string kn(int k, int n) { return "k=" + std::to_string(k) + " n=" + std::to_string(n); }

CheckResult outcome(std::string name, std::string detail, std::string witness) {
  const bool ok = witness.empty();
  return CheckResult{std::move(name), ok, std::move(detail), std::move(witness)};
}

std::string join(const std::vector<std::uint32_t>& values) {
  std::string out;
  for (auto v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

// ---- individual checks ----------------------------------------------------

CheckResult check_profile(int k, int n) {
  const BadProfile brute = q_profile_bruteforce(squared_path(n), k, 1);
  const BadProfile closed = q_profile_closed(k, n);
  std::string witness;
  for (int m = k; m <= n && witness.empty(); ++m) {
    if (brute.q(m) != closed.q(m)) {
      witness = "m=" + std::to_string(m) + " brute=" + brute.q(m).get_str() +
                " closed=" + closed.q(m).get_str();
    }
  }
  return outcome("profile " + kn(k, n), "bad-complement counts q_m, m=k..n, brute force vs closed",
                 witness);
}

CheckResult check_fvector(int k, int n) {
  const FVector fv = f_vector_bruteforce(squared_path(n), k, FVectorMethod::kAuto, 1);
  const IntPolynomial closed = face_enumerator_closed(k, n);
  const int r = n - k;
  std::string witness;
  if (face_polynomial(fv) != closed) {
    witness = "brute=" + face_polynomial(fv).to_string() + " closed=" + closed.to_string();
  }
  for (int p = 0; p <= r - 2 && witness.empty(); ++p) {
    if (fv.at(p) != binomial(n, p)) {
      witness = "p=" + std::to_string(p) + " has " + fv.at(p).get_str() + " faces, expected " +
                binomial(n, p).get_str();
    }
  }
  if (witness.empty() && r >= 2) {
    BigInt expected = beta_closed(k, n);
    if (r % 2 == 0) expected = -expected;
    if (reduced_euler(fv) != expected) {
      witness = "reduced Euler characteristic " + reduced_euler(fv).get_str() + ", expected " +
                expected.get_str();
    }
  }
  if (witness.empty() && r >= 2 && layered_beta(k, n) != beta_closed(k, n)) {
    witness = "layered count " + layered_beta(k, n).get_str();
  }
  return outcome("fvector " + kn(k, n),
                 "face enumerator brute force vs closed; p <= r-2 complete; Euler and layered counts",
                 witness);
}

CheckResult check_concentration(int k, int n, const std::vector<std::uint32_t>& primes) {
  const ConcentrationReport rep = verify_concentration(k, n, primes);
  std::string witness;
  if (!rep.holds()) witness = rep.failures.front();
  return outcome("homology " + kn(k, n),
                 "reduced homology concentrated in degree " + std::to_string(n - k - 1) + " with rank " +
                     rep.expected.get_str() + " over primes " + join(primes),
                 witness);
}

CheckResult check_boundary_case(int k, const std::vector<std::uint32_t>& primes) {
  const int n = k + 2;
  const auto chain = build_chain_complex(cut_complex_faces(squared_path(n), k));
  std::string witness;
  if (beta_closed(k, n) != 0) witness = "beta_closed=" + beta_closed(k, n).get_str();
  for (auto p : primes) {
    if (!witness.empty()) break;
    const BettiNumbers b = betti_numbers(chain, p);
    if (b.degree_minus_one != 0) witness = "GF(" + std::to_string(p) + ") degree -1 nonzero";
    for (std::size_t i = 0; i < b.values.size() && witness.empty(); ++i) {
      if (b.values[i] != 0) {
        witness = "GF(" + std::to_string(p) + ") degree " + std::to_string(i) + " has rank " +
                  std::to_string(b.values[i]);
      }
    }
  }
  return outcome("homology boundary " + kn(k, n), "r=2: closed value zero and all reduced Betti numbers zero",
                 witness);
}

CheckResult check_recurrence(int r, int k_max) {
  const RecurrenceCertificate cert = verify_recurrence(r, k_max);
  std::string witness;
  if (!cert.symbolic_zero) witness = "nabla^r B_r is not the zero polynomial";
  for (const auto& id : cert.topological) {
    if (!witness.empty()) break;
    if (id.alternating_sum != 0) witness = "topological k=" + std::to_string(id.k) + " sum=" + id.alternating_sum.get_str();
  }
  for (const auto& id : cert.polynomial_extension) {
    if (!witness.empty()) break;
    if (id.alternating_sum != 0) witness = "extension k=" + std::to_string(id.k) + " sum=" + id.alternating_sum.get_str();
  }
  return outcome("recurrence r=" + std::to_string(r),
                 "nabla^r B_r = 0 symbolically; numeric identity for k=" + std::to_string(r + 3) + ".." +
                     std::to_string(k_max) + " and polynomial extension k=" + std::to_string(-k_max) +
                     ".." + std::to_string(k_max),
                 witness);
}

CheckResult check_sharpness(int r) {
  const BigInt d = sharp_difference(r);
  std::string witness;
  if (d != r - 2) witness = "nabla^(r-1) B_r = " + d.get_str();
  if (witness.empty() && leading_coefficient(r) != diagonal_poly(r).leading_coefficient()) {
    witness = "leading coefficient " + to_string(diagonal_poly(r).leading_coefficient());
  }
  return outcome("sharpness r=" + std::to_string(r), "nabla^(r-1) B_r is the constant r-2", witness);
}

CheckResult check_genfun(int r) {
  const RationalGenFun gf = diagonal_genfun(r);
  const RatPolynomial b = diagonal_poly(r);
  const auto series = gf.series(kGenFunTerms + 1);
  std::string witness;
  if (series[0] != 0) witness = "constant term " + series[0].get_str();
  for (int k = 1; k <= kGenFunTerms && witness.empty(); ++k) {
    const Rational expected = b.evaluate(Rational(k));
    if (Rational(series[static_cast<std::size_t>(k)]) != expected) {
      witness = "k=" + std::to_string(k) + " series=" + series[static_cast<std::size_t>(k)].get_str() +
                " B_r=" + to_string(expected);
    }
  }
  if (witness.empty() && gf.pole_order != r) {
    witness = "pole order " + std::to_string(gf.pole_order);
  }
  return outcome("genfun r=" + std::to_string(r),
                 "series coefficients k=1.." + std::to_string(kGenFunTerms) + " match B_r; pole order r",
                 witness);
}

CheckResult check_hilbert(int n) {
  std::string witness;
  for (int k = 2; k <= n - 2 && witness.empty(); ++k) {
    const int r = n - k;
    const IntPolynomial h = h_polynomial(k, n);
    const IntPolynomial f = face_enumerator_closed(k, n);
    if (h.coefficient(static_cast<std::size_t>(r)) != beta_closed(k, n)) {
      witness = kn(k, n) + " h_r=" + h.coefficient(static_cast<std::size_t>(r)).get_str();
      break;
    }
    if (h.evaluate(BigInt(1)) != f.coefficient(static_cast<std::size_t>(r))) {
      witness = kn(k, n) + " h(1)=" + h.evaluate(BigInt(1)).get_str();
      break;
    }
    const auto series = hilbert_series(k, n).series(8);
    // Vertices 1 and n are not faces when r = 2.
    const int vertices = r >= 3 ? n : n - 2;
    if (series[1] != vertices) {
      witness = kn(k, n) + " t^1 coefficient " + series[1].get_str();
      break;
    }
    for (std::size_t d = 1; d < series.size(); ++d) {
      BigInt expected = 0;
      for (int p = 1; p <= r; ++p) {
        expected += f.coefficient(static_cast<std::size_t>(p)) * binomial(static_cast<int>(d) - 1, p - 1);
      }
      if (series[d] != expected) {
        witness = kn(k, n) + " t^" + std::to_string(d) + " coefficient " + series[d].get_str() +
                  ", face count gives " + expected.get_str();
        break;
      }
    }
  }
  return outcome("hilbert n=" + std::to_string(n),
                 "h_r equals beta, h(1) equals the facet count, t^1 counts vertices, Hilbert series matches faces through t^7",
                 witness);
}

// ---- orchestration --------------------------------------------------------

std::vector<CheckResult> run_tasks(const std::vector<Task>& tasks, unsigned threads) {
  std::vector<CheckResult> results(tasks.size());
  parallel_for(tasks.size(), threads, [&](std::size_t i) {
    try {
      results[i] = tasks[i]();
    } catch (const InternalError& e) {
      results[i] = CheckResult{"internal", false, "consistency check raised an error", e.what()};
    } catch (const VerificationFailure& e) {
      results[i] = CheckResult{"verification", false, "oracle raised a failure", e.what()};
    }
  });
  return results;
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void validate_primes(const std::vector<std::uint32_t>& primes) {
  if (primes.empty()) throw InvalidArgument("at least one prime is required");
  for (auto p : primes) require_prime(p);
}

}  // namespace

std::set<Scope> parse_scopes(std::string_view spec) {
  std::set<Scope> out;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t comma = std::min(spec.find(',', pos), spec.size());
    const std::string_view item = spec.substr(pos, comma - pos);
    if (item == "all") {
      out.insert(kAllScopes.begin(), kAllScopes.end());
    } else {
      bool found = false;
      for (Scope s : kAllScopes) {
        if (scope_name(s) == item) {
          out.insert(s);
          found = true;
        }
      }
      if (!found) {
        throw InvalidArgument("unknown scope '" + std::string(item) +
                              "' (profile, fvector, homology, recurrence, genfun, hilbert, all)");
      }
    }
    pos = comma + 1;
  }
  return out;
}

std::string_view scope_name(Scope s) {
  switch (s) {
    case Scope::kProfile: return "profile";
    case Scope::kFVector: return "fvector";
    case Scope::kHomology: return "homology";
    case Scope::kRecurrence: return "recurrence";
    case Scope::kGenFun: return "genfun";
    case Scope::kHilbert: return "hilbert";
  }
  return "?";
}

std::size_t RunReport::failed() const {
  std::size_t count = 0;
  for (const auto& c : checks) count += c.passed ? 0 : 1;
  return count;
}

RunReport run_verify(const VerifyOptions& options) {
  if (options.n_max < kVerifyMinN) {
    throw InvalidArgument("n_max must be at least " + std::to_string(kVerifyMinN));
  }
  if (options.n_max > kVerifyMaxN) {
    throw CapacityError("n_max is limited to " + std::to_string(kVerifyMaxN));
  }
  validate_primes(options.primes);
  std::set<Scope> scopes = options.scopes;
  if (scopes.empty()) scopes.insert(kAllScopes.begin(), kAllScopes.end());

  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.command = "verify";
  std::string scope_list;
  for (Scope s : scopes) {
    if (!scope_list.empty()) scope_list += ',';
    scope_list += scope_name(s);
  }
  report.parameters = {{"n_max", std::to_string(options.n_max)},
                       {"primes", join(options.primes)},
                       {"scope", scope_list}};

  std::vector<Task> tasks;
  const int n_max = options.n_max;
  if (scopes.count(Scope::kProfile) != 0) {
    for (int n = 4; n <= n_max; ++n) {
      for (int k = 2; k <= n - 2; ++k) tasks.emplace_back([=] { return check_profile(k, n); });
    }
  }
  if (scopes.count(Scope::kFVector) != 0) {
    for (int n = 4; n <= n_max; ++n) {
      for (int k = 2; k <= n - 2; ++k) tasks.emplace_back([=] { return check_fvector(k, n); });
    }
  }
  if (scopes.count(Scope::kHomology) != 0) {
    const int h_max = std::min(n_max, kHomologyMaxN);
    report.parameters.emplace_back("homology_n", "4.." + std::to_string(h_max));
    const auto primes = options.primes;
    for (int n = 5; n <= h_max; ++n) {
      for (int k = 2; k + 3 <= n; ++k) tasks.emplace_back([=] { return check_concentration(k, n, primes); });
    }
    for (int k = 2; k + 2 <= h_max; ++k) tasks.emplace_back([=] { return check_boundary_case(k, primes); });
  }
  if (scopes.count(Scope::kRecurrence) != 0) {
    report.parameters.emplace_back("recurrence_r", "3.." + std::to_string(kRecurrenceRMax));
    report.parameters.emplace_back("recurrence_k_max", std::to_string(kRecurrenceKMax));
    for (int r = 3; r <= kRecurrenceRMax; ++r) tasks.emplace_back([=] { return check_recurrence(r, kRecurrenceKMax); });
    for (int r = 3; r <= kSharpRMax; ++r) tasks.emplace_back([=] { return check_sharpness(r); });
  }
  if (scopes.count(Scope::kGenFun) != 0) {
    for (int r = 3; r <= kRecurrenceRMax; ++r) tasks.emplace_back([=] { return check_genfun(r); });
  }
  if (scopes.count(Scope::kHilbert) != 0) {
    report.parameters.emplace_back("hilbert_n", "4.." + std::to_string(kHilbertMaxN));
    for (int n = 4; n <= kHilbertMaxN; ++n) tasks.emplace_back([=] { return check_hilbert(n); });
  }

  report.checks = run_tasks(tasks, resolve_threads(options.threads));
  report.elapsed_ms = elapsed_since(start);
  return report;
}

RunReport run_seed_check(unsigned threads) {
  // beta(k, k+r) for r = 3..6 (rows) and k = 3..10 (columns).
  static constexpr std::array<std::array<int, 8>, 4> kSeedTable = {{
      {1, 3, 6, 10, 15, 21, 28, 36},
      {3, 11, 26, 50, 85, 133, 196, 276},
      {6, 25, 67, 145, 275, 476, 770, 1182},
      {10, 46, 136, 324, 674, 1274, 2240, 3720},
  }};
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.command = "seed-check";
  report.parameters = {{"table", "r=3..6 k=3..10"}, {"recurrence_r", "3..5"}, {"homology_n", "5..9"},
                       {"primes", "2,3"}};

  std::vector<Task> tasks;
  tasks.emplace_back([] {
    const BettiTable t = closed_form_table(3, 6, 3, 10);
    std::string witness;
    for (int r = 3; r <= 6 && witness.empty(); ++r) {
      for (int k = 3; k <= 10; ++k) {
        const int want = kSeedTable[static_cast<std::size_t>(r - 3)][static_cast<std::size_t>(k - 3)];
        if (t.at(k, r) != want) {
          witness = "r=" + std::to_string(r) + " k=" + std::to_string(k) + " got " + t.at(k, r).get_str();
          break;
        }
      }
    }
    return outcome("table r=3..6 k=3..10", "closed-form grid matches the reference values", witness);
  });
  tasks.emplace_back([] {
    std::string witness;
    for (int r = 3; r <= 6 && witness.empty(); ++r) {
      const RatPolynomial b = diagonal_poly(r);
      for (int k = 3; k <= 10; ++k) {
        if (b.evaluate(Rational(k)) != Rational(beta_closed(k, k + r))) {
          witness = "r=" + std::to_string(r) + " k=" + std::to_string(k);
          break;
        }
      }
    }
    return outcome("table polynomial r=3..6", "B_r(k) agrees with beta(k, k+r)", witness);
  });
  for (int r = 3; r <= 5; ++r) tasks.emplace_back([=] { return check_recurrence(r, kRecurrenceKMax); });
  const std::vector<std::uint32_t> primes{2, 3};
  for (int n = 5; n <= 9; ++n) {
    for (int k = 2; k + 3 <= n; ++k) tasks.emplace_back([=] { return check_concentration(k, n, primes); });
  }
  report.checks = run_tasks(tasks, resolve_threads(threads));
  report.elapsed_ms = elapsed_since(start);
  return report;
}

std::string render_report(const RunReport& report, Format format, bool timing) {
  const std::size_t failed = report.failed();
  const std::size_t total = report.checks.size();
  std::ostringstream ms;
  ms << std::fixed << std::setprecision(1) << report.elapsed_ms;

  if (format == Format::kJson) {
    Json params = Json::object();
    for (const auto& [key, value] : report.parameters) params[key] = value;
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      checks.push_back(Json{{"name", c.name},
                            {"status", c.passed ? "pass" : "fail"},
                            {"detail", c.detail},
                            {"witness", c.witness}});
    }
    Json out{{"command", report.command},
             {"parameters", params},
             {"checks", checks},
             {"summary", Json{{"checks", total}, {"passed", total - failed}, {"failed", failed}}}};
    if (timing) out["timing"] = Json{{"elapsed_ms", ms.str()}};
    return out.dump(2) + '\n';
  }

  std::string out;
  if (format == Format::kCsv) {
    out = "name,status,detail,witness\n";
    auto quote = [](const std::string& s) {
      std::string q = "\"";
      for (char c : s) {
        if (c == '"') q += '"';
        q += c;
      }
      return q + '"';
    };
    for (const auto& c : report.checks) {
      out += quote(c.name) + ',' + (c.passed ? "pass" : "fail") + ',' + quote(c.detail) + ',' +
             quote(c.witness) + '\n';
    }
  } else {
    out = report.command;
    for (const auto& [key, value] : report.parameters) out += ' ' + key + '=' + value;
    out += '\n';
    for (const auto& c : report.checks) {
      out += (c.passed ? "PASS " : "FAIL ") + c.name + ": " + c.detail;
      if (!c.passed) out += " [witness: " + c.witness + "]";
      out += '\n';
    }
    out += "summary: " + std::to_string(total) + " checks, " + std::to_string(total - failed) +
           " passed, " + std::to_string(failed) + " failed\n";
  }
  if (timing) out += "--\nelapsed_ms=" + ms.str() + '\n';
  return out;
}

}  // namespace cutcx
