// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Tolerances and runtime budgets are the contract values; nothing is relaxed here.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "process.hpp"
#include "qsum/eps_series.hpp"
#include "qsum/gen_function.hpp"
#include "qsum/power_sums.hpp"
#include "qsum/q_bernoulli.hpp"
#include "qsum/text_format.hpp"

#ifndef QSUM_CLI_PATH
#error "QSUM_CLI_PATH must point at the qsum executable"
#endif

namespace {

using namespace qsum;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> body;
};

std::string cell(unsigned a, unsigned b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

Outcome power_sum_oracles() {
  unsigned recurrence = 0, closed_forms = 0;
  for (unsigned n = 0; n <= 10; ++n) {
    for (unsigned k = 0; k <= 10; ++k) {
      if (s_direct(n, k) != s_recurrence(n, k)) return {false, "recurrence differs at " + cell(n, k)};
      ++recurrence;
    }
  }
  for (unsigned k = 0; k <= 10; ++k) {
    const RatFunc closed[] = {s_closed_1(k), s_closed_2(k), s_closed_3(k)};
    for (unsigned n = 1; n <= 3; ++n) {
      if (closed[n - 1] != RatFunc(s_direct(n, k))) return {false, "closed form differs at " + cell(n, k)};
      ++closed_forms;
    }
  }
  return {true, std::to_string(recurrence) + " recurrence + " + std::to_string(closed_forms) +
                    " closed-form exact equalities"};
}

Outcome master_recurrence() {
  unsigned cells = 0;
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned k = 0; k <= 8; ++k) {
      if (!verify_master_recurrence(n, k).holds()) return {false, "fails at " + cell(n, k)};
      ++cells;
    }
  }
  return {true, std::to_string(cells) + " cells"};
}

Outcome sum_formula_sign() {
  for (unsigned n = 1; n <= 8; ++n) {
    for (unsigned k = 2; k <= 8; ++k) {
      if (!verify_thmA(n, k).corrected.holds()) return {false, "corrected variant fails at " + cell(n, k)};
    }
  }
  const ThmAReport r = verify_thmA(1, 2);
  if (r.printed.holds()) return {false, "printed variant unexpectedly holds at (1,2)"};
  return {true, "corrected 56/56; printed at (1,2): lhs " + render_text(r.printed.lhs) + " vs rhs " +
                    render_text(r.printed.rhs)};
}

Outcome bernoulli_cross_oracle() {
  const BernoulliTable a = bern_recursion(12);
  const BernoulliTable b = bern_series(12);
  for (unsigned n = 0; n <= 12; ++n) {
    if (a[n] != b[n]) return {false, "entry " + std::to_string(n) + " differs"};
    if (a[n].l_degree() > 1) return {false, "entry " + std::to_string(n) + " has L-degree > 1"};
  }
  return {true, "13 entries equal, L-degree <= 1"};
}

Outcome sum_bernoulli_identity(bool corrected) {
  const BernoulliTable t = bern_recursion(8);
  unsigned failures = 0;
  std::string first;
  for (unsigned l = 1; l <= 8; ++l) {
    for (unsigned k = 2; k <= 6; ++k) {
      const IdentityCheck a = corrected ? verify_thmB_corrected(l, k, t) : verify_thmB(l, k, t);
      const IdentityCheck b =
          corrected ? verify_thmB_intro_form_corrected(l, k, t) : verify_thmB_intro_form(l, k, t);
      const bool ok = a.holds() && b.holds() && a.rhs == b.rhs;
      if (!ok) {
        if (failures == 0) {
          first = "first failure " + cell(l, k) + ": lhs " + render_text(a.lhs) + " vs rhs " +
                  render_text(a.rhs);
        }
        ++failures;
      }
    }
  }
  if (failures == 0) return {true, "40/40 cells, both forms agree"};
  return {false, std::to_string(failures) + "/40 cells fail; " + first};
}

Outcome distribution() {
  for (unsigned n = 0; n <= 6; ++n) {
    for (unsigned m = 1; m <= 4; ++m) {
      if (!verify_distribution(n, m).holds()) return {false, "fails at " + cell(n, m)};
    }
  }
  return {true, "28 polynomial identities in x"};
}

Outcome classical_limits() {
  // independent oracle: B_0 = 1, sum_{j<=n} C(n+1, j) B_j = 0
  std::vector<Rational> oracle{Rational(1)};
  for (unsigned n = 1; n <= 10; ++n) {
    Rational acc = 0;
    for (unsigned j = 0; j < n; ++j) acc += Rational(binomial(n + 1, j)) * oracle[j];
    oracle.push_back(-acc / Rational(n + 1));
  }
  const BernoulliTable t = bern_recursion(10);
  std::vector<Rational> limits;
  for (unsigned n = 0; n <= 10; ++n) {
    limits.push_back(limit_q1(t[n]));
    if (limits[n] != oracle[n]) {
      return {false, "limit of B_" + std::to_string(n) + " is " + render_rational(limits[n]) +
                         ", oracle " + render_rational(oracle[n])};
    }
  }
  if (limits[1] != make_rational(-1, 2) || limits[2] != make_rational(1, 6) ||
      limits[10] != make_rational(5, 66)) {
    return {false, "named values differ"};
  }
  auto classical_poly = [&](unsigned n, const Rational& x) {
    Rational out = 0;
    for (unsigned j = 0; j <= n; ++j) out += Rational(binomial(n, j)) * limits[j] * pow(x, n - j);
    return out;
  };
  for (unsigned l = 1; l <= 8; ++l) {
    for (unsigned k = 0; k <= 8; ++k) {
      const Rational lhs = s_classical_limit(l - 1, k);
      const Rational rhs = (classical_poly(l, k) - classical_poly(l, 0)) / Rational(l);
      if (lhs != rhs) return {false, "remark fails at " + cell(l, k)};
      if (k >= 2 && !verify_thmB_classical(l, k).holds()) {
        return {false, "q -> 1 limit of the identity fails at " + cell(l, k)};
      }
    }
  }
  return {true, "B_0..B_10 match oracle; remark holds on 72 cells"};
}

Outcome generating_function() {
  GfPoint p;
  p.q0 = 0.5;
  p.t0 = 0.1;
  p.x0 = 0.0;
  p.n_terms = 200;
  const double diff = std::abs(gf_partial_sum(p) - gf_closed(p));
  if (!(diff < 1e-9)) return {false, "partial-sum difference " + std::to_string(diff)};
  std::ostringstream detail;
  detail << "|partial - closed| = " << diff;
  for (double q0 : {0.3, 0.5, 0.7}) {
    const TaylorReport r = gf_taylor_check(q0, 4, 1e-5);
    detail << "; q0=" << q0 << " max rel " << r.max_rel_error;
    if (!r.passed()) return {false, detail.str()};
  }
  return {true, detail.str()};
}

Outcome cli_contract() {
  using qsum::testing::run_process;
  const std::string exe = QSUM_CLI_PATH;
  const auto ok = run_process(exe, {"sum", "--n", "1", "--k", "3"});
  if (ok.exit_code != 0 || ok.out != "q + 2*q^2\n") return {false, "sum --n 1 --k 3 gave " + ok.out};
  const auto fail = run_process(exe, {"verify", "--identity", "thmA-printed", "--n", "1", "--k", "2"});
  if (fail.exit_code != 1 || fail.out.find("lhs: q") == std::string::npos ||
      fail.out.find("rhs: -1 + 2*q") == std::string::npos) {
    return {false, "identity failure path: exit " + std::to_string(fail.exit_code)};
  }
  const auto usage = run_process(exe, {"table", "--kind", "bernoulli", "--nmax", "65"});
  if (usage.exit_code != 2 || usage.err.empty()) return {false, "usage path: exit " + std::to_string(usage.exit_code)};

  const std::vector<std::string> args{"table", "--kind", "bernoulli", "--nmax", "8", "--format", "json"};
  const auto first = run_process(exe, args);
  const auto second = run_process(exe, args);
  if (first.out != second.out) return {false, "repeated invocation differs"};

  const auto doc = nlohmann::json::parse(first.out);
  unsigned round_trips = 0;
  for (unsigned n = 0; n <= 8; ++n) {
    const auto text = run_process(exe, {"bernoulli", "--n", std::to_string(n)});
    const std::string printed = text.out.substr(0, text.out.size() - 1);
    const std::string canonical = doc["entries"][n]["value"].get<std::string>();
    if (render_canonical(parse_ratfunc(printed)) != canonical) {
      return {false, "text output of B_" + std::to_string(n) + " does not round-trip"};
    }
    ++round_trips;
  }
  for (unsigned n = 0; n <= 4; ++n) {
    for (unsigned k = 1; k <= 4; ++k) {
      const auto text = run_process(exe, {"sum", "--n", std::to_string(n), "--k", std::to_string(k)});
      if (RatFunc(s_direct(n, k)) != parse_ratfunc(text.out.substr(0, text.out.size() - 1))) {
        return {false, "sum text does not round-trip at " + cell(n, k)};
      }
      ++round_trips;
    }
  }
  return {true, "exit codes 0/1/2 observed; " + std::to_string(round_trips) +
                    " round trips; byte-identical reruns"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1", "power-sum oracle equivalence", 5.0, power_sum_oracles},
      {"2", "master recurrence for S_n", 5.0, master_recurrence},
      {"3", "sum formula: corrected holds, printed fails at (1,2)", 5.0, sum_formula_sign},
      {"4", "q-Bernoulli recursion vs series inversion", 10.0, bernoulli_cross_oracle},
      {"5", "power-sum/Bernoulli identity as stated, both forms", 30.0,
       [] { return sum_bernoulli_identity(false); }},
      {"5b", "power-sum/Bernoulli identity, corrected coefficients", 30.0,
       [] { return sum_bernoulli_identity(true); }},
      {"6", "distribution relation", 30.0, distribution},
      {"7", "classical limits and power-sum remark", 10.0, classical_limits},
      {"8", "generating-function numerics", 5.0, generating_function},
      {"9", "CLI contract", 5.0, cli_contract},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs >= c.budget_seconds) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(c.budget_seconds) + " s budget";
    }
    all = all && o.pass;
    std::printf("%s criterion %-3s %-55s %7.3fs  %s\n", o.pass ? "PASS" : "FAIL", c.id.c_str(),
                c.name.c_str(), secs, o.detail.c_str());
  }
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
