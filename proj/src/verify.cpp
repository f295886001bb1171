#include "modjordan/verify.hpp"

#include <algorithm>
#include <sstream>

#include "modjordan/delta.hpp"
#include "modjordan/error.hpp"
#include "modjordan/fastpath.hpp"
#include "modjordan/parallel.hpp"

namespace modjordan {

namespace {

enum Check : std::size_t {
  kOracleRecurrence,
  kOracleDispatcher,
  kBounds,
  kLargestPart,
  kUniformIff,
  kStandard,
  kClosedForm,
  kPeriodicity,
  kDuality,
  kPMultiple,
  kCheckCount
};

struct Outcome {
  Check check;
  bool violated;
  std::string detail;
};

struct CellResult {
  std::vector<Outcome> outcomes;
  Int partner_oracle = 0;
  Int partner_recurrence = 0;
};

std::string side_by_side(const std::string& lhs_name, const std::string& lhs, const std::string& rhs_name,
                     const std::string& rhs) {
  return lhs_name + "=" + lhs + " " + rhs_name + "=" + rhs;
}

CellResult check_cell(Int r, Int s, Int p, const VerifyOptions& opts) {
  CellResult out;
  auto record = [&](Check c, bool ok, std::string detail) {
    out.outcomes.push_back({c, !ok, ok ? std::string() : std::move(detail)});
  };
  auto partner = [&](Int rr, Int ss) {
    if (rr * ss <= std::min(opts.partner_oracle_budget, opts.oracle.ceiling)) {
      ++out.partner_oracle;
      return oracle_partition(rr, ss, p, opts.oracle);
    }
    ++out.partner_recurrence;
    return recurrence_partition(rr, ss, p);
  };

  const Partition oracle = oracle_partition(r, s, p, opts.oracle);
  const Partition recurrence = recurrence_partition(r, s, p);
  const JordanRecord dispatched = jordan_partition(r, s, p);
  const DeviationVector eps = deviation(oracle, s);
  record(kOracleRecurrence, oracle == recurrence, side_by_side("oracle", render(oracle), "recurrence", render(recurrence)));
  record(kOracleDispatcher, oracle == dispatched.lambda,
         side_by_side("oracle", render(oracle), "dispatcher", render(dispatched.lambda)));

  JordanRecord from_oracle{r, s, p, 0, oracle, eps, Method::oracle, {}};
  const auto problem = check_jordan_invariants(from_oracle);
  record(kBounds, problem.empty(), problem + " in " + render(oracle));

  const auto lp = largest_part(r, s, p);
  record(kLargestPart, lp.value == oracle[0] && lp.multiplicity == oracle.largest_multiplicity(),
         "predicted (" + std::to_string(lp.value) + " x" + std::to_string(lp.multiplicity) + ") for " + render(oracle));

  const Int q = period_for_rank(p, r).q;
  record(kUniformIff, eps.is_zero() == (s % q == 0), "eps=" + render(eps) + " with s mod p^m = " + std::to_string(s % q));

  if (standard_criterion(r, s, p)) {
    record(kStandard, oracle == standard_partition(r, s), "oracle=" + render(oracle) + " is not standard");
  }
  if (auto cf = closed_form(r, s, p)) {
    record(kClosedForm, cf->epsilon == eps, side_by_side("closed", render(cf->epsilon), "oracle", render(eps)));
  }

  const auto shifted = deviation(partner(r, s + q), s + q);
  record(kPeriodicity, shifted == eps, side_by_side("eps(s+p^m)", render(shifted), "eps(s)", render(eps)));

  Int dual_s = mod_floor(-s, q);
  while (dual_s < r) dual_s += q;
  const auto dual = deviation(partner(r, dual_s), dual_s);
  record(kDuality, dual == negative_reverse(eps),
         side_by_side("eps(" + std::to_string(dual_s) + ")", render(dual), "reverse(eps(s))", render(negative_reverse(eps))));

  const auto scaled = partner(p * r, p * s);
  const auto expected = k_multiple(oracle, p);
  record(kPMultiple, scaled == expected, side_by_side("lambda(pr,ps)", render(scaled), "p-multiple", render(expected)));
  return out;
}

}  // namespace

const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names{
      "oracle=recurrence", "oracle=dispatcher", "bounds",      "largest-part", "uniform-iff",
      "standard",          "closed-form",       "periodicity", "duality",      "p-multiple",
  };
  return names;
}

const CheckTally& VerifyReport::tally(const std::string& name) const {
  for (const auto& t : tallies) {
    if (t.name == name) return t;
  }
  throw InvalidArgument("unknown check " + name);
}

VerifyReport run_verification(const VerifyOptions& opts) {
  if (opts.r_max < 1 || opts.s_max < 1) throw InvalidArgument("verify: bounds must be >= 1");
  if (opts.primes.empty()) throw InvalidArgument("verify: no primes given");
  for (Int p : opts.primes) require_prime(p);
  const Int largest = checked_mul(std::min(opts.r_max, opts.s_max), opts.s_max);
  if (largest > opts.oracle.ceiling) {
    throw ResourceLimit("verify: grid cell with r*s = " + std::to_string(largest) + " exceeds oracle ceiling " +
                        std::to_string(opts.oracle.ceiling));
  }

  struct Cell {
    Int r, s, p;
  };
  std::vector<Cell> cells;
  for (Int p : opts.primes) {
    for (Int r = 1; r <= opts.r_max; ++r) {
      for (Int s = r; s <= opts.s_max; ++s) cells.push_back({r, s, p});
    }
  }
  std::vector<CellResult> results(cells.size());
  parallel_for(cells.size(), opts.threads,
               [&](std::size_t i) { results[i] = check_cell(cells[i].r, cells[i].s, cells[i].p, opts); });

  VerifyReport report;
  report.cells = static_cast<Int>(cells.size());
  for (const auto& name : verify_check_names()) report.tallies.push_back({name, 0, 0});
  for (std::size_t i = 0; i < cells.size(); ++i) {
    report.partner_oracle += results[i].partner_oracle;
    report.partner_recurrence += results[i].partner_recurrence;
    for (const auto& o : results[i].outcomes) {
      auto& t = report.tallies[o.check];
      ++t.evaluated;
      if (!o.violated) continue;
      ++t.violations;
      report.failures.push_back({cells[i].r, cells[i].s, cells[i].p, t.name, o.detail});
    }
  }
  return report;
}

std::string format_report(const VerifyReport& report, Format fmt) {
  std::ostringstream out;
  switch (fmt) {
    case Format::json_lines: {
      nlohmann::json checks = nlohmann::json::array();
      for (const auto& t : report.tallies) checks.push_back({{"check", t.name}, {"evaluated", t.evaluated}, {"violations", t.violations}});
      nlohmann::json failures = nlohmann::json::array();
      for (const auto& f : report.failures) {
        failures.push_back({{"r", f.r}, {"s", f.s}, {"p", f.p}, {"check", f.check}, {"detail", f.detail}});
      }
      out << nlohmann::json{{"cells", report.cells},
                            {"ok", report.ok()},
                            {"mismatches", report.failures.size()},
                            {"checks", checks},
                            {"failures", failures}}
                 .dump()
          << '\n';
      break;
    }
    case Format::csv:
      out << "r,s,p,check,detail\n";
      for (const auto& f : report.failures) out << f.r << ',' << f.s << ',' << f.p << ',' << f.check << ",\"" << f.detail << "\"\n";
      break;
    case Format::text:
      out << "cells: " << report.cells << '\n';
      for (const auto& t : report.tallies) {
        out << "  " << t.name << ": " << t.evaluated << " checked, " << t.violations << " violations\n";
      }
      out << "partners: " << report.partner_oracle << " by oracle, " << report.partner_recurrence << " by recurrence\n";
      for (const auto& f : report.failures) {
        out << "FAIL " << f.check << " (" << f.r << "," << f.s << "," << f.p << "): " << f.detail << '\n';
      }
      out << (report.ok() ? "pass" : "FAIL") << ", " << report.failures.size() << " mismatches\n";
      break;
  }
  return out.str();
}

}  // namespace modjordan
