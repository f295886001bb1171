// modjordan: Jordan partitions of J_r (x) J_s in characteristic p.
//
//   modjordan compute R S P [--method auto|oracle|recurrence|closed]
//   modjordan table R
//   modjordan count R [--prime-bound B] [--list]
//   modjordan verify R_MAX S_MAX P1,P2,...
//
// Common flags: --format text|json-lines|csv, --oracle-ceiling N, --threads N
// (default from MODJORDAN_THREADS). Exit codes: 0 ok, 1 verification
// mismatch, 2 usage, 3 resource guard or overflow, 4 inapplicable --method.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "modjordan/error.hpp"
#include "modjordan/fastpath.hpp"
#include "modjordan/parallel.hpp"
#include "modjordan/record_io.hpp"
#include "modjordan/survey.hpp"
#include "modjordan/verify.hpp"

namespace {

using modjordan::Int;

enum Exit : int { kOk = 0, kMismatch = 1, kUsage = 2, kResource = 3, kInapplicable = 4 };

modjordan::Engine engine_from(const std::string& name) {
  if (name == "auto") return modjordan::Engine::automatic;
  if (name == "oracle") return modjordan::Engine::oracle;
  if (name == "recurrence") return modjordan::Engine::recurrence;
  if (name == "closed") return modjordan::Engine::closed;
  throw modjordan::InvalidArgument("unknown method \"" + name + "\"");
}

std::vector<Int> parse_primes(const std::string& list) {
  std::vector<Int> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    Int value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw modjordan::InvalidArgument("bad prime list \"" + list + "\"");
    out.push_back(value);
  }
  if (out.empty()) throw modjordan::InvalidArgument("empty prime list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jordan partitions of tensor products of unipotent Jordan blocks in characteristic p"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  Int oracle_ceiling = modjordan::OracleOptions{}.ceiling;
  unsigned threads = modjordan::default_thread_count();
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json-lines", "csv"}));
  app.add_option("--oracle-ceiling", oracle_ceiling, "Largest r*s the brute-force oracle will attempt");
  app.add_option("--threads", threads, std::string("Worker threads (default from ") + modjordan::kThreadsEnv + ")");

  Int r = 0, s = 0, p = 0;
  std::string method = "auto";
  auto* compute = app.add_subcommand("compute", "Compute lambda(r,s,p) and its deviation vector");
  compute->add_option("r", r)->required();
  compute->add_option("s", s)->required();
  compute->add_option("p", p, "Prime characteristic, or 0")->required();
  compute->add_option("--method", method, "Engine")->check(CLI::IsMember({"auto", "oracle", "recurrence", "closed"}));

  Int table_r = 0;
  auto* table = app.add_subcommand("table", "Deviation vectors for every residue class and prime, for fixed r");
  table->add_option("r", table_r)->required();

  Int count_r = 0;
  Int prime_bound = 0;
  bool list = false;
  auto* count = app.add_subcommand("count", "Number of distinct deviation vectors for fixed r");
  count->add_option("r", count_r)->required();
  count->add_option("--prime-bound", prime_bound, "Largest prime enumerated explicitly (default 3r)");
  count->add_flag("--list", list, "List every vector with a witness (s, p)");

  Int r_max = 0, s_max = 0;
  std::string prime_list;
  auto* verify = app.add_subcommand("verify", "Cross-check oracle, recurrence and dispatcher over a grid");
  verify->add_option("r_max", r_max)->required();
  verify->add_option("s_max", s_max)->required();
  verify->add_option("primes", prime_list, "Comma-separated primes")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const auto fmt = modjordan::format_from_string(format_name);
    if (threads == 0) throw modjordan::InvalidArgument("--threads must be >= 1");
    if (oracle_ceiling < 1) throw modjordan::InvalidArgument("--oracle-ceiling must be >= 1");
    modjordan::OracleOptions oracle{oracle_ceiling};

    if (*compute) {
      modjordan::DispatchOptions opts{engine_from(method), oracle};
      const auto rec = modjordan::jordan_partition(r, s, p, opts);
      if (fmt == modjordan::Format::csv) std::cout << modjordan::csv_record_header();
      std::cout << modjordan::format_record(rec, fmt);
      return kOk;
    }
    if (*table) {
      std::cout << modjordan::format_table(modjordan::deviation_table(table_r, threads), fmt);
      return kOk;
    }
    if (*count) {
      if (count_r < 1) throw modjordan::InvalidArgument("r must be >= 1");
      const Int bound = prime_bound == 0 ? modjordan::default_prime_bound(count_r) : prime_bound;
      const auto census = modjordan::enumerate_deviation_vectors(count_r, bound, threads);
      std::cout << modjordan::format_census(census, fmt, list);
      return kOk;
    }
    modjordan::VerifyOptions opts;
    opts.r_max = r_max;
    opts.s_max = s_max;
    opts.primes = parse_primes(prime_list);
    opts.oracle = oracle;
    opts.threads = threads;
    const auto report = modjordan::run_verification(opts);
    std::cout << modjordan::format_report(report, fmt);
    return report.ok() ? kOk : kMismatch;
  } catch (const modjordan::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const modjordan::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const modjordan::OverflowError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const modjordan::Inapplicable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInapplicable;
  }
}
