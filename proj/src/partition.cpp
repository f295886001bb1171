#include "modjordan/partition.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "modjordan/error.hpp"

namespace modjordan {

namespace {

bool weakly_decreasing(const std::vector<Int>& v) {
  return std::is_sorted(v.begin(), v.end(), std::greater<>{});
}

constexpr std::array<std::pair<Method, std::string_view>, 6> kMethodNames{{
    {Method::oracle, "oracle"},
    {Method::recurrence, "recurrence"},
    {Method::closed_form, "closed-form"},
    {Method::standard, "standard"},
    {Method::uniform, "uniform"},
    {Method::char_zero, "char-zero"},
}};

constexpr std::array<std::pair<ReductionKind, std::string_view>, 4> kReductionNames{{
    {ReductionKind::swap, "swap"},
    {ReductionKind::periodicity, "periodicity"},
    {ReductionKind::duality, "duality"},
    {ReductionKind::p_multiple, "p-multiple"},
}};

}  // namespace

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
  if (!weakly_decreasing(parts_)) throw InvalidArgument("partition parts must be weakly decreasing");
  if (!parts_.empty() && parts_.back() < 1) throw InvalidArgument("partition parts must be positive");
}

Int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), Int{0}); }

Int Partition::largest_multiplicity() const {
  if (parts_.empty()) return 0;
  return std::count(parts_.begin(), parts_.end(), parts_.front());
}

DeviationVector::DeviationVector(std::vector<Int> entries) : entries_(std::move(entries)) {
  if (!weakly_decreasing(entries_)) throw InvalidArgument("deviation vector must be weakly decreasing");
}

Int DeviationVector::sum() const { return std::accumulate(entries_.begin(), entries_.end(), Int{0}); }

bool DeviationVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Int e) { return e == 0; });
}

DeviationVector deviation(const Partition& lambda, Int s) {
  std::vector<Int> out;
  out.reserve(lambda.length());
  for (Int part : lambda.parts()) out.push_back(part - s);
  return DeviationVector(std::move(out));
}

Partition from_deviation(const DeviationVector& eps, Int s) {
  std::vector<Int> out;
  out.reserve(eps.length());
  for (Int e : eps.entries()) out.push_back(checked_add(s, e));
  return Partition(std::move(out));
}

DeviationVector negative_reverse(const DeviationVector& eps) {
  std::vector<Int> out(eps.entries().rbegin(), eps.entries().rend());
  for (Int& e : out) e = -e;
  return DeviationVector(std::move(out));
}

Partition k_multiple(const Partition& lambda, Int k) {
  if (k < 1) throw InvalidArgument("k_multiple: k must be >= 1");
  std::vector<Int> out;
  out.reserve(lambda.length() * static_cast<std::size_t>(k));
  for (Int part : lambda.parts()) {
    const Int scaled = checked_mul(part, k);
    out.insert(out.end(), static_cast<std::size_t>(k), scaled);
  }
  return Partition(std::move(out));
}

Partition standard_partition(Int r, Int s) {
  if (r < 1 || r > s) throw InvalidArgument("standard_partition: need 1 <= r <= s");
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(r));
  for (Int i = 1; i <= r; ++i) out.push_back(r + s + 1 - 2 * i);
  return Partition(std::move(out));
}

Partition uniform_partition(Int r, Int s) {
  if (r < 1 || s < 1) throw InvalidArgument("uniform_partition: need r, s >= 1");
  return Partition(std::vector<Int>(static_cast<std::size_t>(r), s));
}

DeviationVector standard_vector(Int r) {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(r));
  for (Int i = 1; i <= r; ++i) out.push_back(r + 1 - 2 * i);
  return DeviationVector(std::move(out));
}

std::string render(std::span<const Int> values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  out += ')';
  return out;
}

std::string render(const DeviationVector& eps) { return render(eps.entries()); }
std::string render(const Partition& lambda) { return render(lambda.parts()); }

std::vector<Int> parse_rendered(std::string_view text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw InvalidArgument("expected \"(a,b,...)\", got \"" + std::string(text) + "\"");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<Int> out;
  if (text.empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    const auto field = text.substr(0, comma);
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
      throw InvalidArgument("bad integer \"" + std::string(field) + "\"");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string_view to_string(Method m) {
  for (const auto& [key, name] : kMethodNames) {
    if (key == m) return name;
  }
  return "unknown";
}

Method method_from_string(std::string_view name) {
  for (const auto& [key, n] : kMethodNames) {
    if (n == name) return key;
  }
  throw InvalidArgument("unknown method \"" + std::string(name) + "\"");
}

std::string_view to_string(ReductionKind k) {
  for (const auto& [key, name] : kReductionNames) {
    if (key == k) return name;
  }
  return "unknown";
}

ReductionKind reduction_from_string(std::string_view name) {
  for (const auto& [key, n] : kReductionNames) {
    if (n == name) return key;
  }
  throw InvalidArgument("unknown reduction \"" + std::string(name) + "\"");
}

std::string check_jordan_invariants(const JordanRecord& rec) {
  const auto& lam = rec.lambda;
  const auto& eps = rec.epsilon;
  if (rec.r > rec.s) return "r > s";
  if (static_cast<Int>(lam.length()) != rec.r) return "lambda has " + std::to_string(lam.length()) + " parts, expected r";
  if (lam.sum() != rec.r * rec.s) return "lambda sums to " + std::to_string(lam.sum()) + ", expected rs";
  if (lam[0] < rec.s || lam[0] > rec.r + rec.s - 1) return "largest part outside [s, r+s-1]";
  if (eps.length() != lam.length()) return "epsilon length differs from lambda";
  for (std::size_t i = 0; i < lam.length(); ++i) {
    if (lam[i] != rec.s + eps[i]) return "lambda_i != s + eps_i at i=" + std::to_string(i + 1);
    if (std::llabs(eps[i]) > rec.r - 1) return "|eps_i| > r-1 at i=" + std::to_string(i + 1);
  }
  return {};
}

}  // namespace modjordan
