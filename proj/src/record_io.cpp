#include "modjordan/record_io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "modjordan/error.hpp"

namespace modjordan {

using nlohmann::json;

namespace {

json params_json(const Params& p) { return json::array({p.r, p.s, p.p}); }

Params params_from(const json& j) {
  if (!j.is_array() || j.size() != 3) throw InvalidArgument("reduction parameters must be [r,s,p]");
  return {j.at(0).get<Int>(), j.at(1).get<Int>(), j.at(2).get<Int>()};
}

std::string render_params(const Params& p) { return render(std::vector<Int>{p.r, p.s, p.p}); }

std::string render_reductions(const std::vector<Reduction>& reds, std::string_view sep) {
  std::string out;
  for (const auto& red : reds) {
    if (!out.empty()) out += sep;
    out += std::string(to_string(red.kind)) + ":" + render_params(red.from) + "->" + render_params(red.to);
  }
  return out;
}

std::string quoted(const std::string& field) { return "\"" + field + "\""; }

Int two_pow_bound(Int r) { return r - 1 >= 63 ? -1 : (Int{1} << (r - 1)); }

}  // namespace

Format format_from_string(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json-lines") return Format::json_lines;
  if (name == "csv") return Format::csv;
  throw InvalidArgument("unknown format \"" + std::string(name) + "\"");
}

json record_to_json(const JordanRecord& rec) {
  json reds = json::array();
  for (const auto& red : rec.reductions) {
    reds.push_back({{"kind", to_string(red.kind)}, {"from", params_json(red.from)}, {"to", params_json(red.to)}});
  }
  return {{"r", rec.r},
          {"s", rec.s},
          {"p", rec.p},
          {"m", rec.m},
          {"lambda", rec.lambda.parts()},
          {"epsilon", rec.epsilon.entries()},
          {"method", to_string(rec.method)},
          {"reductions", reds}};
}

JordanRecord record_from_json(const json& j) {
  try {
    JordanRecord rec;
    rec.r = j.at("r").get<Int>();
    rec.s = j.at("s").get<Int>();
    rec.p = j.at("p").get<Int>();
    rec.m = j.at("m").get<int>();
    rec.lambda = Partition(j.at("lambda").get<std::vector<Int>>());
    rec.epsilon = DeviationVector(j.at("epsilon").get<std::vector<Int>>());
    rec.method = method_from_string(j.at("method").get<std::string>());
    for (const auto& red : j.at("reductions")) {
      rec.reductions.push_back({reduction_from_string(red.at("kind").get<std::string>()), params_from(red.at("from")),
                                params_from(red.at("to"))});
    }
    return rec;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed record: ") + e.what());
  }
}

std::string csv_record_header() { return "r,s,p,m,lambda,epsilon,method,reductions\n"; }

std::string format_record(const JordanRecord& rec, Format fmt) {
  std::ostringstream out;
  switch (fmt) {
    case Format::json_lines:
      out << record_to_json(rec).dump() << '\n';
      break;
    case Format::csv:
      out << rec.r << ',' << rec.s << ',' << rec.p << ',' << rec.m << ',' << quoted(render(rec.lambda)) << ','
          << quoted(render(rec.epsilon)) << ',' << to_string(rec.method) << ','
          << quoted(render_reductions(rec.reductions, ";")) << '\n';
      break;
    case Format::text: {
      const std::string args = "(" + std::to_string(rec.r) + "," + std::to_string(rec.s) + "," + std::to_string(rec.p) + ")";
      out << "lambda" << args << " = " << render(rec.lambda) << '\n'
          << "epsilon" << args << " = " << render(rec.epsilon) << '\n'
          << "m = " << rec.m << '\n'
          << "method = " << to_string(rec.method) << '\n'
          << "reductions = " << (rec.reductions.empty() ? "none" : render_reductions(rec.reductions, " ")) << '\n';
      break;
    }
  }
  return out.str();
}

std::string format_table(const DeviationTable& table, Format fmt) {
  std::ostringstream out;
  if (fmt == Format::json_lines) {
    for (const auto& row : table.rows) {
      out << json{{"r", table.r},
                  {"prime", row.prime},
                  {"generic", row.generic},
                  {"modulus", row.modulus},
                  {"residue", row.residue},
                  {"s", row.s},
                  {"epsilon", row.epsilon.entries()}}
                 .dump()
          << '\n';
    }
    return out.str();
  }
  if (fmt == Format::csv) {
    out << "r,prime,generic,modulus,residue,s,epsilon\n";
    for (const auto& row : table.rows) {
      out << table.r << ',' << row.prime << ',' << (row.generic ? "true" : "false") << ',' << row.modulus << ','
          << row.residue << ',' << row.s << ',' << quoted(render(row.epsilon)) << '\n';
    }
    return out.str();
  }

  // Grid layout: one line per prime, one column per residue class.
  std::vector<std::pair<std::string, std::map<Int, std::string>>> lines;
  Int max_residue = 0;
  Int generic_prime = 0;
  for (const auto& row : table.rows) {
    const std::string label = "eps(" + std::to_string(table.r) + ",s," + (row.generic ? std::string("p'") : std::to_string(row.prime)) + ")";
    if (lines.empty() || lines.back().first != label) lines.push_back({label, {}});
    lines.back().second[row.residue] = render(row.epsilon);
    max_residue = std::max(max_residue, row.residue);
    if (row.generic) generic_prime = row.prime;
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(max_residue + 2), 0);
  const std::string corner = "s mod p^m";
  width[0] = corner.size();
  for (const auto& [label, cells] : lines) {
    width[0] = std::max(width[0], label.size());
    for (const auto& [res, cell] : cells) {
      auto& w = width[static_cast<std::size_t>(res + 1)];
      w = std::max({w, cell.size(), std::to_string(res).size()});
    }
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - std::min(w, s.size()), ' '); };
  auto emit = [&](const std::string& first, auto cell_at) {
    std::string line = pad(first, width[0]);
    for (Int res = 0; res <= max_residue; ++res) line += " | " + pad(cell_at(res), width[static_cast<std::size_t>(res + 1)]);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  };
  emit(corner, [](Int res) { return std::to_string(res); });
  for (const auto& [label, cells] : lines) {
    emit(label, [&](Int res) {
      const auto it = cells.find(res);
      return it == cells.end() ? std::string() : it->second;
    });
  }
  out << "p' is any prime >= " << std::max<Int>(2 * table.r - 3, 2) << " (evaluated at p' = " << generic_prime
      << "); residue " << table.r - 1 << " of that row is the standard vector\n";
  return out.str();
}

std::string format_census(const DeviationCensus& census, Format fmt, bool list_vectors) {
  std::ostringstream out;
  const Int bound = two_pow_bound(census.r);
  const bool holds = check_bound(census);
  switch (fmt) {
    case Format::json_lines: {
      json j{{"r", census.r}, {"n", census.count()}, {"bound", bound}, {"holds", holds}, {"prime_bound", census.prime_bound}};
      if (list_vectors) {
        json vectors = json::array();
        for (const auto& e : census.entries) vectors.push_back({{"epsilon", e.epsilon.entries()}, {"s", e.s}, {"p", e.p}});
        j["vectors"] = vectors;
      }
      out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      if (list_vectors) {
        out << "r,epsilon,witness_s,witness_p\n";
        for (const auto& e : census.entries) out << census.r << ',' << quoted(render(e.epsilon)) << ',' << e.s << ',' << e.p << '\n';
      } else {
        out << "r,n,bound,holds,prime_bound\n"
            << census.r << ',' << census.count() << ',' << bound << ',' << (holds ? "true" : "false") << ','
            << census.prime_bound << '\n';
      }
      break;
    case Format::text:
      out << "r = " << census.r << '\n'
          << "n = " << census.count() << '\n'
          << "bound 2^(r-1) = " << bound << (holds ? " (holds)" : " (VIOLATED)") << '\n'
          << "prime bound = " << census.prime_bound << '\n';
      if (list_vectors) {
        for (const auto& e : census.entries) out << render(e.epsilon) << "  s=" << e.s << " p=" << e.p << '\n';
      }
      break;
  }
  return out.str();
}

}  // namespace modjordan
