#include "nichols/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "nichols/errors.hpp"

namespace nichols {

bool CheckReport::operator==(const CheckReport& o) const {
  return check == o.check && group == o.group && params == o.params && status == o.status &&
         witness == o.witness && elapsed_ms == o.elapsed_ms && sizes == o.sizes;
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["group"] = r.group;
  j["params"] = r.params;
  j["status"] = r.passed() ? "pass" : "fail";
  if (!r.witness.empty()) j["witness"] = r.witness;
  j["elapsed_ms"] = r.elapsed_ms;
  j["sizes"] = r.sizes;
  return j;
}

CheckReport report_from_json(const nlohmann::json& j) {
  CheckReport r;
  try {
    r.check = j.at("check").get<std::string>();
    r.group = j.at("group").get<std::string>();
    r.params = j.at("params");
    const auto s = j.at("status").get<std::string>();
    if (s != "pass" && s != "fail") throw ParseError("bad status '" + s + "'");
    r.status = s == "pass" ? Status::Pass : Status::Fail;
    if (j.contains("witness")) r.witness = j["witness"].get<std::string>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    r.sizes = j.at("sizes");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
  return r;
}

Format parse_format(const std::string& s) {
  if (s == "pretty") return Format::Pretty;
  if (s == "json") return Format::Json;
  if (s == "tsv") return Format::Tsv;
  throw ParseError("unknown format '" + s + "' (pretty, json, tsv)");
}

namespace {

std::string tsv_cell(std::string s) {
  std::replace(s.begin(), s.end(), '\t', ' ');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

void print_reports(std::ostream& os, const std::vector<CheckReport>& reports, Format f) {
  switch (f) {
    case Format::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      os << arr.dump(2) << "\n";
      break;
    }
    case Format::Tsv:
      os << "check\tgroup\tstatus\telapsed_ms\tparams\tsizes\twitness\n";
      for (const auto& r : reports)
        os << r.check << '\t' << r.group << '\t' << (r.passed() ? "pass" : "fail") << '\t' << r.elapsed_ms << '\t'
           << r.params.dump() << '\t' << r.sizes.dump() << '\t' << tsv_cell(r.witness) << "\n";
      break;
    case Format::Pretty:
      for (const auto& r : reports) {
        os << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(22) << r.check << ' ' << std::setw(8)
           << r.group << ' ' << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms";
        os.unsetf(std::ios::floatfield);
        if (!r.params.empty()) os << "  " << r.params.dump();
        if (!r.sizes.empty()) os << "  " << r.sizes.dump();
        os << "\n";
        if (!r.witness.empty()) os << "     witness: " << r.witness << "\n";
      }
      break;
  }
}

void print_table(std::ostream& os, const Table& t, Format f) {
  switch (f) {
    case Format::Json: {
      nlohmann::json j = t.meta;
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& r : t.rows) {
        nlohmann::json o;
        for (std::size_t k = 0; k < t.header.size() && k < r.size(); ++k) o[t.header[k]] = r[k];
        rows.push_back(o);
      }
      j["rows"] = rows;
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Tsv: {
      for (std::size_t k = 0; k < t.header.size(); ++k) os << (k ? "\t" : "") << t.header[k];
      os << "\n";
      for (const auto& r : t.rows) {
        for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "\t" : "") << tsv_cell(r[k]);
        os << "\n";
      }
      break;
    }
    case Format::Pretty: {
      for (const auto& [k, v] : t.meta.items()) os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      std::vector<std::size_t> width(t.header.size());
      for (std::size_t k = 0; k < t.header.size(); ++k) width[k] = t.header[k].size();
      for (const auto& r : t.rows)
        for (std::size_t k = 0; k < r.size() && k < width.size(); ++k) width[k] = std::max(width[k], r[k].size());
      auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t k = 0; k < r.size(); ++k) {
          os << (k ? "  " : "");
          if (k + 1 < r.size()) os << std::left << std::setw(static_cast<int>(width[k])) << r[k];
          else os << r[k];
        }
        os << "\n";
      };
      if (!t.header.empty()) line(t.header);
      for (const auto& r : t.rows) line(r);
      break;
    }
  }
}

}  // namespace nichols
