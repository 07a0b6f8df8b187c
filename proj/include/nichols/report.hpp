#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace nichols {

enum class Status { Pass, Fail };

struct CheckReport {
  std::string check;
  std::string group;
  nlohmann::json params = nlohmann::json::object();
  Status status = Status::Pass;
  std::string witness;  // empty on pass
  double elapsed_ms = 0;
  nlohmann::json sizes = nlohmann::json::object();

  bool passed() const { return status == Status::Pass; }
  void fail(std::string w) {
    status = Status::Fail;
    if (witness.empty()) witness = std::move(w);
  }
  bool operator==(const CheckReport& o) const;
};

nlohmann::json to_json(const CheckReport& r);
CheckReport report_from_json(const nlohmann::json& j);

enum class Format { Pretty, Json, Tsv };
Format parse_format(const std::string& s);

void print_reports(std::ostream& os, const std::vector<CheckReport>& reports, Format f);

// Generic table output shared by the non-check subcommands.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  nlohmann::json meta = nlohmann::json::object();
};
void print_table(std::ostream& os, const Table& t, Format f);

}  // namespace nichols
