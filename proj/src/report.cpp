#include "aitbench/report.hpp"

#include "json.hpp"

namespace aitbench {

void Report::add(const BitString& x, const BitString& y, std::string quantity, std::string value,
                 Certainty c) {
  rows.push_back({x.serialize(), y.serialize(), std::move(quantity), std::move(value), c});
}

void Report::add(std::string x, std::string y, std::string quantity, std::string value, Certainty c) {
  rows.push_back({std::move(x), std::move(y), std::move(quantity), std::move(value), c});
}

void Report::append(const Report& other) { rows.insert(rows.end(), other.rows.begin(), other.rows.end()); }

const ReportRow& Report::find(const std::string& x, const std::string& y,
                              const std::string& quantity) const {
  for (const ReportRow& r : rows) {
    if (r.x == x && r.y == y && r.quantity == quantity) return r;
  }
  throw Error(ErrorCode::InvalidArgument, "no row " + x + "," + y + "," + quantity);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string Report::to_csv() const {
  std::string out = "x,y,quantity,value,certainty\n";
  for (const ReportRow& r : rows) {
    out += csv_field(r.x) + ',' + csv_field(r.y) + ',' + csv_field(r.quantity) + ',' +
           csv_field(r.value) + ',' + std::string(to_string(r.certainty)) + '\n';
  }
  return out;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["title"] = title;
  j["rows"] = nlohmann::ordered_json::array();
  for (const ReportRow& r : rows) {
    j["rows"].push_back({{"x", r.x}, {"y", r.y}, {"quantity", r.quantity}, {"value", r.value},
                         {"certainty", std::string(to_string(r.certainty))}});
  }
  return j.dump(2) + "\n";
}

Certainty combine(Certainty a, Certainty b) {
  if (a == Certainty::Exact) return b;
  if (b == Certainty::Exact || a == b) return a;
  // Mixed bounds carry no direction; keep the first.
  return a;
}

}  // namespace aitbench
