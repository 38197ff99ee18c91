#pragma once

#include "aitbench/bitstring.hpp"
#include "aitbench/error.hpp"

#include <string>
#include <vector>

namespace aitbench {

struct ReportRow {
  std::string x;
  std::string y;
  std::string quantity;
  std::string value;
  Certainty certainty = Certainty::Exact;
  bool operator==(const ReportRow&) const = default;
};

struct Report {
  std::string title;
  std::vector<ReportRow> rows;

  void add(const BitString& x, const BitString& y, std::string quantity, std::string value,
           Certainty c = Certainty::Exact);
  void add(std::string x, std::string y, std::string quantity, std::string value,
           Certainty c = Certainty::Exact);
  void append(const Report& other);
  // Value of the first row matching (x, y, quantity); throws InvalidArgument if absent.
  const ReportRow& find(const std::string& x, const std::string& y, const std::string& quantity) const;

  std::string to_csv() const;
  std::string to_json() const;
};

// Weakest of two certainties: Exact only when both are.
Certainty combine(Certainty a, Certainty b);

}  // namespace aitbench
