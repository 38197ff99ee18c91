#pragma once

#include "aitbench/enumeration.hpp"
#include "aitbench/profile.hpp"
#include "aitbench/report.hpp"
#include "aitbench/table_store.hpp"

#include <optional>

namespace aitbench {

struct ShortestProgram {
  BitString program;
  std::size_t k = 0;
  std::uint64_t steps = 0;
  Certainty certainty = Certainty::Exact;
  // False when the program is the print-literal fallback, longer than the table.
  bool in_table = true;
};

// Shortest producer of x in t (z = t.z()); fastest among the shortest, then
// length-lex. Throws NotProducible.
ShortestProgram k_of(const BitString& x, const HaltingTable& t);
// As k_of, but falls back to the print-literal program (UpperBound) when the
// table holds no producer.
ShortestProgram k_upper(const BitString& x, const HaltingTable& t);

// Every known producer of x: the table's, plus the print literal when it is
// too long to be in the table. Each is (program, steps).
std::vector<std::pair<BitString, std::uint64_t>> known_producers(const BitString& x,
                                                                 const HaltingTable& t);

// Busy running time of a run time, on the unconditional busy beaver.
Measured brt(std::uint64_t rt, const HaltingTable& t_eps);

// min |p| over known producers with rt(p) <= B(i). Throws NotProducible.
Measured kt_of(const BitString& x, std::size_t i, const HaltingTable& t, const HaltingTable& t_eps);

struct TimeProfile {
  Profile profile;                // closure of (brt(p), |p|)
  std::vector<Certainty> flags;   // per generator: certainty of its brt
  ShortestProgram shortest;
  Profile depth;                  // profile translated down by K

  // Least i with (i, K + c) in the profile.
  Coord bdepth(Coord c) const { return *depth.y_graph().at(c); }
};

TimeProfile time_profile(const BitString& x, const HaltingTable& t, const HaltingTable& t_eps);

struct SignedMeasured {
  std::int64_t value = 0;
  Certainty certainty = Certainty::Exact;
};

// K(y) - K(y | x*).
SignedMeasured mutual_info(const BitString& x, const BitString& y, TableStore& store);

// K(x, y) is K of the pair code.
ShortestProgram k_pair(const BitString& x, const BitString& y, TableStore& store);

Report chain_rule_report(std::size_t n, TableStore& store);

struct ExpectedTheta {
  Dyadic value;
  Certainty certainty = Certainty::LowerBound;
};

// Sum of 2^-|p| theta(p) over Halted p (producers of x when given), on the
// clock of t's own sum.
ExpectedTheta expected_theta(const std::optional<BitString>& x, const HaltingTable& t);

Report depth_pair_report(std::size_t n, Coord eps, TableStore& store);

}  // namespace aitbench
