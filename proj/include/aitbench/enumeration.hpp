#pragma once

#include "aitbench/bitstring.hpp"
#include "aitbench/dyadic.hpp"
#include "aitbench/error.hpp"
#include "aitbench/machine.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace aitbench {

struct Budget {
  std::size_t max_len = 3;          // L
  std::uint64_t max_jsteps = 1;     // J
  // Mark replay loops that provably never end as Diverges instead of
  // leaving them Unknown. Off gives the plain budget-only sweep.
  bool loop_check = true;
  bool operator==(const Budget&) const = default;
};

// Aborted: early halt or input underflow. Diverges: caught in a replay loop
// that never ends (loop_check only). Unknown: budget ran out.
enum class RowStatus : std::uint8_t { Halted, Aborted, Diverges, Unknown };

struct Row {
  BitString program;
  RowStatus status = RowStatus::Unknown;
  std::uint64_t steps = 0;  // rt for Halted, steps spent for Unknown and Diverges
  BitString output;         // Halted only

  bool halted() const noexcept { return status == RowStatus::Halted; }
  bool operator==(const Row&) const = default;
};

struct HistoryPoint {
  std::uint64_t j = 0;
  Dyadic m;
  bool operator==(const HistoryPoint&) const = default;
};

// j-step at which a program first halts under the dovetail schedule.
inline std::uint64_t halting_jstep(std::size_t length, std::uint64_t steps) {
  return std::max<std::uint64_t>(length, steps);
}

struct Measured {
  std::uint64_t value = 0;
  Certainty certainty = Certainty::Exact;
  bool operator==(const Measured&) const = default;
};

class HaltingTable {
 public:
  HaltingTable() = default;
  HaltingTable(BitString z, Budget budget, std::vector<Row> rows,
               std::string machine_version = std::string(kU0Version));

  const std::string& machine_version() const noexcept { return version_; }
  const BitString& z() const noexcept { return z_; }
  const Budget& budget() const noexcept { return budget_; }
  std::size_t max_len() const noexcept { return budget_.max_len; }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  const std::vector<HistoryPoint>& history() const noexcept { return history_; }

  // Rows are stored in length-lex order, so the rank is the index.
  const Row& row(const BitString& p) const;
  // Halted rows in length-lex order.
  const std::vector<const Row*>& halted() const noexcept { return halted_; }
  // Halted rows whose output is w, length-lex order.
  const std::vector<const Row*>& producers(const BitString& w) const;

  bool has_unknown() const noexcept { return unknown_count_ > 0; }
  std::size_t unknown_count() const noexcept { return unknown_count_; }
  // Shortest Unknown row length, or max_len + 1 if there is none.
  std::size_t shortest_unknown() const noexcept { return shortest_unknown_; }

  Dyadic final_m() const;
  Dyadic m_at(std::uint64_t j) const;

  bool operator==(const HaltingTable& other) const {
    return version_ == other.version_ && z_ == other.z_ && budget_ == other.budget_ &&
           rows_ == other.rows_ && history_ == other.history_;
  }

  void write(std::ostream& os) const;
  static HaltingTable read(std::istream& is);
  void save(const std::string& path) const;
  static HaltingTable load(const std::string& path);

 private:
  void index();

  std::string version_ = std::string(kU0Version);
  BitString z_;
  Budget budget_;
  std::vector<Row> rows_;
  std::vector<HistoryPoint> history_;
  std::vector<const Row*> halted_;
  std::unordered_map<BitString, std::vector<const Row*>> by_output_;
  std::size_t unknown_count_ = 0;
  std::size_t shortest_unknown_ = 0;
};

// Exhaustive sweep of all programs with |p| <= L, each given the j-step
// budget J. `jobs` only changes how subtrees are scheduled, never the table.
HaltingTable sweep(const BitString& z, Budget budget, unsigned jobs = 1);
HaltingTable resume(const HaltingTable& from, Budget budget, unsigned jobs = 1);

struct OmegaApprox {
  Dyadic value;                 // final M
  // Against the sum over |p| <= L.
  Dyadic unknown_mass;          // mass of Unknown rows with no Unknown proper prefix
  std::uint32_t stabilized_bits = 0;
  Certainty restricted_certainty = Certainty::LowerBound;
  // Against the full sum, where every open length-L branch may still halt.
  Dyadic tail_mass;
  std::uint32_t unrestricted_stabilized_bits = 0;
  Certainty certainty = Certainty::LowerBound;

  // First `stabilized_bits` bits of the value.
  BitString prefix() const;
};

OmegaApprox omega_approx(const HaltingTable& t);
// Largest s <= cap with value + slack < next multiple of 2^-s above value.
std::uint32_t certified_bits(const Dyadic& value, const Dyadic& slack, std::uint32_t cap);

Measured busy_beaver(const HaltingTable& t, std::size_t n);
// min |p| over Halted rows with steps >= n_steps. Throws NotWitnessed.
Measured inverse_busy_beaver(const HaltingTable& t, std::uint64_t n_steps);
// Same, but reports L + 1 as a LowerBound when nothing is that slow.
Measured inverse_busy_beaver_bound(const HaltingTable& t, std::uint64_t n_steps);

// Smallest j >= 1 whose M(j) agrees with the final sum on i bits.
// Throws NotStabilized beyond the certified prefix.
std::uint64_t badger(const HaltingTable& t, std::uint32_t i);
std::vector<std::uint64_t> badger_table(const HaltingTable& t);

// Time on the clock of table t: least certified i with badger(i) >= rt.
// LowerBound with value stabilized_bits + 1 when no certified i qualifies.
Measured clock_of_time(const std::vector<std::uint64_t>& badgers, std::uint64_t rt);
Measured clock_time(const HaltingTable& t, const BitString& p);

// Literal j-step dovetailer: every program of length <= max_len starts at
// j = |p| and at j-step j has received a cumulative budget of j.
class Dovetailer {
 public:
  Dovetailer(const BitString& z, std::size_t max_len, std::uint64_t max_jsteps);

  // Runs the next j-step that changes anything. Returns false once every
  // program is decided or the next event lies beyond max_jsteps.
  bool step();

  std::uint64_t j() const noexcept { return j_; }
  const Dyadic& m() const noexcept { return m_; }
  std::size_t halted_count() const noexcept { return halted_.size(); }
  // Programs halted so far, in halting order (ties length-lex).
  const std::vector<BitString>& halted() const noexcept { return halted_; }
  const std::vector<std::uint64_t>& halted_steps() const noexcept { return steps_; }
  // Programs that halted during the last step().
  std::size_t last_batch() const noexcept { return last_batch_; }

 private:
  BitString z_;
  std::uint64_t max_jsteps_;
  std::uint64_t j_ = 0;
  Dyadic m_;
  std::vector<BitString> programs_;
  std::vector<Execution> runs_;
  std::vector<std::pair<std::uint64_t, std::size_t>> heap_;
  std::vector<BitString> halted_;
  std::vector<std::uint64_t> steps_;
  std::size_t last_batch_ = 0;
};

// Halted set among |p| <= |prefix|, recovered from Omega bits alone.
std::vector<BitString> halting_from_omega(const HaltingTable& t, const BitString& omega_prefix);
// Halted set among |p| <= j, recovered from their count.
std::vector<BitString> halting_from_count(const HaltingTable& t, std::size_t j,
                                          std::uint64_t count);

}  // namespace aitbench
