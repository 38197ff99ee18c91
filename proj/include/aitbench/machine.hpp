#pragma once

#include "aitbench/bitstring.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace aitbench {

inline constexpr std::string_view kU0Version = "u0-v1";

enum class RunStatus { Success, AbortEarlyHalt, AbortInputUnderflow, BudgetExceeded };

std::string_view to_string(RunStatus s);

struct ExecutionResult {
  RunStatus status = RunStatus::BudgetExceeded;
  BitString output;              // Success only
  std::uint64_t steps = 0;       // exact cost; meaningful on Success
  std::uint64_t steps_spent = 0; // cost actually executed, any status
  std::size_t consumed = 0;      // program bits read

  bool success() const noexcept { return status == RunStatus::Success; }
};

// Anything that can run self-delimiting programs with an auxiliary string.
class PrefixMachine {
 public:
  virtual ~PrefixMachine() = default;
  virtual std::string_view version() const = 0;
  virtual ExecutionResult run(const BitString& p, const BitString& z,
                              std::uint64_t step_budget) const = 0;
};

enum class Opcode : std::uint8_t { Halt, Zero, One, Aux, Dup, Flip, Chop, While };

// Resumable U0 execution. The program is supplied on every call so a paused
// run (underflow or budget) can continue on a longer program or a larger
// budget without replaying anything.
class Execution {
 public:
  enum class State { Running, Halted, EarlyHalt, Underflow, OutOfBudget, Diverges };

  // With loop detection on, a replay loop that provably repeats forever ends
  // the run in State::Diverges instead of exhausting the budget.
  explicit Execution(bool detect_loops = false) : detect_loops_(detect_loops) {}

  // Advances until a terminal state, an input underflow, or until the next
  // instruction would push the cumulative cost past `budget`.
  State advance(const BitString& p, const BitString& z, std::uint64_t budget);

  State state() const noexcept { return state_; }
  std::uint64_t steps() const noexcept { return steps_; }
  std::size_t consumed() const noexcept { return consumed_; }
  const std::string& output() const noexcept { return output_; }
  // Cost of the next instruction if it is already decoded; 0 otherwise.
  std::uint64_t pending_cost() const noexcept;

 private:
  std::vector<Opcode> history_;
  std::size_t pc_ = 0;
  std::string output_;
  std::size_t aux_head_ = 0;
  std::size_t consumed_ = 0;
  std::uint64_t steps_ = 0;
  State state_ = State::Running;

  void on_jump(std::size_t z_size);
  bool forced_rejump(std::size_t z_size) const;
  bool repeats_last_pass() const;

  bool detect_loops_ = false;
  // Snapshot taken at the previous WHILE jump.
  bool have_snapshot_ = false;
  std::string snapshot_;
  std::size_t min_len_ = 0;
  bool segment_clean_ = false;  // no DUP, no fetch, no z bit read since the snapshot
};

class U0Machine final : public PrefixMachine {
 public:
  std::string_view version() const override { return kU0Version; }
  ExecutionResult run(const BitString& p, const BitString& z,
                      std::uint64_t step_budget) const override;
};

const U0Machine& u0();

// Program text for an opcode list, 3 bits each.
BitString assemble(const std::vector<Opcode>& ops);
// Shortest-form literal printer: one ZERO/ONE per bit, then HALT.
BitString print_literal(const BitString& w);

}  // namespace aitbench
