#include "aitbench/machine.hpp"

#include <algorithm>
#include <cstring>

namespace aitbench {

std::string_view to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Success: return "success";
    case RunStatus::AbortEarlyHalt: return "abort-early-halt";
    case RunStatus::AbortInputUnderflow: return "abort-input-underflow";
    case RunStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

namespace {

std::uint64_t cost_of(Opcode op, std::size_t out_len) {
  return op == Opcode::Dup ? 1 + out_len : 1;
}

}  // namespace

std::uint64_t Execution::pending_cost() const noexcept {
  if (pc_ >= history_.size()) return 0;
  return cost_of(history_[pc_], output_.size());
}

namespace {

// Longest output we are willing to copy for a loop check.
constexpr std::size_t kSnapshotCap = 4096;

}  // namespace

// Right after a jump the output is nonempty and ends in 1. Replay the
// history from pc 0 knowing only that much: `top` holds the known last bits
// and `min_len` a lower bound on the output length. If
// some WHILE is forced to jump, every pass does the same and it never ends.
bool Execution::forced_rejump(std::size_t z_size) const {
  const bool aux_live = aux_head_ < z_size;
  std::string top = "1";
  std::uint64_t min_len = 1;
  for (Opcode op : history_) {
    switch (op) {
      case Opcode::Halt: return false;
      case Opcode::Zero: top.push_back('0'); ++min_len; break;
      case Opcode::One: top.push_back('1'); ++min_len; break;
      case Opcode::Aux:
        if (aux_live) return false;
        break;
      case Opcode::Dup: min_len = std::min<std::uint64_t>(2 * min_len, 1u << 20); break;
      case Opcode::Flip:
        if (top.empty()) return false;
        top.back() = top.back() == '1' ? '0' : '1';
        break;
      case Opcode::Chop:
        if (min_len == 0) return false;
        --min_len;
        if (!top.empty()) top.pop_back();
        break;
      case Opcode::While:
        if (top.empty()) return false;
        if (top.back() == '1') return true;
        break;
    }
  }
  return false;
}

// Between two consecutive jumps the machine used only ZERO/ONE/FLIP/CHOP/WHILE
// and no-op AUX, so it behaved as a stack machine that never looked below
// position min_len - 1. If the new output ends with the same top section the
// old one had from that position, every later pass repeats this one.
bool Execution::repeats_last_pass() const {
  if (!have_snapshot_ || !segment_clean_) return false;
  if (min_len_ == 0) return output_ == snapshot_;
  if (output_.size() < snapshot_.size()) return false;
  const std::size_t top = snapshot_.size() - (min_len_ - 1);
  return output_.compare(output_.size() - top, top, snapshot_, min_len_ - 1, top) == 0;
}

void Execution::on_jump(std::size_t z_size) {
  if (forced_rejump(z_size) || repeats_last_pass()) {
    state_ = State::Diverges;
    return;
  }
  have_snapshot_ = output_.size() <= kSnapshotCap;
  if (have_snapshot_) snapshot_ = output_;
  min_len_ = output_.size();
  segment_clean_ = true;
}

Execution::State Execution::advance(const BitString& p, const BitString& z,
                                    std::uint64_t budget) {
  if (state_ == State::Halted || state_ == State::EarlyHalt || state_ == State::Diverges) {
    return state_;
  }
  state_ = State::Running;
  for (;;) {
    if (pc_ == history_.size()) {
      if (consumed_ + 3 > p.size()) return state_ = State::Underflow;
      const unsigned code = (p[consumed_] ? 4U : 0U) | (p[consumed_ + 1] ? 2U : 0U) |
                            (p[consumed_ + 2] ? 1U : 0U);
      history_.push_back(static_cast<Opcode>(code));
      consumed_ += 3;
      segment_clean_ = false;
    }
    const Opcode op = history_[pc_];
    const std::uint64_t cost = cost_of(op, output_.size());
    if (steps_ + cost > budget) return state_ = State::OutOfBudget;
    steps_ += cost;
    ++pc_;
    switch (op) {
      case Opcode::Halt:
        return state_ = consumed_ == p.size() ? State::Halted : State::EarlyHalt;
      case Opcode::Zero: output_.push_back('0'); break;
      case Opcode::One: output_.push_back('1'); break;
      case Opcode::Aux:
        if (aux_head_ < z.size()) {
          output_.push_back(z[aux_head_++] ? '1' : '0');
          segment_clean_ = false;
        }
        break;
      case Opcode::Dup: {
        const std::size_t n = output_.size();
        output_.resize(2 * n);
        std::memcpy(output_.data() + n, output_.data(), n);
        segment_clean_ = false;
        break;
      }
      case Opcode::Flip:
        if (!output_.empty()) output_.back() = output_.back() == '1' ? '0' : '1';
        break;
      case Opcode::Chop:
        if (!output_.empty()) output_.pop_back();
        min_len_ = std::min(min_len_, output_.size());
        break;
      case Opcode::While:
        if (!output_.empty() && output_.back() == '1') {
          pc_ = 0;
          if (detect_loops_) {
            on_jump(z.size());
            if (state_ == State::Diverges) return state_;
          }
        }
        break;
    }
  }
}

ExecutionResult U0Machine::run(const BitString& p, const BitString& z,
                               std::uint64_t step_budget) const {
  Execution ex;
  ExecutionResult r;
  switch (ex.advance(p, z, step_budget)) {
    case Execution::State::Halted:
      r.status = RunStatus::Success;
      r.output = BitString(ex.output());
      r.steps = ex.steps();
      break;
    case Execution::State::EarlyHalt: r.status = RunStatus::AbortEarlyHalt; break;
    case Execution::State::Underflow: r.status = RunStatus::AbortInputUnderflow; break;
    default: r.status = RunStatus::BudgetExceeded; break;
  }
  r.steps_spent = ex.steps();
  r.consumed = ex.consumed();
  return r;
}

const U0Machine& u0() {
  static const U0Machine m;
  return m;
}

BitString assemble(const std::vector<Opcode>& ops) {
  BitString out;
  for (Opcode op : ops) out.append(BitString::from_value(static_cast<unsigned>(op), 3));
  return out;
}

BitString print_literal(const BitString& w) {
  std::vector<Opcode> ops;
  for (std::size_t i = 0; i < w.size(); ++i) ops.push_back(w[i] ? Opcode::One : Opcode::Zero);
  ops.push_back(Opcode::Halt);
  return assemble(ops);
}

}  // namespace aitbench
