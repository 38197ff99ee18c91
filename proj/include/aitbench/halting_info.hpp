#pragma once

#include "aitbench/enumeration.hpp"
#include "aitbench/profile.hpp"

#include <optional>
#include <vector>

namespace aitbench {

// Longest output we accept as a reach witness beyond the certified prefix.
inline constexpr std::size_t kReachSlackBits = 8;

struct ReachPoint {
  Coord i = 0;
  Coord r = 0;
  Certainty certainty = Certainty::Exact;
  BitString witness;  // shortest program reaching r (empty when r = 0)
};

struct ReachCurve {
  std::vector<ReachPoint> points;  // i = 0 .. i_max
  Coord i_max = 0;

  // Up-left closure, mirrored (i -> i_max - i) into an up-right closed profile.
  Profile mirrored_profile() const;
};

// r(i): most certified Omega bits that a Halted program given z of length <= i
// prints as w = Omega_[r] beta with 0.w below the certified sum. Throws
// NotStabilized when t_eps certifies no bit.
ReachCurve reach_curve(const HaltingTable& t_z, const HaltingTable& t_eps, std::size_t i_max);
// Clock route: Omega bits stable at the j-step where i bits of Omega^z are.
ReachCurve reach_via_badger(const HaltingTable& t_z, const HaltingTable& t_eps);

// Closeness of the two routes, mirrored on a common i range.
Closeness reach_routes_closeness(const ReachCurve& by_definition, const ReachCurve& by_badger);

struct HmdPoint {
  Coord i = 0;
  Coord h = 0;  // r(i) - i
  Certainty certainty = Certainty::Exact;
};
std::vector<HmdPoint> hmd(const ReachCurve& reach);

// Step function h as (a_k, b_k): h jumps by b_k at i = a_0 + ... + a_k.
using StepSpec = std::vector<std::pair<Coord, Coord>>;

Coord step_value(const StepSpec& h, Coord i);
// 1-based Omega positions of block k: [A_k + B_{k-1}, A_k + B_k].
std::vector<Coord> gamma_positions(const StepSpec& h);
// The blocks' Omega bits, in order. Throws PrefixTooShort.
BitString build_gamma(const StepSpec& h, const HaltingTable& t_eps);
// Omega bits at positions <= i + h(i) outside every block.
BitString hole_advice(const StepSpec& h, Coord i, const HaltingTable& t_eps);
// Interleaves gamma and delta back into the first n Omega positions.
BitString reassemble(const StepSpec& h, const BitString& gamma, const BitString& delta, Coord n);

struct LateHalters {
  std::uint64_t count = 0;  // Halted, |p| <= k, steps > B(k - s)
  std::uint64_t threshold = 0;  // B(k - s)
  // ceil(log2 count) - s; absent when count is 0.
  std::optional<Coord> slack;
};
// Throws NotExact when any Unknown row has length <= k.
LateHalters late_halters(const HaltingTable& t, std::size_t k, Coord s);

// Position of x* counted from the slowest end among Halted rows of length
// <= K(x), sorted by (steps, length-lex). Throws NotExact.
std::uint64_t holographic_rank(const BitString& x, const HaltingTable& t);

}  // namespace aitbench
