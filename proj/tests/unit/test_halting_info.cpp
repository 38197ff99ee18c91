#include "aitbench/complexity.hpp"
#include "aitbench/halting_info.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace aitbench;

namespace {

const HaltingTable& t_eps() {
  static const HaltingTable t = sweep(BitString(), {14, 100000});
  return t;
}

bool length_lex_less(const BitString& a, const BitString& b) {
  return a.size() != b.size() ? a.size() < b.size() : a.str() < b.str();
}

}  // namespace

TEST_CASE("reach curve against a brute-force search") {
  const OmegaApprox o = omega_approx(t_eps());
  const std::string omega = o.prefix().str();
  const std::size_t s_max = omega.size();
  for (const std::string z : {"", "1", "101"}) {
    const HaltingTable tz = sweep(BitString(z), {12, 100000});
    const ReachCurve c = reach_curve(tz, t_eps(), 12);
    REQUIRE(c.points.size() == 13);
    Coord prev = 0;
    for (std::size_t i = 0; i <= 12; ++i) {
      Coord want = 0;
      for (const auto& p : oracle::words(i)) {
        const oracle::Run r = oracle::run(p, z, 100000);
        if (r.status != oracle::Status::Success || r.output.size() > s_max + kReachSlackBits) continue;
        std::size_t s = 0;
        while (s < std::min(r.output.size(), s_max) && r.output[s] == omega[s]) ++s;
        // 0.w must stay below the certified sum.
        Dyadic w;
        for (std::size_t b = 0; b < r.output.size(); ++b) {
          if (r.output[b] == '1') w += Dyadic::mass(static_cast<std::uint32_t>(b + 1));
        }
        if (s > 0 && w < o.value) want = std::max<Coord>(want, static_cast<Coord>(s));
      }
      const ReachPoint& pt = c.points[i];
      CHECK(pt.i == static_cast<Coord>(i));
      CHECK(pt.r == want);
      CHECK(pt.r >= prev);
      CHECK(pt.r <= static_cast<Coord>(s_max));
      if (pt.r > 0) {
        CHECK(pt.witness.size() <= i);
        CHECK(tz.row(pt.witness).halted());
      }
      prev = pt.r;
    }
    const auto h = hmd(c);
    for (std::size_t i = 0; i < h.size(); ++i) CHECK(h[i].h == c.points[i].r - c.points[i].i);
  }
  CHECK_THROWS_AS(reach_curve(t_eps(), t_eps(), 15), Error);
}

TEST_CASE("badger route against its definition") {
  for (const std::string z : {"", "0", "11"}) {
    const HaltingTable tz = sweep(BitString(z), {14, 100000});
    const ReachCurve c = reach_via_badger(tz, t_eps());
    const auto bz = badger_table(tz), be = badger_table(t_eps());
    REQUIRE(c.points.size() == bz.size());
    for (std::size_t i = 0; i < bz.size(); ++i) {
      Coord want = 0;
      for (std::size_t s = 0; s < be.size(); ++s) {
        if (be[s] <= bz[i]) want = static_cast<Coord>(s);
      }
      CHECK(c.points[i].r == want);
    }
    const Closeness self = reach_routes_closeness(c, c);
    CHECK(self == Closeness{0, 0});
  }
}

TEST_CASE("step functions, blocks and holes") {
  CHECK(step_value({{2, 3}, {4, 1}}, 0) == 0);
  CHECK(step_value({{2, 3}, {4, 1}}, 2) == 3);
  CHECK(step_value({{2, 3}, {4, 1}}, 5) == 3);
  CHECK(step_value({{2, 3}, {4, 1}}, 6) == 4);
  CHECK(gamma_positions({{2, 3}, {4, 1}}) == std::vector<Coord>{2, 3, 4, 5, 9, 10});
  CHECK(gamma_positions({{0, 2}}) == std::vector<Coord>{1, 2});
  CHECK_THROWS_AS(gamma_positions({{1, 1}, {0, 1}}), Error);
  CHECK_THROWS_AS(gamma_positions({{-1, 1}}), Error);
  CHECK_THROWS_AS(gamma_positions({{1, -1}}), Error);

  const std::string omega = omega_approx(t_eps()).prefix().str();
  const auto n_bits = static_cast<Coord>(omega.size());
  std::mt19937_64 rng(31);
  int built = 0;
  // Each build reads the certified prefix afresh, so keep the case count modest.
  for (int c = 0; c < 300; ++c) {
    StepSpec h;
    const std::size_t blocks = 1 + rng() % 3;
    for (std::size_t k = 0; k < blocks; ++k) {
      h.emplace_back(static_cast<Coord>(rng() % 4) + (k == 0 ? 0 : 1), static_cast<Coord>(rng() % 4));
    }
    // Brute-force step value and block positions.
    for (Coord i = 0; i <= 16; ++i) {
      Coord a = 0, b = 0;
      for (const auto& [da, db] : h) {
        a += da;
        if (a <= i) b += db;
      }
      REQUIRE(step_value(h, i) == b);
    }
    std::vector<Coord> pos;
    Coord a = 0, b = 0;
    for (const auto& [da, db] : h) {
      a += da;
      for (Coord p = a + b; p <= a + b + db; ++p) {
        if (p >= 1) pos.push_back(p);
      }
      b += db;
    }
    REQUIRE(gamma_positions(h) == pos);
    if (!pos.empty() && pos.back() > n_bits) {
      CHECK_THROWS_AS(build_gamma(h, t_eps()), Error);
      continue;
    }
    const BitString gamma = build_gamma(h, t_eps());
    CHECK(gamma.size() == pos.size());
    for (Coord i = 0; i <= 10; ++i) {
      const Coord n = i + step_value(h, i);
      if (n > n_bits) {
        CHECK_THROWS_AS(hole_advice(h, i, t_eps()), Error);
        continue;
      }
      const BitString delta = hole_advice(h, i, t_eps());
      const auto inside = std::count_if(pos.begin(), pos.end(), [n](Coord p) { return p <= n; });
      CHECK(static_cast<Coord>(delta.size()) == n - inside);
      CHECK(reassemble(h, gamma, delta, n).str() == omega.substr(0, static_cast<std::size_t>(n)));
      ++built;
    }
  }
  CHECK(built > 100);
}

TEST_CASE("late halters against brute force") {
  const HaltingTable& t = t_eps();
  for (std::size_t k = 0; k <= 14; ++k) {
    for (Coord s = 0; s <= static_cast<Coord>(k); ++s) {
      const LateHalters lh = late_halters(t, k, s);
      std::uint64_t bb = 0;
      for (const Row* r : t.halted()) {
        if (r->program.size() <= k - static_cast<std::size_t>(s)) bb = std::max(bb, r->steps);
      }
      std::uint64_t count = 0;
      for (const Row* r : t.halted()) {
        if (r->program.size() <= k && r->steps > bb) ++count;
      }
      CHECK(lh.threshold == bb);
      CHECK(lh.count == count);
      if (count == 0) {
        CHECK(!lh.slack);
      } else {
        Coord lg = 0;
        while ((std::uint64_t{1} << lg) < count) ++lg;
        CHECK(*lh.slack == lg - s);
      }
    }
  }
  CHECK_THROWS_AS(late_halters(t, 3, 4), Error);
  const HaltingTable plain = sweep(BitString(), {14, 100000, false});
  CHECK_NOTHROW(late_halters(plain, 5, 1));
  try {
    late_halters(plain, 6, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotExact);
  }
}

TEST_CASE("holographic rank counts from the slowest end") {
  const HaltingTable& t = t_eps();
  for (const auto& x : oracle::words(3)) {
    const ShortestProgram xs = k_of(BitString(x), t);
    const Row& me = t.row(xs.program);
    std::uint64_t want = 0;
    for (const Row* r : t.halted()) {
      if (r->program.size() > xs.k) continue;
      if (r->steps > me.steps || (r->steps == me.steps && !length_lex_less(r->program, me.program))) ++want;
    }
    CHECK(holographic_rank(BitString(x), t) == want);
  }
  const HaltingTable plain = sweep(BitString(), {14, 100000, false});
  CHECK_THROWS_AS(holographic_rank(BitString("0"), plain), Error);
  CHECK_NOTHROW(holographic_rank(BitString(), plain));
}
