#include "aitbench/enumeration.hpp"
#include "oracles.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <doctest.h>

#include <algorithm>
#include <map>
#include <sstream>

using namespace aitbench;
using Rational = boost::multiprecision::cpp_rational;

namespace {

struct OracleRow {
  oracle::Run run;
  std::size_t len;
};

// Every program of length <= L run on its own, with the dovetail's
// scheduling rule (p only starts at j-step |p|). A program too long to be
// scheduled still inherits the fate of a scheduled prefix that stopped
// reading input.
std::map<std::string, OracleRow> oracle_table(std::size_t L, const std::string& z, std::uint64_t J) {
  std::map<std::string, OracleRow> out;
  for (const auto& p : oracle::words(L)) {
    oracle::Run r;
    if (p.size() <= J) {
      r = oracle::run(p, z, J);
    } else {
      for (std::size_t len = 0; len <= J; ++len) {
        const oracle::Run q = oracle::run(p.substr(0, len), z, J);
        if (q.status == oracle::Status::Underflow) continue;
        if (q.status != oracle::Status::Budget) r.status = oracle::Status::EarlyHalt;
        break;
      }
    }
    out[p] = {r, p.size()};
  }
  return out;
}

Rational rat(const Dyadic& d) { return Rational(d.numerator()) / Rational(BigInt(1) << d.exponent()); }

BigInt floor_scaled(const Rational& r, std::uint32_t bits) {
  const Rational s = r * Rational(BigInt(1) << bits);
  return boost::multiprecision::numerator(s) / boost::multiprecision::denominator(s);
}

const HaltingTable& reference_table() {
  static const HaltingTable t = sweep(BitString(), {14, 100000});
  return t;
}

}  // namespace

TEST_CASE("sweep examples at L=3 and L=6") {
  const HaltingTable t3 = sweep(BitString(), {3, 1000000});
  REQUIRE(t3.halted().size() == 1);
  CHECK(t3.halted()[0]->program == BitString("000"));
  CHECK(t3.halted()[0]->steps == 1);
  CHECK(t3.final_m() == Dyadic::mass(3));

  const HaltingTable t6 = sweep(BitString(), {6, 1000000});
  std::vector<std::string> want{"000"};
  for (int op = 1; op < 8; ++op) {
    std::string p = "000000";
    for (int b = 0; b < 3; ++b) p[2 - b] = (op >> b) & 1 ? '1' : '0';
    want.push_back(p);
  }
  std::vector<std::string> got;
  for (const Row* r : t6.halted()) got.push_back(r->program.str());
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  CHECK(got == want);
  CHECK(t6.final_m() == Dyadic(BigInt(15), 6));
  CHECK(busy_beaver(t6, 3).value == 1);
  CHECK(busy_beaver(t6, 6).value == 2);
  CHECK(busy_beaver(t6, 6).certainty == Certainty::Exact);
}

TEST_CASE("sweep agrees with running every program separately") {
  for (const std::string z : {"", "1", "01"}) {
    for (std::uint64_t J : {2u, 5u, 1000u}) {
      for (bool loops : {false, true}) {
        const HaltingTable t = sweep(BitString(z), {12, J, loops});
        const auto ref = oracle_table(12, z, J);
        for (const Row& r : t.rows()) {
          const OracleRow& o = ref.at(r.program.str());
          switch (r.status) {
            case RowStatus::Halted:
              REQUIRE(o.run.status == oracle::Status::Success);
              CHECK(r.output.str() == o.run.output);
              CHECK(r.steps == o.run.steps);
              CHECK(std::max<std::uint64_t>(r.program.size(), r.steps) <= J);
              break;
            case RowStatus::Aborted:
              CHECK((o.run.status == oracle::Status::EarlyHalt || o.run.status == oracle::Status::Underflow));
              break;
            case RowStatus::Diverges:
              CHECK(loops);
              CHECK(o.run.status == oracle::Status::Budget);
              break;
            case RowStatus::Unknown:
              CHECK(o.run.status == oracle::Status::Budget);
              CHECK(r.steps == (r.program.size() <= J ? J : 0));
              break;
          }
        }
      }
    }
  }
}

TEST_CASE("Halted set is prefix-free and its mass is below one") {
  for (const std::string z : {"", "0", "1", "11", "010"}) {
    const HaltingTable t = sweep(BitString(z), {14, 100000});
    Dyadic sum;
    std::vector<BitString> h;
    for (const Row* r : t.halted()) {
      sum += Dyadic::mass(static_cast<std::uint32_t>(r->program.size()));
      h.push_back(r->program);
    }
    CHECK(sum < Dyadic::integer(1));
    CHECK(sum == t.final_m());
    for (const BitString& p : h) {
      for (std::size_t len = 0; len < p.size(); ++len) CHECK(!t.row(p.substr(0, len)).halted());
    }
  }
}

TEST_CASE("history is non-decreasing and matches halting j-steps") {
  const HaltingTable& t = reference_table();
  for (std::size_t k = 1; k < t.history().size(); ++k) {
    CHECK(t.history()[k - 1].j < t.history()[k].j);
    CHECK(t.history()[k - 1].m < t.history()[k].m);
  }
  for (std::uint64_t j : {0u, 1u, 2u, 3u, 5u, 9u, 12u, 100u}) {
    Rational m = 0;
    for (const Row* r : t.halted()) {
      if (halting_jstep(r->program.size(), r->steps) <= j) m += Rational(1, BigInt(1) << r->program.size());
    }
    CHECK(rat(t.m_at(j)) == m);
  }
}

TEST_CASE("worker count never changes the table") {
  for (const std::string z : {"", "10"}) {
    const HaltingTable a = sweep(BitString(z), {14, 100000}, 1);
    const HaltingTable b = sweep(BitString(z), {14, 100000}, 8);
    CHECK(a == b);
    std::ostringstream sa, sb;
    a.write(sa);
    b.write(sb);
    CHECK(sa.str() == sb.str());
  }
}

TEST_CASE("table files round trip and reject bad input") {
  const HaltingTable t = sweep(BitString("1"), {9, 50});
  std::stringstream ss;
  t.write(ss);
  const std::string text = ss.str();
  std::istringstream in(text);
  CHECK(HaltingTable::read(in) == t);

  std::string other = text;
  other.replace(other.find("u0-v1"), 5, "u0-v9");
  std::istringstream bad(other);
  try {
    HaltingTable::read(bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::VersionMismatch);
  }

  std::string broken = text;
  broken.replace(broken.find(" H "), 3, " X ");
  std::istringstream worse(broken);
  CHECK_THROWS_AS(HaltingTable::read(worse), Error);
}

TEST_CASE("resume equals a fresh sweep") {
  const HaltingTable small = sweep(BitString(), {6, 1000});
  CHECK(resume(small, {10, 1000}) == sweep(BitString(), {10, 1000}));
  CHECK(resume(small, {10, 5000}) == sweep(BitString(), {10, 5000}));
  try {
    resume(small, {6, 1000});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetNotLarger);
  }
  CHECK_THROWS_AS(resume(small, {5, 2000}), Error);
}

TEST_CASE("invalid budgets") {
  CHECK_THROWS_AS(sweep(BitString(), {2, 10}), Error);
  CHECK_THROWS_AS(sweep(BitString(), {5, 0}), Error);
}

TEST_CASE("omega certificate against a rational oracle") {
  for (bool loops : {false, true}) {
    for (std::size_t L : {6u, 9u, 12u, 14u}) {
      const HaltingTable t = sweep(BitString(), {L, 100000, loops});
      const OmegaApprox o = omega_approx(t);
      Rational m = 0, open = 0;
      std::vector<std::string> unknown;
      for (const Row& r : t.rows()) {
        if (r.halted()) m += Rational(1, BigInt(1) << r.program.size());
        if (r.status == RowStatus::Unknown) unknown.push_back(r.program.str());
      }
      // Unknown rows with no Unknown proper prefix.
      for (const auto& u : unknown) {
        bool minimal = true;
        for (const auto& v : unknown) {
          if (v.size() < u.size() && u.compare(0, v.size(), v) == 0) minimal = false;
        }
        if (minimal) open += Rational(1, BigInt(1) << u.size());
      }
      CHECK(rat(o.value) == m);
      CHECK(rat(o.unknown_mass) == open);
      std::uint32_t s = 0;
      while (s < L && m + open < Rational(floor_scaled(m, s + 1) + 1, BigInt(1) << (s + 1))) ++s;
      CHECK(o.stabilized_bits == s);
      CHECK((o.restricted_certainty == Certainty::Exact) == unknown.empty());
      CHECK(o.tail_mass >= o.unknown_mass);
      CHECK(o.unrestricted_stabilized_bits <= o.stabilized_bits);
      CHECK(o.certainty == Certainty::LowerBound);
    }
  }
}

TEST_CASE("reference budget with loop detection leaves nothing Unknown") {
  const HaltingTable& t = reference_table();
  CHECK(!t.has_unknown());
  CHECK(t.final_m() == Dyadic(BigInt(835), 11));
  CHECK(omega_approx(t).restricted_certainty == Certainty::Exact);
  const HaltingTable plain = sweep(BitString(), {14, 100000, false});
  CHECK(plain.has_unknown());
  CHECK(plain.shortest_unknown() == 6);
  CHECK(plain.halted().size() == t.halted().size());
  CHECK(busy_beaver(plain, 6).certainty == Certainty::LowerBound);
  CHECK(busy_beaver(plain, 5).certainty == Certainty::Exact);
}

TEST_CASE("busy beaver and its inverse against brute force") {
  const HaltingTable& t = reference_table();
  std::uint64_t best = 0;
  for (std::size_t n = 0; n <= 14; ++n) {
    for (const Row* r : t.halted()) {
      if (r->program.size() == n) best = std::max(best, r->steps);
    }
    CHECK(busy_beaver(t, n).value == best);
  }
  CHECK_THROWS_AS(busy_beaver(t, 15), Error);
  for (std::uint64_t steps = 1; steps <= 8; ++steps) {
    std::size_t shortest = 99;
    for (const Row* r : t.halted()) {
      if (r->steps >= steps) shortest = std::min(shortest, r->program.size());
    }
    if (shortest == 99) {
      CHECK_THROWS_AS(inverse_busy_beaver(t, steps), Error);
      CHECK(inverse_busy_beaver_bound(t, steps).value == 15);
      CHECK(inverse_busy_beaver_bound(t, steps).certainty == Certainty::LowerBound);
    } else {
      CHECK(inverse_busy_beaver(t, steps).value == shortest);
    }
  }
  CHECK(busy_beaver(t, 3).value == 1);
  CHECK(busy_beaver(t, 6).value == 2);
}

TEST_CASE("badger against brute force and B(i) <= badger(i)") {
  for (const std::string z : {"", "1", "00"}) {
    for (bool loops : {false, true}) {
      const HaltingTable t = sweep(BitString(z), {14, 100000, loops});
      const OmegaApprox o = omega_approx(t);
      const auto table = badger_table(t);
      REQUIRE(table.size() == o.stabilized_bits + 1);
      for (std::uint32_t i = 0; i <= o.stabilized_bits; ++i) {
        std::uint64_t j = 1;
        while (t.m_at(j).scaled_floor(i) != o.value.scaled_floor(i)) ++j;
        CHECK(badger(t, i) == j);
        CHECK(table[i] == j);
        if (i <= 14) CHECK(busy_beaver(t, i).value <= j);
      }
      CHECK_THROWS_AS(badger(t, o.stabilized_bits + 1), Error);
    }
  }
}

TEST_CASE("clock time never exceeds busy running time") {
  for (const std::string z : {"", "0", "101"}) {
    const HaltingTable t = sweep(BitString(z), {14, 100000});
    for (const Row* r : t.halted()) {
      const Measured th = clock_time(t, r->program);
      const Measured tau = inverse_busy_beaver_bound(t, r->steps);
      CHECK(th.value <= tau.value);
    }
  }
  CHECK(clock_time(reference_table(), BitString("000")).value == 0);
  CHECK_THROWS_AS(clock_time(reference_table(), BitString("001")), Error);
}

TEST_CASE("dovetailer reproduces the table's history") {
  const HaltingTable& t = reference_table();
  Dovetailer d(BitString(), 14, 100000);
  std::vector<BitString> seen;
  while (d.step()) {
    CHECK(d.m() == t.m_at(d.j()));
    for (std::size_t k = d.halted_count() - d.last_batch(); k < d.halted_count(); ++k) {
      const Row& r = t.row(d.halted()[k]);
      CHECK(r.halted());
      CHECK(d.halted_steps()[k] == r.steps);
      CHECK(halting_jstep(r.program.size(), r.steps) == d.j());
    }
    if (d.m() == t.final_m()) break;
  }
  CHECK(d.halted_count() == t.halted().size());
}

TEST_CASE("halting sets recovered from Omega bits and from counts") {
  for (const std::string z : {"", "1"}) {
    const HaltingTable t = sweep(BitString(z), {12, 100000});
    const OmegaApprox o = omega_approx(t);
    for (std::uint32_t s = 1; s <= o.stabilized_bits; ++s) {
      std::vector<BitString> want;
      for (const Row* r : t.halted()) {
        if (r->program.size() <= s) want.push_back(r->program);
      }
      CHECK(halting_from_omega(t, o.prefix().substr(0, s)) == want);
    }
    for (std::size_t j = 3; j <= 12; ++j) {
      std::vector<BitString> want;
      for (const Row* r : t.halted()) {
        if (r->program.size() <= j) want.push_back(r->program);
      }
      CHECK(halting_from_count(t, j, want.size()) == want);
      CHECK_THROWS_AS(halting_from_count(t, j, want.size() + 1), Error);
    }
  }
}
