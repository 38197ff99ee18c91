#include "aitbench/algostats.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace aitbench;

namespace {

constexpr std::size_t kL = 12;
constexpr std::uint64_t kJ = 100000;

TableStore& store() {
  static TableStore s(Budget{kL, kJ});
  return s;
}

// Reads 1^k 0 bin(n) with bin(n) exactly k bits and no leading zero.
std::optional<std::uint64_t> read_header(const std::string& s, std::size_t& pos) {
  std::size_t k = 0;
  while (pos < s.size() && s[pos] == '1') ++k, ++pos;
  if (pos == s.size()) return std::nullopt;
  ++pos;
  if (pos + k > s.size() || (k > 0 && s[pos] != '1') || k > 40) return std::nullopt;
  std::uint64_t n = 0;
  for (std::size_t b = 0; b < k; ++b) n = 2 * n + (s[pos++] - '0');
  return n;
}

bool length_lex_less(const std::string& a, const std::string& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

std::optional<std::vector<std::string>> oracle_decode(const std::string& s) {
  std::size_t pos = 0;
  const auto count = read_header(s, pos);
  if (!count || *count > s.size()) return std::nullopt;
  std::vector<std::string> out;
  for (std::uint64_t k = 0; k < *count; ++k) {
    const auto len = read_header(s, pos);
    if (!len || pos + *len > s.size()) return std::nullopt;
    std::string e = s.substr(pos, *len);
    pos += *len;
    if (!out.empty() && !length_lex_less(out.back(), e)) return std::nullopt;
    out.push_back(e);
  }
  if (pos != s.size()) return std::nullopt;
  return out;
}

std::size_t ceil_log(std::size_t n) {
  std::size_t b = 0;
  while ((std::size_t{1} << b) < n) ++b;
  return b;
}

}  // namespace

TEST_CASE("set encoding round trips and rejects non-canonical codes") {
  std::mt19937_64 rng(21);
  const auto pool = oracle::words(4);
  for (int c = 0; c < 3000; ++c) {
    std::vector<BitString> elems;
    const std::size_t n = rng() % 6;
    for (std::size_t k = 0; k < n; ++k) elems.emplace_back(pool[rng() % pool.size()]);
    const BitString code = encode_set(elems);
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    const auto back = decode_set(code);
    REQUIRE(back);
    CHECK(*back == elems);
    CHECK(!decode_set(code + BitString("0")));
  }
  // Every short word decodes exactly when the independent decoder says so.
  for (const auto& w : oracle::words(14)) {
    const auto mine = decode_set(BitString(w));
    const auto ref = oracle_decode(w);
    REQUIRE(mine.has_value() == ref.has_value());
    if (!ref) continue;
    std::vector<std::string> got;
    for (const BitString& e : *mine) got.push_back(e.str());
    CHECK(got == *ref);
  }
  CHECK(encode_set({}) == BitString("0"));
  CHECK(encode_set({BitString()}) == BitString("1010"));
}

TEST_CASE("models against a brute-force scan of printed sets") {
  for (const std::string z : {"", "1"}) {
    const HaltingTable& t = store().get(BitString(z));
    for (const auto& x : oracle::words(3)) {
      std::set<std::string> want;
      for (const auto& p : oracle::words(kL)) {
        const oracle::Run r = oracle::run(p, z, kJ);
        if (r.status != oracle::Status::Success) continue;
        const auto elems = oracle_decode(r.output);
        if (elems && std::find(elems->begin(), elems->end(), x) != elems->end()) want.insert(r.output);
      }
      const auto models = models_of(BitString(x), t);
      std::set<std::string> got;
      for (const Model& m : models) {
        CHECK(m.contains(BitString(x)));
        CHECK(m.encoding == encode_set(m.elements));
        CHECK(m.log_card == ceil_log(m.elements.size()));
        if (m.in_table && m.certainty == Certainty::Exact) got.insert(m.encoding.str());
      }
      for (const auto& w : want) CHECK(got.count(w) == 1);
      // The two fallbacks are always present.
      std::vector<BitString> cube;
      for (const auto& w : oracle::words(x.size())) {
        if (w.size() == x.size()) cube.emplace_back(w);
      }
      const BitString singleton = encode_set({BitString(x)});
      const BitString all = encode_set(cube);
      CHECK(std::any_of(models.begin(), models.end(), [&](const Model& m) { return m.encoding == singleton; }));
      CHECK(std::any_of(models.begin(), models.end(), [&](const Model& m) { return m.encoding == all; }));
      CHECK(std::is_sorted(models.begin(), models.end(), [](const Model& a, const Model& b) {
        return std::tie(a.k, a.log_card, a.encoding) < std::tie(b.k, b.log_card, b.encoding);
      }));
    }
  }
}

TEST_CASE("two-part descriptions run back to x") {
  for (const std::string z : {"", "1"}) {
    const HaltingTable& t = store().get(BitString(z));
    for (const auto& x : oracle::words(3)) {
      for (const Model& m : models_of(BitString(x), t)) {
        const BitString d = two_part(m, BitString(x));
        CHECK(d.size() == kModelTag.size() + m.k + m.log_card);
        const auto back = run_two_part(d, BitString(z), kJ);
        REQUIRE(back);
        CHECK(*back == BitString(x));
        // Index bits beyond the set size are rejected.
        CHECK(!run_two_part(d + BitString("0"), BitString(z), kJ));
      }
      const Model single = models_of(BitString(x), t).front();
      CHECK_THROWS_AS(two_part(single, BitString(x + "0000")), Error);
    }
  }
  CHECK(!run_two_part(BitString("110000"), BitString(), kJ));
  CHECK(!run_two_part(BitString("11"), BitString(), kJ));
}

TEST_CASE("sophistication is read off the Y-graph of the translated profile") {
  for (const auto& x : oracle::words(3)) {
    const HaltingTable& t = store().unconditional();
    const DescProfile d = desc_profile(BitString(x), t);
    const auto models = models_of(BitString(x), t);
    const auto K = static_cast<Coord>(d.shortest.k);
    std::vector<std::pair<int, int>> pts;
    for (const Model& m : models) pts.emplace_back(m.k, m.k + m.log_card + 3);
    std::vector<std::pair<int, int>> gens;
    for (const Point& p : d.lambda.generators()) gens.emplace_back(p.i, p.psi);
    CHECK(gens == oracle::minimal_points(oracle::close(pts, 128)));
    Coord best_c = kNotClose;
    for (Coord c = 0; c <= 60; ++c) {
      std::optional<Coord> want;
      for (const Model& m : models) {
        const auto k = static_cast<Coord>(m.k);
        if (std::max<Coord>(k + static_cast<Coord>(m.log_card) + 3 - K, 0) <= c && (!want || k < *want)) want = k;
      }
      if (want) {
        CHECK(soph(d, c).value == static_cast<std::uint64_t>(*want));
        best_c = std::min(best_c, *want + c);
      } else {
        CHECK_THROWS_AS(soph(d, c), Error);
      }
    }
    CHECK(csoph(d).value == static_cast<std::uint64_t>(best_c));
  }
}

TEST_CASE("antistochasticity counts the missing diagonal points") {
  for (const auto& x : oracle::words(4)) {
    const DescProfile d = desc_profile(BitString(x), store().unconditional());
    const auto K = static_cast<Coord>(d.shortest.k);
    const auto n = static_cast<Coord>(x.size());
    std::uint64_t want = 0;
    for (Coord e = 0; e <= std::min(K, n); ++e) {
      bool in = false;
      for (const Model& m : models_of(BitString(x), store().unconditional())) {
        const auto k = static_cast<Coord>(m.k);
        if (k <= K - e && k + static_cast<Coord>(m.log_card) + 3 <= n - e) in = true;
      }
      want += in ? 0 : 1;
    }
    const Measured a = antistochasticity(BitString(x), d);
    CHECK(a.value == want);
    CHECK(a.value <= static_cast<std::uint64_t>(std::min(K, n) + 1));
  }
}

TEST_CASE("structure functions against their definitions") {
  for (const auto& x : oracle::words(2)) {
    const auto rows = structure_functions(BitString(x), store());
    const auto models = models_of(BitString(x), store().unconditional());
    REQUIRE(!rows.empty());
    CHECK(rows.front().i == static_cast<Coord>(models.front().k));
    for (const StructureRow& r : rows) {
      Coord lam = kNotClose, h = kNotClose, beta = kNotClose;
      for (const Model& m : models) {
        if (static_cast<Coord>(m.k) > r.i) continue;
        Budget b{std::max<std::size_t>(12, 3 * x.size() + 3), kJ};
        const auto given = static_cast<Coord>(k_upper(BitString(x), store().get(m.encoding, b)).k);
        lam = std::min(lam, static_cast<Coord>(m.k + m.log_card + 3));
        h = std::min(h, static_cast<Coord>(m.log_card));
        beta = std::min(beta, static_cast<Coord>(m.log_card) - given);
      }
      CHECK(r.lambda == lam);
      CHECK(r.h == h);
      CHECK(r.beta == beta);
      // h never exceeds lambda - i - tag.
      CHECK(r.h <= r.lambda - static_cast<Coord>(models.front().k) - 3);
    }
  }
}

TEST_CASE("theta profiles are rebuilt from y* and its clock value") {
  for (const std::string z : {"", "1"}) {
    const HaltingTable& tz = store().get(BitString(z));
    const HaltingTable& te = store().unconditional();
    for (const auto& y : oracle::words(3)) {
      const ThetaProfiles th = theta_profiles(BitString(y), tz, te);
      const BitString ys = th.shortest.program;
      const auto tilde_theta = clock_of_time(badger_table(tz), th.shortest.steps);
      const auto hat_theta = clock_of_time(badger_table(te), th.shortest.steps);
      CHECK(reconstruct_theta(ys, tilde_theta.value, tz, tz) == th.tilde);
      CHECK(reconstruct_theta(ys, hat_theta.value, tz, te) == th.hat);
      // soph_free reads the tilde Y-graph at K.
      const auto K = static_cast<Coord>(th.shortest.k);
      Coord want = 0;
      while (!th.tilde.contains(want, K)) ++want;
      CHECK(soph_free(th).value == static_cast<std::uint64_t>(want));
    }
  }
}
