#pragma once

// Independent reference implementations used as test oracles. They follow the
// machine's rules literally and share no code with the library.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

enum class Status { Success, EarlyHalt, Underflow, Budget };

struct Run {
  Status status = Status::Budget;
  std::string output;
  std::uint64_t steps = 0;
};

// Straight-line interpreter: decode on demand, replay history on WHILE.
inline Run run(const std::string& p, const std::string& z, std::uint64_t budget) {
  std::vector<int> history;
  std::size_t pc = 0, consumed = 0, aux = 0;
  Run r;
  for (;;) {
    if (pc == history.size()) {
      if (consumed + 3 > p.size()) {
        r.status = Status::Underflow;
        return r;
      }
      history.push_back((p[consumed] - '0') * 4 + (p[consumed + 1] - '0') * 2 + (p[consumed + 2] - '0'));
      consumed += 3;
    }
    const int op = history[pc++];
    const std::uint64_t cost = op == 4 ? 1 + r.output.size() : 1;
    if (r.steps + cost > budget) {
      r.status = Status::Budget;
      return r;
    }
    r.steps += cost;
    switch (op) {
      case 0:
        r.status = consumed == p.size() ? Status::Success : Status::EarlyHalt;
        if (r.status != Status::Success) r.output.clear();
        return r;
      case 1: r.output += '0'; break;
      case 2: r.output += '1'; break;
      case 3:
        if (aux < z.size()) r.output += z[aux++];
        break;
      case 4: r.output += r.output; break;
      case 5:
        if (!r.output.empty()) r.output.back() = r.output.back() == '0' ? '1' : '0';
        break;
      case 6:
        if (!r.output.empty()) r.output.pop_back();
        break;
      case 7:
        if (!r.output.empty() && r.output.back() == '1') pc = 0;
        break;
    }
  }
}

// All words of length <= n, shortest first, then lexicographic.
inline std::vector<std::string> words(std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t len = 1; len <= n; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      std::string w(len, '0');
      for (std::size_t b = 0; b < len; ++b) w[len - 1 - b] = (v >> b) & 1 ? '1' : '0';
      out.push_back(w);
    }
  }
  return out;
}

// Sets of lattice points in a box, as membership bitmaps.
struct Grid {
  int n;
  std::vector<char> in;
  explicit Grid(int size) : n(size), in(static_cast<std::size_t>(size * size), 0) {}
  bool at(int i, int psi) const { return i >= 0 && psi >= 0 && i < n && psi < n && in[i * n + psi]; }
  void set(int i, int psi) { in[i * n + psi] = 1; }
};

// Upward-rightward closure inside the box.
inline Grid close(const std::vector<std::pair<int, int>>& pts, int n) {
  Grid g(n);
  for (int i = 0; i < n; ++i) {
    for (int psi = 0; psi < n; ++psi) {
      for (const auto& [a, b] : pts) {
        if (a <= i && b <= psi) {
          g.set(i, psi);
          break;
        }
      }
    }
  }
  return g;
}

// Points of the grid with no member strictly below-left in the closure sense.
inline std::vector<std::pair<int, int>> minimal_points(const Grid& g) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < g.n; ++i) {
    for (int psi = 0; psi < g.n; ++psi) {
      if (g.at(i, psi) && !g.at(i - 1, psi) && !g.at(i, psi - 1)) out.emplace_back(i, psi);
    }
  }
  return out;
}

// Random point cloud in [0, n)^2.
inline std::vector<std::pair<int, int>> random_points(std::mt19937_64& rng, int n, int max_count) {
  std::uniform_int_distribution<int> count(1, max_count), coord(0, n - 1);
  std::vector<std::pair<int, int>> pts(static_cast<std::size_t>(count(rng)));
  for (auto& p : pts) p = {coord(rng), coord(rng)};
  return pts;
}

}  // namespace oracle
