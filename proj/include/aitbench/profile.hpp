#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aitbench {

using Coord = std::int64_t;

struct Point {
  Coord i = 0;
  Coord psi = 0;
  auto operator<=>(const Point&) const = default;
};

// Step function read off a profile. For an X-graph the coordinate is i and
// the value psi; for a Y-graph the roles swap. The value at c is the one of
// the last step whose coordinate is <= c; undefined before the first step.
struct GraphFn {
  enum class Kind { XGraph, YGraph };
  Kind kind = Kind::XGraph;
  std::vector<std::pair<Coord, Coord>> steps;

  std::optional<Coord> at(Coord c) const;
  Coord tail() const { return steps.back().second; }
};

// Upward- and rightward-closed subset of N^2, kept as its generator antichain
// sorted by i (psi then strictly decreases).
class Profile {
 public:
  Profile() = default;

  static Profile close(std::vector<Point> points);

  const std::vector<Point>& generators() const noexcept { return gens_; }
  bool empty() const noexcept { return gens_.empty(); }
  bool contains(Coord i, Coord psi) const noexcept;
  bool contains(Point p) const noexcept { return contains(p.i, p.psi); }
  // Largest coordinate among the generators (0 if empty).
  Coord max_coord() const noexcept;

  GraphFn x_graph() const;
  GraphFn y_graph() const;
  // Members with a neighbour (L-infinity distance 1) outside, inside [0, box]^2.
  std::vector<Point> boundary(Coord box) const;

  std::string serialize() const;
  static Profile parse(std::string_view text);

  bool operator==(const Profile&) const = default;

 private:
  std::vector<Point> gens_;
};

inline constexpr Coord kNotClose = std::numeric_limits<Coord>::max();

struct Closeness {
  Coord ab = 0;  // least eps with a inside the eps-neighbourhood of b
  Coord ba = 0;
  bool finite() const noexcept { return ab != kNotClose && ba != kNotClose; }
  Coord max() const noexcept { return ab > ba ? ab : ba; }
  bool operator==(const Closeness&) const = default;
};

Profile sum(const Profile& a, const Profile& b);
// Least eps with every generator of a within L-infinity distance eps of b.
Coord one_sided_closeness(const Profile& a, const Profile& b);
Closeness closeness(const Profile& a, const Profile& b);

struct Translated {
  Profile profile;
  bool clipped = false;
};
Translated translate(const Profile& p, Coord dy);

// True iff the last drop of the X-graph exceeds eps. One level counts as sharp.
bool sharp_finish(const Profile& p, Coord eps);

std::string to_string(Coord eps_or_not_close);

}  // namespace aitbench
