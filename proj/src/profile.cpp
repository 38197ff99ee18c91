#include "aitbench/profile.hpp"

#include "aitbench/error.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace aitbench {

std::optional<Coord> GraphFn::at(Coord c) const {
  auto it = std::upper_bound(steps.begin(), steps.end(), c,
                             [](Coord v, const std::pair<Coord, Coord>& s) { return v < s.first; });
  if (it == steps.begin()) return std::nullopt;
  return std::prev(it)->second;
}

Profile Profile::close(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  Profile p;
  for (const Point& q : points) {
    if (p.gens_.empty() || q.psi < p.gens_.back().psi) {
      p.gens_.push_back(q);
    }
  }
  return p;
}

bool Profile::contains(Coord i, Coord psi) const noexcept {
  // Among generators with g.i <= i the last one has the smallest psi.
  auto it = std::upper_bound(gens_.begin(), gens_.end(), i,
                             [](Coord v, const Point& g) { return v < g.i; });
  return it != gens_.begin() && std::prev(it)->psi <= psi;
}

Coord Profile::max_coord() const noexcept {
  Coord m = 0;
  for (const Point& g : gens_) m = std::max({m, g.i, g.psi});
  return m;
}

GraphFn Profile::x_graph() const {
  if (gens_.empty()) throw Error(ErrorCode::EmptyProfile, "no X-graph");
  GraphFn f{GraphFn::Kind::XGraph, {}};
  for (const Point& g : gens_) f.steps.emplace_back(g.i, g.psi);
  return f;
}

GraphFn Profile::y_graph() const {
  if (gens_.empty()) throw Error(ErrorCode::EmptyProfile, "no Y-graph");
  GraphFn f{GraphFn::Kind::YGraph, {}};
  for (auto it = gens_.rbegin(); it != gens_.rend(); ++it) f.steps.emplace_back(it->psi, it->i);
  return f;
}

std::vector<Point> Profile::boundary(Coord box) const {
  std::vector<Point> out;
  for (Coord i = 0; i <= box; ++i) {
    for (Coord psi = 0; psi <= box; ++psi) {
      if (contains(i, psi) && !contains(std::max<Coord>(i - 1, 0), std::max<Coord>(psi - 1, 0))) {
        out.push_back({i, psi});
      }
    }
  }
  return out;
}

std::string Profile::serialize() const {
  std::string out = "gen:";
  for (const Point& g : gens_) out += " (" + std::to_string(g.i) + "," + std::to_string(g.psi) + ")";
  return out;
}

Profile Profile::parse(std::string_view text) {
  std::string s(text);
  if (s.rfind("gen:", 0) != 0) throw Error(ErrorCode::ParseError, "profile must start with 'gen:'");
  static const std::regex point(R"(\s*\((\d+),(\d+)\))");
  std::vector<Point> pts;
  auto begin = s.cbegin() + 4;
  std::smatch m;
  while (std::regex_search(begin, s.cend(), m, point, std::regex_constants::match_continuous)) {
    pts.push_back({std::stoll(m[1]), std::stoll(m[2])});
    begin = m[0].second;
  }
  if (std::any_of(begin, s.cend(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); })) {
    throw Error(ErrorCode::ParseError, "trailing text in profile: " + s);
  }
  Profile p = close(pts);
  if (p.gens_ != pts) throw Error(ErrorCode::ParseError, "not a canonical antichain: " + s);
  return p;
}

Profile sum(const Profile& a, const Profile& b) {
  if (a.empty() || b.empty()) return Profile();
  const GraphFn fa = a.x_graph();
  const GraphFn fb = b.x_graph();
  const Coord start = std::max(fa.steps.front().first, fb.steps.front().first);
  std::vector<Point> pts;
  auto add = [&](Coord i) {
    if (i >= start) pts.push_back({i, *fa.at(i) + *fb.at(i)});
  };
  add(start);
  for (const auto& s : fa.steps) add(s.first);
  for (const auto& s : fb.steps) add(s.first);
  return Profile::close(std::move(pts));
}

Coord one_sided_closeness(const Profile& a, const Profile& b) {
  if (a.empty()) return 0;
  if (b.empty()) return kNotClose;
  Coord eps = 0;
  for (const Point& ga : a.generators()) {
    Coord best = kNotClose;
    for (const Point& gb : b.generators()) {
      best = std::min(best, std::max({gb.i - ga.i, gb.psi - ga.psi, Coord{0}}));
    }
    eps = std::max(eps, best);
  }
  return eps;
}

Closeness closeness(const Profile& a, const Profile& b) {
  return {one_sided_closeness(a, b), one_sided_closeness(b, a)};
}

Translated translate(const Profile& p, Coord dy) {
  Translated t;
  std::vector<Point> pts;
  for (Point g : p.generators()) {
    g.psi += dy;
    if (g.psi < 0) {
      g.psi = 0;
      t.clipped = true;
    }
    pts.push_back(g);
  }
  t.profile = Profile::close(std::move(pts));
  return t;
}

bool sharp_finish(const Profile& p, Coord eps) {
  if (p.empty()) throw Error(ErrorCode::EmptyProfile, "sharp finish of an empty profile");
  const auto& g = p.generators();
  if (g.size() == 1) return true;
  return g[g.size() - 2].psi - g.back().psi > eps;
}

std::string to_string(Coord eps_or_not_close) {
  return eps_or_not_close == kNotClose ? "inf" : std::to_string(eps_or_not_close);
}

}  // namespace aitbench
