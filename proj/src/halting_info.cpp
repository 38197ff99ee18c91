#include "aitbench/halting_info.hpp"

#include "aitbench/complexity.hpp"

#include <algorithm>

namespace aitbench {

Profile ReachCurve::mirrored_profile() const {
  std::vector<Point> pts;
  for (const ReachPoint& p : points) pts.push_back({i_max - p.i, p.r});
  return Profile::close(pts);
}

ReachCurve reach_curve(const HaltingTable& t_z, const HaltingTable& t_eps, std::size_t i_max) {
  const OmegaApprox o = omega_approx(t_eps);
  if (o.stabilized_bits == 0) throw Error(ErrorCode::NotStabilized, "no certified Omega bit");
  if (i_max > t_z.max_len()) throw Error(ErrorCode::OutOfBudget, "advice longer than the z-table");
  const BitString omega = o.prefix();
  const std::size_t s_max = omega.size();

  // Best r for each program length, from every Halted output that qualifies.
  std::vector<Coord> best(i_max + 1, 0);
  std::vector<BitString> witness(i_max + 1);
  for (const Row* r : t_z.halted()) {
    const std::size_t len = r->program.size();
    if (len > i_max) break;
    const BitString& w = r->output;
    if (w.size() > s_max + kReachSlackBits) continue;
    std::size_t s = 0;
    while (s < std::min(w.size(), s_max) && w[s] == omega[s]) ++s;
    if (s == 0) continue;
    BigInt num = 0;
    for (std::size_t b = 0; b < w.size(); ++b) num = (num << 1) | (w[b] ? 1 : 0);
    if (!(Dyadic(num, static_cast<std::uint32_t>(w.size())) < o.value)) continue;
    if (static_cast<Coord>(s) > best[len]) {
      best[len] = static_cast<Coord>(s);
      witness[len] = r->program;
    }
  }

  ReachCurve c;
  c.i_max = static_cast<Coord>(i_max);
  ReachPoint run;
  for (std::size_t i = 0; i <= i_max; ++i) {
    run.i = static_cast<Coord>(i);
    if (best[i] > run.r) {
      run.r = best[i];
      run.witness = witness[i];
    }
    // An unseen program or a longer Omega prefix could only raise r.
    run.certainty = (run.r == static_cast<Coord>(s_max) || t_z.shortest_unknown() <= i)
                        ? Certainty::LowerBound
                        : Certainty::Exact;
    c.points.push_back(run);
  }
  return c;
}

ReachCurve reach_via_badger(const HaltingTable& t_z, const HaltingTable& t_eps) {
  const auto bz = badger_table(t_z);
  const auto be = badger_table(t_eps);
  if (be.size() <= 1) throw Error(ErrorCode::NotStabilized, "no certified Omega bit");
  const Certainty ce = omega_approx(t_eps).restricted_certainty;
  const Certainty cz = omega_approx(t_z).restricted_certainty;
  ReachCurve c;
  c.i_max = static_cast<Coord>(bz.size() - 1);
  for (std::size_t i = 0; i < bz.size(); ++i) {
    Coord r = 0;
    for (std::size_t s = 0; s < be.size(); ++s) {
      if (be[s] <= bz[i]) r = static_cast<Coord>(s);
    }
    const bool capped = r == static_cast<Coord>(be.size() - 1);
    c.points.push_back({static_cast<Coord>(i), r,
                        capped ? Certainty::LowerBound : combine(ce, cz), BitString()});
  }
  return c;
}

Closeness reach_routes_closeness(const ReachCurve& a, const ReachCurve& b) {
  const Coord top = std::max(a.i_max, b.i_max);
  auto mirror = [top](const ReachCurve& c) {
    std::vector<Point> pts;
    for (const ReachPoint& p : c.points) pts.push_back({top - p.i, p.r});
    return Profile::close(pts);
  };
  return closeness(mirror(a), mirror(b));
}

std::vector<HmdPoint> hmd(const ReachCurve& reach) {
  std::vector<HmdPoint> out;
  for (const ReachPoint& p : reach.points) out.push_back({p.i, p.r - p.i, p.certainty});
  return out;
}

Coord step_value(const StepSpec& h, Coord i) {
  Coord a = 0, b = 0;
  for (const auto& [da, db] : h) {
    a += da;
    if (i < a) break;
    b += db;
  }
  return b;
}

std::vector<Coord> gamma_positions(const StepSpec& h) {
  std::vector<Coord> out;
  Coord a = 0, b = 0;
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k].first < (k == 0 ? 0 : 1) || h[k].second < 0) {
      throw Error(ErrorCode::InvalidArgument, "step spec needs a_0 >= 0, a_k >= 1, b_k >= 0");
    }
    a += h[k].first;
    const Coord start = a + b;
    b += h[k].second;
    for (Coord pos = std::max<Coord>(start, 1); pos <= a + b; ++pos) out.push_back(pos);
  }
  return out;
}

namespace {

BitString certified_prefix(const HaltingTable& t_eps, Coord need) {
  const BitString omega = omega_approx(t_eps).prefix();
  if (need > static_cast<Coord>(omega.size())) {
    throw Error(ErrorCode::PrefixTooShort, "needs " + std::to_string(need) + " Omega bits, have " +
                                               std::to_string(omega.size()));
  }
  return omega;
}

}  // namespace

BitString build_gamma(const StepSpec& h, const HaltingTable& t_eps) {
  const auto pos = gamma_positions(h);
  if (pos.empty()) return BitString();
  const BitString omega = certified_prefix(t_eps, pos.back());
  BitString g;
  for (Coord p : pos) g.push_back(omega[static_cast<std::size_t>(p - 1)]);
  return g;
}

BitString hole_advice(const StepSpec& h, Coord i, const HaltingTable& t_eps) {
  const Coord n = i + step_value(h, i);
  const BitString omega = certified_prefix(t_eps, n);
  const auto pos = gamma_positions(h);
  BitString d;
  for (Coord p = 1; p <= n; ++p) {
    if (!std::binary_search(pos.begin(), pos.end(), p)) d.push_back(omega[static_cast<std::size_t>(p - 1)]);
  }
  return d;
}

BitString reassemble(const StepSpec& h, const BitString& gamma, const BitString& delta, Coord n) {
  const auto pos = gamma_positions(h);
  BitString out;
  std::size_t gi = 0, di = 0;
  for (Coord p = 1; p <= n; ++p) {
    const bool in_block = std::binary_search(pos.begin(), pos.end(), p);
    const BitString& src = in_block ? gamma : delta;
    std::size_t& k = in_block ? gi : di;
    if (k >= src.size()) throw Error(ErrorCode::PrefixTooShort, "not enough bits to reassemble");
    out.push_back(src[k++]);
  }
  return out;
}

LateHalters late_halters(const HaltingTable& t, std::size_t k, Coord s) {
  if (t.shortest_unknown() <= k) {
    throw Error(ErrorCode::NotExact, "Unknown rows of length <= " + std::to_string(k));
  }
  const Coord n = static_cast<Coord>(k) - s;
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "k - s must be >= 0");
  LateHalters out;
  out.threshold = busy_beaver(t, static_cast<std::size_t>(n)).value;
  for (const Row* r : t.halted()) {
    if (r->program.size() > k) break;
    if (r->steps > out.threshold) ++out.count;
  }
  if (out.count > 0) out.slack = static_cast<Coord>(ceil_log2(out.count)) - s;
  return out;
}

std::uint64_t holographic_rank(const BitString& x, const HaltingTable& t) {
  const ShortestProgram xs = k_of(x, t);
  if (t.shortest_unknown() <= xs.k) {
    throw Error(ErrorCode::NotExact, "Unknown rows of length <= K(x)");
  }
  std::vector<const Row*> rows;
  for (const Row* r : t.halted()) {
    if (r->program.size() > xs.k) break;
    rows.push_back(r);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row* a, const Row* b) { return a->steps < b->steps; });
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k]->program == xs.program) return rows.size() - k;
  }
  throw Error(ErrorCode::NotProducible, "shortest program missing from the table");
}

}  // namespace aitbench
