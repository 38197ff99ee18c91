#include "aitbench/complexity.hpp"

#include "aitbench/pair_code.hpp"

#include <algorithm>

namespace aitbench {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

// Derived quantities inherit the first non-exact flag of their inputs; the
// direction is then only indicative.
Certainty flags_of(const TimeProfile& tp) {
  Certainty c = tp.shortest.certainty;
  for (Certainty f : tp.flags) c = combine(c, f);
  return c;
}

}  // namespace

ShortestProgram k_of(const BitString& x, const HaltingTable& t) {
  const auto& prods = t.producers(x);
  if (prods.empty()) {
    throw Error(ErrorCode::NotProducible, "no program in the table outputs " + x.serialize());
  }
  const Row* best = prods.front();
  for (const Row* r : prods) {
    if (r->program.size() != best->program.size()) break;
    if (r->steps < best->steps) best = r;
  }
  ShortestProgram sp{best->program, best->program.size(), best->steps, Certainty::Exact, true};
  if (t.shortest_unknown() < sp.k) sp.certainty = Certainty::UpperBound;
  return sp;
}

std::vector<std::pair<BitString, std::uint64_t>> known_producers(const BitString& x,
                                                                 const HaltingTable& t) {
  std::vector<std::pair<BitString, std::uint64_t>> out;
  for (const Row* r : t.producers(x)) out.emplace_back(r->program, r->steps);
  const BitString literal = print_literal(x);
  if (literal.size() > t.max_len()) {
    const ExecutionResult run = u0().run(literal, t.z(), x.size() + 1);
    if (!run.success() || run.output != x) {
      throw Error(ErrorCode::InvalidArgument, "print literal failed for " + x.serialize());
    }
    out.emplace_back(literal, run.steps);
  }
  return out;
}

ShortestProgram k_upper(const BitString& x, const HaltingTable& t) {
  if (!t.producers(x).empty()) return k_of(x, t);
  auto prods = known_producers(x, t);
  if (prods.empty()) {
    throw Error(ErrorCode::NotProducible, "no known program outputs " + x.serialize());
  }
  return {prods.back().first, prods.back().first.size(), prods.back().second, Certainty::UpperBound,
          false};
}

Measured brt(std::uint64_t rt, const HaltingTable& t_eps) { return inverse_busy_beaver_bound(t_eps, rt); }

Measured kt_of(const BitString& x, std::size_t i, const HaltingTable& t, const HaltingTable& t_eps) {
  const Measured bound = busy_beaver(t_eps, i);
  std::optional<std::size_t> best;
  bool from_literal = false;
  for (const auto& [p, steps] : known_producers(x, t)) {
    if (steps <= bound.value && (!best || p.size() < *best)) {
      best = p.size();
      from_literal = p.size() > t.max_len();
    }
  }
  if (!best) {
    throw Error(ErrorCode::NotProducible,
                "no known program outputs " + x.serialize() + " within B(" + std::to_string(i) + ")");
  }
  // Unknown rows already ran past B(i), so only a larger B(i) or an unseen long
  // program could lower the value.
  const bool exact = !from_literal && bound.certainty == Certainty::Exact;
  return {*best, exact ? Certainty::Exact : Certainty::UpperBound};
}

TimeProfile time_profile(const BitString& x, const HaltingTable& t, const HaltingTable& t_eps) {
  TimeProfile tp;
  std::vector<std::pair<Point, Certainty>> pts;
  for (const auto& [p, steps] : known_producers(x, t)) {
    const Measured b = brt(steps, t_eps);
    pts.push_back({{static_cast<Coord>(b.value), static_cast<Coord>(p.size())}, b.certainty});
  }
  if (pts.empty()) throw Error(ErrorCode::NotProducible, "no known program outputs " + x.serialize());
  std::vector<Point> raw;
  for (const auto& pc : pts) raw.push_back(pc.first);
  tp.profile = Profile::close(raw);
  for (const Point& g : tp.profile.generators()) {
    Certainty c = Certainty::LowerBound;
    for (const auto& [pt, cert] : pts) {
      if (pt == g && (c != Certainty::Exact)) c = cert;
    }
    tp.flags.push_back(c);
  }
  tp.shortest = k_upper(x, t);
  tp.depth = translate(tp.profile, -static_cast<Coord>(tp.shortest.k)).profile;
  return tp;
}

ShortestProgram k_pair(const BitString& x, const BitString& y, TableStore& store) {
  return k_upper(pair_encode(x, y), store.unconditional());
}

SignedMeasured mutual_info(const BitString& x, const BitString& y, TableStore& store) {
  const HaltingTable& t = store.unconditional();
  const ShortestProgram ky = k_upper(y, t);
  const ShortestProgram xs = k_upper(x, t);
  const ShortestProgram kyx = k_upper(y, store.get(xs.program));
  return {static_cast<std::int64_t>(ky.k) - static_cast<std::int64_t>(kyx.k),
          combine(combine(ky.certainty, kyx.certainty), xs.certainty)};
}

Report chain_rule_report(std::size_t n, TableStore& store) {
  Report rep;
  rep.title = "chain rule";
  const HaltingTable& te = store.unconditional();
  const std::size_t L = te.max_len();
  std::int64_t max_abs = 0, max_le = 0, glue = std::numeric_limits<std::int64_t>::min();
  Coord max_close = 0;
  Certainty overall = Certainty::Exact;
  Certainty close_cert = Certainty::Exact;
  const auto words = words_up_to(n);
  for (const BitString& x : words) {
    const ShortestProgram kx = k_upper(x, te);
    const HaltingTable& tx = store.get(x);
    const HaltingTable& txs = store.get(kx.program);
    for (const BitString& y : words) {
      const BitString w = pair_encode(x, y);
      const ShortestProgram kxy = k_upper(w, te);
      const ShortestProgram kyxs = k_upper(y, txs);
      const Certainty c = combine(combine(kxy.certainty, kx.certainty), kyxs.certainty);
      overall = combine(overall, c);
      const std::int64_t defect = static_cast<std::int64_t>(kxy.k) - static_cast<std::int64_t>(kx.k) -
                                  static_cast<std::int64_t>(kyxs.k);
      // Printing the pair header costs one opcode per header bit.
      const auto overhead = static_cast<std::int64_t>(3 * pair_overhead(x));
      rep.add(x, y, "K(x,y)", str(kxy.k), kxy.certainty);
      rep.add(x, y, "K(x)", str(kx.k), kx.certainty);
      rep.add(x, y, "K(y|x*)", str(kyxs.k), kyxs.certainty);
      rep.add(x, y, "defect", str(defect), c);
      rep.add(x, y, "header_overhead", str(overhead));
      max_abs = std::max(max_abs, std::abs(defect));
      max_le = std::max(max_le, defect);
      glue = std::max(glue, defect - overhead);

      const TimeProfile lxy = time_profile(w, te, te);
      const TimeProfile lx = time_profile(x, te, te);
      const TimeProfile lyx = time_profile(y, tx, te);
      const Profile rhs = sum(lx.profile, lyx.profile);
      const Closeness cl = closeness(lxy.profile, rhs);
      const Certainty cc = combine(combine(flags_of(lxy), flags_of(lx)), flags_of(lyx));
      rep.add(x, y, "closeness(Lxy,Lx+Ly|x).ab", to_string(cl.ab), cc);
      rep.add(x, y, "closeness(Lxy,Lx+Ly|x).ba", to_string(cl.ba), cc);
      close_cert = combine(close_cert, cc);
      max_close = std::max(max_close, cl.max());

      auto kt = [&](const BitString& s, std::size_t i, const HaltingTable& t) -> std::optional<Measured> {
        try {
          return kt_of(s, i, t, te);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NotProducible) throw;
          return std::nullopt;
        }
      };
      for (std::size_t i = 0; i <= L; ++i) {
        const auto a = kt(x, i, te);
        const auto b = kt(y, i, tx);
        const auto whole = kt(w, i, te);
        if (!a || !b) continue;
        const auto bound = static_cast<std::int64_t>(a->value + b->value);
        std::string shift = "none";
        for (std::size_t s = 0; i + s <= L; ++s) {
          const auto lhs = kt(w, i + s, te);
          if (lhs && static_cast<std::int64_t>(lhs->value) <= bound) {
            shift = str(static_cast<std::int64_t>(s));
            break;
          }
        }
        // Shift: least s with Kt at B(i+s) of the pair within Kt(x) + Kt(y|x) at B(i).
        // Slack: Kt(x) + Kt(y|x) - Kt of the pair, all at B(i).
        const std::string at = "@" + std::to_string(i);
        const Certainty ci = combine(a->certainty, b->certainty);
        rep.add(x, y, "kt_pair_shift" + at, shift, ci);
        if (whole) {
          rep.add(x, y, "kt_sum_slack" + at, str(bound - static_cast<std::int64_t>(whole->value)),
                  combine(ci, whole->certainty));
        }
      }
    }
  }
  rep.add("*", "*", "max_abs_defect", str(max_abs), overall);
  rep.add("*", "*", "max_defect", str(max_le), overall);
  rep.add("*", "*", "glue_constant", str(glue), overall);
  rep.add("*", "*", "max_closeness", to_string(max_close), close_cert);
  return rep;
}

ExpectedTheta expected_theta(const std::optional<BitString>& x, const HaltingTable& t) {
  const auto badgers = badger_table(t);
  ExpectedTheta e;
  auto add = [&](const Row& r) {
    const Measured th = clock_of_time(badgers, r.steps);
    e.value += Dyadic::mass(static_cast<std::uint32_t>(r.program.size())) * th.value;
  };
  if (x) {
    for (const Row* r : t.producers(*x)) add(*r);
  } else {
    for (const Row* r : t.halted()) add(*r);
  }
  return e;
}

Report depth_pair_report(std::size_t n, Coord eps, TableStore& store) {
  Report rep;
  rep.title = "depth pairs";
  const HaltingTable& te = store.unconditional();
  Coord max_defect = 0;
  std::size_t qualifying = 0;
  Certainty cert = Certainty::Exact;
  const auto words = words_up_to(n);
  for (const BitString& x : words) {
    const HaltingTable& tx = store.get(x);
    const TimeProfile lx = time_profile(x, te, te);
    for (const BitString& y : words) {
      const TimeProfile lxy = time_profile(pair_encode(x, y), te, te);
      const TimeProfile lyx = time_profile(y, tx, te);
      if (!sharp_finish(lxy.profile, eps) || !sharp_finish(lx.profile, eps) ||
          !sharp_finish(lyx.profile, eps)) {
        rep.add(x, y, "not_sharp", "1");
        continue;
      }
      ++qualifying;
      const Coord lhs = lxy.bdepth(0);
      const Coord rhs = std::max(lx.bdepth(0), lyx.bdepth(0));
      const Certainty cr = combine(lx.flags.back(), lyx.flags.back());
      rep.add(x, y, "bdepth0(x,y)", str(lhs), lxy.flags.back());
      rep.add(x, y, "max(bdepth0(x),bdepth0(y|x))", str(rhs), cr);
      rep.add(x, y, "defect", str(lhs - rhs), combine(lxy.flags.back(), cr));
      cert = combine(cert, combine(lxy.flags.back(), cr));
      max_defect = std::max(max_defect, std::abs(lhs - rhs));
    }
  }
  rep.add("*", "*", "qualifying_pairs", std::to_string(qualifying));
  rep.add("*", "*", "max_abs_defect", str(max_defect), cert);
  return rep;
}

}  // namespace aitbench
