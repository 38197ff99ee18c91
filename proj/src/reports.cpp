#include "aitbench/reports.hpp"

#include "aitbench/algostats.hpp"
#include "aitbench/complexity.hpp"
#include "aitbench/halting_info.hpp"
#include "aitbench/pair_code.hpp"

#include <algorithm>

namespace aitbench {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

Certainty all_of(Certainty c, const std::vector<Certainty>& flags) {
  for (Certainty f : flags) c = combine(c, f);
  return c;
}

void add_closeness(Report& rep, const std::string& x, const std::string& y, const std::string& name,
                   const Profile& a, const Profile& b, Certainty c) {
  const Closeness cl = closeness(a, b);
  rep.add(x, y, name + ".ab", to_string(cl.ab), c);
  rep.add(x, y, name + ".ba", to_string(cl.ba), c);
}

}  // namespace

Report survey(std::size_t n, TableStore& store) {
  Report rep;
  rep.title = "survey n=" + std::to_string(n);
  const HaltingTable& te = store.unconditional();
  Dyadic kraft;
  Certainty kraft_cert = Certainty::Exact;
  BitString most;
  std::uint64_t most_score = 0;
  std::size_t most_k = 0;
  bool first = true;
  for (const BitString& x : words_of_length(n)) {
    const std::string xs = x.serialize();
    const TimeProfile lx = time_profile(x, te, te);
    const DescProfile dx = desc_profile(x, te);
    const ThetaProfiles th = theta_profiles(x, te, te);
    const Measured sf = soph_free(th);
    const Measured anti = antistochasticity(x, dx);
    rep.add(xs, "-", "K", std::to_string(lx.shortest.k), lx.shortest.certainty);
    rep.add(xs, "-", "bdepth0", str(lx.bdepth(0)), combine(lx.shortest.certainty, lx.flags.back()));
    rep.add(xs, "-", "soph_free", std::to_string(sf.value), sf.certainty);
    rep.add(xs, "-", "antistochasticity", std::to_string(anti.value), anti.certainty);
    try {
      rep.add(xs, "-", "holographic_rank", std::to_string(holographic_rank(x, te)));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotExact && e.code() != ErrorCode::NotProducible) throw;
      rep.add(xs, "-", "holographic_rank", "n/a", Certainty::UpperBound);
    }
    rep.add(xs, "-", "gen(L)", lx.profile.serialize(), all_of(lx.shortest.certainty, lx.flags));
    rep.add(xs, "-", "gen(Lambda)", dx.lambda.serialize(), all_of(Certainty::Exact, dx.flags));
    kraft += Dyadic::mass(static_cast<std::uint32_t>(lx.shortest.k));
    kraft_cert = combine(kraft_cert, lx.shortest.certainty);
    // Most antistochastic first, then most complex, then length-lex.
    if (first || anti.value > most_score || (anti.value == most_score && lx.shortest.k > most_k)) {
      most = x;
      most_score = anti.value;
      most_k = lx.shortest.k;
      first = false;
    }
  }
  rep.add("*", "*", "sum 2^-K", kraft.to_string(), kraft_cert);
  rep.add("*", "*", "most_antistochastic", most.serialize());

  const TimeProfile lz = time_profile(most, te, te);
  for (std::size_t cut = 0; cut <= most.size(); ++cut) {
    const BitString x = most.substr(0, cut);
    const BitString y = most.substr(cut);
    const HaltingTable& tx = store.get(x);
    const TimeProfile lx = time_profile(x, te, te);
    const TimeProfile lyx = time_profile(y, tx, te);
    const DescProfile dyx = desc_profile(y, tx);
    const ThetaProfiles th = theta_profiles(y, tx, te);
    const std::string xs = x.serialize(), ys = y.serialize();
    const Certainty cl = all_of(lyx.shortest.certainty, lyx.flags);
    const Certainty cd = all_of(dyx.shortest.certainty, dyx.flags);
    const Certainty ct = all_of(th.shortest.certainty, th.tilde_flags);
    const Certainty ch = all_of(th.shortest.certainty, th.hat_flags);
    rep.add(xs, ys, "gen(L_x)", lx.profile.serialize(), all_of(lx.shortest.certainty, lx.flags));
    rep.add(xs, ys, "gen(L_y|x)", lyx.profile.serialize(), cl);
    rep.add(xs, ys, "gen(Lambda_y|x)", dyx.lambda.serialize(), cd);
    rep.add(xs, ys, "gen(Theta~_y|x)", th.tilde.serialize(), ct);
    rep.add(xs, ys, "gen(Theta^_y|x)", th.hat.serialize(), ch);
    add_closeness(rep, xs, ys, "closeness(Lambda_y|x,L_y|x)", dyx.lambda, lyx.profile, combine(cd, cl));
    add_closeness(rep, xs, ys, "closeness(Theta^_y|x,L_y|x)", th.hat, lyx.profile, combine(ch, cl));
    add_closeness(rep, xs, ys, "closeness(Theta~_y|x,Lambda_y|x)", th.tilde, dyx.lambda, combine(ct, cd));
    add_closeness(rep, xs, ys, "closeness(Theta~_y|x,Theta^_y|x)", th.tilde, th.hat, combine(ct, ch));
    add_closeness(rep, xs, ys, "closeness(L_z,L_x+L_y|x)", lz.profile, sum(lx.profile, lyx.profile),
                  combine(all_of(lz.shortest.certainty, lz.flags), cl));
  }
  return rep;
}

Report equivalences_report(std::size_t nx, std::size_t nz, TableStore& store) {
  Report rep;
  rep.title = "profile equivalences";
  const HaltingTable& te = store.unconditional();
  Coord max_lx = 0, max_hat = 0, max_tilde = 0;
  for (const BitString& x : words_up_to(nx)) {
    const TimeProfile lx = time_profile(x, te, te);
    const DescProfile dx = desc_profile(x, te);
    const Closeness c = closeness(lx.profile, dx.lambda);
    const Certainty cert = combine(all_of(lx.shortest.certainty, lx.flags), all_of(dx.shortest.certainty, dx.flags));
    rep.add(x.serialize(), "-", "closeness(L_x,Lambda_x).ab", to_string(c.ab), cert);
    rep.add(x.serialize(), "-", "closeness(L_x,Lambda_x).ba", to_string(c.ba), cert);
    max_lx = std::max(max_lx, c.max());
  }
  for (const BitString& z : words_up_to(nz)) {
    const HaltingTable& tz = store.get(z);
    for (const BitString& y : words_up_to(nx)) {
      const TimeProfile ly = time_profile(y, tz, te);
      const DescProfile dy = desc_profile(y, tz);
      const ThetaProfiles th = theta_profiles(y, tz, te);
      const Certainty cl = all_of(ly.shortest.certainty, ly.flags);
      const Certainty cd = all_of(dy.shortest.certainty, dy.flags);
      const Closeness hat = closeness(th.hat, ly.profile);
      const Closeness tilde = closeness(th.tilde, dy.lambda);
      const Certainty ch = combine(all_of(th.shortest.certainty, th.hat_flags), cl);
      const Certainty ct = combine(all_of(th.shortest.certainty, th.tilde_flags), cd);
      const std::string ys = y.serialize(), zs = z.serialize();
      rep.add(ys, zs, "closeness(Theta^_y|z,L_y|z).ab", to_string(hat.ab), ch);
      rep.add(ys, zs, "closeness(Theta^_y|z,L_y|z).ba", to_string(hat.ba), ch);
      rep.add(ys, zs, "closeness(Theta~_y|z,Lambda_y|z).ab", to_string(tilde.ab), ct);
      rep.add(ys, zs, "closeness(Theta~_y|z,Lambda_y|z).ba", to_string(tilde.ba), ct);
      // Both theta profiles come from the same producers, so their
      // generators sit at the same program lengths.
      std::vector<Coord> a, b;
      for (const Point& g : th.tilde.generators()) a.push_back(g.psi);
      for (const Point& g : th.hat.generators()) b.push_back(g.psi);
      rep.add(ys, zs, "theta_generators_aligned", a == b ? "1" : "0");
      max_hat = std::max(max_hat, hat.max());
      max_tilde = std::max(max_tilde, tilde.max());
    }
  }
  rep.add("*", "*", "max closeness(L_x,Lambda_x)", to_string(max_lx));
  rep.add("*", "*", "max closeness(Theta^,L)", to_string(max_hat));
  rep.add("*", "*", "max closeness(Theta~,Lambda)", to_string(max_tilde));
  return rep;
}

Report soph_pair_report(std::size_t n, Coord eps, TableStore& store) {
  Report rep;
  rep.title = "sophistication pairs";
  const HaltingTable& te = store.unconditional();
  Coord max_defect = 0;
  std::size_t qualifying = 0;
  Certainty cert = Certainty::Exact;
  const auto words = words_up_to(n);
  for (const BitString& x : words) {
    const HaltingTable& tx = store.get(x);
    const ThetaProfiles thx = theta_profiles(x, te, te);
    std::optional<ReachCurve> rx;
    for (const BitString& y : words) {
      const ThetaProfiles thxy = theta_profiles(pair_encode(x, y), te, te);
      const ThetaProfiles thyx = theta_profiles(y, tx, te);
      if (!sharp_finish(thxy.tilde, eps) || !sharp_finish(thx.tilde, eps) ||
          !sharp_finish(thyx.tilde, eps)) {
        rep.add(x, y, "not_sharp", "1");
        continue;
      }
      ++qualifying;
      if (!rx) rx = reach_curve(tx, te, tx.max_len());
      const Measured sxy = soph_free(thxy);
      const Measured sx = soph_free(thx);
      const Measured syx = soph_free(thyx);
      // R_x is only tabulated up to the table length; past it the value is a lower bound.
      const std::size_t at = std::min<std::size_t>(syx.value, tx.max_len());
      const ReachPoint& r = rx->points[at];
      Certainty cr = combine(syx.certainty, r.certainty);
      if (at < syx.value) cr = combine(cr, Certainty::LowerBound);
      const Coord rhs = std::max<Coord>(static_cast<Coord>(sx.value), r.r);
      const Coord defect = static_cast<Coord>(sxy.value) - rhs;
      const Certainty c = combine(sxy.certainty, combine(sx.certainty, cr));
      rep.add(x, y, "soph(x,y)", std::to_string(sxy.value), sxy.certainty);
      rep.add(x, y, "soph(x)", std::to_string(sx.value), sx.certainty);
      rep.add(x, y, "soph(y|x)", std::to_string(syx.value), syx.certainty);
      rep.add(x, y, "R_x(soph(y|x))", str(r.r), cr);
      rep.add(x, y, "defect", str(defect), c);
      cert = combine(cert, c);
      max_defect = std::max(max_defect, std::abs(defect));
    }
  }
  rep.add("*", "*", "qualifying_pairs", std::to_string(qualifying));
  rep.add("*", "*", "max_abs_defect", str(max_defect), cert);
  return rep;
}

Report late_halters_report(std::size_t kmax, TableStore& store) {
  Report rep;
  rep.title = "late halters";
  const HaltingTable& te = store.unconditional();
  Coord worst = std::numeric_limits<Coord>::min();
  bool all_exact = true;
  for (std::size_t k = 0; k <= std::min(kmax, te.max_len()); ++k) {
    for (Coord s = 0; s <= static_cast<Coord>(k); ++s) {
      const std::string ks = std::to_string(k), ss = str(s);
      try {
        const LateHalters lh = late_halters(te, k, s);
        rep.add(ks, ss, "count", std::to_string(lh.count));
        rep.add(ks, ss, "B(k-s)", std::to_string(lh.threshold));
        rep.add(ks, ss, "log2(count)-s", lh.slack ? str(*lh.slack) : "none");
        if (lh.slack) worst = std::max(worst, *lh.slack);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotExact) throw;
        rep.add(ks, ss, "count", "not-exact", Certainty::LowerBound);
        all_exact = false;
      }
    }
  }
  rep.add("*", "*", "max_slack", worst == std::numeric_limits<Coord>::min() ? "none" : str(worst),
          all_exact ? Certainty::Exact : Certainty::LowerBound);
  return rep;
}

Report reach_report(const BitString& z, std::size_t i_max, TableStore& store) {
  Report rep;
  rep.title = "reach z=" + z.serialize();
  const HaltingTable& te = store.unconditional();
  const HaltingTable& tz = store.get(z);
  const ReachCurve byd = reach_curve(tz, te, i_max);
  const ReachCurve byb = reach_via_badger(tz, te);
  const std::string zs = z.serialize();
  for (const ReachPoint& p : byd.points) {
    rep.add(zs, str(p.i), "R", str(p.r), p.certainty);
    rep.add(zs, str(p.i), "H", str(p.r - p.i), p.certainty);
  }
  for (const ReachPoint& p : byb.points) rep.add(zs, str(p.i), "R_badger", str(p.r), p.certainty);
  const Closeness cl = reach_routes_closeness(byd, byb);
  Certainty c = Certainty::Exact;
  for (const ReachPoint& p : byd.points) c = combine(c, p.certainty);
  for (const ReachPoint& p : byb.points) c = combine(c, p.certainty);
  rep.add(zs, "*", "closeness(R,R_badger).ab", to_string(cl.ab), c);
  rep.add(zs, "*", "closeness(R,R_badger).ba", to_string(cl.ba), c);
  return rep;
}

}  // namespace aitbench
