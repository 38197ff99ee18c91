#include "aitbench/algostats.hpp"

#include "aitbench/pair_code.hpp"

#include <algorithm>
#include <map>

namespace aitbench {

BitString encode_set(std::vector<BitString> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  BitString out = length_header(elements.size());
  for (const BitString& e : elements) {
    out.append(length_header(e.size()));
    out.append(e);
  }
  return out;
}

std::optional<std::vector<BitString>> decode_set(const BitString& code) {
  try {
    std::size_t pos = 0;
    const std::uint64_t count = read_length_header(code, pos);
    // Each element takes at least one header bit.
    if (count > code.size() - pos) return std::nullopt;
    std::vector<BitString> out;
    for (std::uint64_t k = 0; k < count; ++k) {
      const std::uint64_t len = read_length_header(code, pos);
      if (len > code.size() - pos) return std::nullopt;
      BitString e = code.substr(pos, len);
      pos += len;
      if (!out.empty() && !(out.back() < e)) return std::nullopt;
      out.push_back(std::move(e));
    }
    if (pos != code.size()) return std::nullopt;
    return out;
  } catch (const Error&) {
    return std::nullopt;
  }
}

bool Model::contains(const BitString& x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

std::vector<Model> models_of(const BitString& x, const HaltingTable& t) {
  std::map<BitString, Model> found;
  for (const Row* r : t.halted()) {
    if (found.count(r->output)) continue;  // rows are length-lex, the first is shortest
    auto elems = decode_set(r->output);
    if (!elems || !std::binary_search(elems->begin(), elems->end(), x)) continue;
    Model m;
    m.elements = std::move(*elems);
    m.encoding = r->output;
    m.program = r->program;
    m.k = r->program.size();
    m.log_card = ceil_log2(m.elements.size());
    m.certainty = t.shortest_unknown() < m.k ? Certainty::UpperBound : Certainty::Exact;
    found.emplace(m.encoding, std::move(m));
  }

  std::vector<std::vector<BitString>> fallbacks{{x}, words_of_length(x.size())};
  for (auto& elems : fallbacks) {
    const BitString enc = encode_set(elems);
    if (found.count(enc)) continue;
    const ShortestProgram sp = k_upper(enc, t);
    Model m;
    m.elements = std::move(elems);
    m.encoding = enc;
    m.program = sp.program;
    m.k = sp.k;
    m.log_card = ceil_log2(m.elements.size());
    m.certainty = Certainty::UpperBound;
    m.in_table = sp.in_table;
    found.emplace(enc, std::move(m));
  }

  std::vector<Model> out;
  for (auto& [enc, m] : found) out.push_back(std::move(m));
  std::sort(out.begin(), out.end(), [](const Model& a, const Model& b) {
    return std::tie(a.k, a.log_card, a.encoding) < std::tie(b.k, b.log_card, b.encoding);
  });
  return out;
}

BitString two_part(const Model& s, const BitString& x) {
  auto it = std::lower_bound(s.elements.begin(), s.elements.end(), x);
  if (it == s.elements.end() || *it != x) {
    throw Error(ErrorCode::NotMember, x.serialize() + " is not in the model");
  }
  const auto index = static_cast<std::uint64_t>(it - s.elements.begin());
  BitString d = kModelTag + s.program;
  if (s.log_card > 0) d.append(BitString::from_value(index, s.log_card));
  return d;
}

std::optional<BitString> run_two_part(const BitString& d, const BitString& z, std::uint64_t budget) {
  if (d.size() < kModelTag.size() || d.substr(0, kModelTag.size()) != kModelTag) return std::nullopt;
  const BitString rest = d.substr(kModelTag.size());
  // The model program is self-delimiting: its HALT marks where the index starts.
  Execution ex;
  const Execution::State st = ex.advance(rest, z, budget);
  if (st != Execution::State::Halted && st != Execution::State::EarlyHalt) return std::nullopt;
  auto elems = decode_set(BitString(ex.output()));
  if (!elems || elems->empty()) return std::nullopt;
  const BitString index = rest.substr(ex.consumed());
  if (index.size() != ceil_log2(elems->size())) return std::nullopt;
  std::uint64_t k = 0;
  for (std::size_t b = 0; b < index.size(); ++b) k = 2 * k + (index[b] ? 1 : 0);
  if (k >= elems->size()) return std::nullopt;
  return (*elems)[k];
}

DescProfile desc_profile(const BitString& x, const HaltingTable& t) {
  DescProfile d;
  const auto models = models_of(x, t);
  std::vector<std::pair<Point, Certainty>> pts;
  for (const Model& m : models) {
    const auto k = static_cast<Coord>(m.k);
    pts.push_back({{k, k + static_cast<Coord>(m.log_card + kModelTag.size())}, m.certainty});
  }
  std::vector<Point> raw;
  for (const auto& pc : pts) raw.push_back(pc.first);
  d.lambda = Profile::close(raw);
  for (const Point& g : d.lambda.generators()) {
    Certainty c = Certainty::UpperBound;
    for (const auto& [pt, cert] : pts) {
      if (pt == g && cert == Certainty::Exact) c = cert;
    }
    d.flags.push_back(c);
  }
  d.shortest = k_upper(x, t);
  const Translated tr = translate(d.lambda, -static_cast<Coord>(d.shortest.k));
  d.delta = tr.profile;
  d.clipped = tr.clipped;
  return d;
}

namespace {

Certainty all_flags(const DescProfile& d) {
  Certainty c = d.shortest.certainty;
  for (Certainty f : d.flags) c = combine(c, f);
  return c;
}

}  // namespace

Measured soph(const DescProfile& d, Coord c) {
  const auto v = d.delta.y_graph().at(c);
  if (!v) {
    throw Error(ErrorCode::NoSufficientModel, "no model within " + std::to_string(c) + " of K(x)");
  }
  return {static_cast<std::uint64_t>(*v), all_flags(d)};
}

Measured csoph(const DescProfile& d) {
  Coord best = kNotClose;
  for (const Point& g : d.delta.generators()) best = std::min(best, g.i + g.psi);
  return {static_cast<std::uint64_t>(best), all_flags(d)};
}

std::vector<StructureRow> structure_functions(const BitString& x, TableStore& store) {
  const HaltingTable& t = store.unconditional();
  const auto models = models_of(x, t);
  Budget b = store.budget();
  b.max_len = std::max<std::size_t>({12, 3 * x.size() + 3});

  struct Entry {
    Coord k, lambda, log_card, beta;
    Certainty c;
  };
  std::vector<Entry> entries;
  for (const Model& m : models) {
    const ShortestProgram given = k_upper(x, store.get(m.encoding, b));
    const auto k = static_cast<Coord>(m.k);
    const auto lc = static_cast<Coord>(m.log_card);
    // K(x | S) enters with a minus sign, so its upper bound turns beta into a lower bound.
    Certainty c = m.certainty;
    if (given.certainty != Certainty::Exact) c = combine(c, Certainty::LowerBound);
    entries.push_back({k, k + lc + static_cast<Coord>(kModelTag.size()), lc,
                       lc - static_cast<Coord>(given.k), c});
  }

  std::vector<StructureRow> rows;
  if (entries.empty()) return rows;
  Coord lo = entries.front().k, hi = lo;
  for (const Entry& e : entries) hi = std::max(hi, e.k);
  for (Coord i = lo; i <= hi; ++i) {
    StructureRow r{i, kNotClose, kNotClose, kNotClose, Certainty::Exact};
    for (const Entry& e : entries) {
      if (e.k > i) continue;
      r.lambda = std::min(r.lambda, e.lambda);
      r.h = std::min(r.h, e.log_card);
      r.beta = std::min(r.beta, e.beta);
      r.certainty = combine(r.certainty, e.c);
    }
    rows.push_back(r);
  }
  return rows;
}

namespace {

struct ClockedPoints {
  Profile profile;
  std::vector<Certainty> flags;
};

ClockedPoints clocked(const std::vector<std::pair<BitString, std::uint64_t>>& prods,
                      const std::vector<std::uint64_t>& badgers) {
  std::vector<std::pair<Point, Certainty>> pts;
  std::vector<Point> raw;
  for (const auto& [p, steps] : prods) {
    const Measured th = clock_of_time(badgers, steps);
    pts.push_back({{static_cast<Coord>(th.value), static_cast<Coord>(p.size())}, th.certainty});
    raw.push_back(pts.back().first);
  }
  ClockedPoints out;
  out.profile = Profile::close(raw);
  for (const Point& g : out.profile.generators()) {
    Certainty c = Certainty::LowerBound;
    for (const auto& [pt, cert] : pts) {
      if (pt == g && cert == Certainty::Exact) c = cert;
    }
    out.flags.push_back(c);
  }
  return out;
}

}  // namespace

ThetaProfiles theta_profiles(const BitString& y, const HaltingTable& t_z, const HaltingTable& t_eps) {
  const auto prods = known_producers(y, t_z);
  if (prods.empty()) throw Error(ErrorCode::NotProducible, "no known program outputs " + y.serialize());
  ThetaProfiles th;
  ClockedPoints tilde = clocked(prods, badger_table(t_z));
  ClockedPoints hat = clocked(prods, badger_table(t_eps));
  th.tilde = std::move(tilde.profile);
  th.tilde_flags = std::move(tilde.flags);
  th.hat = std::move(hat.profile);
  th.hat_flags = std::move(hat.flags);
  th.shortest = k_upper(y, t_z);
  return th;
}

Profile reconstruct_theta(const BitString& y_star, std::uint64_t theta, const HaltingTable& t_z,
                          const HaltingTable& t_clock) {
  const BitString& z = t_z.z();
  const std::uint64_t J = t_z.budget().max_jsteps;

  // Run time of y*: it halts when the dovetail reaches it.
  BitString y;
  std::uint64_t rt = 0;
  if (y_star.size() <= t_z.max_len()) {
    Dovetailer dz(z, t_z.max_len(), J);
    bool seen = false;
    while (!seen && dz.step()) {
      for (std::size_t k = dz.halted_count() - dz.last_batch(); k < dz.halted_count(); ++k) {
        if (dz.halted()[k] == y_star) {
          rt = dz.halted_steps()[k];
          seen = true;
        }
      }
    }
    if (!seen) throw Error(ErrorCode::OutOfBudget, y_star.serialize() + " does not halt within J");
    y = u0().run(y_star, z, rt).output;
  } else {
    const ExecutionResult r = u0().run(y_star, z, J);
    if (!r.success()) throw Error(ErrorCode::OutOfBudget, y_star.serialize() + " does not halt within J");
    rt = r.steps;
    y = r.output;
  }

  std::vector<Point> pts{{static_cast<Coord>(theta), static_cast<Coord>(y_star.size())}};
  if (theta == 0) return Profile::close(pts);

  // theta is the least i with badger(i) >= rt, so theta - 1 bits were already
  // stable one j-step before y* halted.
  const std::uint32_t bits = static_cast<std::uint32_t>(theta - 1);
  Dovetailer dc(t_clock.z(), t_clock.max_len(), t_clock.budget().max_jsteps);
  std::vector<HistoryPoint> hist;
  Dyadic before;
  while (dc.step()) {
    if (dc.j() >= rt) break;
    hist.push_back({dc.j(), dc.m()});
    before = dc.m();
  }
  auto agrees = [&](const Dyadic& m, std::uint32_t i) { return m.scaled_floor(i) == before.scaled_floor(i); };
  std::vector<std::uint64_t> badgers;
  for (std::uint32_t i = 0; i <= bits; ++i) {
    std::uint64_t j = 1;
    if (!agrees(hist.empty() || hist.front().j > 1 ? Dyadic() : hist.front().m, i)) {
      auto it = std::find_if(hist.begin(), hist.end(), [&](const HistoryPoint& h) { return agrees(h.m, i); });
      j = it->j;
    }
    badgers.push_back(j);
  }

  // Every producer that is not dominated by (theta, |y*|) halts within badger(theta - 1).
  for (const BitString& p : words_up_to(t_z.max_len())) {
    const ExecutionResult r = u0().run(p, z, badgers.back());
    if (!r.success() || r.output != y) continue;
    const Measured th = clock_of_time(badgers, r.steps);
    pts.push_back({static_cast<Coord>(th.value), static_cast<Coord>(p.size())});
  }
  return Profile::close(pts);
}

Measured soph_free(const ThetaProfiles& th) {
  const auto v = th.tilde.y_graph().at(static_cast<Coord>(th.shortest.k));
  Certainty c = th.shortest.certainty;
  for (Certainty f : th.tilde_flags) c = combine(c, f);
  return {static_cast<std::uint64_t>(*v), c};
}

Measured antistochasticity(const BitString& x, const DescProfile& d) {
  const auto K = static_cast<Coord>(d.shortest.k);
  const auto n = static_cast<Coord>(x.size());
  std::uint64_t count = 0;
  for (Coord e = 0; e <= std::min(K, n); ++e) {
    if (!d.lambda.contains(K - e, n - e)) ++count;
  }
  return {count, all_flags(d)};
}

}  // namespace aitbench
