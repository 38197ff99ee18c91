#include "aitbench/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <queue>
#include <sstream>
#include <thread>

namespace aitbench {

namespace {

std::size_t rank_of(const BitString& p) { return static_cast<std::size_t>(length_lex_rank(p)); }

std::size_t table_size(std::size_t max_len) { return (std::size_t{1} << (max_len + 1)) - 1; }

}  // namespace

HaltingTable::HaltingTable(BitString z, Budget budget, std::vector<Row> rows,
                           std::string machine_version)
    : version_(std::move(machine_version)), z_(std::move(z)), budget_(budget),
      rows_(std::move(rows)) {
  if (rows_.size() != table_size(budget_.max_len)) {
    throw Error(ErrorCode::InvalidArgument, "table needs one row per program");
  }
  index();
  std::vector<std::pair<std::uint64_t, std::size_t>> events;
  for (const Row* r : halted_) events.emplace_back(halting_jstep(r->program.size(), r->steps), r->program.size());
  std::sort(events.begin(), events.end());
  Dyadic m;
  for (std::size_t k = 0; k < events.size(); ++k) {
    m += Dyadic::mass(static_cast<std::uint32_t>(events[k].second));
    if (k + 1 == events.size() || events[k + 1].first != events[k].first) {
      history_.push_back({events[k].first, m});
    }
  }
}

void HaltingTable::index() {
  halted_.clear();
  by_output_.clear();
  unknown_count_ = 0;
  shortest_unknown_ = budget_.max_len + 1;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Row& r = rows_[k];
    if (rank_of(r.program) != k) throw Error(ErrorCode::InvalidArgument, "rows out of order");
    if (r.halted()) {
      halted_.push_back(&r);
      by_output_[r.output].push_back(&r);
    } else if (r.status == RowStatus::Unknown) {
      ++unknown_count_;
      shortest_unknown_ = std::min(shortest_unknown_, r.program.size());
    }
  }
}

const Row& HaltingTable::row(const BitString& p) const {
  if (p.size() > budget_.max_len) throw Error(ErrorCode::OutOfBudget, "program longer than table");
  return rows_[rank_of(p)];
}

const std::vector<const Row*>& HaltingTable::producers(const BitString& w) const {
  static const std::vector<const Row*> none;
  auto it = by_output_.find(w);
  return it == by_output_.end() ? none : it->second;
}

Dyadic HaltingTable::final_m() const { return history_.empty() ? Dyadic() : history_.back().m; }

Dyadic HaltingTable::m_at(std::uint64_t j) const {
  auto it = std::upper_bound(history_.begin(), history_.end(), j,
                             [](std::uint64_t v, const HistoryPoint& h) { return v < h.j; });
  if (it == history_.begin()) return Dyadic();
  return std::prev(it)->m;
}

void HaltingTable::write(std::ostream& os) const {
  os << "aitbench-table v1 machine=" << version_ << " z=" << z_.serialize()
     << " L=" << budget_.max_len << " J=" << budget_.max_jsteps
     << " loops=" << (budget_.loop_check ? "on" : "off") << '\n';
  for (const Row& r : rows_) {
    os << r.program.serialize();
    switch (r.status) {
      case RowStatus::Halted: os << " H " << r.steps << ' ' << r.output.serialize(); break;
      case RowStatus::Aborted: os << " A"; break;
      case RowStatus::Diverges: os << " D " << r.steps; break;
      case RowStatus::Unknown: os << " U " << r.steps; break;
    }
    os << '\n';
  }
  for (const HistoryPoint& h : history_) os << "M " << h.j << ' ' << h.m.to_string() << '\n';
}

HaltingTable HaltingTable::read(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw Error(ErrorCode::ParseError, "empty table file");
  std::istringstream head(line);
  std::string magic, v, machine, zf, lf, jf, loops;
  head >> magic >> v >> machine >> zf >> lf >> jf >> loops;
  if (magic != "aitbench-table" || v != "v1" || machine.rfind("machine=", 0) != 0 ||
      zf.rfind("z=", 0) != 0 || lf.rfind("L=", 0) != 0 || jf.rfind("J=", 0) != 0 ||
      (loops != "loops=on" && loops != "loops=off")) {
    throw Error(ErrorCode::ParseError, "bad table header: " + line);
  }
  std::string version = machine.substr(8);
  if (version != kU0Version) throw Error(ErrorCode::VersionMismatch, "table built by " + version);
  Budget b;
  try {
    b.max_len = std::stoul(lf.substr(2));
    b.max_jsteps = std::stoull(jf.substr(2));
    b.loop_check = loops == "loops=on";
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad budget in header: " + line);
  }
  if (b.max_len > 30) throw Error(ErrorCode::ParseError, "L too large");
  BitString z = BitString::parse(zf.substr(2));

  std::vector<Row> rows;
  rows.reserve(table_size(b.max_len));
  std::vector<HistoryPoint> history;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string a, tag;
    ls >> a >> tag;
    if (a == "M") {
      std::string m;
      ls >> m;
      history.push_back({std::stoull(tag), Dyadic::parse(m)});
      continue;
    }
    Row r;
    r.program = BitString::parse(a);
    if (tag == "H") {
      std::string out;
      if (!(ls >> r.steps >> out)) throw Error(ErrorCode::ParseError, "bad row: " + line);
      r.status = RowStatus::Halted;
      r.output = BitString::parse(out);
    } else if (tag == "A") {
      r.status = RowStatus::Aborted;
    } else if (tag == "D") {
      if (!(ls >> r.steps)) throw Error(ErrorCode::ParseError, "bad row: " + line);
      r.status = RowStatus::Diverges;
    } else if (tag == "U") {
      if (!(ls >> r.steps)) throw Error(ErrorCode::ParseError, "bad row: " + line);
      r.status = RowStatus::Unknown;
    } else {
      throw Error(ErrorCode::ParseError, "bad row: " + line);
    }
    rows.push_back(std::move(r));
  }
  HaltingTable t(z, b, std::move(rows), version);
  if (t.history_ != history) throw Error(ErrorCode::ParseError, "history does not match rows");
  return t;
}

void HaltingTable::save(const std::string& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorCode::IoError, "cannot write " + path);
  write(os);
  if (!os) throw Error(ErrorCode::IoError, "write failed: " + path);
}

HaltingTable HaltingTable::load(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorCode::IoError, "cannot read " + path);
  return read(is);
}

namespace {

struct SweepContext {
  const BitString& z;
  Budget budget;
  std::vector<Row>& rows;
};

void fill_subtree(SweepContext& ctx, const BitString& p, RowStatus status, bool started,
                  std::uint64_t steps = 0) {
  // Every proper extension of p up to L inherits the same fate.
  for (std::size_t len = p.size() + 1; len <= ctx.budget.max_len; ++len) {
    const std::size_t extra = len - p.size();
    const std::size_t base = rank_of(p + BitString(std::string(extra, '0')));
    for (std::size_t k = 0; k < (std::size_t{1} << extra); ++k) {
      Row& r = ctx.rows[base + k];
      r.status = status;
      r.steps = status == RowStatus::Diverges ? steps : 0;
      if (status == RowStatus::Unknown && started && len <= ctx.budget.max_jsteps) {
        r.steps = ctx.budget.max_jsteps;
      }
    }
  }
}

void explore(SweepContext& ctx, const BitString& p, Execution ex,
             std::vector<std::pair<BitString, Execution>>* spill, std::size_t spill_depth) {
  if (spill && p.size() == spill_depth) {
    spill->emplace_back(p, std::move(ex));
    return;
  }
  Row& row = ctx.rows[rank_of(p)];
  if (p.size() > ctx.budget.max_jsteps) {
    // Never scheduled: the dovetail only starts p at j-step |p|.
    row.status = RowStatus::Unknown;
    row.steps = 0;
    fill_subtree(ctx, p, RowStatus::Unknown, false);
    return;
  }
  switch (ex.advance(p, ctx.z, ctx.budget.max_jsteps)) {
    case Execution::State::Halted:
      row.status = RowStatus::Halted;
      row.steps = ex.steps();
      row.output = BitString(ex.output());
      fill_subtree(ctx, p, RowStatus::Aborted, true);
      return;
    case Execution::State::EarlyHalt:
      row.status = RowStatus::Aborted;
      fill_subtree(ctx, p, RowStatus::Aborted, true);
      return;
    case Execution::State::OutOfBudget:
      row.status = RowStatus::Unknown;
      row.steps = ctx.budget.max_jsteps;
      fill_subtree(ctx, p, RowStatus::Unknown, true);
      return;
    case Execution::State::Diverges:
      // The extensions never read past p, so they loop the same way.
      row.status = RowStatus::Diverges;
      row.steps = ex.steps();
      fill_subtree(ctx, p, RowStatus::Diverges, true, ex.steps());
      return;
    default:
      row.status = RowStatus::Aborted;
      break;
  }
  if (p.size() == ctx.budget.max_len) return;
  BitString p0 = p, p1 = p;
  p0.push_back(false);
  p1.push_back(true);
  explore(ctx, p0, ex, spill, spill_depth);
  explore(ctx, p1, std::move(ex), spill, spill_depth);
}

}  // namespace

HaltingTable sweep(const BitString& z, Budget budget, unsigned jobs) {
  if (budget.max_len < 3 || budget.max_jsteps < 1) {
    throw Error(ErrorCode::InvalidArgument, "budget needs L >= 3 and J >= 1");
  }
  if (budget.max_len > 24) throw Error(ErrorCode::InvalidArgument, "L above 24 is not supported");
  std::vector<Row> rows(table_size(budget.max_len));
  for (std::size_t len = 0, k = 0; len <= budget.max_len; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      rows[k++].program = BitString::from_value(v, len);
    }
  }
  SweepContext ctx{z, budget, rows};
  // Subtrees below this depth are independent jobs writing disjoint rows.
  const std::size_t split = std::min<std::size_t>(budget.max_len, 9);
  std::vector<std::pair<BitString, Execution>> tasks;
  explore(ctx, BitString(), Execution(budget.loop_check), &tasks, split);

  jobs = std::max(1U, jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();) {
      explore(ctx, tasks[k].first, std::move(tasks[k].second), nullptr, 0);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
  }
  return HaltingTable(z, budget, std::move(rows));
}

HaltingTable resume(const HaltingTable& from, Budget budget, unsigned jobs) {
  if (from.machine_version() != kU0Version) {
    throw Error(ErrorCode::VersionMismatch, "table built by " + from.machine_version());
  }
  const Budget& old = from.budget();
  if (budget.max_len < old.max_len || budget.max_jsteps < old.max_jsteps || budget == old) {
    throw Error(ErrorCode::BudgetNotLarger, "resume needs a larger budget");
  }
  // Tables keep no machine configurations, so every program is re-derived;
  // decided rows must come back unchanged.
  HaltingTable t = sweep(from.z(), budget, jobs);
  for (const Row& r : from.rows()) {
    if (r.status == RowStatus::Unknown) continue;
    if (t.row(r.program) != r) {
      throw Error(ErrorCode::InvalidArgument, "decided row changed on resume: " + r.program.serialize());
    }
  }
  return t;
}

BitString OmegaApprox::prefix() const {
  BitString out;
  for (std::uint32_t i = 1; i <= stabilized_bits; ++i) out.push_back(value.fraction_bit(i));
  return out;
}

std::uint32_t certified_bits(const Dyadic& value, const Dyadic& slack, std::uint32_t cap) {
  const Dyadic top = value + slack;
  std::uint32_t s = 0;
  while (s < cap && top < value.next_boundary(s + 1)) ++s;
  return s;
}

OmegaApprox omega_approx(const HaltingTable& t) {
  OmegaApprox o;
  o.value = t.final_m();
  const std::size_t L = t.max_len();
  auto has_prefix_with = [&](const BitString& p, RowStatus st) {
    for (std::size_t len = 0; len < p.size(); ++len) {
      if (t.row(p.substr(0, len)).status == st) return true;
    }
    return false;
  };
  Dyadic open_mass;
  for (const Row& r : t.rows()) {
    const auto len = static_cast<std::uint32_t>(r.program.size());
    if (r.status == RowStatus::Unknown && !has_prefix_with(r.program, RowStatus::Unknown)) {
      // Any halters inside this subtree are prefix-free, so it holds at most 2^-|p|.
      o.unknown_mass += Dyadic::mass(len);
    } else if (r.status == RowStatus::Aborted && len == L &&
               !has_prefix_with(r.program, RowStatus::Halted)) {
      // Aborted without a halted prefix means the program ran out of input.
      open_mass += Dyadic::mass(len);
    }
  }
  const auto cap = static_cast<std::uint32_t>(L);
  o.stabilized_bits = certified_bits(o.value, o.unknown_mass, cap);
  o.restricted_certainty = t.has_unknown() ? Certainty::LowerBound : Certainty::Exact;
  o.tail_mass = o.unknown_mass + open_mass;
  o.unrestricted_stabilized_bits = certified_bits(o.value, o.tail_mass, cap);
  o.certainty = o.tail_mass.is_zero() ? Certainty::Exact : Certainty::LowerBound;
  return o;
}

Measured busy_beaver(const HaltingTable& t, std::size_t n) {
  if (n > t.max_len()) throw Error(ErrorCode::OutOfBudget, "busy beaver beyond table length");
  Measured m;
  for (const Row* r : t.halted()) {
    if (r->program.size() > n) break;
    m.value = std::max(m.value, r->steps);
  }
  m.certainty = t.shortest_unknown() <= n ? Certainty::LowerBound : Certainty::Exact;
  return m;
}

Measured inverse_busy_beaver_bound(const HaltingTable& t, std::uint64_t n_steps) {
  for (const Row* r : t.halted()) {
    if (r->steps >= n_steps) {
      // A shorter Unknown row that halts later would be slower still.
      const std::size_t v = r->program.size();
      return {v, t.shortest_unknown() < v ? Certainty::UpperBound : Certainty::Exact};
    }
  }
  return {t.max_len() + 1, Certainty::LowerBound};
}

Measured inverse_busy_beaver(const HaltingTable& t, std::uint64_t n_steps) {
  Measured m = inverse_busy_beaver_bound(t, n_steps);
  if (m.value > t.max_len()) {
    throw Error(ErrorCode::NotWitnessed, "no program runs " + std::to_string(n_steps) + " steps");
  }
  return m;
}

std::uint64_t badger(const HaltingTable& t, std::uint32_t i) {
  const OmegaApprox o = omega_approx(t);
  if (i > o.stabilized_bits) {
    throw Error(ErrorCode::NotStabilized, std::to_string(i) + " bits not certified");
  }
  const BigInt target = o.value.scaled_floor(i);
  if (t.m_at(1).scaled_floor(i) == target) return 1;
  for (const HistoryPoint& h : t.history()) {
    if (h.m.scaled_floor(i) == target) return h.j;
  }
  return 1;  // only reachable when the sum is zero
}

std::vector<std::uint64_t> badger_table(const HaltingTable& t) {
  const OmegaApprox o = omega_approx(t);
  std::vector<std::uint64_t> out;
  for (std::uint32_t i = 0; i <= o.stabilized_bits; ++i) {
    const BigInt target = o.value.scaled_floor(i);
    std::uint64_t j = 1;
    if (t.m_at(1).scaled_floor(i) != target) {
      for (const HistoryPoint& h : t.history()) {
        if (h.m.scaled_floor(i) == target) {
          j = h.j;
          break;
        }
      }
    }
    out.push_back(j);
  }
  return out;
}

Measured clock_of_time(const std::vector<std::uint64_t>& badgers, std::uint64_t rt) {
  for (std::size_t i = 0; i < badgers.size(); ++i) {
    if (badgers[i] >= rt) return {i, Certainty::Exact};
  }
  return {badgers.size(), Certainty::LowerBound};
}

Measured clock_time(const HaltingTable& t, const BitString& p) {
  const Row& r = t.row(p);
  if (!r.halted()) throw Error(ErrorCode::InvalidArgument, p.serialize() + " is not Halted");
  return clock_of_time(badger_table(t), r.steps);
}

Dovetailer::Dovetailer(const BitString& z, std::size_t max_len, std::uint64_t max_jsteps)
    : z_(z), max_jsteps_(max_jsteps), programs_(words_up_to(max_len)),
      runs_(programs_.size()) {
  for (std::size_t k = 0; k < programs_.size(); ++k) {
    heap_.emplace_back(std::max<std::uint64_t>(1, programs_[k].size()), k);
  }
  std::make_heap(heap_.begin(), heap_.end(), std::greater<>());
}

bool Dovetailer::step() {
  last_batch_ = 0;
  if (heap_.empty() || heap_.front().first > max_jsteps_) return false;
  j_ = heap_.front().first;
  while (!heap_.empty() && heap_.front().first == j_) {
    std::pop_heap(heap_.begin(), heap_.end(), std::greater<>());
    const std::size_t k = heap_.back().second;
    heap_.pop_back();
    Execution& ex = runs_[k];
    switch (ex.advance(programs_[k], z_, j_)) {
      case Execution::State::Halted:
        m_ += Dyadic::mass(static_cast<std::uint32_t>(programs_[k].size()));
        halted_.push_back(programs_[k]);
        steps_.push_back(ex.steps());
        ++last_batch_;
        ex = Execution();
        break;
      case Execution::State::OutOfBudget:
        heap_.emplace_back(ex.steps() + std::max<std::uint64_t>(1, ex.pending_cost()), k);
        std::push_heap(heap_.begin(), heap_.end(), std::greater<>());
        break;
      default:
        ex = Execution();  // aborted for good; release its tape
        break;
    }
  }
  return true;
}

std::vector<BitString> halting_from_omega(const HaltingTable& t, const BitString& omega_prefix) {
  if (omega_prefix.empty()) return {};
  BigInt num = 0;
  for (std::size_t i = 0; i < omega_prefix.size(); ++i) num = (num << 1) | (omega_prefix[i] ? 1 : 0);
  const Dyadic target(num, static_cast<std::uint32_t>(omega_prefix.size()));
  Dovetailer d(t.z(), t.max_len(), t.budget().max_jsteps);
  while (d.m() < target) {
    if (!d.step()) throw Error(ErrorCode::PrefixNotReached, "sum never reaches 0." + omega_prefix.str());
  }
  // Any program of length <= |prefix| halting later would push the sum past the prefix.
  std::vector<BitString> out;
  for (const BitString& p : d.halted()) {
    if (p.size() <= omega_prefix.size()) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BitString> halting_from_count(const HaltingTable& t, std::size_t j, std::uint64_t count) {
  Dovetailer d(t.z(), j, t.budget().max_jsteps);
  while (d.halted_count() < count) {
    if (!d.step()) {
      throw Error(ErrorCode::CountNeverReached,
                  "only " + std::to_string(d.halted_count()) + " programs halted");
    }
  }
  std::vector<BitString> out = d.halted();
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace aitbench
