// Command-line front end: sweeps, cached tables, profiles and reports.

#include "aitbench/algostats.hpp"
#include "aitbench/complexity.hpp"
#include "aitbench/halting_info.hpp"
#include "aitbench/pair_code.hpp"
#include "aitbench/reports.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace aitbench;

namespace {

struct Options {
  std::size_t max_len = 14;
  std::uint64_t max_steps = 100000;
  std::string cond = "-";
  std::string cache;
  std::string format = "csv";
  std::string out;
  unsigned jobs = 1;
  Coord eps = 1;
  bool no_loop_check = false;
  // verb arguments
  std::string x = "-";
  std::size_t n = 2;
  Coord c = 0;
  std::size_t i_max = 14;
  std::string steps;
  Coord i = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool budget_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::OutOfBudget:
    case ErrorCode::NotStabilized:
    case ErrorCode::NotExact:
    case ErrorCode::PrefixTooShort:
    case ErrorCode::NotWitnessed:
    case ErrorCode::PrefixNotReached:
    case ErrorCode::CountNeverReached:
    case ErrorCode::NotProducible:
    case ErrorCode::NoSufficientModel:
      return true;
    default:
      return false;
  }
}

class Session {
 public:
  Session(const Options& o, bool len_given, bool steps_given) : o_(o) {
    z_ = BitString::parse(o.cond);
    Budget b{o.max_len, o.max_steps, !o.no_loop_check};
    std::optional<HaltingTable> primary;
    if (!o.cache.empty() && std::filesystem::exists(o.cache)) {
      primary = HaltingTable::load(o.cache);
      const Budget& fb = primary->budget();
      if ((len_given && fb.max_len != b.max_len) || (steps_given && fb.max_jsteps != b.max_jsteps)) {
        throw UsageError("cache " + o.cache + " holds another budget; run sweep to extend it");
      }
      if (primary->z() != z_) throw UsageError("cache " + o.cache + " holds z=" + primary->z().serialize());
      b = fb;
    }
    store_ = std::make_unique<TableStore>(b, o.jobs, o.cache.empty() ? std::string() : o.cache + ".d");
    if (primary) {
      store_->insert(std::move(*primary));
    } else if (!o.cache.empty()) {
      store_->get(z_).save(o.cache);
    }
  }

  TableStore& store() { return *store_; }
  const HaltingTable& tz() { return store_->get(z_); }
  const HaltingTable& te() { return store_->unconditional(); }
  const BitString& z() const { return z_; }

 private:
  const Options& o_;
  BitString z_;
  std::unique_ptr<TableStore> store_;
};

std::string str(std::int64_t v) { return std::to_string(v); }

std::string point(const Point& p) { return "(" + str(p.i) + "," + str(p.psi) + ")"; }

void add_profile(Report& rep, const std::string& x, const std::string& y, const std::string& name,
                 const Profile& p, const std::vector<Certainty>& flags) {
  const auto& g = p.generators();
  for (std::size_t k = 0; k < g.size(); ++k) {
    rep.add(x, y, name, point(g[k]), k < flags.size() ? flags[k] : Certainty::Exact);
  }
}

Report sweep_verb(const Options& o) {
  const BitString z = BitString::parse(o.cond);
  const Budget b{o.max_len, o.max_steps, !o.no_loop_check};
  HaltingTable t;
  if (!o.cache.empty() && std::filesystem::exists(o.cache)) {
    HaltingTable old = HaltingTable::load(o.cache);
    if (old.z() != z) throw UsageError("cache " + o.cache + " holds z=" + old.z().serialize());
    if (old.budget() == b) {
      t = std::move(old);
    } else {
      t = resume(old, b, o.jobs);
      t.save(o.cache);
    }
  } else {
    t = sweep(z, b, o.jobs);
    if (!o.cache.empty()) t.save(o.cache);
  }
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const Row& r : t.rows()) ++counts[static_cast<int>(r.status)];
  Report rep;
  rep.title = "sweep";
  const std::string zs = z.serialize();
  rep.add(zs, "-", "L", std::to_string(t.budget().max_len));
  rep.add(zs, "-", "J", std::to_string(t.budget().max_jsteps));
  rep.add(zs, "-", "halted", std::to_string(counts[0]));
  rep.add(zs, "-", "aborted", std::to_string(counts[1]));
  rep.add(zs, "-", "diverges", std::to_string(counts[2]));
  rep.add(zs, "-", "unknown", std::to_string(counts[3]));
  rep.add(zs, "-", "M", t.final_m().to_string());
  return rep;
}

Report omega_verb(Session& s) {
  const HaltingTable& t = s.tz();
  const OmegaApprox o = omega_approx(t);
  Report rep;
  rep.title = "omega";
  const std::string zs = s.z().serialize();
  rep.add(zs, "-", "M", o.value.to_string(), o.restricted_certainty);
  rep.add(zs, "-", "unknown_mass", o.unknown_mass.to_string());
  rep.add(zs, "-", "stabilized_bits", std::to_string(o.stabilized_bits), o.restricted_certainty);
  rep.add(zs, "-", "prefix", o.prefix().serialize(), o.restricted_certainty);
  rep.add(zs, "-", "tail_mass", o.tail_mass.to_string());
  rep.add(zs, "-", "unrestricted_stabilized_bits", std::to_string(o.unrestricted_stabilized_bits),
          o.certainty);
  for (std::size_t n = 3; n <= t.max_len(); n += 3) {
    const Measured b = busy_beaver(t, n);
    rep.add(zs, std::to_string(n), "B", std::to_string(b.value), b.certainty);
  }
  const auto badgers = badger_table(t);
  for (std::size_t i = 0; i < badgers.size(); ++i) {
    rep.add(zs, std::to_string(i), "badger", std::to_string(badgers[i]));
  }
  return rep;
}

Report k_verb(Session& s, const Options& o) {
  const BitString x = BitString::parse(o.x);
  const ShortestProgram sp = k_upper(x, s.tz());
  Report rep;
  rep.title = "K";
  const std::string xs = x.serialize(), zs = s.z().serialize();
  rep.add(xs, zs, "K", std::to_string(sp.k), sp.certainty);
  rep.add(xs, zs, "program", sp.program.serialize(), sp.certainty);
  rep.add(xs, zs, "steps", std::to_string(sp.steps), sp.certainty);
  rep.add(xs, zs, "in_table", sp.in_table ? "1" : "0");
  return rep;
}

Report profile_verb(Session& s, const Options& o, const std::string& kind) {
  const BitString x = BitString::parse(o.x);
  const std::string xs = x.serialize(), zs = s.z().serialize();
  Report rep;
  rep.title = "profile " + kind;
  if (kind == "time") {
    const TimeProfile tp = time_profile(x, s.tz(), s.te());
    add_profile(rep, xs, zs, "gen", tp.profile, tp.flags);
  } else if (kind == "desc") {
    const DescProfile d = desc_profile(x, s.tz());
    add_profile(rep, xs, zs, "gen", d.lambda, d.flags);
    add_profile(rep, xs, zs, "delta", d.delta, d.flags);
    rep.add(xs, zs, "tag_bits", std::to_string(kModelTag.size()));
  } else {
    const ThetaProfiles th = theta_profiles(x, s.tz(), s.te());
    add_profile(rep, xs, zs, "theta~", th.tilde, th.tilde_flags);
    add_profile(rep, xs, zs, "theta^", th.hat, th.hat_flags);
  }
  return rep;
}

Report soph_verb(Session& s, const Options& o) {
  const BitString x = BitString::parse(o.x);
  const std::string xs = x.serialize(), zs = s.z().serialize();
  const DescProfile d = desc_profile(x, s.tz());
  Report rep;
  rep.title = "soph";
  const Measured sc = soph(d, o.c);
  rep.add(xs, zs, "soph@" + str(o.c), std::to_string(sc.value), sc.certainty);
  const Measured cs = csoph(d);
  rep.add(xs, zs, "csoph", std::to_string(cs.value), cs.certainty);
  const Measured sf = soph_free(theta_profiles(x, s.tz(), s.te()));
  rep.add(xs, zs, "soph_free", std::to_string(sf.value), sf.certainty);
  const Measured a = antistochasticity(x, d);
  rep.add(xs, zs, "antistochasticity", std::to_string(a.value), a.certainty);
  return rep;
}

Report depth_verb(Session& s, const Options& o) {
  const BitString x = BitString::parse(o.x);
  const std::string xs = x.serialize(), zs = s.z().serialize();
  const TimeProfile tp = time_profile(x, s.tz(), s.te());
  Report rep;
  rep.title = "depth";
  for (const auto& [c, v] : tp.depth.y_graph().steps) {
    rep.add(xs, zs, "bdepth@" + str(c), str(v), tp.flags.back());
  }
  add_profile(rep, xs, zs, "depth_gen", tp.depth, tp.flags);
  return rep;
}

Report hmd_verb(Session& s, const Options& o) {
  const ReachCurve r = reach_curve(s.tz(), s.te(), std::min(o.i_max, s.tz().max_len()));
  Report rep;
  rep.title = "hmd";
  for (const HmdPoint& h : hmd(r)) rep.add(s.z().serialize(), str(h.i), "H", str(h.h), h.certainty);
  return rep;
}

StepSpec parse_steps(const std::string& text) {
  StepSpec h;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("steps are a:b pairs separated by commas");
    h.emplace_back(std::stoll(item.substr(0, colon)), std::stoll(item.substr(colon + 1)));
  }
  return h;
}

Report gamma_verb(Session& s, const Options& o) {
  const StepSpec h = parse_steps(o.steps);
  Report rep;
  rep.title = "gamma";
  const BitString g = build_gamma(h, s.te());
  const BitString d = hole_advice(h, o.i, s.te());
  const Coord n = o.i + step_value(h, o.i);
  const BitString back = reassemble(h, g, d, n);
  rep.add(o.steps, str(o.i), "gamma", g.serialize());
  rep.add(o.steps, str(o.i), "delta", d.serialize());
  rep.add(o.steps, str(o.i), "reassembled", back.serialize());
  rep.add(o.steps, str(o.i), "omega_prefix", omega_approx(s.te()).prefix().substr(0, n).serialize());
  return rep;
}

void emit(const Report& rep, const Options& o) {
  const std::string text = o.format == "json" ? rep.to_json() + "\n" : rep.to_csv();
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(o.out, std::ios::binary);
  if (!os) throw Error(ErrorCode::IoError, "cannot write " + o.out);
  os << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Desk-scale algorithmic information laboratory on the U0 machine"};
  app.require_subcommand(1);
  Options o;

  CLI::Option* len_opt = app.add_option("--max-len", o.max_len, "Longest program swept (L)");
  CLI::Option* steps_opt = app.add_option("--max-steps", o.max_steps, "j-step budget (J)");
  app.add_option("--cond", o.cond, "Auxiliary string z ('-' for empty)");
  app.add_option("--cache", o.cache, "Primary table file; other tables go to <cache>.d/");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", o.out, "Write output here instead of stdout");
  app.add_option("--jobs", o.jobs, "Sweep workers")->check(CLI::Range(1u, 256u));
  app.add_option("--eps", o.eps, "Sharp-finish threshold");
  app.add_flag("--no-loop-check", o.no_loop_check, "Leave provable loops Unknown");

  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep (or extend) the halting table");
  auto* omega_cmd = app.add_subcommand("omega", "Omega approximation, busy beaver and badger");
  auto* k_cmd = app.add_subcommand("k", "Shortest program of x given z");
  k_cmd->add_option("--x", o.x, "String x")->required();
  auto* profile_cmd = app.add_subcommand("profile", "Profile generators");
  profile_cmd->require_subcommand(1);
  std::string profile_kind;
  for (const char* kind : {"time", "desc", "theta"}) {
    auto* sub = profile_cmd->add_subcommand(kind, std::string(kind) + " profile");
    sub->add_option("--x", o.x, "String x")->required();
    sub->callback([&profile_kind, kind] { profile_kind = kind; });
  }
  auto* soph_cmd = app.add_subcommand("soph", "Sophistication variants");
  soph_cmd->add_option("--x", o.x, "String x")->required();
  soph_cmd->add_option("--c", o.c, "Slack c");
  auto* depth_cmd = app.add_subcommand("depth", "bdepth_c for every c");
  depth_cmd->add_option("--x", o.x, "String x")->required();
  auto* reach_cmd = app.add_subcommand("reach", "Reach curve of z, both routes");
  reach_cmd->add_option("--i-max", o.i_max, "Largest advice length");
  auto* hmd_cmd = app.add_subcommand("hmd", "H_z(i) = R_z(i) - i");
  hmd_cmd->add_option("--i-max", o.i_max, "Largest advice length");
  auto* gamma_cmd = app.add_subcommand("gamma", "Omega blocks for a step function h");
  gamma_cmd->add_option("--steps", o.steps, "a0:b0,a1:b1,... (a_k gaps, b_k jumps)")->required();
  gamma_cmd->add_option("--i", o.i, "Advice length for the hole bits");
  auto* report_cmd = app.add_subcommand("report", "Tabulated relations");
  report_cmd->require_subcommand(1);
  std::string report_kind;
  for (const char* kind : {"chainrule", "pairs", "equivalences", "latehalters"}) {
    auto* sub = report_cmd->add_subcommand(kind, kind);
    sub->add_option("--n", o.n, "Largest string length");
    sub->callback([&report_kind, kind] { report_kind = kind; });
  }
  auto* survey_cmd = app.add_subcommand("survey", "All strings of one length");
  survey_cmd->add_option("--n", o.n, "String length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (sweep_cmd->parsed()) {
      emit(sweep_verb(o), o);
      return 0;
    }
    Session s(o, len_opt->count() > 0, steps_opt->count() > 0);
    Report rep;
    if (omega_cmd->parsed()) rep = omega_verb(s);
    else if (k_cmd->parsed()) rep = k_verb(s, o);
    else if (profile_cmd->parsed()) rep = profile_verb(s, o, profile_kind);
    else if (soph_cmd->parsed()) rep = soph_verb(s, o);
    else if (depth_cmd->parsed()) rep = depth_verb(s, o);
    else if (reach_cmd->parsed()) rep = reach_report(s.z(), std::min(o.i_max, s.tz().max_len()), s.store());
    else if (hmd_cmd->parsed()) rep = hmd_verb(s, o);
    else if (gamma_cmd->parsed()) rep = gamma_verb(s, o);
    else if (survey_cmd->parsed()) rep = survey(o.n, s.store());
    else if (report_kind == "chainrule") rep = chain_rule_report(o.n, s.store());
    else if (report_kind == "pairs") {
      rep = depth_pair_report(o.n, o.eps, s.store());
      rep.append(soph_pair_report(o.n, o.eps, s.store()));
    } else if (report_kind == "equivalences") rep = equivalences_report(o.n, std::min<std::size_t>(o.n, 2), s.store());
    else if (report_kind == "latehalters") rep = late_halters_report(s.te().max_len(), s.store());
    emit(rep, o);
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return budget_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
