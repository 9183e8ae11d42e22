#include "commands.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

namespace torschain::cli {

namespace {

Json rational_json(const Rational& r) { return to_string(r); }

Json dims_json(const DimVector& d) {
  Json out = Json::array();
  for (int x : d) out.push_back(x);
  return out;
}

Json members_json(IndexSet s, const Universe& u) {
  Json out = Json::array();
  for (int x : s.indices()) out.push_back(u.table().name(x));
  return out;
}

Json shape_json(const HNShape& shape, const Universe& u) {
  Json out = Json::array();
  for (const auto& [phase, factor] : shape) {
    out.push_back(Json{{"factor", u.format(factor)}, {"phase", to_string(phase)}});
  }
  return out;
}

Json chain_json(const StepChain& c, const Universe& u) {
  Json pieces = Json::array();
  const auto& bps = c.breakpoints();
  for (std::size_t i = 0; i < c.pieces().size(); ++i) {
    pieces.push_back(Json{{"start", to_string(bps[i])}, {"end", to_string(bps[i + 1])},
                          {"class", members_json(c.pieces()[i], u)}});
  }
  return pieces;
}

Json phases_json(const std::vector<Phase>& phases, const Universe& u) {
  Json out = Json::array();
  for (const auto& p : phases) out.push_back(Json{{"phase", to_string(p.phase)}, {"members", members_json(p.members, u)}});
  return out;
}

std::string phases_text(const std::vector<Phase>& phases, const Universe& u) {
  std::string out;
  for (const auto& p : phases) out += "  P_" + to_string(p.phase) + " = " + u.format(p.members) + "\n";
  return out;
}

std::string need(const std::optional<std::string>& v, const char* flag, const std::string& command) {
  if (!v) throw InputError(command + " needs " + flag);
  return *v;
}

ModClass module_arg(const Scenario& s, const std::optional<std::string>& v, const char* flag, const std::string& cmd) {
  const ModClass m = s.universe->parse(need(v, flag, cmd));
  if (m.is_zero()) throw InputError(std::string(flag) + " must name a nonzero module");
  return m;
}

Rational min_gap(const StepChain& c) {
  Rational gap(1);
  const auto& b = c.breakpoints();
  for (std::size_t i = 1; i < b.size(); ++i) gap = std::min(gap, b[i] - b[i - 1]);
  return gap;
}

using Handler = std::function<CommandResult(const CommandArgs&, const Scenario&)>;

CommandResult cmd_indecs(const CommandArgs&, const Scenario& s) {
  const Universe& u = *s.universe;
  CommandResult r;
  Json list = Json::array();
  std::ostringstream text;
  text << u.table().label() << " over F_" << u.table().p() << ": " << u.size() << " indecomposables\n";
  for (int x = 0; x < u.size(); ++x) {
    const auto& e = u.table().entry(x);
    const bool brick = is_brick(e.rep);
    list.push_back(Json{{"name", e.name}, {"dims", dims_json(e.rep.dims())}, {"brick", brick}});
    text << "  " << e.name << "  dim (";
    for (std::size_t v = 0; v < e.rep.dims().size(); ++v) text << (v ? "," : "") << e.rep.dims()[v];
    text << ")" << (brick ? "  brick" : "") << "\n";
  }
  r.json = Json{{"quiver", u.table().label()}, {"p", u.table().p()}, {"indecomposables", list}};
  r.text = text.str();
  return r;
}

CommandResult cmd_tors_lattice(const CommandArgs&, const Scenario& s) {
  const Universe& u = *s.universe;
  const auto lattice = enumerate_lattice(u);
  const auto mgs = enumerate_mgs(lattice, u);
  CommandResult r;
  std::ostringstream text;
  text << lattice.classes.size() << " torsion classes, " << mgs.size() << " maximal green sequences\n";
  Json classes = Json::array();
  for (std::size_t i = 0; i < lattice.classes.size(); ++i) {
    classes.push_back(members_json(lattice.classes[i], u));
    text << "  T" << i << " = " << u.format(lattice.classes[i]) << "\n";
  }
  Json covers = Json::array();
  text << "covers:";
  for (const auto& [hi, lo] : lattice.covers) {
    covers.push_back(Json::array({hi, lo}));
    text << " T" << hi << ">T" << lo;
  }
  text << "\n";
  r.json = Json{{"torsion_classes", lattice.classes.size()},
                {"maximal_green_sequences", mgs.size()},
                {"classes", classes},
                {"covers", covers}};
  r.text = text.str();
  return r;
}

// A scenario class, or an explicit member list checked as given.
CommandResult cmd_tors_check(const CommandArgs& a, const Scenario& s) {
  const Universe& u = *s.universe;
  IndexSet set;
  if (a.cls) {
    set = s.torsion_class(*a.cls);
  } else if (a.members) {
    set = u.parse_members(split_list(*a.members));
  } else {
    throw InputError("tors-check needs --class or --members");
  }
  const bool torsion = is_torsion_class(set, u);
  const bool torsion_free = is_torsion_free_class(set, u);
  const IndexSet closure = tors_closure(set, u);
  const IndexSet f = perp(closure, u);
  CommandResult r;
  r.exit_code = torsion ? 0 : 1;
  r.json = Json{{"members", members_json(set, u)},
                {"torsion_class", torsion},
                {"torsion_free_class", torsion_free},
                {"closure", members_json(closure, u)},
                {"perp", members_json(f, u)}};
  std::ostringstream text;
  text << u.format(set) << (torsion ? " is" : " is not") << " a torsion class\n";
  text << "  torsion-free class: " << (torsion_free ? "yes" : "no") << "\n";
  text << "  T(" << u.format(set) << ") = " << u.format(closure) << "\n";
  text << "  perp = " << u.format(f) << "\n";
  if (a.module) {
    const Rep m = u.realize(module_arg(s, a.module, "--module", a.command));
    const auto ses = torsion_subobject(m, closure, u);
    const ModClass tm = u.decompose(ses.torsion_part.rep);
    const ModClass fm = u.decompose(ses.quotient_part);
    r.json["module"] = Json{{"module", *a.module}, {"torsion_part", u.format(tm)}, {"free_part", u.format(fm)}};
    text << "  0 -> " << u.format(tm) << " -> " << *a.module << " -> " << u.format(fm) << " -> 0\n";
  }
  r.text = text.str();
  return r;
}

CommandResult cmd_chain_pt(const CommandArgs& a, const Scenario& s) {
  const Universe& u = *s.universe;
  const StepChain c = s.chain(need(a.chain, "--chain", a.command));
  const auto phases = nonzero_phases(c, u);
  CommandResult r;
  r.json = Json{{"chain", *a.chain}, {"pieces", chain_json(c, u)}, {"phases", phases_json(phases, u)}};
  std::ostringstream text;
  text << *a.chain << ": " << describe(c, u) << "\n" << phases_text(phases, u);
  if (a.t) {
    const Rational t = parse_rational(*a.t);
    if (t < Rational(0) || t > Rational(1)) throw InputError("--t must lie in [0, 1]");
    const IndexSet p = phase_category(c, t, u);
    r.json["at"] = Json{{"t", to_string(t)},
                        {"left", members_json(c.value_left(t), u)},
                        {"right", members_json(c.value_right(t), u)},
                        {"phase_category", members_json(p, u)}};
    text << "at t = " << to_string(t) << ": left " << u.format(c.value_left(t)) << ", right "
         << u.format(c.value_right(t)) << ", P_t = " << u.format(p) << "\n";
  }
  r.text = text.str();
  return r;
}

CommandResult cmd_hn(const CommandArgs& a, const Scenario& s) {
  const Universe& u = *s.universe;
  const StepChain c = s.chain(need(a.chain, "--chain", a.command));
  const ModClass m = module_arg(s, a.module, "--module", a.command);
  const HNShape shape = shape_of(hn_filtration(c, u.realize(m), u));
  CommandResult r;
  r.json = Json{{"chain", *a.chain}, {"module", u.format(m)}, {"filtration", shape_json(shape, u)}};
  std::ostringstream text;
  text << u.format(m) << ": " << describe(shape, u) << "\n";
  if (total_dim(dims_of(m, u.table())) <= s.guards.max_total) {
    CensusCache cache(u.table());
    const auto count = count_hn_filtrations(c, m, u, cache);
    const bool agrees = count.count == 1 && count.shapes.size() == 1 && count.shapes.front() == shape;
    r.json["exhaustive_count"] = count.count;
    r.json["oracle_agrees"] = agrees;
    text << "  exhaustive search: " << count.count << " filtration(s)" << (agrees ? ", agrees" : ", DISAGREES") << "\n";
    if (!agrees) r.exit_code = 1;
  }
  r.text = text.str();
  return r;
}

const char* ordering_name(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return "<";
  if (o == std::strong_ordering::greater) return ">";
  return "=";
}

CommandResult cmd_phase_word(const CommandArgs& a, const Scenario& s) {
  const Universe& u = *s.universe;
  const StepChain c = s.chain(need(a.chain, "--chain", a.command));
  const ModClass m = module_arg(s, a.module, "--module", a.command);
  const Rep rep = u.realize(m);
  const PhaseWord w = phase_word(c, rep, u);
  const MaxDestab md = max_destab(c, rep, u);
  CommandResult r;
  Json letters = Json::array();
  for (const auto& l : w.letters) letters.push_back(rational_json(l));
  r.json = Json{{"chain", *a.chain},
                {"module", u.format(m)},
                {"word", letters},
                {"max_destabilising_quotient", u.format(u.decompose(md.minus))},
                {"max_destabilising_submodule", u.format(u.decompose(md.plus))}};
  std::ostringstream text;
  text << u.format(m) << ": " << describe(w) << "\n";
  text << "  M- = " << u.format(u.decompose(md.minus)) << ", M+ = " << u.format(u.decompose(md.plus)) << "\n";
  if (a.module2) {
    const ModClass n = module_arg(s, a.module2, "--module2", a.command);
    const Rep nrep = u.realize(n);
    const auto ord = compare(c, rep, nrep, u);
    r.json["compare"] = Json{{"module2", u.format(n)},
                             {"word2", describe(phase_word(c, nrep, u))},
                             {"order", ordering_name(ord)}};
    text << u.format(n) << ": " << describe(phase_word(c, nrep, u)) << "\n";
    text << u.format(m) << " " << ordering_name(ord) << " " << u.format(n) << "\n";
  }
  r.text = text.str();
  return r;
}

CommandResult cmd_mgs_list(const CommandArgs&, const Scenario& s) {
  const Universe& u = *s.universe;
  const auto lattice = enumerate_lattice(u);
  const auto all = enumerate_mgs(lattice, u);
  CommandResult r;
  Json list = Json::array();
  std::ostringstream text;
  text << all.size() << " maximal green sequences\n";
  for (std::size_t k = 0; k < all.size(); ++k) {
    Json seq = Json::array();
    text << "  mgs:" << k + 1 << " (length " << all[k].size() - 1 << ")";
    for (std::size_t i = 0; i < all[k].size(); ++i) {
      seq.push_back(members_json(all[k][i], u));
      text << (i ? " > " : ": ") << u.format(all[k][i]);
    }
    text << "\n";
    list.push_back(Json{{"name", "mgs:" + std::to_string(k + 1)}, {"length", all[k].size() - 1}, {"classes", seq}});
  }
  r.json = Json{{"count", all.size()}, {"sequences", list}};
  r.text = text.str();
  return r;
}

CommandResult cmd_mgs_bricks(const CommandArgs&, const Scenario& s) {
  const Universe& u = *s.universe;
  const auto lattice = enumerate_lattice(u);
  const auto all = enumerate_mgs(lattice, u);
  CommandResult r;
  Json list = Json::array();
  std::ostringstream text;
  std::vector<std::vector<DimVector>> seen;
  bool ok = true;
  for (std::size_t k = 0; k < all.size(); ++k) {
    const std::string name = "mgs:" + std::to_string(k + 1);
    Json entry{{"name", name}};
    try {
      const BrickLabels labels = brick_labels(all[k], u);
      const bool orth = hom_orthogonal(labels, u);
      const bool distinct = std::find(seen.begin(), seen.end(), labels.c_vectors) == seen.end();
      seen.push_back(labels.c_vectors);
      ok = ok && orth && distinct;
      Json bricks = Json::array();
      text << "  " << name << ":";
      for (std::size_t i = 0; i < labels.bricks.size(); ++i) {
        const int b = labels.bricks[i];
        bricks.push_back(Json{{"brick", u.table().name(b)},
                              {"phase", to_string(labels.phases[i])},
                              {"c_vector", dims_json(labels.c_vectors[i])}});
        text << " " << u.table().name(b) << " @ " << to_string(labels.phases[i]);
      }
      text << (orth ? "" : "  [NOT Hom-orthogonal]") << (distinct ? "" : "  [repeated c-vectors]") << "\n";
      entry["bricks"] = bricks;
      entry["hom_orthogonal"] = orth;
      entry["distinct_c_vectors"] = distinct;
    } catch (const ViolationError& e) {
      ok = false;
      entry["error"] = e.what();
      text << "  " << name << ": " << e.what() << "\n";
    }
    list.push_back(entry);
  }
  r.exit_code = ok ? 0 : 1;
  r.json = Json{{"ok", ok}, {"sequences", list}};
  r.text = std::to_string(all.size()) + " maximal green sequences, brick labels " + (ok ? "verified" : "FAILED") +
           "\n" + text.str();
  return r;
}

CommandResult cmd_stab_chain(const CommandArgs& a, const Scenario& s) {
  const Universe& u = *s.universe;
  const StabilityForm& f = s.form(need(a.form, "--form", a.command));
  const StepChain c = chain_from_stability(f, u);
  const auto phases = nonzero_phases(c, u);
  CommandResult r;
  Json phis = Json::array();
  for (int x = 0; x < u.size(); ++x) {
    phis.push_back(Json{{"name", u.table().name(x)}, {"phi", to_string(phi_value(f, u.table().entry(x).rep))}});
  }
  r.json = Json{{"form", *a.form}, {"phi", phis}, {"pieces", chain_json(c, u)}, {"phases", phases_json(phases, u)}};
  r.text = describe(f) + "\n" + describe(c, u) + "\n" + phases_text(phases, u);
  return r;
}

CommandResult cmd_stab_verify(const CommandArgs& a, const Scenario& s) {
  const Universe& u = *s.universe;
  std::vector<std::pair<std::string, StabilityForm>> forms;
  if (a.form) {
    forms.emplace_back(*a.form, s.form(*a.form));
  } else {
    if (a.count < 1) throw InputError("--count must be positive");
    std::mt19937 rng(static_cast<std::mt19937::result_type>(a.seed));
    for (int i = 0; i < a.count; ++i) forms.emplace_back("random " + std::to_string(i + 1), random_form(u, rng));
  }
  CommandResult r;
  Json list = Json::array();
  std::ostringstream detail;
  bool ok = true;
  for (const auto& [name, f] : forms) {
    const auto rep = verify_semistable_equality(f, u, s.guards.max_total);
    ok = ok && rep.ok;
    Json violations = Json::array();
    for (const auto& v : rep.violations) violations.push_back(v);
    list.push_back(Json{{"name", name},
                        {"form", describe(f)},
                        {"ok", rep.ok},
                        {"phases_checked", rep.phases_checked},
                        {"modules_checked", rep.modules_checked},
                        {"violations", violations}});
    detail << "  " << name << " " << describe(f) << ": " << (rep.ok ? "ok" : "FAILED") << "\n";
    for (const auto& v : rep.violations) detail << "    " << v << "\n";
  }
  r.exit_code = ok ? 0 : 1;
  r.json = Json{{"ok", ok}, {"seed", a.seed}, {"max_total", s.guards.max_total}, {"forms", list}};
  r.text = std::string(ok ? "semistable categories match" : "semistable categories DIFFER") + " on " +
           std::to_string(forms.size()) + " form(s)\n" + detail.str();
  return r;
}

CommandResult cmd_hall_verify(const CommandArgs& a, const Scenario& s) {
  const Universe& u = *s.universe;
  std::optional<DimVector> bound;
  if (a.bound) {
    bound = s.bound(*a.bound);
  } else if (auto it = s.bounds.find("default"); it != s.bounds.end()) {
    bound = it->second;
  } else {
    throw InputError("hall-verify needs --bound (or a bound named \"default\" in the scenario)");
  }
  HallAlgebra algebra(u, *bound);
  WallCrossingReport rep;
  std::string what;
  CommandResult r;
  if (a.cls) {
    rep = verify_torsion_pair_identity(s.torsion_class(*a.cls), algebra);
    what = "torsion-pair identity";
    r.json["class"] = *a.cls;
  } else {
    rep = verify_wallcrossing(s.chain(need(a.chain, "--chain or --class", a.command)), algebra);
    what = "wall-crossing identity";
    r.json["chain"] = *a.chain;
  }
  Json mismatches = Json::array();
  for (const auto& m : rep.mismatches) mismatches.push_back(m);
  r.json["bound"] = dims_json(*bound);
  r.json["ok"] = rep.ok;
  r.json["factors"] = rep.factors;
  r.json["classes_checked"] = rep.classes_checked;
  r.json["max_coefficient"] = rep.max_coefficient.str();
  r.json["mismatches"] = mismatches;
  r.exit_code = rep.ok ? 0 : 1;
  std::ostringstream text;
  text << what << (rep.ok ? " holds" : " FAILS") << "\n";
  text << "  " << rep.factors << " factor(s), " << rep.classes_checked << " classes, max coefficient "
       << rep.max_coefficient.str() << "\n";
  for (const auto& m : rep.mismatches) text << "  " << m << "\n";
  r.text = text.str();
  return r;
}

CommandResult cmd_dist(const CommandArgs& a, const Scenario& s) {
  const Universe& u = *s.universe;
  const StepChain c1 = s.chain(need(a.chain, "--chain", a.command));
  const StepChain c2 = s.chain(need(a.chain2, "--chain2", a.command));
  const DistanceResult d = distance(c1, c2, u);
  CommandResult r;
  r.json = Json{{"chain", *a.chain}, {"chain2", *a.chain2}, {"distance", to_string(d.value)}};
  std::ostringstream text;
  text << "d(" << *a.chain << ", " << *a.chain2 << ") = " << to_string(d.value) << "\n";
  if (d.witness >= 0) {
    const std::string which = d.quotient_term ? "quotient" : "submodule";
    r.json["witness"] = Json{{"module", u.table().name(d.witness)}, {"term", which}};
    text << "  attained at " << u.table().name(d.witness) << " (maximally destabilising " << which << ")\n";
  }
  if (a.eps) {
    const Rational eps = parse_rational(*a.eps);
    const bool inside = ball_contains(c1, eps, c2, u);
    r.json["eps"] = to_string(eps);
    r.json["in_ball"] = inside;
    text << "  " << *a.chain2 << (inside ? " lies" : " does not lie") << " in the open " << to_string(eps)
         << "-ball\n";
  }
  r.json["equivalent"] = equivalent(c1, c2, u);
  text << "  equivalent: " << (r.json["equivalent"].get<bool>() ? "yes" : "no") << "\n";
  r.text = text.str();
  return r;
}

CommandResult cmd_chamber_test(const CommandArgs& a, const Scenario& s) {
  const Universe& u = *s.universe;
  const StepChain c = s.chain(need(a.chain, "--chain", a.command));
  const Rational eps = a.eps ? parse_rational(*a.eps) : min_gap(c) / 4;
  const auto lattice = enumerate_lattice(u);
  const bool chamber = is_chamber_point(c, lattice, u);
  const auto rep = perturb_invariance_test(c, eps, lattice, u);
  CommandResult r;
  // The structural test and the perturbation sweep must agree.
  r.exit_code = chamber == rep.invariant ? 0 : 1;
  r.json = Json{{"chain", *a.chain},
                {"eps", to_string(eps)},
                {"chamber_point", chamber},
                {"invariant", rep.invariant},
                {"perturbations", rep.perturbations},
                {"modules", rep.modules}};
  std::ostringstream text;
  text << *a.chain << " is a " << (chamber ? "chamber point" : "wall point") << "; HN filtrations "
       << (rep.invariant ? "stable" : "change") << " under " << rep.perturbations << " perturbations of size <= "
       << to_string(eps) << " (" << rep.modules << " modules)\n";
  if (rep.witness) {
    const auto& w = *rep.witness;
    r.json["witness"] = Json{{"change", w.change},
                             {"module", u.format(w.module)},
                             {"before", shape_json(w.before, u)},
                             {"after", shape_json(w.after, u)},
                             {"perturbed", chain_json(w.perturbed, u)}};
    text << "  witness: " << w.change << " on " << u.format(w.module) << " " << describe(w.before, u) << " -> "
         << describe(w.after, u) << "\n";
  }
  if (r.exit_code != 0) text << "  structural test and perturbation sweep DISAGREE\n";
  r.text = text.str();
  return r;
}

CommandResult cmd_slicing_verify(const CommandArgs& a, const Scenario& s) {
  const Universe& u = *s.universe;
  const StepChain c = s.chain(need(a.chain, "--chain", a.command));
  CensusCache cache(u.table());
  const auto rep = verify_slicing(c, u, cache, s.guards.max_total);
  const auto phases = nonzero_phases(c, u);
  const StepChain back = chain_from_slicing(phases, u);
  const bool round_trip = equivalent(c, back, u);
  CommandResult r;
  const bool ok = rep.ok && round_trip;
  r.exit_code = ok ? 0 : 1;
  Json violations = Json::array();
  for (const auto& v : rep.violations) violations.push_back(v);
  r.json = Json{{"chain", *a.chain},
                {"ok", ok},
                {"modules_checked", rep.modules_checked},
                {"round_trip", round_trip},
                {"rebuilt", chain_json(back, u)},
                {"violations", violations}};
  std::ostringstream text;
  text << "slicing axioms " << (rep.ok ? "hold" : "FAIL") << " on " << rep.modules_checked
       << " modules; round trip " << (round_trip ? "equivalent" : "NOT equivalent") << "\n";
  text << "  rebuilt: " << describe(back, u) << "\n";
  for (const auto& v : rep.violations) text << "  " << v << "\n";
  r.text = text.str();
  return r;
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"indecs", cmd_indecs},           {"tors-lattice", cmd_tors_lattice},
      {"tors-check", cmd_tors_check},   {"chain-pt", cmd_chain_pt},
      {"hn", cmd_hn},                   {"phase-word", cmd_phase_word},
      {"mgs-list", cmd_mgs_list},       {"mgs-bricks", cmd_mgs_bricks},
      {"stab-chain", cmd_stab_chain},   {"stab-verify", cmd_stab_verify},
      {"hall-verify", cmd_hall_verify}, {"dist", cmd_dist},
      {"chamber-test", cmd_chamber_test}, {"slicing-verify", cmd_slicing_verify},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

CommandResult run_command(const CommandArgs& args, const Scenario& scenario) {
  auto it = handlers().find(args.command);
  if (it == handlers().end()) throw InputError("unknown command \"" + args.command + "\"");
  CommandResult r = it->second(args, scenario);
  Json wrapped{{"command", args.command}, {"exit_code", r.exit_code}};
  for (auto& [k, v] : r.json.items()) wrapped[k] = v;
  r.json = std::move(wrapped);
  return r;
}

int run(const CommandArgs& args, std::ostream& out, std::ostream& err) {
  auto report_error = [&](int code, const char* kind, const std::string& what) {
    if (args.json) {
      out << Json{{"command", args.command}, {"exit_code", code}, {"error", kind}, {"message", what}}.dump(2) << "\n";
    }
    err << "torschain: " << what << "\n";
    return code;
  };
  try {
    if (std::find(command_names().begin(), command_names().end(), args.command) == command_names().end()) {
      throw InputError("unknown command \"" + args.command + "\"");
    }
    const Scenario scenario = load_scenario(args.scenario);
    const CommandResult r = run_command(args, scenario);
    out << (args.json ? r.json.dump(2) + "\n" : r.text);
    return r.exit_code;
  } catch (const InputError& e) {
    return report_error(2, "input", e.what());
  } catch (const ResourceError& e) {
    return report_error(3, "resource", e.what());
  } catch (const ViolationError& e) {
    return report_error(1, "violation", e.what());
  } catch (const InternalError& e) {
    return report_error(1, "internal", e.what());
  }
}

}  // namespace torschain::cli
