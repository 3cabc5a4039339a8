// catsym: check, lift and act on finite categories described in .cat files.
//
// Exit codes: 0 all requested verdicts PASS, 1 a verdict FAIL/ABSENT,
// 2 usage or parse error, 3 budget or cap exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catsym/catsym.hpp"
#include "catsym/report_io.hpp"

using namespace catsym;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2, kBudget = 3;

struct Options {
  std::string path;
  bool json = false;
  bool timings = false;
  std::uint64_t budget = default_budget;
  std::size_t max_arrows = 0, max_objects = 0;
  std::string layer = "all";
  std::string target;
  std::size_t n = 1;
  std::size_t depth = default_orbit_depth;
  std::size_t ground = 2;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
};

Caps caps_of(const Options& o) {
  auto c = Caps::from_env();
  if (o.max_arrows) c.max_arrows = o.max_arrows;
  if (o.max_objects) c.max_objects = o.max_objects;
  return c;
}

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Loaded {
  std::string text;
  CategoryFile file;
};

Loaded load(const Options& o) {
  Loaded l;
  l.text = read_input(o.path);
  l.file = parse_category_file(l.text);
  return l;
}

CommandReport header(std::string command, const Options& o, const Loaded& l) {
  CommandReport r;
  r.command = std::move(command);
  r.input = o.path;
  r.digest = digest_hex(l.text);
  return r;
}

class Clock {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

void emit(CommandReport r, const Options& o, const Clock& clock) {
  if (o.timings) r.millis = clock.ms();
  if (o.json)
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << to_text(r);
}

int exit_for(const std::vector<const Report*>& requested) {
  for (auto* r : requested)
    if (r->verdict == Verdict::Budget) return kBudget;
  for (auto* r : requested)
    if (!r->ok()) return kFail;
  return kPass;
}

std::vector<std::string> psc_lines(std::shared_ptr<const FiniteCategory> c, const PscTable& t) {
  std::istringstream in(print_category_file(CategoryFile{std::move(c), t, {}}));
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (line.rfind("psc.", 0) == 0) out.push_back(line);
  return out;
}

// The PSC structure of the file, or the first one found by search.
struct PscLookup {
  Report report;
  std::optional<PscTable> table;
};

PscLookup find_psc(const CategoryFile& f, std::uint64_t budget) {
  PscLookup out;
  if (f.psc) {
    out.report = check_psc(make_psc(f.category, *f.psc));
    if (out.report.ok()) out.table = f.psc;
    return out;
  }
  auto r = search_psc(*f.category, budget);
  if (r.status == SearchStatus::BudgetExceeded) {
    out.report = Report::with(Verdict::Budget, "PSC search exceeded the budget");
  } else if (!r.value) {
    out.report = Report::with(Verdict::Absent, "NoPscStructure");
  } else {
    out.report = check_psc(make_psc(f.category, *r.value));
    out.table = r.value;
  }
  return out;
}

int cmd_check(const Options& o) {
  Clock clock;
  auto l = load(o);
  auto r = header("check", o, l);
  r.field("layer", o.layer);
  const auto& c = l.file.category;
  r.field("objects", std::to_string(c->object_count()));
  r.field("arrows", std::to_string(c->arrow_count()));

  if (o.layer == "psc") {
    auto p = find_psc(l.file, o.budget);
    // An exhaustive negative search is a failed layer here.
    if (p.report.verdict == Verdict::Absent)
      p.report = Report::fail("no-structure", {}, "exhaustive search found no PSC structure");
    r.verdict("psc", p.report);
    if (p.table)
      for (auto& line : psc_lines(c, *p.table)) r.body.push_back(line);
    emit(r, o, clock);
    return exit_for({&r.verdicts[0].second});
  }

  ClassifyInput given;
  given.psc = l.file.psc;
  if (!l.file.te.empty()) {
    Comma<FiniteCategory> k(c, caps_of(o));
    given.te = te_entries(l.file, k);
  }
  auto v = classify(c, given, o.budget, caps_of(o));
  r.verdict("psc", v.psc);
  r.verdict("cocc", v.cocc);
  r.verdict("sec", v.sec);
  r.verdict("imc", v.imc);
  r.field("monotone", v.monotone ? "yes" : "no");
  if (v.psc_witness)
    for (auto& line : psc_lines(c, *v.psc_witness)) r.body.push_back(line);
  emit(r, o, clock);

  if (o.layer == "all") return exit_for({&v.psc, &v.cocc, &v.sec, &v.imc});
  if (o.layer == "cocc") return exit_for({&v.cocc});
  if (o.layer == "sec") return exit_for({&v.sec});
  return exit_for({&v.imc});
}

int cmd_level(const Options& o) {
  Clock clock;
  auto l = load(o);
  if (o.n == 0) throw CLI::ValidationError("--n", "levels start at 1");
  LevelTower tower(l.file.category, caps_of(o));
  auto cat = tower.level(o.n);
  PrintOptions p;
  p.header = {"level " + std::to_string(o.n) + " of " + o.path + " (fnv1a64:" +
                  digest_hex(l.text) + ")",
              "objects " + std::to_string(cat->object_count()) + ", arrows " +
                  std::to_string(cat->arrow_count())};
  std::optional<ArrowCategory> ac;
  if (o.n >= 2) {
    ac = tower.arrow_category(o.n - 1);
    auto base = ac->base;
    p.object_note = [base, a = *ac](ObjId x) {
      auto f = a.j_inv(x);
      return "J(" + base->name(f) + ": " + base->name(base->dom(f)) + " -> " +
             base->name(base->cod(f)) + ")";
    };
    p.arrow_note = [base, a = *ac](ArrId s) {
      const auto& sq = a.square(s);
      return "(" + base->name(sq.h1) + ";" + base->name(sq.h2) + ")";
    };
  }
  auto text = print_category(cat, p);
  if (o.json) {
    CommandReport r = header("level", o, l);
    r.field("n", std::to_string(o.n));
    r.field("objects", std::to_string(cat->object_count()));
    r.field("arrows", std::to_string(cat->arrow_count()));
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) r.body.push_back(line);
    emit(r, o, clock);
  } else {
    std::cout << text;
  }
  return kPass;
}

// Resolves --target to an object or arrow; objects win on a name clash.
struct Target {
  std::optional<ObjId> object;
  std::optional<ArrId> arrow;
};

Target resolve_target(const FiniteCategory& c, const std::string& name) {
  Target t;
  if ((t.object = c.find_object(name))) return t;
  if ((t.arrow = c.find_arrow(name))) return t;
  throw ParseError::unknown(name, 0);
}

int with_e(const Options& o, const std::string& command,
           const std::function<void(CommandReport&, const EndoE<FiniteCategory>&, const Target&)>& body) {
  Clock clock;
  auto l = load(o);
  auto r = header(command, o, l);
  const auto& c = l.file.category;
  auto target = resolve_target(*c, o.target);
  r.field("target", o.target);
  auto p = find_psc(l.file, o.budget);
  r.verdict("psc", p.report);
  if (!p.table) {
    if (p.report.verdict == Verdict::Budget) {
      std::cerr << "error: BudgetExceeded(" << o.budget << " nodes)\n";
      emit(r, o, clock);
      return kBudget;
    }
    std::cerr << "error: NoPscStructure\n";
    emit(r, o, clock);
    return kFail;
  }
  auto e = build_E(make_psc(c, *p.table));
  body(r, e, target);
  emit(r, o, clock);
  return kPass;
}

int cmd_apply_e(const Options& o) {
  return with_e(o, "apply-e", [&](CommandReport& r, const EndoE<FiniteCategory>& e, const Target& t) {
    const auto& c = e.cat();
    r.field("n", std::to_string(o.n));
    IcsElement g{o.n};
    if (t.object) {
      r.field("kind", "object");
      r.field("result", c.name(act(g, e, *t.object)));
    } else {
      r.field("kind", "arrow");
      auto f = act(g, e, *t.arrow);
      r.field("result", c.name(f) + " : " + c.name(c.dom(f)) + " -> " + c.name(c.cod(f)));
    }
  });
}

template <class O, class Name, class Witness>
void orbit_fields(CommandReport& r, const O& orb, Name name, Witness witness) {
  for (std::size_t i = 0; i < orb.elements.size(); ++i) {
    r.field("orbit." + std::to_string(i), name(orb.elements[i]));
    if (i < orb.witnesses.size()) r.field("iso." + std::to_string(i), witness(orb.witnesses[i]));
  }
  if (orb.cycle)
    r.field("cycle", "start=" + std::to_string(orb.cycle->start) +
                         " period=" + std::to_string(orb.cycle->period));
  else
    r.field("cycle", "none");
}

int cmd_orbit(const Options& o) {
  return with_e(o, "orbit", [&](CommandReport& r, const EndoE<FiniteCategory>& e, const Target& t) {
    const auto& c = e.cat();
    r.field("depth", std::to_string(o.depth));
    if (t.object) {
      orbit_fields(r, orbit(e, *t.object, o.depth), [&](ObjId a) { return c.name(a); },
                   [&](ArrId u) { return c.name(u); });
    } else {
      orbit_fields(r, orbit(e, *t.arrow, o.depth), [&](ArrId f) { return c.name(f); },
                   [&](const std::pair<ArrId, ArrId>& w) {
                     return "(" + c.name(w.first) + ";" + c.name(w.second) + ")";
                   });
    }
  });
}

int cmd_search_psc(const Options& o) {
  Clock clock;
  auto l = load(o);
  auto r = header("search-psc", o, l);
  const auto& c = l.file.category;
  r.field("objects", std::to_string(c->object_count()));
  r.field("arrows", std::to_string(c->arrow_count()));
  auto s = search_psc(*c, o.budget);
  r.field("status", std::string(to_string(s.status)));
  r.field("nodes", std::to_string(s.nodes));
  int rc = kPass;
  if (s.value) {
    auto rep = check_psc(make_psc(c, *s.value));
    r.verdict("psc", rep);
    for (auto& line : psc_lines(c, *s.value)) r.body.push_back(line);
    rc = exit_for({&rep});
  } else if (s.status == SearchStatus::BudgetExceeded) {
    r.verdict("psc", Report::with(Verdict::Budget, "search exceeded the budget"));
    rc = kBudget;
  } else {
    r.verdict("psc", Report::with(Verdict::Absent, "no PSC structure exists"));
    rc = kFail;
  }
  emit(r, o, clock);
  return rc;
}

int cmd_finset_demo(const Options& o) {
  Clock clock;
  auto m = finset::build_model(o.ground);
  CommandReport r;
  r.command = "finset-demo";
  r.field("ground", std::to_string(o.ground));
  r.field("objects", std::to_string(m.cat->objects().size()));
  r.field("arrows", std::to_string(m.cat->arrows().size()));
  r.field("mode", m.exhaustive ? "exhaustive" : "sampled");
  r.field("btop", "f -> graph of f");
  r.field("star", "relational composition of graphs");
  r.field("iso", "first projection of the diagonal");
  r.field("te", "(h1;h2) -> h1 x h2 restricted to graphs");
  if (!m.cat->objects().empty()) {
    auto a = m.cat->objects().back();
    for (auto x : m.cat->objects())
      if (x.is_set() && x.size() == o.ground && !x.is_relation()) a = x;
    r.field("example.E", a.str() + " -> " + m.psc.concept_of(a).str());
  }
  auto claims = m.exhaustive ? finset::check_set_claims(m)
                             : finset::check_set_claims_sampled(m, o.samples, o.seed);
  r.field("squares_checked", std::to_string(claims.squares_checked));
  for (auto [name, rep] : claims.items()) r.verdict(name, *rep);
  emit(r, o, clock);
  return claims.all_pass() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catsym: symmetry structures on finite categories"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool with_path = true) {
    if (with_path) sub->add_option("path", o.path, "category file, - for stdin")->required();
    sub->add_flag("--json", o.json, "machine-readable report");
    sub->add_flag("--timings", o.timings, "append wall time to the report");
  };
  auto budget = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "search node budget")->capture_default_str();
  };
  auto caps = [&](CLI::App* sub) {
    sub->add_option("--max-arrows", o.max_arrows, "arrow cap (default 5000 or CATSYM_MAX_ARROWS)");
    sub->add_option("--max-objects", o.max_objects, "object cap (default 500)");
  };

  auto* check = app.add_subcommand("check", "run the symmetry hierarchy on a category");
  common(check), budget(check), caps(check);
  check->add_option("--layer", o.layer, "psc|cocc|sec|imc|all")
      ->check(CLI::IsMember({"psc", "cocc", "sec", "imc", "all"}))
      ->capture_default_str();

  auto* level = app.add_subcommand("level", "print the level C_n");
  common(level), caps(level);
  level->add_option("--n", o.n, "level index, 1 is the input")->capture_default_str();

  auto* apply = app.add_subcommand("apply-e", "apply E^n to an object or arrow");
  common(apply), budget(apply);
  apply->add_option("--target", o.target, "object or arrow name")->required();
  apply->add_option("--n", o.n, "power of E")->capture_default_str();

  auto* orb = app.add_subcommand("orbit", "orbit of an object or arrow under E");
  common(orb), budget(orb);
  orb->add_option("--target", o.target, "object or arrow name")->required();
  orb->add_option("--depth", o.depth, "number of steps")->capture_default_str();

  auto* demo = app.add_subcommand("finset-demo", "the finite-set model and its claims");
  common(demo, false);
  demo->add_option("--ground", o.ground, "ground set size")->capture_default_str();
  demo->add_option("--samples", o.samples, "squares sampled above ground size 2")
      ->capture_default_str();
  demo->add_option("--seed", o.seed, "sampling seed")->capture_default_str();

  auto* search = app.add_subcommand("search-psc", "search for a PSC structure");
  common(search), budget(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (*check) return cmd_check(o);
    if (*level) return cmd_level(o);
    if (*apply) return cmd_apply_e(o);
    if (*orb) return cmd_orbit(o);
    if (*demo) return cmd_finset_demo(o);
    if (*search) return cmd_search_psc(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CategoryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  }
  return kUsage;
}
