#include "adlab/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "adlab/certificates.hpp"
#include "adlab/conditions.hpp"
#include "adlab/error.hpp"
#include "adlab/groups/algorithms.hpp"
#include "adlab/groups/presets.hpp"

namespace adlab::cli {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IOError", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON, or @path for a file.
json load_json(const std::string& arg) {
  const std::string text = !arg.empty() && arg[0] == '@' ? read_file(arg.substr(1)) : arg;
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("ParseError", std::string("invalid JSON: ") + e.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::vector<std::uint64_t> split_numbers(const std::string& s) {
  std::vector<std::uint64_t> out;
  for (const auto& part : split(s, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Error("ParseError", "bad number '" + part + "'");
    }
  }
  return out;
}

struct Args {
  std::string spec, field, base, top, primes, cls, relative, degrees, datum, subgroup, decomposition;
  std::string feasibility, mode = "General", from, to, registry, id, file, pool, local;
  std::uint64_t prime = 0, n = 0, p = 0, q = 0;
  std::int64_t t = 0;
  bool serial = false, ablation = false, print_certificate = false, verbose = false, tame = false;
};

struct Leaf {
  CLI::App* app;
  std::function<json()> run;
};

json local_input(const Args& a) {
  if (!a.datum.empty()) return load_json(a.datum);
  if (a.field.empty() || a.prime == 0) throw Error("UsageError", "give --field and --prime, or --datum");
  return {{"field", a.field}, {"prime", a.prime}};
}

json relative_input(const Args& a) {
  if (!a.relative.empty()) return load_json(a.relative);
  if (a.base.empty() || a.top.empty() || a.primes.empty()) {
    throw Error("UsageError", "give --relative, or --base, --top and --primes");
  }
  return {{"base", a.base}, {"top", a.top}, {"primes", split_numbers(a.primes)}};
}

conditions::Registry registry_of(const Args& a) {
  return a.registry.empty() ? conditions::default_registry() : conditions::registry_from_json(load_json(a.registry));
}

json group_info(const std::string& spec) {
  const auto g = groups::build_group(spec);
  json gens = json::array();
  for (const auto& x : g.generators()) gens.push_back(x.name);
  json out = {{"name", g.name()},           {"order", g.order()},  {"abelian", g.is_abelian()},
              {"exponent", g.exponent()},   {"generators", gens},
              {"abelian_invariants", groups::abelian_invariants(g)}};
  if (auto p = g.prime()) out["prime"] = *p;
  return out;
}

void build(CLI::App& app, Args& a, std::vector<Leaf>& leaves, certificates::StepRunner& runner) {
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, std::function<json()> fn) {
    auto* sub = parent->add_subcommand(name, desc);
    leaves.push_back({sub, std::move(fn)});
    return sub;
  };
  auto op = [&runner](const char* name, json in) { return runner.run(name, in); };

  auto* group = app.add_subcommand("group", "finite p-group computations")->require_subcommand(1);
  auto* s = leaf(group, "info", "order, exponent and abelianization", [&, op] { return group_info(a.spec); });
  s->add_option("--spec", a.spec, "group spec")->required();
  s = leaf(group, "frattini", "Frattini quotient rank", [&, op] {
    const auto g = groups::build_group(a.spec);
    const auto r = groups::frattini(g, a.serial ? groups::Exec::Serial : groups::Exec::Parallel);
    return json{{"prime", r.prime}, {"rank", r.rank}, {"frattini_order", r.frattini_order}};
  });
  s->add_option("--spec", a.spec)->required();
  s->add_flag("--serial", a.serial, "use the serial kernels");
  s = leaf(group, "metacyclic", "all metacyclic presentations", [&, op] { return op("group.metacyclic", {{"spec", a.spec}}); });
  s->add_option("--spec", a.spec)->required();
  s = leaf(group, "quotients", "whether every proper quotient is abelian",
           [&, op] { return op("group.quotients_abelian", {{"spec", a.spec}}); });
  s->add_option("--spec", a.spec)->required();
  s = leaf(group, "sylow", "whether a subgroup contains a p-Sylow subgroup", [&, op] {
    return op("group.sylow", {{"spec", a.spec}, {"subgroup", split(a.subgroup, ',')}, {"prime", a.prime}});
  });
  s->add_option("--spec", a.spec)->required();
  s->add_option("--subgroup", a.subgroup, "comma-separated generator words (empty: trivial)");
  s->add_option("--prime", a.prime)->required();
  s = leaf(group, "sweep", "Frattini ranks over every action of F_p^3 on F_p^3 through U_3",
           [&, op] { return op("group.double_phi_sweep", {{"p", a.p}}); });
  s->add_option("--p", a.p)->required();

  auto* field = app.add_subcommand("field", "abelian number fields")->require_subcommand(1);
  s = leaf(field, "parse", "canonical form of a field", [&, op] { return op("field.parse", {{"field", a.field}}); });
  s->add_option("--field", a.field)->required();
  s = leaf(field, "splitting", "e, f, g of a rational prime",
           [&, op] { return op("field.splitting", {{"field", a.field}, {"prime", a.prime}}); });
  s->add_option("--field", a.field)->required();
  s->add_option("--prime", a.prime)->required();
  s = leaf(field, "intersect", "K meet Q(mu_n)", [&, op] { return op("field.intersect", {{"field", a.field}, {"n", a.n}}); });
  s->add_option("--field", a.field)->required();
  s->add_option("--n", a.n)->required();
  s = leaf(field, "sigma", "whether sigma_{t,n} fixes K meet Q(mu_n)",
           [&, op] { return op("field.sigma", {{"t", a.t}, {"n", a.n}, {"field", a.field}}); });
  s->add_option("--t", a.t)->required();
  s->add_option("--n", a.n)->required();
  s->add_option("--field", a.field)->required();
  s = leaf(field, "relative", "relative splitting data of M/K",
           [&, op] { return op("field.relative", {{"relative", relative_input(a)}}); });
  s->add_option("--base", a.base)->required();
  s->add_option("--top", a.top)->required();
  s->add_option("--primes", a.primes, "comma-separated")->required();

  auto* local = app.add_subcommand("local", "completions and local realizability")->require_subcommand(1);
  s = leaf(local, "completion", "completion datum",
           [&, op] { return op("local.completion", {{"local", {{"field", a.field}, {"prime", a.prime}}}}); });
  s->add_option("--field", a.field)->required();
  s->add_option("--prime", a.prime)->required();
  s = leaf(local, "rank", "rank of the maximal abelian pro-p quotient",
           [&, op] { return op("local.max_rank", {{"local", local_input(a)}}); });
  s->add_option("--field", a.field);
  s->add_option("--prime", a.prime);
  s->add_option("--datum", a.datum, "JSON {prime, e, f, s}");
  s = leaf(local, "realizable", "whether a q-group is a local Galois group",
           [&, op] { return op("local.realizable", {{"spec", a.spec}, {"local", local_input(a)}}); });
  s->add_option("--spec", a.spec)->required();
  s->add_option("--field", a.field);
  s->add_option("--prime", a.prime);
  s->add_option("--datum", a.datum, "JSON {prime, e, f, s}");

  auto* br = app.add_subcommand("brauer", "Hasse invariant calculus")->require_subcommand(1);
  s = leaf(br, "make", "validate a class", [&, op] { return op("brauer.make", {{"class", load_json(a.cls)}}); });
  s->add_option("--class", a.cls, "JSON or @file")->required();
  s = leaf(br, "index", "index of a class", [&, op] { return op("brauer.index", {{"class", load_json(a.cls)}}); });
  s->add_option("--class", a.cls)->required();
  s = leaf(br, "restrict", "restriction along M/K",
           [&, op] { return op("brauer.restrict", {{"class", load_json(a.cls)}, {"relative", relative_input(a)}}); });
  s->add_option("--class", a.cls)->required();
  s->add_option("--relative", a.relative, "JSON or @file");
  s->add_option("--base", a.base);
  s->add_option("--top", a.top);
  s->add_option("--primes", a.primes);
  s = leaf(br, "splits", "local splitting test", [&, op] {
    if (a.tame) return op("brauer.tame_splits", {{"class", load_json(a.cls)}, {"local", load_json(a.local)}});
    return op("brauer.splits", {{"class", load_json(a.cls)}, {"degrees", load_json(a.degrees)}});
  });
  s->add_option("--class", a.cls)->required();
  s->add_option("--degrees", a.degrees, "JSON {slot: degree}");
  s->add_flag("--tame", a.tame, "test splitting by the maximal tame subextensions");
  s->add_option("--local", a.local, "JSON {slot: {e, f, prime}} for --tame");
  s = leaf(br, "adequate", "existence of a class of order n", [&, op] {
    return op("brauer.adequate", {{"degrees", split_numbers(a.degrees)}, {"n", a.n}});
  });
  s->add_option("--degrees", a.degrees, "comma-separated local degrees")->required();
  s->add_option("--n", a.n)->required();
  s = leaf(br, "schacher", "Schacher's criterion on decomposition groups", [&, op] {
    json dec = json::array();
    for (const auto& h : split(a.decomposition, ';')) dec.push_back(split(h, ','));
    return op("brauer.schacher", {{"spec", a.spec}, {"decomposition", dec}});
  });
  s->add_option("--spec", a.spec)->required();
  s->add_option("--decomposition", a.decomposition, "subgroups as words, ';' between subgroups")->required();
  s = leaf(br, "fibers", "whether invariants are constant on fibers",
           [&, op] { return op("brauer.fibers", {{"class", load_json(a.cls)}, {"relative", relative_input(a)}}); });
  s->add_option("--class", a.cls)->required();
  s->add_option("--relative", a.relative);
  s->add_option("--base", a.base);
  s->add_option("--top", a.top);
  s->add_option("--primes", a.primes);
  s = leaf(br, "solve", "feasibility search", [&, op] { return op("brauer.solve", {{"spec", load_json(a.feasibility)}}); });
  s->add_option("--spec", a.feasibility, "JSON or @file")->required();
  s = leaf(br, "preimage", "search for a class restricting to the given one", [&, op] {
    return op("brauer.preimage",
              {{"class", load_json(a.cls)}, {"relative", relative_input(a)}, {"pool", split(a.pool, ',')}});
  });
  s->add_option("--class", a.cls)->required();
  s->add_option("--relative", a.relative);
  s->add_option("--base", a.base);
  s->add_option("--top", a.top);
  s->add_option("--primes", a.primes);
  s->add_option("--pool", a.pool, "comma-separated extra base-field slots");

  auto* ld = app.add_subcommand("liedahl", "Liedahl's condition")->require_subcommand(1);
  s = leaf(ld, "check", "Liedahl's condition over a field",
           [&, op] { return op("liedahl.check", {{"spec", a.spec}, {"field", a.field}}); });
  s->add_option("--spec", a.spec)->required();
  s->add_option("--field", a.field)->required();
  s = leaf(ld, "tame", "tame admissibility verdict", [&, op] { return op("liedahl.tame", {{"spec", a.spec}, {"field", a.field}}); });
  s->add_option("--spec", a.spec)->required();
  s->add_option("--field", a.field)->required();
  s = leaf(ld, "monotone", "down-inheritance check for K in M",
           [&, op] { return op("liedahl.monotone", {{"spec", a.spec}, {"base", a.base}, {"top", a.top}}); });
  s->add_option("--spec", a.spec)->required();
  s->add_option("--base", a.base)->required();
  s->add_option("--top", a.top)->required();

  auto* cond = app.add_subcommand("conditions", "the implication lattice")->require_subcommand(1);
  s = leaf(cond, "closure", "closure of the base edges", [&, op] {
    const conditions::Lattice lattice(conditions::parse_mode(a.mode));
    json edges = json::array();
    for (const auto& e : lattice.closure()) edges.push_back(conditions::edge_name(e, lattice.mode()));
    json base = json::array();
    for (const auto& e : conditions::base_edges(lattice.mode())) base.push_back(conditions::edge_name(e, lattice.mode()));
    return json{{"mode", conditions::to_string(lattice.mode())}, {"base", base}, {"closure", edges},
                {"size", edges.size()}};
  });
  s->add_option("--mode", a.mode, "General, GaloisMK or Tame");
  s = leaf(cond, "implies", "decide one implication", [&, op] {
    const conditions::Lattice lattice(conditions::parse_mode(a.mode));
    const auto x = conditions::parse_condition(a.from), y = conditions::parse_condition(a.to);
    return conditions::to_json(conditions::implies(x, y, lattice, registry_of(a)), lattice.mode());
  });
  s->add_option("--from", a.from)->required();
  s->add_option("--to", a.to)->required();
  s->add_option("--mode", a.mode);
  s->add_option("--registry", a.registry, "certificate file");
  s = leaf(cond, "matrix", "the 9x9 verdict table", [&, op] {
    const conditions::Lattice lattice(conditions::parse_mode(a.mode));
    const auto r = conditions::implication_matrix(lattice, registry_of(a));
    auto out = conditions::to_json(r);
    json cells = json::object();
    for (int x = 1; x <= conditions::kNumConditions; ++x) {
      for (int y = 1; y <= conditions::kNumConditions; ++y) {
        if (x == y) continue;
        cells[conditions::edge_name({x, y}, lattice.mode())] = conditions::to_json(r.cells[x][y], lattice.mode());
      }
    }
    out["cells"] = std::move(cells);
    return out;
  });
  s->add_option("--mode", a.mode);
  s->add_option("--registry", a.registry);
  s = leaf(cond, "complete", "completeness of the General lattice", [&, op] {
    const auto registry = registry_of(a);
    const auto r = conditions::implication_matrix(conditions::Lattice(conditions::Mode::General), registry);
    json out = {{"complete", r.undecided == 0 && r.contradictions.empty()}, {"proved", r.proved},
                {"refuted", r.refuted}, {"undecided", r.undecided_pairs.size()}};
    json und = json::array();
    for (const auto& e : r.undecided_pairs) und.push_back(conditions::edge_name(e));
    out["undecided_pairs"] = std::move(und);
    if (a.ablation) {
      json abl = json::object();
      for (const auto& [id, pairs] : conditions::ablation(registry)) {
        json names = json::array();
        for (const auto& e : pairs) names.push_back(conditions::edge_name(e));
        abl[id] = {{"undecided", names.size()}, {"pairs", std::move(names)}};
      }
      out["ablation"] = std::move(abl);
    }
    return out;
  });
  s->add_option("--registry", a.registry);
  s->add_flag("--ablation", a.ablation, "also remove each example in turn");

  auto* ex = app.add_subcommand("example", "counterexample certificates")->require_subcommand(1);
  leaf(ex, "list", "available examples", [] { return certificates::example_list(); });
  auto params = [&a] {
    certificates::Params p;
    if (a.p) p.p = a.p;
    if (a.q) p.q = a.q;
    if (a.n) p.n = a.n;
    if (!a.field.empty()) p.field = a.field;
    return p;
  };
  s = leaf(ex, "verify", "replay a certificate", [&, op, params] {
    const auto cert = a.file.empty() ? certificates::build_certificate(a.id, params())
                                     : certificates::certificate_from_json(load_json("@" + a.file));
    const auto report = certificates::verify_certificate(cert, runner);
    auto out = certificates::to_json(report, cert);
    if (a.print_certificate) out["certificate"] = certificates::to_json(cert);
    return out;
  });
  auto* source = s->add_option_group("source", "exactly one of --id and --file");
  source->add_option("--id", a.id);
  source->add_option("--file", a.file, "certificate JSON file");
  source->require_option(1);
  s->add_option("--p", a.p);
  s->add_option("--q", a.q);
  s->add_option("--n", a.n);
  s->add_option("--field", a.field, "the field M of the cyclic example");
  s->add_flag("--print-certificate", a.print_certificate);
  s = leaf(ex, "show", "print a certificate", [&, op, params] {
    return certificates::to_json(certificates::build_certificate(a.id, params()));
  });
  s->add_option("--id", a.id)->required();
  s->add_option("--p", a.p);
  s->add_option("--q", a.q);
  s->add_option("--n", a.n);
  s->add_option("--field", a.field);
}

json error_json(const std::string& kind, const std::string& message) {
  return {{"error", kind}, {"message", message}};
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
  CLI::App app{"adlab: admissibility conditions, Brauer invariants and certificates", "adlab"};
  app.require_subcommand(1);
  Args a;
  std::vector<Leaf> leaves;
  certificates::StepRunner runner;
  build(app, a, leaves, runner);

  std::vector<const char*> argv{"adlab"};
  for (const auto& s : args) argv.push_back(s.c_str());
  CommandResult result;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.err = e.what();
    result.out = error_json("UsageError", e.what()).dump(2) + "\n";
    return result;
  }

  for (const auto& l : leaves) {
    if (!l.app->parsed()) continue;
    try {
      result.out = l.run().dump(2) + "\n";
    } catch (const Error& e) {
      result.exit_code = e.kind() == "UsageError" ? 2 : 1;
      result.err = e.kind() + ": " + e.what();
      result.out = error_json(e.kind(), e.what()).dump(2) + "\n";
    }
    return result;
  }
  result.exit_code = 2;
  result.err = "no command given";
  result.out = error_json("UsageError", result.err).dump(2) + "\n";
  return result;
}

}  // namespace adlab::cli
