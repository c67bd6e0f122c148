#include <algorithm>
#include <functional>

#include "adlab/arith.hpp"
#include "adlab/brauer.hpp"
#include "adlab/certificates.hpp"
#include "adlab/error.hpp"
#include "adlab/fields.hpp"
#include "adlab/groups/algorithms.hpp"
#include "adlab/groups/presets.hpp"
#include "adlab/groups/sweep.hpp"
#include "adlab/liedahl.hpp"
#include "adlab/local.hpp"

namespace adlab::certificates {

using arith::u64;
using nlohmann::json;

namespace {

std::string text(const json& in, const char* key) { return in.at(key).get<std::string>(); }
u64 num(const json& in, const char* key) { return in.at(key).get<u64>(); }

fields::AbelianNumberField field_of(const json& in, const char* key = "field") {
  return fields::parse_field(text(in, key));
}

local::LocalFieldDatum local_of(const json& in) {
  const auto& l = in.at("local");
  if (l.contains("field")) return local::completion(field_of(l), num(l, "prime"));
  return local::datum_from_json(l);
}

fields::RelativeExtensionData relative_of(const json& in) {
  const auto& r = in.at("relative");
  if (r.contains("records")) return fields::relative_from_json(r);
  std::vector<u64> primes = r.at("primes").get<std::vector<u64>>();
  return fields::relative_splitting(field_of(r, "base"), field_of(r, "top"), primes, text(r, "base"),
                                    text(r, "top"));
}

groups::Subgroup subgroup_of(const groups::FiniteGroup& g, const json& words) {
  std::vector<groups::Element> gens;
  for (const auto& w : words) gens.push_back(g.evaluate_word(w.get<std::string>()));
  return groups::Subgroup::generated(g, gens);
}

json value(bool v) { return {{"value", v}}; }

conditions::Mode mode_of(const json& in) {
  return in.contains("mode") ? conditions::parse_mode(text(in, "mode")) : conditions::Mode::General;
}

conditions::Condition condition_of(const json& in, const char* key) {
  const auto& c = in.at(key);
  return c.is_number_integer() ? c.get<int>() : conditions::parse_condition(c.get<std::string>());
}

using Handler = std::function<json(StepRunner&, const json&)>;

const std::map<std::string, Handler, std::less<>>& handlers() {
  static const std::map<std::string, Handler, std::less<>> table = {
      {"group.order", [](StepRunner& r, const json& in) { return json{{"order", r.group(text(in, "spec")).order()}}; }},
      {"group.frattini",
       [](StepRunner& r, const json& in) {
         const auto rep = groups::frattini(r.group(text(in, "spec")));
         return json{{"prime", rep.prime}, {"rank", rep.rank}, {"frattini_order", rep.frattini_order}};
       }},
      {"group.metacyclic",
       [](StepRunner& r, const json& in) {
         const auto pres = groups::metacyclic_presentations(r.group(text(in, "spec")));
         json list = json::array();
         for (const auto& p : pres) list.push_back(liedahl::to_json(p));
         return json{{"metacyclic", !pres.empty()}, {"count", pres.size()}, {"presentations", std::move(list)}};
       }},
      {"group.quotients_abelian",
       [](StepRunner& r, const json& in) { return value(groups::proper_quotients_abelian(r.group(text(in, "spec")))); }},
      {"group.abelian_invariants",
       [](StepRunner& r, const json& in) {
         return json{{"invariants", groups::abelian_invariants(r.group(text(in, "spec")))}};
       }},
      {"group.sylow",
       [](StepRunner& r, const json& in) {
         const auto& g = r.group(text(in, "spec"));
         return value(groups::contains_p_sylow(g, subgroup_of(g, in.at("subgroup")), num(in, "prime")));
       }},
      {"group.double_phi_sweep",
       [](StepRunner&, const json& in) {
         const auto s = groups::semidirect_square_sweep(num(in, "p"));
         json hist = json::object();
         for (const auto& [rank, count] : s.rank_histogram) hist[std::to_string(rank)] = count;
         return json{{"prime", s.prime},           {"homomorphisms", s.homomorphisms},
                     {"image_classes", s.image_classes}, {"min_rank", s.min_rank},
                     {"max_rank", s.max_rank},     {"constant_on_classes", s.constant_on_classes},
                     {"rank_histogram", hist}};
       }},
      {"field.parse", [](StepRunner&, const json& in) { return fields::to_json(field_of(in)); }},
      {"field.splitting",
       [](StepRunner&, const json& in) { return fields::to_json(fields::splitting(field_of(in), num(in, "prime"))); }},
      {"field.relative", [](StepRunner&, const json& in) { return fields::to_json(relative_of(in)); }},
      {"field.intersect",
       [](StepRunner&, const json& in) {
         return fields::to_json(fields::intersect_with_cyclotomic(field_of(in), num(in, "n")));
       }},
      {"field.sigma",
       [](StepRunner&, const json& in) {
         return value(fields::sigma_fixes(in.at("t").get<std::int64_t>(), num(in, "n"), field_of(in)));
       }},
      {"field.split_primes",
       [](StepRunner&, const json& in) {
         // the smallest odd primes not dividing the conductor that split completely
         const auto k = field_of(in);
         const u64 count = num(in, "count");
         json primes = json::array();
         for (u64 q = 3; primes.size() < count; q += 2) {
           if (arith::is_prime(q) && k.conductor() % q != 0 && fields::splitting(k, q).g == k.degree()) {
             primes.push_back(q);
           }
         }
         return json{{"primes", std::move(primes)}};
       }},
      {"local.completion", [](StepRunner&, const json& in) { return local::to_json(local_of(in)); }},
      {"local.max_rank",
       [](StepRunner&, const json& in) { return json{{"rank", local::max_abelian_p_rank(local_of(in))}}; }},
      {"local.realizable",
       [](StepRunner& r, const json& in) {
         return local::to_json(local::realizable(r.group(text(in, "spec")), local_of(in)));
       }},
      {"brauer.make",
       [](StepRunner&, const json& in) {
         const auto d = brauer::class_from_json(in.at("class"));
         return json{{"class", brauer::to_json(d)}, {"index", brauer::index(d)}};
       }},
      {"brauer.index",
       [](StepRunner&, const json& in) { return json{{"index", brauer::index(brauer::class_from_json(in.at("class")))}}; }},
      {"brauer.restrict",
       [](StepRunner&, const json& in) {
         const auto d = brauer::class_from_json(in.at("class"));
         const auto res = brauer::restrict(d, relative_of(in));
         return json{{"class", brauer::to_json(res)}, {"index_before", brauer::index(d)}, {"index", brauer::index(res)}};
       }},
      {"brauer.splits",
       [](StepRunner&, const json& in) {
         std::map<brauer::PrimeSlot, u64> deg;
         for (const auto& [slot, d] : in.at("degrees").items()) deg[brauer::PrimeSlot::parse(slot)] = d.get<u64>();
         return value(brauer::splits(brauer::class_from_json(in.at("class")), deg));
       }},
      {"brauer.tame_splits",
       [](StepRunner&, const json& in) {
         std::map<brauer::PrimeSlot, brauer::TameLocal> loc;
         for (const auto& [slot, d] : in.at("local").items()) {
           loc[brauer::PrimeSlot::parse(slot)] = {d.value("e", u64{1}), d.value("f", u64{1}), num(d, "prime")};
         }
         return value(brauer::tame_splits(brauer::class_from_json(in.at("class")), loc));
       }},
      {"brauer.adequate",
       [](StepRunner&, const json& in) {
         return value(brauer::adequacy(in.at("degrees").get<std::vector<u64>>(), num(in, "n")));
       }},
      {"brauer.schacher",
       [](StepRunner& r, const json& in) {
         const auto& g = r.group(text(in, "spec"));
         std::vector<groups::Subgroup> dec;
         for (const auto& words : in.at("decomposition")) dec.push_back(subgroup_of(g, words));
         return value(brauer::schacher_check(g, dec));
       }},
      {"brauer.fibers",
       [](StepRunner&, const json& in) {
         return value(brauer::constant_on_fibers(brauer::class_from_json(in.at("class")), relative_of(in)));
       }},
      {"brauer.solve",
       [](StepRunner&, const json& in) {
         const auto spec = brauer::feasibility_from_json(in.at("spec"));
         const auto w = brauer::feasibility_solve(spec);
         json out = {{"feasible", w.has_value()}};
         if (w) {
           json inv = json::array();
           for (std::size_t k = 0; k < w->size(); ++k) {
             inv.push_back({{"slot", spec.slots[k].slot.to_string()}, {"num", (*w)[k].num()}, {"den", (*w)[k].den()}});
           }
           out["witness"] = std::move(inv);
         }
         return out;
       }},
      {"brauer.preimage",
       [](StepRunner&, const json& in) {
         std::vector<brauer::PrimeSlot> pool;
         for (const auto& s : in.value("pool", json::array())) pool.push_back(brauer::PrimeSlot::parse(s.get<std::string>()));
         const auto pre = brauer::restriction_preimage(brauer::class_from_json(in.at("class")), relative_of(in), pool);
         json out = {{"found", pre.has_value()}};
         if (pre) out["class"] = brauer::to_json(*pre);
         return out;
       }},
      {"liedahl.check",
       [](StepRunner& r, const json& in) {
         return liedahl::to_json(liedahl::liedahl_check(r.group(text(in, "spec")), field_of(in)));
       }},
      {"liedahl.tame",
       [](StepRunner& r, const json& in) {
         return liedahl::to_json(liedahl::tame_admissibility_verdict(r.group(text(in, "spec")), field_of(in)));
       }},
      {"liedahl.monotone",
       [](StepRunner& r, const json& in) {
         return value(liedahl::subfield_monotonicity(r.group(text(in, "spec")), field_of(in, "base"), field_of(in, "top")));
       }},
      {"lattice.implies",
       [](StepRunner&, const json& in) {
         const conditions::Lattice lattice(mode_of(in));
         const auto v = conditions::implies(condition_of(in, "from"), condition_of(in, "to"), lattice,
                                            conditions::default_registry());
         return conditions::to_json(v, lattice.mode());
       }},
      {"lattice.reach",
       [](StepRunner&, const json& in) {
         const conditions::Lattice lattice(mode_of(in));
         json out = json::array();
         for (auto c : lattice.reachable_from(condition_of(in, "from"))) {
           if (c <= conditions::kNumConditions) out.push_back(c);
         }
         return json{{"reach", std::move(out)}};
       }},
      {"arith.factorial", [](StepRunner&, const json& in) { return json{{"value", arith::factorial(num(in, "n"))}}; }},
      {"arith.divides",
       [](StepRunner&, const json& in) {
         const u64 a = num(in, "a");
         if (a == 0) throw Error("InvalidArgument", "divisor must be positive");
         return value(num(in, "b") % a == 0);
       }},
      {"arith.mod", [](StepRunner&, const json& in) { return json{{"value", num(in, "a") % num(in, "m")}}; }},
      {"example.verify",
       [](StepRunner& r, const json& in) {
         Params p;
         if (in.contains("p")) p.p = num(in, "p");
         if (in.contains("q")) p.q = num(in, "q");
         if (in.contains("n")) p.n = num(in, "n");
         if (in.contains("field")) p.field = text(in, "field");
         const auto rep = verify_certificate(build_certificate(text(in, "id"), p), r);
         return json{{"pass", rep.pass}, {"checked", rep.checked}, {"cited", rep.cited}};
       }},
  };
  return table;
}

bool compare(const std::string& op, const json& expected, const json& actual) {
  if (!actual.is_number() || !expected.is_number()) return false;
  const double a = actual.get<double>(), e = expected.get<double>();
  if (op == ">=") return a >= e;
  if (op == "<=") return a <= e;
  if (op == ">") return a > e;
  if (op == "<") return a < e;
  return a != e;
}

}  // namespace

const groups::FiniteGroup& StepRunner::group(const std::string& spec) {
  auto& slot = groups_[spec];
  if (!slot) slot = std::make_shared<groups::FiniteGroup>(groups::build_group(spec));
  return *slot;
}

json StepRunner::run(std::string_view op, const json& inputs) {
  const auto& table = handlers();
  const auto it = table.find(op);
  if (it == table.end()) throw Error("UnknownOperation", "no operation named '" + std::string(op) + "'");
  try {
    return it->second(*this, inputs);
  } catch (const json::exception& e) {
    throw Error("ParseError", std::string(op) + ": " + e.what());
  }
}

std::vector<std::string> StepRunner::operations() {
  std::vector<std::string> out;
  for (const auto& [name, h] : handlers()) out.push_back(name);
  return out;
}

bool matches(const json& expected, const json& actual) {
  if (expected.is_object()) {
    if (expected.size() == 1) {
      const auto& [key, v] = *expected.items().begin();
      if (key == ">=" || key == "<=" || key == ">" || key == "<" || key == "!=") return compare(key, v, actual);
      if (key == "contains") {
        return actual.is_array() &&
               std::any_of(actual.begin(), actual.end(), [&](const json& a) { return matches(v, a); });
      }
    }
    if (!actual.is_object()) return false;
    for (const auto& [key, v] : expected.items()) {
      if (!actual.contains(key) || !matches(v, actual.at(key))) return false;
    }
    return true;
  }
  if (expected.is_number() && actual.is_number()) return expected.get<double>() == actual.get<double>();
  return expected == actual;
}

}  // namespace adlab::certificates
