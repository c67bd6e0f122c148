#include "adlab/certificates.hpp"

#include <algorithm>
#include <set>

#include "adlab/arith.hpp"
#include "adlab/error.hpp"
#include "adlab/fields.hpp"
#include "adlab/groups/presets.hpp"

namespace adlab::certificates {

using arith::u64;
using nlohmann::json;

namespace {

Step checked(std::string op, json inputs, json expected, std::vector<std::string> supports = {}) {
  Step s;
  s.kind = "CHECKED";
  s.op = std::move(op);
  s.inputs = std::move(inputs);
  s.expected = std::move(expected);
  s.supports = std::move(supports);
  return s;
}

Step cited(std::string theorem, std::string statement, std::vector<std::string> supports) {
  Step s;
  s.kind = "CITED";
  s.theorem = std::move(theorem);
  s.statement = std::move(statement);
  s.supports = std::move(supports);
  return s;
}

std::string str(u64 v) { return std::to_string(v); }

json inv(const std::string& slot, std::int64_t num, u64 den) {
  const u64 r = arith::mod(num, den);
  const u64 g = std::gcd(r, den);
  return r == 0 ? json{{"slot", slot}, {"num", 0}, {"den", 1}} : json{{"slot", slot}, {"num", r / g}, {"den", den / g}};
}

json brauer_class(const std::string& base, json invariants) {
  return {{"base_field", base}, {"invariants", std::move(invariants)}};
}

[[noreturn]] void precondition(const std::string& id, const std::string& msg) {
  throw Error("Precondition", id + ": " + msg);
}

u64 odd_prime(const std::string& id, const Params& params, u64 fallback) {
  const u64 p = params.p.value_or(fallback);
  if (p < 3 || !arith::is_prime(p)) precondition(id, "p must be an odd prime");
  return p;
}

void check_order(const std::string& id, u64 base, unsigned exp) {
  const u64 order = arith::ipow(base, exp);
  if (order > groups::default_max_order()) {
    precondition(id, "group order " + str(order) + " exceeds the enumeration bound");
  }
}

// Infeasibility spec: two equal slots of exact order p^3 above p and three other
// slots whose local order is at most p^2.
json two_equal_slots_spec(u64 p) {
  const u64 p2 = p * p, p3 = p2 * p;
  json slots = json::array({json{{"slot", str(p) + ":0"}, {"max_order", p3}, {"exact_order", p3}},
                            json{{"slot", str(p) + ":1"}, {"max_order", p3}, {"exact_order", p3}}});
  for (int k = 0; k < 3; ++k) slots.push_back({{"slot", "u:" + std::to_string(k)}, {"max_order", p2}});
  return {{"base_field", "M"},
          {"slots", std::move(slots)},
          {"equal", json::array({json::array({str(p) + ":0", str(p) + ":1"})})},
          {"sum_zero", true}};
}

Certificate ex1(const Params& params) {
  const std::string id = "ex1";
  const u64 p = odd_prime(id, params, 5);
  if (p % 4 != 1 && p != 3) precondition(id, "needs p = 1 mod 4 (or p = 3 for arithmetic only)");
  check_order(id, p, 6);
  const bool full = p % 4 == 1;
  const u64 p3 = p * p * p;
  const std::string k = "Q(i)*Q(sqrt:" + str(p) + ")", g = "elab:" + str(p) + ":3", dbl = "double:" + str(p);
  const json local = {{"field", full ? k : "Q(sqrt:" + str(p) + ")"}, {"prime", p}};
  const std::vector<std::string> all = {"holds:2", "holds:9", "holds:5"};

  Certificate c;
  c.id = id;
  c.title = "2 does not imply 3; 5 does not imply 3; 9 does not imply 3";
  c.params = {{"p", p}};
  c.scope = full ? "full" : "arithmetic-only";
  c.data = {{"K", k}, {"G", g}, {"semidirect", dbl}, {"phi_quantification", p == 3 ? "exhaustive" : "printed"}};
  c.claims = {id, {2, 9, 5}, {3}, true};
  if (full) c.steps.push_back(checked("field.splitting", {{"field", k}, {"prime", p}}, {{"g", 2}}, all));
  c.steps.push_back(checked("local.completion", {{"local", local}}, {{"degree", 2}, {"s", 0}}, all));
  c.steps.push_back(checked("local.max_rank", {{"local", local}}, {{"rank", 3}}, all));
  c.steps.push_back(checked("local.realizable", {{"spec", g}, {"local", local}}, {{"verdict", "yes"}}, all));
  c.steps.push_back(cited("GrunwaldWang",
                          "By the Grunwald-Wang Theorem there is a (Z/p^2Z)^3-extension M'/K such that M'_{v_i} is "
                          "the maximal abelian extension of exponent p^2 of K_{v_i}",
                          {"holds:2", "holds:9"}));
  const json solve_spec = {
      {"base_field", "M"},
      {"slots", json::array({json{{"slot", str(p) + ":0"}, {"max_order", p3}, {"exact_order", p3}},
                             json{{"slot", str(p) + ":1"}, {"max_order", p3}, {"exact_order", p3}}})},
      {"sum_zero", true}};
  c.steps.push_back(checked("brauer.solve", {{"spec", solve_spec}},
                            {{"feasible", true},
                             {"witness", json::array({inv(str(p) + ":0", 1, p3), inv(str(p) + ":1", -1, p3)})}},
                            {"holds:5"}));
  const json d = brauer_class("M", json::array({inv(str(p) + ":0", 1, p3), inv(str(p) + ":1", -1, p3)}));
  const json rel = {{"base_field", "K"},
                    {"top_field", "M"},
                    {"galois", true},
                    {"degree", p3},
                    {"records", json::array({json{{"prime", p}, {"g_rel", 1}, {"n_rel", p3}}})}};
  c.steps.push_back(checked("brauer.preimage", {{"class", d}, {"relative", rel}}, {{"found", true}}, {"holds:5"}));
  c.steps.push_back(checked("brauer.index", {{"class", d}}, {{"index", p3}}, {"holds:5"}));
  c.steps.push_back(checked("group.frattini", {{"spec", dbl}}, {{"rank", {{">=", 4}}}}, {"fails:3"}));
  c.steps.push_back(checked("local.realizable", {{"spec", dbl}, {"local", local}}, {{"verdict", "no"}}, {"fails:3"}));
  if (p == 3) {
    c.steps.push_back(checked("group.double_phi_sweep", {{"p", p}},
                              {{"min_rank", {{">", 3}}}, {"constant_on_classes", true}}, {"fails:3"}));
  }
  return c;
}

Certificate ex2(const Params& params) {
  const std::string id = "ex2";
  const u64 p = odd_prime(id, params, 5);
  if (p % 4 != 1 && p != 3) precondition(id, "needs p = 1 mod 4 (or p = 3 for arithmetic only)");
  check_order(id, p, static_cast<unsigned>(p + 1));
  const bool full = p % 4 == 1;
  const u64 pp = arith::ipow(p, static_cast<unsigned>(p));
  const std::string g = "elab:" + str(p) + ":" + str(p), w = "wreath:" + str(p);
  const json local = {{"field", full ? "Q(i)" : "Q"}, {"prime", p}};

  Certificate c;
  c.id = id;
  c.title = "2 does not imply 9; 8 does not imply 9; 8 does not imply 4";
  c.params = {{"p", p}};
  c.scope = full ? "full" : "arithmetic-only";
  c.data = {{"K", "Q(i)"}, {"G", g}, {"P", w}};
  c.claims = {id, {8, 2}, {9, 4}, true};
  if (full) {
    c.steps.push_back(
        checked("field.splitting", {{"field", "Q(i)"}, {"prime", p}}, {{"e", 1}, {"f", 1}, {"g", 2}}, {"holds:8"}));
  }
  c.steps.push_back(checked("local.completion", {{"local", local}}, {{"degree", 1}, {"s", 0}}, {"holds:8"}));
  c.steps.push_back(checked("local.max_rank", {{"local", local}}, {{"rank", 2}}, {"holds:8"}));
  c.steps.push_back(checked("group.order", {{"spec", w}}, {{"order", p * pp}}, {"holds:8"}));
  c.steps.push_back(checked("group.frattini", {{"spec", w}}, {{"rank", 2}}, {"holds:8"}));
  c.steps.push_back(checked("local.realizable", {{"spec", w}, {"local", local}}, {{"verdict", "yes"}}, {"holds:8"}));
  c.steps.push_back(cited("Saltman",
                          "by [Sal1] there is a P-extension L/K for which Gal(L_{v_i}/K_{v_i})=P for i=1,2",
                          {"holds:8"}));
  c.steps.push_back(checked("brauer.adequate", {{"degrees", {pp, pp}}, {"n", pp}}, {{"value", true}}, {"holds:8"}));
  c.steps.push_back(checked("group.frattini", {{"spec", g}}, {{"rank", p}}, {"fails:9", "fails:4"}));
  c.steps.push_back(checked("local.realizable", {{"spec", g}, {"local", local}}, {{"verdict", "no"}},
                            {"fails:9", "fails:4"}));
  c.steps.push_back(checked("lattice.implies", {{"from", 8}, {"to", 2}, {"mode", "GaloisMK"}},
                            {{"verdict", "proved"}}, {"holds:2"}));
  return c;
}

Certificate ex3(const Params& params) {
  const std::string id = "ex3";
  const u64 p = odd_prime(id, params, 5);
  if (p % 4 != 1 && p != 3) precondition(id, "needs p = 1 mod 4 (or p = 3 for arithmetic only)");
  check_order(id, p, 3);
  const bool full = p % 4 == 1;
  const u64 p2 = p * p, p3 = p2 * p;
  const std::string k = "Q(sqrt:" + str(p) + ")", m = k + "*Q(i)", g = "elab:" + str(p) + ":3";
  const json local = {{"field", k}, {"prime", p}};

  Certificate c;
  c.id = id;
  c.title = "4 does not imply 9; 4 does not imply 8; 4 does not imply 5";
  c.params = {{"p", p}};
  c.scope = full ? "full" : "arithmetic-only";
  c.data = {{"K", k}, {"M", m}, {"G", g}};
  c.claims = {id, {4}, {9, 8, 5}, true};
  c.steps.push_back(
      checked("field.splitting", {{"field", k}, {"prime", p}}, {{"e", 2}, {"f", 1}, {"g", 1}}, {"fails:9"}));
  if (full) {
    c.steps.push_back(checked("field.relative", {{"relative", {{"base", k}, {"top", m}, {"primes", {p}}}}},
                              {{"records", {{"contains", {{"prime", p}, {"g_rel", 2}, {"n_rel", 1}}}}}},
                              {"holds:4"}));
  }
  c.steps.push_back(checked("local.completion", {{"local", local}}, {{"degree", 2}, {"s", 0}}, {"holds:4"}));
  c.steps.push_back(checked("local.realizable", {{"spec", g}, {"local", local}}, {{"verdict", "yes"}}, {"holds:4"}));
  c.steps.push_back(cited("GrunwaldWang",
                          "By the Grunwald-Wang Theorem, there is a Galois G-extension L_0/K for which "
                          "Gal((L_0)_v/K_v)=G",
                          {"holds:4"}));
  c.steps.push_back(checked("group.metacyclic", {{"spec", g}}, {{"metacyclic", false}}, {"fails:9", "fails:8"}));
  const json tame = {{"prime", 2}, {"e", 1}, {"f", 1}, {"s", 1}};
  c.steps.push_back(checked("local.realizable", {{"spec", g}, {"local", tame}},
                            {{"verdict", "no"}, {"criterion", "tame-metacyclic"}}, {"fails:8", "fails:5"}));
  c.steps.push_back(checked("brauer.adequate", {{"degrees", {p3, p2, p2}}, {"n", p3}}, {{"value", false}},
                            {"fails:9"}));
  c.steps.push_back(
      checked("brauer.solve", {{"spec", two_equal_slots_spec(p)}}, {{"feasible", false}}, {"fails:5"}));
  return c;
}

Certificate ex4(const Params& params) {
  const std::string id = "ex4";
  const u64 p = odd_prime(id, params, 3);
  const u64 q = params.q.value_or(p == 3 ? 7 : 0);
  if (q == 0 || !arith::is_prime(q) || q % p != 1) precondition(id, "needs a prime q = 1 mod p");
  check_order(id, p, 3);
  const bool full = p % 4 == 1;
  const u64 p2 = p * p, p3 = p2 * p;
  const std::string k = "Q(sqrt:" + str(p) + ")", g = "elab:" + str(p) + ":3";
  const json local = {{"field", k}, {"prime", p}};

  Certificate c;
  c.id = id;
  c.title = "5 does not imply 9";
  c.params = {{"p", p}, {"q", q}};
  c.scope = full ? "full" : "arithmetic-only";
  c.data = {{"K", k}, {"M", "cyclic degree-p extension of K, split at p and inert at q (manual data)"}, {"G", g}};
  c.claims = {id, {5}, {9}, true};
  c.steps.push_back(checked("arith.mod", {{"a", q}, {"m", p}}, {{"value", 1}}, {"holds:5"}));
  c.steps.push_back(checked("field.splitting", {{"field", k}, {"prime", p}}, {{"e", 2}, {"g", 1}}, {"fails:9"}));
  if (full) c.steps.push_back(checked("field.splitting", {{"field", k}, {"prime", q}}, {{"g", 2}}, {"holds:5"}));
  const json d0 = brauer_class("K", json::array({inv(str(p) + ":0", 1, p3), inv(str(q) + ":0", -1, p3)}));
  c.steps.push_back(checked("brauer.make", {{"class", d0}}, {{"index", p3}}, {"holds:5"}));
  const json rel = {{"base_field", "K"},
                    {"top_field", "M"},
                    {"galois", true},
                    {"degree", p},
                    {"records", json::array({json{{"prime", p}, {"g_rel", p}, {"n_rel", 1}},
                                             json{{"prime", q}, {"g_rel", 1}, {"n_rel", p}}})}};
  json restricted = json::array();
  for (u64 j = 0; j < p; ++j) restricted.push_back(inv(str(p) + ":" + str(j), 1, p3));
  restricted.push_back(inv(str(q) + ":0", -1, p2));
  const json d = brauer_class("M", restricted);
  c.steps.push_back(checked("brauer.restrict", {{"class", d0}, {"relative", rel}}, {{"class", d}, {"index", p3}},
                            {"holds:5"}));
  c.steps.push_back(checked("brauer.fibers", {{"class", d}, {"relative", rel}}, {{"value", true}}, {"holds:5"}));
  c.steps.push_back(checked("local.completion", {{"local", local}}, {{"degree", 2}, {"s", 0}}, {"holds:5"}));
  c.steps.push_back(checked("local.realizable", {{"spec", g}, {"local", local}}, {{"verdict", "yes"}}, {"holds:5"}));
  c.steps.push_back(checked("group.abelian_invariants", {{"spec", "elab:" + str(p) + ":2"}},
                            {{"invariants", {p, p}}}, {"holds:5"}));
  json degrees = json::object();
  for (u64 j = 0; j < p; ++j) degrees[str(p) + ":" + str(j)] = p3;
  degrees[str(q) + ":0"] = p2;
  c.steps.push_back(checked("brauer.splits", {{"class", d}, {"degrees", degrees}}, {{"value", true}}, {"holds:5"}));
  c.steps.push_back(cited("GrunwaldWang",
                          "By the Grunwald-Wang Theorem, there is a Galois G-extension L/M for which "
                          "Gal(L_{v_i}/M_{v_i})=G for i=1,...,p, and Gal(L_{w'}/M_{w'})=(Z/pZ)^2",
                          {"holds:5"}));
  c.steps.push_back(checked("group.metacyclic", {{"spec", g}}, {{"metacyclic", false}}, {"fails:9"}));
  c.steps.push_back(checked("brauer.adequate", {{"degrees", {p3, p2, p2}}, {"n", p3}}, {{"value", false}},
                            {"fails:9"}));
  return c;
}

Certificate ex5(const Params& params) {
  const std::string id = "ex5";
  const u64 p = odd_prime(id, params, 5);
  if (p % 4 != 1 && p != 3) precondition(id, "needs p = 1 mod 4 (or p = 3 for arithmetic only)");
  check_order(id, p, 3);
  const bool full = p % 4 == 1 && p >= 13;
  const u64 p2 = p * p;
  const std::string k = "Q(zeta:" + str(p) + ")", m = "Q(zeta:" + str(4 * p2) + ")";
  const std::string g = "meta:" + str(p) + ":" + str(p2) + ":0:" + str(p + 1);
  const json local = {{"field", k}, {"prime", p}};

  Certificate c;
  c.id = id;
  c.title = "2 does not imply 5; 7 does not imply 5";
  c.params = {{"p", p}};
  c.scope = full ? "full" : "arithmetic-only";
  c.data = {{"K", k}, {"M", m}, {"G", g}};
  c.claims = {id, {7, 2}, {5}, true};
  c.steps.push_back(checked("group.order", {{"spec", g}}, {{"order", p2 * p}}, {"holds:7"}));
  c.steps.push_back(checked("liedahl.check", {{"spec", g}, {"field", k}},
                            {{"status", "satisfied"}, {"witness", {{"m", p}, {"n", p2}, {"i", 0}, {"t", p + 1}}}},
                            {"holds:7"}));
  c.steps.push_back(checked("field.sigma", {{"t", p + 1}, {"n", p2}, {"field", k}}, {{"value", true}}, {"holds:7"}));
  c.steps.push_back(
      checked("field.splitting", {{"field", k}, {"prime", p}}, {{"e", p - 1}, {"f", 1}, {"g", 1}}, {"holds:7"}));
  if (p % 4 == 1) c.steps.push_back(checked("field.splitting", {{"field", m}, {"prime", p}}, {{"g", 2}}, {"fails:5"}));
  c.steps.push_back(checked("liedahl.check", {{"spec", g}, {"field", m}}, {{"status", "failed"}}, {"fails:5"}));
  c.steps.push_back(
      checked("brauer.solve", {{"spec", two_equal_slots_spec(p)}}, {{"feasible", false}}, {"fails:5"}));
  c.steps.push_back(checked("group.quotients_abelian", {{"spec", g}}, {{"value", true}}, {"holds:7"}));
  c.steps.push_back(checked("group.abelian_invariants", {{"spec", g}}, {{"invariants", {p, p}}}, {"holds:7"}));
  c.steps.push_back(checked("local.completion", {{"local", local}}, {{"degree", p - 1}, {"s", 1}}, {"holds:7"}));
  c.steps.push_back(checked("local.max_rank", {{"local", local}}, {{"rank", p + 1}}, {"holds:7"}));
  c.steps.push_back(cited("LiedahlRealizability",
                          "As G satisfies Liedahl's condition over K, G is realizable over infinitely many primes "
                          "of K (see the proof of [Lid2, Theorem 29] or [Nef, Theorem 2.3.1])",
                          {"holds:7"}));
  c.steps.push_back(cited("EmbeddingProblem",
                          "the embedding problem for G_k splits through a free pro-p group of large enough rank and "
                          "hence has a surjective solution",
                          {"holds:7"}));
  c.steps.push_back(cited("Neukirch",
                          "By Theorems 6.4(b) and 2.5 of [Neu2] there is a G-extension L_0/K for which "
                          "Gal((L_0)_w/K_w)=G and (L_0)_u=L_0^p",
                          {"holds:7"}));
  c.steps.push_back(checked("lattice.implies", {{"from", 7}, {"to", 2}, {"mode", "GaloisMK"}},
                            {{"verdict", "proved"}}, {"holds:2"}));
  return c;
}

Certificate nogal(const Params& params) {
  const std::string id = "nogal";
  const u64 n = params.n.value_or(3);
  if (n < 3 || n > 20) precondition(id, "needs 3 <= n <= 20");
  const u64 f = arith::factorial(n - 1);

  Certificate c;
  c.id = id;
  c.title = "6 does not imply 2";
  c.params = {{"n", n}};
  c.data = {{"G", "cyclic:" + str(n)}, {"M", "degree-n extension of K with Galois closure group S_n (not Galois)"}};
  c.claims = {id, {6}, {2}, false};
  c.steps.push_back(checked("arith.factorial", {{"n", n}}, {{"value", f * n}}, {"fails:2"}));
  c.steps.push_back(checked("arith.factorial", {{"n", n - 1}}, {{"value", f}}, {"fails:2"}));
  c.steps.push_back(checked("arith.divides", {{"a", f}, {"b", n}}, {{"value", false}}, {"fails:2"}));
  c.steps.push_back(checked("example.verify", {{"id", "cyclic"}, {"n", n}}, {{"pass", true}}, {"holds:6"}));
  return c;
}

Certificate cyclic(const Params& params) {
  const std::string id = "cyclic";
  const u64 n = params.n.value_or(4);
  if (n < 1) precondition(id, "needs n >= 1");
  const std::string m = params.field.value_or("Q(i)");
  const auto field = fields::parse_field(m);
  const u64 deg = field.degree();

  // the two smallest odd primes splitting completely in M
  std::vector<u64> primes;
  for (u64 q = 3; primes.size() < 2; q += 2) {
    if (arith::is_prime(q) && field.conductor() % q != 0 && fields::splitting(field, q).g == deg) primes.push_back(q);
  }
  const std::vector<std::string> all = {"holds:1", "holds:3", "holds:4", "holds:5",
                                        "holds:6", "holds:7", "holds:8", "holds:9"};

  Certificate c;
  c.id = id;
  c.title = "cyclic groups satisfy every condition except possibly 2";
  c.params = {{"n", n}, {"field", m}};
  c.data = {{"K", "Q"}, {"M", m}, {"G", "cyclic:" + str(n)}, {"primes", primes}};
  c.claims = {id, {1, 3, 4, 5, 6, 7, 8, 9}, {}, true};
  c.steps.push_back(checked("field.parse", {{"field", m}}, {{"degree", deg}}, {"holds:6"}));
  c.steps.push_back(cited("Chebotarev",
                          "By Chebotarev density Theorem there are infinitely many primes v of K that split "
                          "completely in M",
                          {"holds:6"}));
  c.steps.push_back(checked("field.split_primes", {{"field", m}, {"count", 2}}, {{"primes", primes}}, {"holds:6"}));
  for (u64 q : primes) {
    c.steps.push_back(
        checked("field.splitting", {{"field", m}, {"prime", q}}, {{"e", 1}, {"f", 1}, {"g", deg}}, {"holds:6"}));
  }
  c.steps.push_back(cited("GrunwaldWang",
                          "By the weak version of the Grunwald-Wang Theorem there is a G-extension L_0/K for which "
                          "Gal((L_0)_{v_i}/K_{v_i})=G",
                          {"holds:6"}));
  c.steps.push_back(checked("brauer.adequate", {{"degrees", {n, n}}, {"n", n}}, {{"value", true}}, {"holds:6"}));
  const json d0 = brauer_class("Q", json::array({inv(str(primes[0]) + ":0", 1, n), inv(str(primes[1]) + ":0", -1, n)}));
  c.steps.push_back(checked("brauer.restrict",
                            {{"class", d0}, {"relative", {{"base", "Q"}, {"top", m}, {"primes", primes}}}},
                            {{"index_before", n}, {"index", n}}, {"holds:6"}));
  c.steps.push_back(checked("lattice.reach", {{"from", 6}}, {{"reach", {1, 3, 4, 5, 6, 7, 8, 9}}}, all));
  return c;
}

using Builder = Certificate (*)(const Params&);

const std::vector<std::pair<std::string, Builder>>& builders() {
  static const std::vector<std::pair<std::string, Builder>> table = {
      {"nogal", nogal}, {"ex1", ex1}, {"ex2", ex2}, {"ex3", ex3}, {"ex4", ex4}, {"ex5", ex5}, {"cyclic", cyclic}};
  return table;
}

}  // namespace

std::vector<std::string> example_ids() {
  std::vector<std::string> out;
  for (const auto& [id, b] : builders()) out.push_back(id);
  return out;
}

json example_list() {
  json out = json::array();
  for (const auto& [id, b] : builders()) {
    const auto c = b(Params{});
    out.push_back({{"id", id},
                   {"title", c.title},
                   {"defaults", c.params},
                   {"holds", c.claims.holds},
                   {"fails", c.claims.fails},
                   {"galois", c.claims.galois}});
  }
  return out;
}

Certificate build_certificate(std::string_view id, const Params& params) {
  for (const auto& [name, b] : builders()) {
    if (name == id) return b(params);
  }
  throw Error("UnknownExample", "no example named '" + std::string(id) + "'");
}

VerificationReport verify_certificate(const Certificate& cert, StepRunner& runner) {
  VerificationReport r;
  r.id = cert.id;
  r.scope = cert.scope;
  bool all_pass = true;
  std::set<std::string> supported;
  std::set<std::string> claims;
  for (auto c : cert.claims.holds) claims.insert("holds:" + std::to_string(c));
  for (auto c : cert.claims.fails) claims.insert("fails:" + std::to_string(c));

  for (const auto& s : cert.steps) {
    StepOutcome o;
    if (s.kind == "CITED") {
      ++r.cited;
      o.status = "CITED";
      if (s.theorem.empty() || s.statement.empty()) r.problems.push_back("CITED step without theorem or statement");
    } else if (s.kind == "CHECKED") {
      ++r.checked;
      try {
        o.result = runner.run(s.op, s.inputs);
        o.status = matches(s.expected, o.result) ? "PASS" : "FAIL";
        if (o.status == "FAIL") o.message = "expected " + s.expected.dump();
      } catch (const Error& e) {
        o.status = "FAIL";
        o.message = e.kind() + ": " + e.what();
      }
      all_pass = all_pass && o.status == "PASS";
    } else {
      o.status = "FAIL";
      o.message = "unknown step kind '" + s.kind + "'";
      all_pass = false;
    }
    for (const auto& tag : s.supports) {
      if (!claims.count(tag)) r.problems.push_back("step supports unclaimed '" + tag + "'");
      supported.insert(tag);
    }
    r.outcomes.push_back(std::move(o));
  }
  for (const auto& c : claims) {
    if (!supported.count(c)) r.unsupported.push_back(c);
  }
  if (r.checked == 0) r.problems.push_back("certificate has no CHECKED step");
  r.pass = all_pass && r.problems.empty() && r.unsupported.empty();
  return r;
}

VerificationReport verify_certificate(const Certificate& cert) {
  StepRunner runner;
  return verify_certificate(cert, runner);
}

json to_json(const Step& s) {
  json out = {{"kind", s.kind}, {"supports", s.supports}};
  if (s.kind == "CITED") {
    out["theorem"] = s.theorem;
    out["statement"] = s.statement;
  } else {
    out["op"] = s.op;
    out["inputs"] = s.inputs;
    out["expected"] = s.expected;
  }
  return out;
}

json to_json(const Certificate& c) {
  json steps = json::array();
  for (const auto& s : c.steps) steps.push_back(to_json(s));
  return {{"id", c.id},
          {"title", c.title},
          {"params", c.params},
          {"scope", c.scope},
          {"data", c.data},
          {"holds", c.claims.holds},
          {"fails", c.claims.fails},
          {"galois", c.claims.galois},
          {"steps", std::move(steps)}};
}

Certificate certificate_from_json(const json& j) {
  try {
    Certificate c;
    c.id = j.at("id").get<std::string>();
    c.title = j.value("title", "");
    c.params = j.value("params", json::object());
    c.scope = j.value("scope", "full");
    c.data = j.value("data", json::object());
    c.claims = conditions::registry_from_json(j).examples.front();
    for (const auto& s : j.at("steps")) {
      Step step;
      step.kind = s.at("kind").get<std::string>();
      step.op = s.value("op", "");
      step.inputs = s.value("inputs", json::object());
      step.expected = s.value("expected", json::object());
      step.supports = s.value("supports", std::vector<std::string>{});
      step.theorem = s.value("theorem", "");
      step.statement = s.value("statement", "");
      c.steps.push_back(std::move(step));
    }
    return c;
  } catch (const json::exception& e) {
    throw Error("ParseError", std::string("certificate: ") + e.what());
  }
}

json to_json(const VerificationReport& r, const Certificate& c) {
  json steps = json::array();
  for (std::size_t k = 0; k < r.outcomes.size(); ++k) {
    const auto& o = r.outcomes[k];
    const auto& s = c.steps[k];
    json e = {{"index", k}, {"kind", s.kind}, {"status", o.status}};
    if (s.kind == "CITED") {
      e["theorem"] = s.theorem;
      e["statement"] = s.statement;
    } else {
      e["op"] = s.op;
    }
    if (!o.message.empty()) e["message"] = o.message;
    if (o.status == "FAIL" && !o.result.is_null()) e["result"] = o.result;
    steps.push_back(std::move(e));
  }
  json theorems = json::array();
  for (const auto& s : c.steps) {
    if (s.kind == "CITED") theorems.push_back(s.theorem);
  }
  return {{"id", r.id},         {"params", c.params},   {"scope", r.scope},
          {"pass", r.pass},     {"checked", r.checked}, {"cited", r.cited},
          {"cited_theorems", theorems}, {"steps", std::move(steps)}, {"unsupported", r.unsupported},
          {"problems", r.problems}};
}

}  // namespace adlab::certificates
