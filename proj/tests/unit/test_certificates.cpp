#include <gtest/gtest.h>

#include <set>

#include "adlab/certificates.hpp"
#include "adlab/error.hpp"

using namespace adlab::certificates;

namespace {

std::string kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const adlab::Error& e) {
    return e.kind();
  }
  return "";
}

Params with_p(std::uint64_t p, std::optional<std::uint64_t> q = std::nullopt) {
  Params params;
  params.p = p;
  params.q = q;
  return params;
}

std::set<std::string> cited_theorems(const Certificate& c) {
  std::set<std::string> out;
  for (const auto& s : c.steps)
    if (s.kind == "CITED") out.insert(s.theorem);
  return out;
}

void expect_pass(const Certificate& c) {
  StepRunner runner;
  const auto r = verify_certificate(c, runner);
  EXPECT_TRUE(r.pass) << c.id << " " << to_json(r, c).dump();
  EXPECT_GT(r.checked, 0u);
  EXPECT_TRUE(r.unsupported.empty());
  for (const auto& o : r.outcomes) EXPECT_NE(o.status, "FAIL") << c.id << ": " << o.message;
}

}  // namespace

TEST(Certificates, Ids) {
  EXPECT_EQ(example_ids(), (std::vector<std::string>{"nogal", "ex1", "ex2", "ex3", "ex4", "ex5", "cyclic"}));
  EXPECT_EQ(example_list().size(), 7u);
}

TEST(Certificates, AllPassAtThree) {
  for (const std::string id : {"ex1", "ex2", "ex3", "ex5"}) expect_pass(build_certificate(id, with_p(3)));
  expect_pass(build_certificate("ex4", with_p(3, 7)));
  expect_pass(build_certificate("nogal", {}));
  expect_pass(build_certificate("cyclic", {}));
}

TEST(Certificates, PassAtFive) {
  for (const std::string id : {"ex2", "ex3", "ex5"}) {
    const auto c = build_certificate(id, with_p(5));
    expect_pass(c);
    EXPECT_EQ(c.scope, id == "ex5" ? "arithmetic-only" : "full");
  }
  expect_pass(build_certificate("ex4", with_p(5, 11)));
}

TEST(Certificates, ExampleOneAtFiveIsFullScope) {
  const auto c = build_certificate("ex1", with_p(5));
  EXPECT_EQ(c.scope, "full");
  expect_pass(c);
}

TEST(Certificates, CitedTheorems) {
  const std::map<std::string, std::set<std::string>> expected = {
      {"nogal", {}},
      {"ex1", {"GrunwaldWang"}},
      {"ex2", {"Saltman"}},
      {"ex3", {"GrunwaldWang"}},
      {"ex4", {"GrunwaldWang"}},
      {"ex5", {"LiedahlRealizability", "EmbeddingProblem", "Neukirch"}},
      {"cyclic", {"Chebotarev", "GrunwaldWang"}}};
  for (const auto& [id, theorems] : expected) {
    const auto c = build_certificate(id, id == "ex4" ? with_p(3, 7) : (id == "nogal" || id == "cyclic") ? Params{} : with_p(3));
    EXPECT_EQ(cited_theorems(c), theorems) << id;
    for (const auto& s : c.steps)
      if (s.kind == "CITED") EXPECT_FALSE(s.statement.empty());
  }
}

TEST(Certificates, ClaimsMatchRegistry) {
  const auto reg = adlab::conditions::default_registry();
  for (const auto& ex : reg.examples) {
    const auto c = build_certificate(ex.id, ex.id == "ex4" ? with_p(3, 7) : (ex.id == "nogal" || ex.id == "cyclic") ? Params{} : with_p(3));
    EXPECT_EQ(c.claims.holds, ex.holds) << ex.id;
    EXPECT_EQ(c.claims.fails, ex.fails) << ex.id;
  }
}

TEST(Certificates, ExampleFourRestrictionValue) {
  const auto c = build_certificate("ex4", with_p(3, 7));
  StepRunner runner;
  bool seen = false;
  for (const auto& s : c.steps) {
    if (s.op != "brauer.restrict") continue;
    const auto out = runner.run(s.op, s.inputs);
    bool has = false;
    for (const auto& v : out["class"]["invariants"])
      if (v["num"] == 8 && v["den"] == 9) has = true;
    EXPECT_TRUE(has) << out.dump();
    seen = true;
  }
  EXPECT_TRUE(seen);
}

TEST(Certificates, TamperedExpectationFails) {
  auto c = build_certificate("ex4", with_p(3, 7));
  for (auto& s : c.steps) {
    if (s.op == "brauer.restrict") {
      s.expected["index"] = 9;
      break;
    }
  }
  const auto r = verify_certificate(c);
  EXPECT_FALSE(r.pass);
  std::size_t failed = 0;
  for (const auto& o : r.outcomes) failed += o.status == "FAIL";
  EXPECT_EQ(failed, 1u);
}

TEST(Certificates, EveryCheckedStepIsLoadBearing) {
  const auto base = build_certificate("ex3", with_p(3));
  for (std::size_t k = 0; k < base.steps.size(); ++k) {
    if (base.steps[k].kind != "CHECKED") continue;
    auto c = base;
    c.steps[k].expected = {{"__absent__", 1}};
    EXPECT_FALSE(verify_certificate(c).pass) << k;
  }
}

TEST(Certificates, ZeroCheckedRejected) {
  auto c = build_certificate("cyclic", {});
  std::vector<Step> cited;
  for (const auto& s : c.steps)
    if (s.kind == "CITED") cited.push_back(s);
  c.steps = cited;
  const auto r = verify_certificate(c);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.checked, 0u);
}

TEST(Certificates, UnsupportedClaimFlagged) {
  auto c = build_certificate("ex4", with_p(3, 7));
  c.claims.fails.push_back(8);
  const auto r = verify_certificate(c);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.unsupported.empty());
}

TEST(Certificates, CitedWithoutTheoremRejected) {
  auto c = build_certificate("cyclic", {});
  for (auto& s : c.steps)
    if (s.kind == "CITED") s.theorem.clear();
  EXPECT_FALSE(verify_certificate(c).pass);
}

TEST(Certificates, JsonRoundTrip) {
  for (const auto& id : example_ids()) {
    const auto c = build_certificate(id, id == "ex4" ? with_p(3, 7) : (id == "nogal" || id == "cyclic") ? Params{} : with_p(3));
    const auto j = to_json(c);
    const auto back = certificate_from_json(j);
    EXPECT_EQ(to_json(back), j) << id;
  }
  const auto back = certificate_from_json(to_json(build_certificate("nogal", {})));
  EXPECT_TRUE(verify_certificate(back).pass);
}

TEST(Certificates, Preconditions) {
  EXPECT_EQ(kind_of([] { build_certificate("ex4", with_p(3, 11)); }), "Precondition");
  EXPECT_EQ(kind_of([] { build_certificate("ex1", with_p(7)); }), "Precondition");
  EXPECT_EQ(kind_of([] { build_certificate("ex2", with_p(4)); }), "Precondition");
  EXPECT_EQ(kind_of([] { build_certificate("ex1", with_p(13)); }), "Precondition");  // 13^6 above the bound
  EXPECT_EQ(kind_of([] { build_certificate("ex9", {}); }), "UnknownExample");
}

TEST(Certificates, MatchesSemantics) {
  EXPECT_TRUE(matches({{"a", 1}}, {{"a", 1}, {"b", 2}}));
  EXPECT_FALSE(matches({{"a", 1}}, {{"a", 2}}));
  EXPECT_TRUE(matches({{"r", {{">=", 4}}}}, {{"r", 5}}));
  EXPECT_FALSE(matches({{"r", {{">", 5}}}}, {{"r", 5}}));
  EXPECT_TRUE(matches({{"r", {{"!=", 5}}}}, {{"r", 4}}));
  EXPECT_TRUE(matches({{"xs", {{"contains", 3}}}}, {{"xs", {1, 2, 3}}}));
  EXPECT_FALSE(matches({{"xs", {1, 2}}}, {{"xs", {1, 2, 3}}}));
}

TEST(Certificates, UnknownOperation) {
  StepRunner runner;
  EXPECT_EQ(kind_of([&] { runner.run("group.nosuch", {}); }), "UnknownOperation");
  EXPECT_FALSE(StepRunner::operations().empty());
}
