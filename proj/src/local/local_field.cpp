#include "adlab/local.hpp"

#include "adlab/arith.hpp"
#include "adlab/error.hpp"
#include "adlab/groups/algorithms.hpp"

namespace adlab::local {

using arith::u64;

LocalFieldDatum make_datum(u64 prime, u64 e, u64 f, u64 s) {
  if (!arith::is_prime(prime)) throw Error("NotPrime", std::to_string(prime) + " is not prime");
  if (e == 0 || f == 0) throw Error("InvalidLocalDatum", "e and f must be positive");
  const u64 d = e * f;
  if (prime == 2 && s == 0) throw Error("InvalidLocalDatum", "every 2-adic field contains mu_2");
  if (prime > 2 && s > 0 && d % (prime - 1) != 0) {
    throw Error("InvalidLocalDatum", "mu_p needs (p-1) | degree");
  }
  if (s > 0 && d % arith::euler_phi(arith::ipow(prime, static_cast<unsigned>(s))) != 0) {
    throw Error("InvalidLocalDatum", "mu_{p^s} needs phi(p^s) | degree");
  }
  return {prime, d, e, f, s};
}

LocalFieldDatum completion(const fields::AbelianNumberField& k, u64 q) {
  const auto sd = fields::splitting(k, q);
  LocalFieldDatum out{q, sd.e * sd.f, sd.e, sd.f, 0};
  const u64 cap = arith::valuation(k.conductor(), q) + 2;
  u64 qk = 1;
  for (u64 j = 1; j <= cap; ++j) {
    qk *= q;
    const auto top = fields::compositum(k, fields::AbelianNumberField::cyclotomic(qk));
    const auto rel = fields::relative_splitting(k, top, {q});
    if (rel.records.front().n_rel != 1) break;
    out.s = j;
  }
  return out;
}

u64 max_abelian_p_rank(const LocalFieldDatum& datum) { return datum.degree + 1 + (datum.s >= 1 ? 1 : 0); }

RealizabilityVerdict realizable(const groups::FiniteGroup& g, const LocalFieldDatum& datum) {
  if (g.order() == 1) return {Verdict::Yes, "trivial", "trivial group"};
  const auto q = g.prime();
  if (!q) throw Error("NotPGroup", "order " + std::to_string(g.order()) + " is not a prime power");
  const u64 p = datum.prime;
  const u64 d = datum.degree;

  if (*q == p) {
    const u64 rank = groups::frattini_quotient_rank(g);
    const std::string rk = "rank " + std::to_string(rank);
    if (datum.s == 0) {
      const bool ok = rank <= d + 1;
      return {ok ? Verdict::Yes : Verdict::No, "free-pro-p",
              rk + (ok ? " <= " : " > ") + std::to_string(d + 1) + " generators of the free pro-p group"};
    }
    if (g.is_abelian()) {
      const auto inv = groups::abelian_invariants(g);
      const u64 ps = arith::ipow(p, static_cast<unsigned>(datum.s));
      bool ok = inv.size() <= d + 1 || (inv.size() == d + 2 && inv.back() <= ps);
      return {ok ? Verdict::Yes : Verdict::No, "abelian-quotient",
              rk + (ok ? " is" : " is not") + " a quotient of Z_p^" + std::to_string(d + 1) + " x Z/" +
                  std::to_string(ps)};
    }
    if (rank > d + 2) {
      return {Verdict::No, "demushkin-rank", rk + " > " + std::to_string(d + 2)};
    }
    return {Verdict::Unknown, "demushkin", rk + " within the Demushkin bound; sufficiency not decided"};
  }

  // every q-extension with q != p is tame, and tame Galois groups are metacyclic
  if (groups::frattini_quotient_rank(g) > 2 || groups::metacyclic_presentations(g).empty()) {
    return {Verdict::No, "tame-metacyclic", "not metacyclic"};
  }
  return {Verdict::Unknown, "tame-sufficiency", "metacyclic; tame realizability not decided"};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Unknown:
      break;
  }
  return "unknown";
}

nlohmann::json to_json(const LocalFieldDatum& d) {
  return {{"prime", d.prime}, {"degree", d.degree}, {"e", d.e}, {"f", d.f}, {"s", d.s}};
}

nlohmann::json to_json(const RealizabilityVerdict& v) {
  return {{"verdict", to_string(v.verdict)}, {"criterion", v.criterion}, {"detail", v.detail}};
}

LocalFieldDatum datum_from_json(const nlohmann::json& j) {
  try {
    const u64 p = j.at("prime").get<u64>();
    u64 e = j.value("e", u64{0});
    u64 f = j.value("f", u64{0});
    if (j.contains("degree") && (e == 0 || f == 0)) {
      const u64 d = j.at("degree").get<u64>();
      if (e == 0 && f == 0) e = d;
      else if (e == 0) e = d / f;
      else f = d / e;
    }
    if (e == 0) e = 1;
    if (f == 0) f = 1;
    auto out = make_datum(p, e, f, j.value("s", p == 2 ? u64{1} : u64{0}));
    if (j.contains("degree") && j.at("degree").get<u64>() != out.degree) {
      throw Error("InvalidLocalDatum", "degree != e*f");
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error("ParseError", std::string("local datum: ") + e.what());
  }
}

}  // namespace adlab::local
