#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "adlab/fields.hpp"
#include "adlab/groups/finite_group.hpp"

namespace adlab::local {

/// Completion of a number field at a prime above the residue prime p.
struct LocalFieldDatum {
  std::uint64_t prime = 2;
  std::uint64_t degree = 1;  // [K_v : Q_p]
  std::uint64_t e = 1;
  std::uint64_t f = 1;
  std::uint64_t s = 0;  // largest k with mu_{p^k} in K_v

  bool operator==(const LocalFieldDatum&) const = default;
};

/// Manual datum; checks e*f = degree and that mu_p is absent when degree < p-1.
/// Errors: InvalidLocalDatum.
LocalFieldDatum make_datum(std::uint64_t prime, std::uint64_t e, std::uint64_t f, std::uint64_t s);

/// Errors: NotPrime.
LocalFieldDatum completion(const fields::AbelianNumberField& k, std::uint64_t q);

/// Rank of the maximal abelian pro-p quotient of the absolute Galois group.
std::uint64_t max_abelian_p_rank(const LocalFieldDatum& datum);

enum class Verdict { Yes, No, Unknown };

struct RealizabilityVerdict {
  Verdict verdict = Verdict::Unknown;
  std::string criterion;
  std::string detail;
};

/// Whether a q-group occurs as a Galois group over the local field. Errors: NotPGroup.
RealizabilityVerdict realizable(const groups::FiniteGroup& g, const LocalFieldDatum& datum);

std::string to_string(Verdict v);
nlohmann::json to_json(const LocalFieldDatum& d);
nlohmann::json to_json(const RealizabilityVerdict& v);
LocalFieldDatum datum_from_json(const nlohmann::json& j);

}  // namespace adlab::local
