#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "adlab/fields.hpp"
#include "adlab/groups/finite_group.hpp"
#include "adlab/groups/kernels.hpp"

namespace adlab::liedahl {

enum class Status { Satisfied, Failed, NotMetacyclic };

struct LiedahlVerdict {
  Status status = Status::NotMetacyclic;
  std::optional<groups::MetacyclicPresentation> witness;
  std::optional<fields::AbelianNumberField> meet;  // K meet Q(mu_n) for the witness
  std::size_t presentations = 0;                   // number searched
};

/// First presentation (m, n, i, t), in search order, with sigma_{t,n} fixing K meet Q(mu_n).
LiedahlVerdict liedahl_check(const groups::FiniteGroup& g, const fields::AbelianNumberField& k,
                             groups::Exec exec = groups::Exec::Parallel);

/// Checks that Satisfied over M implies Satisfied over K. Errors: NotSubfield.
bool subfield_monotonicity(const groups::FiniteGroup& g, const fields::AbelianNumberField& k,
                           const fields::AbelianNumberField& m);

enum class TameVerdict { Yes, No, Unknown };

struct BasisStep {
  std::string kind;  // CHECKED or CITED
  std::string description;
};

struct TameReport {
  TameVerdict verdict = TameVerdict::Unknown;
  std::vector<BasisStep> basis;
  bool unknown_structure = false;  // G is not the direct product of its Sylow subgroups
};

/// Yes when every Sylow subgroup is metacyclic and satisfies Liedahl's condition over K
/// (existence cited), No when one of them does not.
TameReport tame_admissibility_verdict(const groups::FiniteGroup& g, const fields::AbelianNumberField& k);

std::string to_string(Status s);
std::string to_string(TameVerdict v);
nlohmann::json to_json(const groups::MetacyclicPresentation& p);
nlohmann::json to_json(const LiedahlVerdict& v);
nlohmann::json to_json(const TameReport& r);

}  // namespace adlab::liedahl
