#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace adlab::fields {

/// A subfield of a cyclotomic field Q(mu_n), given by its conductor and the
/// subgroup of (Z/n)^* fixing it. Always stored with the minimal conductor.
class AbelianNumberField {
 public:
  /// The fixed field of `fixing` (a subgroup of (Z/modulus)^*), canonicalized.
  static AbelianNumberField from_fixing_subgroup(std::uint64_t modulus,
                                                 std::vector<std::uint64_t> fixing);
  static AbelianNumberField rationals();
  static AbelianNumberField cyclotomic(std::uint64_t n);
  /// Q(sqrt(d)) for squarefree d; conductor |disc| and kernel of the Kronecker character.
  static AbelianNumberField quadratic(std::int64_t d);

  std::uint64_t conductor() const { return conductor_; }
  /// Sorted residues of the fixing subgroup in (Z/conductor)^*.
  const std::vector<std::uint64_t>& fixing_subgroup() const { return fixing_; }
  std::uint64_t degree() const;

  /// Preimage of the fixing subgroup in (Z/modulus)^*; modulus must be a multiple
  /// of the conductor.
  std::vector<std::uint64_t> fixing_subgroup_mod(std::uint64_t modulus) const;

  bool operator==(const AbelianNumberField&) const = default;

 private:
  AbelianNumberField(std::uint64_t conductor, std::vector<std::uint64_t> fixing)
      : conductor_(conductor), fixing_(std::move(fixing)) {}

  std::uint64_t conductor_ = 1;
  std::vector<std::uint64_t> fixing_{0};
};

/// `Q` | `Q(i)` | `Q(zeta:n)` | `Q(sqrt:d)` | `A*B`. Errors: ParseError, NotSquarefree.
AbelianNumberField parse_field(std::string_view expr);

AbelianNumberField compositum(const AbelianNumberField& a, const AbelianNumberField& b);
bool is_subfield(const AbelianNumberField& k, const AbelianNumberField& m);

struct SplittingDatum {
  std::uint64_t e = 1;  // ramification index
  std::uint64_t f = 1;  // residue degree
  std::uint64_t g = 1;  // number of primes above q
};

/// Decomposition of the rational prime q in K. Errors: NotPrime.
SplittingDatum splitting(const AbelianNumberField& k, std::uint64_t q);

/// K meet Q(mu_n).
AbelianNumberField intersect_with_cyclotomic(const AbelianNumberField& k, std::uint64_t n);

/// Whether sigma_{t,n} : zeta -> zeta^t fixes K meet Q(mu_n). Errors: NotCoprime.
bool sigma_fixes(std::int64_t t, std::uint64_t n, const AbelianNumberField& k);

/// Splitting of one prime of K in M. Model-backed records are keyed by the rational
/// prime and apply to every K-prime above it; manual records carry a symbolic label.
struct RelativePrimeRecord {
  std::uint64_t prime = 0;
  std::string label;
  std::uint64_t g_rel = 1;  // number of M-primes above the K-prime
  std::uint64_t n_rel = 1;  // relative local degree
  std::optional<std::uint64_t> e_rel;
  std::optional<std::uint64_t> f_rel;
};

struct RelativeExtensionData {
  std::string base_field;
  std::string top_field;
  bool galois = true;
  std::optional<std::uint64_t> degree;  // [M:K] when known
  std::vector<RelativePrimeRecord> records;

  const RelativePrimeRecord* find(std::uint64_t prime, std::string_view label) const;
  /// Checks g_rel * n_rel = [M:K] on every record for Galois data with known degree.
  void validate() const;
};

/// Errors: NotSubfield, NotPrime.
RelativeExtensionData relative_splitting(const AbelianNumberField& k, const AbelianNumberField& m,
                                         const std::vector<std::uint64_t>& primes,
                                         std::string base_name = "K", std::string top_name = "M");

nlohmann::json to_json(const AbelianNumberField& k);
nlohmann::json to_json(const SplittingDatum& s);
nlohmann::json to_json(const RelativeExtensionData& rel);
RelativeExtensionData relative_from_json(const nlohmann::json& j);

}  // namespace adlab::fields
