#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linkinv/arith.hpp"
#include "linkinv/ke_cert.hpp"
#include "linkinv/links.hpp"
#include "linkinv/moduli.hpp"
#include "linkinv/topology.hpp"

namespace linkinv {

enum class FamilyTag { Euclidean5, FermatCy, Hyperbolic, MixedCanonical, Ingested };

std::string_view to_string(FamilyTag tag);
std::optional<FamilyTag> parse_family_tag(std::string_view text);

/// One catalog row: the k-fold cover of a base system in m variables.
struct FamilyRecord {
  FamilyTag family = FamilyTag::Ingested;
  Int k = 2;
  WeightSystem base;
  WeightSystem cover;
  std::optional<std::vector<Int>> bp_exponents;
  /// 2m - 1, the dimension of the cover link.
  Int link_dimension = 0;
  TorsionOrder torsion;
  std::optional<BigInt> genus;
  ModuliCount moduli;
  KeCertificate certificate;
  /// Published minimal k (Euclidean family only).
  std::optional<Int> claimed_min_k;
  /// Least k for which the sufficiency inequality holds, by sweep.
  std::optional<Int> literal_min_k;
  std::vector<std::string> notes;

  [[nodiscard]] Int m() const { return static_cast<Int>(base.size()); }

  friend bool operator==(const FamilyRecord&, const FamilyRecord&) = default;
};

struct ScanConfig {
  Int weight_bound = 60;
  Int k_bound = 60;
  Int m_min = 3;
  Int m_max = 8;
  unsigned thread_budget = 1;
  std::uint64_t oracle_budget = kDefaultOracleBudget;

  /// Throws UsageError on out-of-range bounds.
  void validate() const;
};

inline constexpr Int kMaxScanM = 12;

/// Base system together with its monomial count in degree d.
struct ClassifiedSystem {
  WeightSystem system;
  BigInt monomials;

  friend bool operator==(const ClassifiedSystem&, const ClassifiedSystem&) = default;
};

/// Canonical quasi-smooth triples with |w| = d, gcd(w) = 1 and every weight
/// at most cfg.weight_bound, in ascending weight order.
std::vector<ClassifiedSystem> scan_euclidean_classification(const ScanConfig& cfg);

std::vector<FamilyRecord> generate_theorem2_family(const ScanConfig& cfg);
std::vector<FamilyRecord> scan_fermat_cy(const ScanConfig& cfg);
std::vector<FamilyRecord> scan_hyperbolic(const ScanConfig& cfg);
std::vector<FamilyRecord> generate_mixed_canonical(const ScanConfig& cfg);
/// Union of the four generated families in canonical order.
std::vector<FamilyRecord> full_catalog(const ScanConfig& cfg);

/// Builds the record for the k-fold cover of base. Requires the torsion
/// hypothesis and gcd(k, d) = 1.
FamilyRecord make_record(FamilyTag family, Int k, const WeightSystem& base);

/// Sorts by (family, m, base degree, k, canonical base weights).
void sort_records(std::vector<FamilyRecord>& records);

struct IngestIssue {
  std::size_t line = 0;
  std::string message;
};

struct IngestResult {
  std::vector<FamilyRecord> records;
  std::vector<IngestIssue> issues;
};

/// One weight system per line as "w1,...,wm;d"; '#' starts a comment.
/// Every k in [k_min, k_max] satisfying the torsion hypothesis is emitted;
/// covers with gcd(k, d) > 1 are normalized first. Bad rows are reported
/// and skipped.
IngestResult ingest_weight_list(std::istream& source, Int k_min, Int k_max,
                                unsigned thread_budget = 1);

/// Parses "w1,...,wm;d". Throws UsageError describing the problem.
WeightSystem parse_weight_row(std::string_view row);

} // namespace linkinv
