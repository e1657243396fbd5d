#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linkinv/survey.hpp"

namespace linkinv {

enum class OutputFormat { Table, Json, Csv };

std::optional<OutputFormat> parse_output_format(std::string_view text);

inline constexpr int kCatalogSchemaVersion = 1;
inline constexpr std::string_view kToolVersion = "0.1.0";

/// The result-relevant part of a ScanConfig (thread budget excluded).
struct ScanBounds {
  Int weight_bound = 0;
  Int k_bound = 0;
  Int m_min = 0;
  Int m_max = 0;

  static ScanBounds of(const ScanConfig& cfg) {
    return {cfg.weight_bound, cfg.k_bound, cfg.m_min, cfg.m_max};
  }
  friend bool operator==(const ScanBounds&, const ScanBounds&) = default;
};

struct CatalogMeta {
  /// Absent for ingested or single-system output.
  std::optional<ScanBounds> bounds;
  /// Description of the producing command.
  std::string source;

  friend bool operator==(const CatalogMeta&, const CatalogMeta&) = default;
};

struct Catalog {
  CatalogMeta meta;
  std::vector<FamilyRecord> records;
};

struct RenderOptions {
  /// Include the decimal expansion of every torsion order.
  bool expand_torsion = false;
};

std::string render_catalog(const Catalog& catalog, OutputFormat format,
                           const RenderOptions& options = {});

/// Inverse of render_catalog(..., OutputFormat::Json). Throws UsageError on
/// malformed documents.
Catalog parse_catalog_json(std::string_view text);

std::string render_classification(const std::vector<ClassifiedSystem>& systems,
                                  const CatalogMeta& meta, OutputFormat format);

/// Assumptions every catalog states in its meta block.
const std::vector<std::string>& catalog_assumptions();

} // namespace linkinv
