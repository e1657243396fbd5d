#include "linkinv/survey.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "linkinv/error.hpp"
#include "linkinv/parallel.hpp"
#include "linkinv/text.hpp"

namespace linkinv {

std::string_view to_string(FamilyTag tag) {
  switch (tag) {
  case FamilyTag::Euclidean5:
    return "euclidean5";
  case FamilyTag::FermatCy:
    return "fermat_cy";
  case FamilyTag::Hyperbolic:
    return "hyperbolic";
  case FamilyTag::MixedCanonical:
    return "mixed_canonical";
  case FamilyTag::Ingested:
    return "ingested";
  }
  return "?";
}

std::optional<FamilyTag> parse_family_tag(std::string_view text) {
  for (FamilyTag tag : {FamilyTag::Euclidean5, FamilyTag::FermatCy, FamilyTag::Hyperbolic,
                        FamilyTag::MixedCanonical, FamilyTag::Ingested}) {
    if (to_string(tag) == text) {
      return tag;
    }
  }
  return std::nullopt;
}

void ScanConfig::validate() const {
  if (weight_bound < 1 || k_bound < 1 || thread_budget < 1 || oracle_budget < 1) {
    throw UsageError("scan bounds must be >= 1");
  }
  if (m_min < 3 || m_max > kMaxScanM || m_min > m_max) {
    throw UsageError("m range must lie within 3.." + std::to_string(kMaxScanM) + ", got " +
                     std::to_string(m_min) + ".." + std::to_string(m_max));
  }
}

namespace {

std::vector<Int> ones(Int count) { return std::vector<Int>(static_cast<std::size_t>(count), 1); }

std::vector<Int> m_values(const ScanConfig& cfg) {
  std::vector<Int> out;
  for (Int m = cfg.m_min; m <= cfg.m_max; ++m) {
    out.push_back(m);
  }
  return out;
}

template <class T>
std::vector<T> flatten(std::vector<std::vector<T>> parts) {
  std::vector<T> out;
  for (auto& part : parts) {
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

// Minimal k claimed for the Euclidean covers, keyed by base degree.
std::optional<Int> claimed_euclidean_min_k(Int degree) {
  static const std::map<Int, Int> claims{{3, 3}, {4, 3}, {6, 5}};
  const auto it = claims.find(degree);
  return it == claims.end() ? std::nullopt : std::optional<Int>(it->second);
}

} // namespace

FamilyRecord make_record(FamilyTag family, Int k, const WeightSystem& base) {
  if (std::gcd(k, base.degree()) != 1) {
    throw UsageError("records need gcd(k, d) = 1; normalize the cover first");
  }
  TorsionOrder torsion = torsion_order(k, base);
  CoverData cover = branched_cover(k, base);
  std::optional<BigInt> g;
  if (base.size() == 3) {
    g = genus(base);
  }
  FamilyRecord record{
      .family = family,
      .k = k,
      .base = base,
      .cover = cover.cover,
      .bp_exponents = std::move(cover.bp_exponents),
      .link_dimension = 2 * static_cast<Int>(base.size()) - 1,
      .torsion = torsion,
      .genus = std::move(g),
      .moduli = moduli_count(cover.cover),
      .certificate = certify(k, base),
      .claimed_min_k = std::nullopt,
      .literal_min_k = std::nullopt,
      .notes = {},
  };
  return record;
}

void sort_records(std::vector<FamilyRecord>& records) {
  const auto key = [](const FamilyRecord& r) {
    return std::make_tuple(static_cast<int>(r.family), r.m(), r.base.degree(), r.k,
                           r.base.canonical());
  };
  std::stable_sort(records.begin(), records.end(),
                   [&](const FamilyRecord& a, const FamilyRecord& b) { return key(a) < key(b); });
}

std::vector<ClassifiedSystem> scan_euclidean_classification(const ScanConfig& cfg) {
  cfg.validate();
  std::vector<Int> smallest;
  for (Int w1 = 1; w1 <= cfg.weight_bound; ++w1) {
    smallest.push_back(w1);
  }
  const Int bound = cfg.weight_bound;
  auto parts = detail::parallel_map(smallest, cfg.thread_budget, [bound](Int w1) {
    std::vector<ClassifiedSystem> found;
    for (Int w2 = w1; w2 <= bound; ++w2) {
      for (Int w3 = w2; w3 <= bound; ++w3) {
        if (std::gcd(std::gcd(w1, w2), w3) != 1) {
          continue;
        }
        WeightSystem ws({w1, w2, w3}, w1 + w2 + w3);
        if (quasi_smooth_generic(ws)) {
          BigInt n = count_monomials(ws.weights(), ws.degree());
          found.push_back({std::move(ws), std::move(n)});
        }
      }
    }
    return found;
  });
  auto out = flatten(std::move(parts));
  std::ranges::sort(out, {}, &ClassifiedSystem::system);
  return out;
}

std::vector<FamilyRecord> generate_theorem2_family(const ScanConfig& cfg) {
  std::vector<FamilyRecord> out;
  for (const ClassifiedSystem& cls : scan_euclidean_classification(cfg)) {
    const WeightSystem& base = cls.system;
    const Int d = base.degree();
    std::vector<Int> ks;
    for (Int k = 2; k <= cfg.k_bound; ++k) {
      if (std::gcd(k, d) == 1 && torsion_hypothesis(k, base)) {
        ks.push_back(k);
      }
    }
    auto records = detail::parallel_map(ks, cfg.thread_budget, [&base](Int k) {
      return make_record(FamilyTag::Euclidean5, k, base);
    });
    std::optional<Int> literal;
    for (const FamilyRecord& r : records) {
      if (r.certificate.bp_sufficient) {
        literal = r.k;
        break;
      }
    }
    for (FamilyRecord& r : records) {
      r.claimed_min_k = claimed_euclidean_min_k(d);
      r.literal_min_k = literal;
      if (r.claimed_min_k && literal && *r.claimed_min_k != *literal) {
        r.notes.push_back("min-k discrepancy: claimed k >= " + std::to_string(*r.claimed_min_k) +
                          ", literal inequality first holds at k = " + std::to_string(*literal));
      }
      if (d == 4 && r.moduli.complex_dim == 1) {
        r.notes.push_back("moduli discrepancy: literal count gives mu = 1 (two real parameters) "
                          "but d = 4 is not among the claimed two-parameter families");
      }
      out.push_back(std::move(r));
    }
  }
  sort_records(out);
  return out;
}

std::vector<FamilyRecord> scan_fermat_cy(const ScanConfig& cfg) {
  cfg.validate();
  std::vector<std::pair<Int, Int>> jobs;
  for (Int m : m_values(cfg)) {
    for (Int k = 2; k <= cfg.k_bound; ++k) {
      if (std::gcd(k, m) == 1) {
        jobs.emplace_back(m, k);
      }
    }
  }
  auto out = detail::parallel_map(jobs, cfg.thread_budget, [](const std::pair<Int, Int>& job) {
    const auto [m, k] = job;
    FamilyRecord r = make_record(FamilyTag::FermatCy, k, WeightSystem(ones(m), m));
    if (BigInt(static_cast<unsigned long>(r.torsion.exponent)) != fermat_cy_betti(m) ||
        r.moduli.complex_dim != fermat_cy_moduli(m)) {
      throw IntegrityError("Fermat Calabi-Yau record disagrees with its closed forms");
    }
    return r;
  });
  sort_records(out);
  return out;
}

std::vector<FamilyRecord> scan_hyperbolic(const ScanConfig& cfg) {
  cfg.validate();
  std::vector<std::tuple<Int, Int, Int>> jobs;
  for (Int m : m_values(cfg)) {
    for (Int l = m + 1; l <= 2 * m - 1; ++l) {
      for (Int k : hyperbolic_k_window(m, l).solutions) {
        if (k <= cfg.k_bound) {
          jobs.emplace_back(m, l, k);
        }
      }
    }
  }
  auto out =
      detail::parallel_map(jobs, cfg.thread_budget, [](const std::tuple<Int, Int, Int>& job) {
        const auto [m, l, k] = job;
        FamilyRecord r = make_record(FamilyTag::Hyperbolic, k, WeightSystem(ones(m), l));
        if (BigInt(static_cast<unsigned long>(r.torsion.exponent)) != fermat_betti(m, l) ||
            r.moduli.complex_dim != hyperbolic_moduli(m, l)) {
          throw IntegrityError("hyperbolic record disagrees with its closed forms");
        }
        return r;
      });
  sort_records(out);
  return out;
}

std::vector<FamilyRecord> generate_mixed_canonical(const ScanConfig& cfg) {
  cfg.validate();
  auto out = detail::parallel_map(m_values(cfg), cfg.thread_budget, [](Int m) {
    std::vector<Int> weights = ones(m - 1);
    weights.push_back(m);
    return make_record(FamilyTag::MixedCanonical, 2 * m - 1,
                       WeightSystem(std::move(weights), 2 * m));
  });
  sort_records(out);
  return out;
}

std::vector<FamilyRecord> full_catalog(const ScanConfig& cfg) {
  std::vector<std::vector<FamilyRecord>> parts;
  parts.push_back(generate_theorem2_family(cfg));
  parts.push_back(scan_fermat_cy(cfg));
  parts.push_back(scan_hyperbolic(cfg));
  parts.push_back(generate_mixed_canonical(cfg));
  auto out = flatten(std::move(parts));
  sort_records(out);
  return out;
}

WeightSystem parse_weight_row(std::string_view row) {
  const std::size_t semi = row.find(';');
  if (semi == std::string_view::npos) {
    throw UsageError("expected 'w1,...,wm;d', missing ';'");
  }
  std::vector<Int> weights = parse_integer_list(row.substr(0, semi), "weight");
  const Int degree = parse_integer(row.substr(semi + 1), "degree");
  return {std::move(weights), degree};
}

namespace {

struct RowOutcome {
  std::vector<FamilyRecord> records;
  std::vector<std::string> messages;
};

RowOutcome ingest_row(const WeightSystem& given, Int k_min, Int k_max) {
  RowOutcome out;
  const WeightSystem base = given.canonical();
  if (!quasi_smooth_generic(base)) {
    out.messages.push_back(base.str() + " is not quasi-smooth; skipped");
    return out;
  }
  std::vector<Int> refused;
  for (Int k = k_min; k <= k_max; ++k) {
    if (!torsion_hypothesis(k, base)) {
      refused.push_back(k);
      continue;
    }
    const NormalizedCover normal = normalize_cover(k, base);
    FamilyRecord r = make_record(FamilyTag::Ingested, k, normal.base);
    if (normal.base != base) {
      r.notes.push_back("normalized from " + base.str());
    }
    out.records.push_back(std::move(r));
  }
  if (!refused.empty()) {
    std::string list;
    for (Int k : refused) {
      list += (list.empty() ? "" : ",") + std::to_string(k);
    }
    out.messages.push_back("k skipped, torsion hypothesis fails: " + list);
  }
  return out;
}

} // namespace

IngestResult ingest_weight_list(std::istream& source, Int k_min, Int k_max,
                                unsigned thread_budget) {
  if (k_min < 2 || k_min > k_max) {
    throw UsageError("k range must satisfy 2 <= A <= B");
  }
  if (!source) {
    throw IoError("unreadable weight list");
  }
  IngestResult result;
  std::vector<std::pair<std::size_t, WeightSystem>> rows;
  std::string line;
  for (std::size_t number = 1; std::getline(source, line); ++number) {
    std::string_view text = line;
    text = trim(text.substr(0, text.find('#')));
    if (text.empty()) {
      continue;
    }
    try {
      rows.emplace_back(number, parse_weight_row(text));
    } catch (const Error& e) {
      result.issues.push_back({number, e.what()});
    }
  }
  if (source.bad()) {
    throw IoError("read error in weight list");
  }

  struct Outcome {
    std::size_t line;
    RowOutcome row;
    std::optional<std::string> error;
  };
  auto outcomes = detail::parallel_map(
      rows, thread_budget, [k_min, k_max](const std::pair<std::size_t, WeightSystem>& row) {
        try {
          return Outcome{row.first, ingest_row(row.second, k_min, k_max), std::nullopt};
        } catch (const Error& e) {
          return Outcome{row.first, {}, std::string(e.what())};
        }
      });
  for (Outcome& o : outcomes) {
    for (std::string& message : o.row.messages) {
      result.issues.push_back({o.line, std::move(message)});
    }
    if (o.error) {
      result.issues.push_back({o.line, *o.error});
    }
    std::move(o.row.records.begin(), o.row.records.end(), std::back_inserter(result.records));
  }
  std::ranges::stable_sort(result.issues, {}, &IngestIssue::line);
  sort_records(result.records);
  return result;
}

} // namespace linkinv
