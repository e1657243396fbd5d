#include "linkinv/catalog.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "linkinv/error.hpp"

namespace linkinv {

using Json = nlohmann::ordered_json;

std::optional<OutputFormat> parse_output_format(std::string_view text) {
  if (text == "table") {
    return OutputFormat::Table;
  }
  if (text == "json") {
    return OutputFormat::Json;
  }
  if (text == "csv") {
    return OutputFormat::Csv;
  }
  return std::nullopt;
}

const std::vector<std::string>& catalog_assumptions() {
  static const std::vector<std::string> assumptions{
      "genericity condition (GC) on perturbations is assumed, not verified",
      "quasi-smoothness decided by the combinatorial subset criterion",
      "scans are exhaustive only up to the stated bounds",
      "klt test is necessary only; the Brieskorn-Pham test is sufficient only",
      "moduli counts use the literal h0(O(d)) - sum h0(O(w_i)) formula",
  };
  return assumptions;
}

namespace {

Json big_to_json(const BigInt& value) {
  if (value.fits_slong_p()) {
    return Json(value.get_si());
  }
  return Json(value.get_str());
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return BigInt(j.get<long>());
  }
  if (j.is_string()) {
    BigInt out;
    if (out.set_str(j.get<std::string>(), 10) != 0) {
      throw UsageError("malformed big integer '" + j.get<std::string>() + "'");
    }
    return out;
  }
  throw UsageError("expected an integer, got " + j.dump());
}

Json rational_to_json(const Rational& r) {
  return Json{{"num", big_to_json(r.num())}, {"den", big_to_json(r.den())}};
}

Rational rational_from_json(const Json& j) {
  const BigInt num = big_from_json(j.at("num"));
  const BigInt den = big_from_json(j.at("den"));
  Rational r(num, den);
  if (r.num() != num || r.den() != den) {
    throw UsageError("rational " + num.get_str() + "/" + den.get_str() + " not in lowest terms");
  }
  return r;
}

Json system_to_json(const WeightSystem& ws) {
  return Json{{"weights", std::vector<Int>(ws.weights().begin(), ws.weights().end())},
              {"degree", ws.degree()}};
}

WeightSystem system_from_json(const Json& j) {
  return {j.at("weights").get<std::vector<Int>>(), j.at("degree").get<Int>()};
}

template <class T>
Json optional_to_json(const std::optional<T>& value) {
  if (!value) {
    return Json(nullptr);
  }
  if constexpr (std::is_same_v<T, BigInt>) {
    return big_to_json(*value);
  } else {
    return Json(*value);
  }
}

Json meta_to_json(const CatalogMeta& meta) {
  Json j;
  j["schema_version"] = kCatalogSchemaVersion;
  j["tool"] = "linkinv";
  j["version"] = kToolVersion;
  j["source"] = meta.source;
  if (meta.bounds) {
    j["bounds"] = Json{{"weight_bound", meta.bounds->weight_bound},
                       {"k_bound", meta.bounds->k_bound},
                       {"m_min", meta.bounds->m_min},
                       {"m_max", meta.bounds->m_max}};
  } else {
    j["bounds"] = nullptr;
  }
  j["assumptions"] = catalog_assumptions();
  return j;
}

CatalogMeta meta_from_json(const Json& j) {
  if (j.at("schema_version").get<int>() != kCatalogSchemaVersion) {
    throw UsageError("unsupported catalog schema version " + j.at("schema_version").dump());
  }
  CatalogMeta meta;
  meta.source = j.at("source").get<std::string>();
  const Json& b = j.at("bounds");
  if (!b.is_null()) {
    meta.bounds = ScanBounds{b.at("weight_bound").get<Int>(), b.at("k_bound").get<Int>(),
                             b.at("m_min").get<Int>(), b.at("m_max").get<Int>()};
  }
  return meta;
}

Json record_to_json(const FamilyRecord& r, const RenderOptions& options) {
  Json j;
  j["family"] = to_string(r.family);
  j["m"] = r.m();
  j["k"] = r.k;
  j["d"] = r.base.degree();
  j["base"] = system_to_json(r.base);
  j["cover"] = system_to_json(r.cover);
  j["bp_exponents"] = optional_to_json(r.bp_exponents);
  j["link_dimension"] = r.link_dimension;
  Json torsion{{"base", r.torsion.base}, {"exponent", r.torsion.exponent}};
  if (options.expand_torsion) {
    torsion["decimal"] = r.torsion.decimal();
  }
  j["torsion"] = std::move(torsion);
  j["genus"] = optional_to_json(r.genus);
  j["moduli_complex"] = big_to_json(r.moduli.complex_dim);
  j["moduli_real"] = big_to_json(r.moduli.real_dim);
  j["h0_degree"] = big_to_json(r.moduli.h0_degree);
  j["h0_weights_sum"] = big_to_json(r.moduli.h0_weights_sum);
  const KeCertificate& c = r.certificate;
  j["certificate"] = Json{{"fano", c.fano},
                          {"necessary_klt", c.necessary_klt},
                          {"bp_applicable", c.bp_applicable},
                          {"bp_sufficient", c.bp_sufficient},
                          {"gc_assumed", c.gc_assumed},
                          {"left_value", rational_to_json(c.left_value)},
                          {"right_bound", rational_to_json(c.right_bound)},
                          {"limiting_witness", c.limiting_witness},
                          {"klt_left", rational_to_json(c.klt_left)},
                          {"klt_right", rational_to_json(c.klt_right)}};
  j["claimed_min_k"] = optional_to_json(r.claimed_min_k);
  j["literal_min_k"] = optional_to_json(r.literal_min_k);
  j["notes"] = r.notes;
  return j;
}

FamilyRecord record_from_json(const Json& j) {
  const auto family = parse_family_tag(j.at("family").get<std::string>());
  if (!family) {
    throw UsageError("unknown family tag " + j.at("family").dump());
  }
  const Json& c = j.at("certificate");
  KeCertificate cert{
      .fano = c.at("fano").get<bool>(),
      .necessary_klt = c.at("necessary_klt").get<bool>(),
      .bp_applicable = c.at("bp_applicable").get<bool>(),
      .bp_sufficient = c.at("bp_sufficient").get<bool>(),
      .gc_assumed = c.at("gc_assumed").get<bool>(),
      .left_value = rational_from_json(c.at("left_value")),
      .right_bound = rational_from_json(c.at("right_bound")),
      .limiting_witness = c.at("limiting_witness").get<std::string>(),
      .klt_left = rational_from_json(c.at("klt_left")),
      .klt_right = rational_from_json(c.at("klt_right")),
  };
  const auto optional_int = [&j](const char* key) -> std::optional<Int> {
    const Json& v = j.at(key);
    return v.is_null() ? std::nullopt : std::optional<Int>(v.get<Int>());
  };
  FamilyRecord r{
      .family = *family,
      .k = j.at("k").get<Int>(),
      .base = system_from_json(j.at("base")),
      .cover = system_from_json(j.at("cover")),
      .bp_exponents = j.at("bp_exponents").is_null()
                          ? std::nullopt
                          : std::optional(j.at("bp_exponents").get<std::vector<Int>>()),
      .link_dimension = j.at("link_dimension").get<Int>(),
      .torsion = {j.at("torsion").at("base").get<Int>(),
                  j.at("torsion").at("exponent").get<std::uint64_t>()},
      .genus = j.at("genus").is_null() ? std::nullopt
                                       : std::optional<BigInt>(big_from_json(j.at("genus"))),
      .moduli = {big_from_json(j.at("moduli_complex")), big_from_json(j.at("moduli_real")),
                 big_from_json(j.at("h0_degree")), big_from_json(j.at("h0_weights_sum"))},
      .certificate = std::move(cert),
      .claimed_min_k = optional_int("claimed_min_k"),
      .literal_min_k = optional_int("literal_min_k"),
      .notes = j.at("notes").get<std::vector<std::string>>(),
  };
  if (j.at("m").get<Int>() != r.m() || j.at("d").get<Int>() != r.base.degree()) {
    throw UsageError("record fields m/d disagree with its base system");
  }
  return r;
}

std::string join_ints(std::span<const Int> xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) {
      out += sep;
    }
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) {
    return value;
  }
  std::string out = "\"";
  for (char ch : value) {
    if (ch == '"') {
      out += '"';
    }
    out += ch;
  }
  return out + "\"";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string power_str(const TorsionOrder& t) {
  return std::to_string(t.base) + "^" + std::to_string(t.exponent);
}

std::string render_csv(const Catalog& catalog, const RenderOptions& options) {
  std::ostringstream out;
  out << "family,m,k,d,base_weights,cover_weights,bp_exponents,link_dimension,torsion_base,"
         "torsion_exponent,genus,moduli_complex,moduli_real,h0_degree,h0_weights_sum,fano,"
         "necessary_klt,bp_applicable,bp_sufficient,gc_assumed,left_value,right_bound,"
         "limiting_witness,klt_left,klt_right,claimed_min_k,literal_min_k,notes";
  if (options.expand_torsion) {
    out << ",torsion_decimal";
  }
  out << '\n';
  for (const FamilyRecord& r : catalog.records) {
    const KeCertificate& c = r.certificate;
    std::string notes;
    for (const std::string& n : r.notes) {
      notes += (notes.empty() ? "" : " | ") + n;
    }
    out << to_string(r.family) << ',' << r.m() << ',' << r.k << ',' << r.base.degree() << ','
        << join_ints(r.base.weights(), ' ') << ',' << join_ints(r.cover.weights(), ' ') << ','
        << (r.bp_exponents ? join_ints(*r.bp_exponents, ' ') : "") << ',' << r.link_dimension
        << ',' << r.torsion.base << ',' << r.torsion.exponent << ','
        << (r.genus ? r.genus->get_str() : "") << ',' << r.moduli.complex_dim.get_str() << ','
        << r.moduli.real_dim.get_str() << ',' << r.moduli.h0_degree.get_str() << ','
        << r.moduli.h0_weights_sum.get_str() << ',' << yes_no(c.fano) << ','
        << yes_no(c.necessary_klt) << ',' << yes_no(c.bp_applicable) << ','
        << yes_no(c.bp_sufficient) << ',' << yes_no(c.gc_assumed) << ',' << c.left_value << ','
        << c.right_bound << ',' << csv_field(c.limiting_witness) << ',' << c.klt_left << ','
        << c.klt_right << ',' << (r.claimed_min_k ? std::to_string(*r.claimed_min_k) : "") << ','
        << (r.literal_min_k ? std::to_string(*r.literal_min_k) : "") << ',' << csv_field(notes);
    if (options.expand_torsion) {
      out << ',' << r.torsion.decimal();
    }
    out << '\n';
  }
  return out.str();
}

std::string render_table(const Catalog& catalog, const RenderOptions& options) {
  std::ostringstream out;
  out << std::left << std::setw(16) << "family" << std::setw(4) << "m" << std::setw(5) << "k"
      << std::setw(24) << "base" << std::setw(5) << "dim" << std::setw(12) << "torsion"
      << std::setw(6) << "genus" << std::setw(8) << "mu" << std::setw(6) << "fano"
      << std::setw(6) << "klt" << std::setw(6) << "bp" << std::setw(12) << "sum"
      << std::setw(12) << "bound"
      << "min_k" << '\n';
  for (const FamilyRecord& r : catalog.records) {
    const KeCertificate& c = r.certificate;
    std::string min_k;
    if (r.claimed_min_k || r.literal_min_k) {
      min_k = (r.claimed_min_k ? std::to_string(*r.claimed_min_k) : "-") + "/" +
              (r.literal_min_k ? std::to_string(*r.literal_min_k) : "-");
    }
    out << std::setw(16) << to_string(r.family) << std::setw(4) << r.m() << std::setw(5) << r.k
        << std::setw(24) << r.base.str() << std::setw(5) << r.link_dimension << std::setw(12)
        << power_str(r.torsion) << std::setw(6) << (r.genus ? r.genus->get_str() : "-")
        << std::setw(8) << r.moduli.complex_dim.get_str() << std::setw(6) << yes_no(c.fano)
        << std::setw(6) << yes_no(c.necessary_klt) << std::setw(6)
        << (c.bp_applicable ? yes_no(c.bp_sufficient) : "n/a") << std::setw(12)
        << c.left_value.str() << std::setw(12) << c.right_bound.str() << min_k << '\n';
    if (options.expand_torsion) {
      out << "  |H| = " << r.torsion.decimal() << '\n';
    }
    for (const std::string& note : r.notes) {
      out << "  note: " << note << '\n';
    }
  }
  out << catalog.records.size() << " record(s)\n";
  return out.str();
}

} // namespace

std::string render_catalog(const Catalog& catalog, OutputFormat format,
                           const RenderOptions& options) {
  switch (format) {
  case OutputFormat::Json: {
    Json records = Json::array();
    for (const FamilyRecord& r : catalog.records) {
      records.push_back(record_to_json(r, options));
    }
    Json doc{{"meta", meta_to_json(catalog.meta)}, {"records", std::move(records)}};
    return doc.dump(2) + "\n";
  }
  case OutputFormat::Csv:
    return render_csv(catalog, options);
  case OutputFormat::Table:
    return render_table(catalog, options);
  }
  throw UsageError("unknown output format");
}

Catalog parse_catalog_json(std::string_view text) {
  try {
    const Json doc = Json::parse(text);
    Catalog out;
    out.meta = meta_from_json(doc.at("meta"));
    for (const Json& j : doc.at("records")) {
      out.records.push_back(record_from_json(j));
    }
    return out;
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed catalog: ") + e.what());
  }
}

std::string render_classification(const std::vector<ClassifiedSystem>& systems,
                                  const CatalogMeta& meta, OutputFormat format) {
  switch (format) {
  case OutputFormat::Json: {
    Json classes = Json::array();
    for (const ClassifiedSystem& s : systems) {
      Json entry = system_to_json(s.system);
      entry["monomials"] = big_to_json(s.monomials);
      classes.push_back(std::move(entry));
    }
    Json doc{{"meta", meta_to_json(meta)}, {"classes", std::move(classes)}};
    return doc.dump(2) + "\n";
  }
  case OutputFormat::Csv: {
    std::string out = "weights,degree,monomials\n";
    for (const ClassifiedSystem& s : systems) {
      out += join_ints(s.system.weights(), ' ') + "," + std::to_string(s.system.degree()) + "," +
             s.monomials.get_str() + "\n";
    }
    return out;
  }
  case OutputFormat::Table: {
    std::ostringstream out;
    out << std::left << std::setw(14) << "w" << std::setw(6) << "d" << "n" << '\n';
    for (const ClassifiedSystem& s : systems) {
      out << std::setw(14) << ("(" + join_ints(s.system.weights(), ',') + ")") << std::setw(6)
          << s.system.degree() << s.monomials.get_str() << '\n';
    }
    if (meta.bounds) {
      out << "exhaustive up to weight bound " << meta.bounds->weight_bound << '\n';
    }
    return out.str();
  }
  }
  throw UsageError("unknown output format");
}

} // namespace linkinv
