#include "linkinv/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "linkinv/error.hpp"
#include "linkinv/ke_cert.hpp"
#include "linkinv/links.hpp"
#include "linkinv/moduli.hpp"
#include "linkinv/text.hpp"
#include "linkinv/topology.hpp"

namespace linkinv::cli {

using Json = nlohmann::ordered_json;

unsigned default_thread_budget() {
  if (const char* env = std::getenv("LINKINV_THREADS"); env != nullptr && *env != '\0') {
    const Int n = parse_integer(env, "LINKINV_THREADS");
    if (n < 1) {
      throw UsageError("LINKINV_THREADS must be >= 1");
    }
    return static_cast<unsigned>(n);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

// Raw string values of every flag; typed validation happens afterwards so
// errors can name the offending token.
struct RawFlags {
  std::string weights, degree, k, exponents, k_range, format = "table", out, threads,
      weight_bound, k_bound, m, target, file;
  bool expand = false;
};

void add_common(CLI::App* sub, RawFlags& raw) {
  sub->add_option("--format", raw.format, "Output format: table, json or csv");
  sub->add_option("--out", raw.out, "Write data to FILE instead of stdout");
  sub->add_flag("--expand-torsion", raw.expand, "Print torsion orders in decimal");
  sub->add_option("--threads", raw.threads, "Worker threads (default: LINKINV_THREADS or all cores)");
}

void add_system(CLI::App* sub, RawFlags& raw) {
  sub->add_option("--weights", raw.weights, "Comma-separated weights w1,...,wm");
  sub->add_option("--degree", raw.degree, "Weighted degree d");
}

std::vector<Int> required_list(const std::string& raw, const char* flag) {
  if (raw.empty()) {
    throw UsageError(std::string("missing required flag ") + flag);
  }
  return parse_integer_list(raw, flag);
}

Int required_int(const std::string& raw, const char* flag) {
  if (raw.empty()) {
    throw UsageError(std::string("missing required flag ") + flag);
  }
  return parse_integer(raw, flag);
}

Int positive_int(const std::string& raw, const char* flag) {
  const Int v = parse_integer(raw, flag);
  if (v < 1) {
    throw UsageError(std::string(flag) + " must be >= 1, got '" + raw + "'");
  }
  return v;
}

void require_system(Invocation& inv, const RawFlags& raw) {
  inv.weights = required_list(raw.weights, "--weights");
  inv.degree = required_int(raw.degree, "--degree");
  (void)WeightSystem(*inv.weights, *inv.degree); // validates positivity and m >= 2
}

std::optional<ScanTarget> parse_target(const std::string& text) {
  static const std::map<std::string, ScanTarget> targets{
      {"euclidean", ScanTarget::Euclidean},
      {"theorem2", ScanTarget::Theorem2},
      {"fermat-cy", ScanTarget::FermatCy},
      {"hyperbolic", ScanTarget::Hyperbolic},
      {"mixed-canonical", ScanTarget::MixedCanonical},
      {"all", ScanTarget::All},
  };
  const auto it = targets.find(text);
  return it == targets.end() ? std::nullopt : std::optional(it->second);
}

} // namespace

Invocation parse_invocation(const std::vector<std::string>& args) {
  CLI::App app{"Invariants and Einstein-metric certificates for branched covers of "
               "weighted homogeneous links",
               "linkinv"};
  app.require_subcommand(1, 1);
  RawFlags raw;

  auto* invariants = app.add_subcommand("invariants", "Betti number, genus and case of a link");
  add_system(invariants, raw);
  add_common(invariants, raw);

  auto* cover = app.add_subcommand("cover", "k-fold branched cover: weights, torsion, certificate");
  cover->add_option("--k", raw.k, "Cover index k >= 2");
  add_system(cover, raw);
  add_common(cover, raw);

  auto* certify_cmd = app.add_subcommand(
      "certify", "Brieskorn-Pham sufficiency test (--exponents) or full certificate (--k)");
  certify_cmd->add_option("--exponents", raw.exponents, "Exponents a0,...,am");
  certify_cmd->add_option("--k", raw.k, "Cover index k");
  add_system(certify_cmd, raw);
  add_common(certify_cmd, raw);

  auto* moduli = app.add_subcommand("moduli", "Effective parameter count of a system");
  moduli->add_option("--k", raw.k, "Count on the k-fold cover instead of the system itself");
  add_system(moduli, raw);
  add_common(moduli, raw);

  auto* scan = app.add_subcommand("scan", "Regenerate a family catalog");
  scan->add_option("target", raw.target,
                   "euclidean | theorem2 | fermat-cy | hyperbolic | mixed-canonical | all")
      ->required();
  scan->add_option("--weight-bound", raw.weight_bound, "Largest weight in the Euclidean scan");
  scan->add_option("--k-bound", raw.k_bound, "Largest cover index k");
  scan->add_option("--m", raw.m, "Range of base variable counts, A..B");
  add_common(scan, raw);

  auto* ingest = app.add_subcommand("ingest", "Run the pipeline on a list of weight systems");
  ingest->add_option("file", raw.file, "One 'w1,...,wm;d' per line, '#' comments")->required();
  ingest->add_option("--k-range", raw.k_range, "Cover indices A..B")->required();
  add_common(ingest, raw);

  Invocation inv;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    inv.help_text = subs.empty() ? app.help() : subs.front()->help();
    return inv;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (invariants->parsed()) {
    inv.subcommand = Subcommand::Invariants;
    require_system(inv, raw);
  } else if (cover->parsed()) {
    inv.subcommand = Subcommand::Cover;
    inv.k = required_int(raw.k, "--k");
    if (*inv.k < 2) {
      throw UsageError("--k must be >= 2, got '" + raw.k + "'");
    }
    require_system(inv, raw);
  } else if (certify_cmd->parsed()) {
    inv.subcommand = Subcommand::Certify;
    if (!raw.exponents.empty()) {
      if (!raw.k.empty() || !raw.weights.empty() || !raw.degree.empty()) {
        throw UsageError("--exponents cannot be combined with --k/--weights/--degree");
      }
      inv.exponents = parse_integer_list(raw.exponents, "--exponents");
    } else {
      inv.k = required_int(raw.k, "--k");
      if (*inv.k < 2) {
        throw UsageError("--k must be >= 2, got '" + raw.k + "'");
      }
      require_system(inv, raw);
    }
  } else if (moduli->parsed()) {
    inv.subcommand = Subcommand::Moduli;
    require_system(inv, raw);
    if (!raw.k.empty()) {
      inv.k = parse_integer(raw.k, "--k");
      if (*inv.k < 2) {
        throw UsageError("--k must be >= 2, got '" + raw.k + "'");
      }
    }
  } else if (scan->parsed()) {
    inv.subcommand = Subcommand::Scan;
    inv.scan_target = parse_target(raw.target);
    if (!inv.scan_target) {
      throw UsageError("unknown scan target '" + raw.target + "'");
    }
  } else {
    inv.subcommand = Subcommand::Ingest;
    inv.input_path = raw.file;
    const auto range = parse_range(raw.k_range, "--k-range");
    if (range.first < 2) {
      throw UsageError("--k-range must start at 2 or above, got '" + raw.k_range + "'");
    }
    inv.k_range = range;
  }

  const auto format = parse_output_format(raw.format);
  if (!format) {
    throw UsageError("unknown --format '" + raw.format + "' (table, json or csv)");
  }
  inv.format = *format;
  if (!raw.out.empty()) {
    inv.output_path = raw.out;
  }
  inv.expand_torsion = raw.expand;
  inv.scan.thread_budget = raw.threads.empty()
                               ? default_thread_budget()
                               : static_cast<unsigned>(positive_int(raw.threads, "--threads"));
  if (!raw.weight_bound.empty()) {
    inv.scan.weight_bound = positive_int(raw.weight_bound, "--weight-bound");
  }
  if (!raw.k_bound.empty()) {
    inv.scan.k_bound = positive_int(raw.k_bound, "--k-bound");
  }
  if (!raw.m.empty()) {
    std::tie(inv.scan.m_min, inv.scan.m_max) = parse_range(raw.m, "--m");
  }
  inv.scan.validate();
  return inv;
}

namespace {

std::string json_scalar(const Json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

// Key/value report for single-system subcommands.
std::string render_report(const Json& report, OutputFormat format) {
  switch (format) {
  case OutputFormat::Json:
    return report.dump(2) + "\n";
  case OutputFormat::Csv: {
    std::string out = "key,value\n";
    for (const auto& [key, value] : report.items()) {
      std::string v = json_scalar(value);
      if (v.find_first_of(",\"") != std::string::npos) {
        std::string quoted = "\"";
        for (char ch : v) {
          quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        }
        v = quoted + "\"";
      }
      out += key + "," + v + "\n";
    }
    return out;
  }
  case OutputFormat::Table: {
    std::size_t width = 0;
    for (const auto& [key, value] : report.items()) {
      width = std::max(width, key.size());
    }
    std::string out;
    for (const auto& [key, value] : report.items()) {
      out += key + std::string(width - key.size() + 2, ' ') + json_scalar(value) + "\n";
    }
    return out;
  }
  }
  return {};
}

Json rational_json(const Rational& r) { return r.str(); }

Json big_json(const BigInt& b) {
  return b.fits_slong_p() ? Json(b.get_si()) : Json(b.get_str());
}

WeightSystem system_of(const Invocation& inv) { return {*inv.weights, *inv.degree}; }

std::string ratios_text(const WeightSystem& ws) {
  std::string out;
  for (const ReducedRatio& r : reduced_ratios(ws)) {
    out += (out.empty() ? "" : " ") + std::to_string(r.numerator) + "/" +
           std::to_string(r.denominator);
  }
  return out;
}

std::string invariants_report(const Invocation& inv, std::ostream& err) {
  const WeightSystem ws = system_of(inv);
  const CaseClass cls = classify_case(ws);
  Json report;
  report["system"] = ws.str();
  report["norm"] = ws.norm();
  report["case"] = to_string(cls);
  report["d_over_w"] = ratios_text(ws);
  report["monomials"] = big_json(count_monomials(ws.weights(), ws.degree()));
  const bool smooth = quasi_smooth_generic(ws);
  report["quasi_smooth"] = smooth;
  if (!smooth) {
    err << render_report(report, inv.format);
    throw IntegrityError(ws.str() +
                         " is not quasi-smooth; refusing to evaluate the Betti number");
  }
  const BigInt b = milnor_orlik_betti(ws);
  report["betti_index"] = static_cast<Int>(ws.size()) - 2;
  report["b"] = big_json(b);
  if (ws.size() == 3) {
    report["genus"] = big_json(genus(ws));
    report["genus_one_criterion"] = genus_one_criterion(ws);
  }
  if (cls == CaseClass::Euclidean) {
    report["euclidean_k_threshold"] = euclidean_k_threshold(ws);
  } else if (cls == CaseClass::Spherical) {
    report["spherical_never_klt"] = spherical_never_klt(ws);
  }
  return render_report(report, inv.format);
}

void add_certificate(Json& report, const KeCertificate& c) {
  report["fano"] = c.fano;
  report["necessary_klt"] = c.necessary_klt;
  report["klt_left"] = rational_json(c.klt_left);
  report["klt_right"] = rational_json(c.klt_right);
  report["bp_applicable"] = c.bp_applicable;
  report["bp_sufficient"] = c.bp_sufficient;
  report["gc_assumed"] = c.gc_assumed;
  report["left_value"] = rational_json(c.left_value);
  report["right_bound"] = rational_json(c.right_bound);
  report["limiting_witness"] = c.limiting_witness;
}

std::string join(std::span<const Int> xs) {
  std::string out;
  for (Int x : xs) {
    out += (out.empty() ? "" : ",") + std::to_string(x);
  }
  return out;
}

std::string cover_report(const Invocation& inv) {
  const WeightSystem base = system_of(inv);
  const Int k = *inv.k;
  const CoverData data = branched_cover(k, base);
  Json report;
  report["base"] = base.str();
  report["k"] = k;
  report["cover"] = data.cover.str();
  report["bp_exponents"] = data.bp_exponents ? join(*data.bp_exponents) : "none";
  report["needs_normalization"] = data.needs_normalization;
  report["torsion_hypothesis"] = torsion_hypothesis(k, base);
  // refuses with a diagnostic naming u_i when the hypothesis fails
  const NormalizedCover normal = normalize_cover(k, base);
  if (data.needs_normalization) {
    report["normalized_base"] = normal.base.str();
  }
  const TorsionOrder torsion = torsion_order(k, normal.base);
  report["link_dimension"] = 2 * static_cast<Int>(base.size()) - 1;
  report["torsion"] = std::to_string(torsion.base) + "^" + std::to_string(torsion.exponent);
  if (inv.expand_torsion) {
    report["torsion_decimal"] = torsion.decimal();
  }
  add_certificate(report, certify(k, normal.base));
  const ModuliCount mu = moduli_count(branched_cover(k, normal.base).cover);
  report["moduli_complex"] = big_json(mu.complex_dim);
  report["moduli_real"] = big_json(mu.real_dim);
  return render_report(report, inv.format);
}

std::string certify_report(const Invocation& inv) {
  Json report;
  if (inv.exponents) {
    const BpVerdict v = bp_sufficient_ke(*inv.exponents);
    report["exponents"] = join(*inv.exponents);
    std::string c_text;
    std::string b_text;
    for (std::size_t j = 0; j < v.data.gcds.size(); ++j) {
      c_text += (j ? "," : "") + v.data.cofactor_lcms[j].get_str();
      b_text += (j ? "," : "") + v.data.gcds[j].get_str();
    }
    report["C"] = c_text;
    report["b"] = b_text;
    report["sum"] = rational_json(v.data.reciprocal_sum);
    report["bound"] = rational_json(v.bound);
    report["limiting_witness"] = v.witness;
    report["fano"] = v.fano;
    report["verdict"] = v.sufficient;
    report["gc_assumed"] = true;
    return render_report(report, inv.format);
  }
  const WeightSystem base = system_of(inv);
  report["base"] = base.str();
  report["k"] = *inv.k;
  add_certificate(report, certify(*inv.k, base));
  return render_report(report, inv.format);
}

std::string moduli_report(const Invocation& inv) {
  WeightSystem ws = system_of(inv);
  Json report;
  if (inv.k) {
    report["base"] = ws.str();
    ws = branched_cover(*inv.k, ws).cover;
  }
  const ModuliCount mu = moduli_count(ws);
  report["system"] = ws.str();
  report["h0_degree"] = big_json(mu.h0_degree);
  report["h0_weights_sum"] = big_json(mu.h0_weights_sum);
  report["moduli_complex"] = big_json(mu.complex_dim);
  report["moduli_real"] = big_json(mu.real_dim);
  return render_report(report, inv.format);
}

std::string scan_output(const Invocation& inv) {
  CatalogMeta meta{ScanBounds::of(inv.scan), "scan"};
  std::vector<FamilyRecord> records;
  switch (*inv.scan_target) {
  case ScanTarget::Euclidean:
    meta.source = "scan euclidean";
    return render_classification(scan_euclidean_classification(inv.scan), meta, inv.format);
  case ScanTarget::Theorem2:
    meta.source = "scan theorem2";
    records = generate_theorem2_family(inv.scan);
    break;
  case ScanTarget::FermatCy:
    meta.source = "scan fermat-cy";
    records = scan_fermat_cy(inv.scan);
    break;
  case ScanTarget::Hyperbolic:
    meta.source = "scan hyperbolic";
    records = scan_hyperbolic(inv.scan);
    break;
  case ScanTarget::MixedCanonical:
    meta.source = "scan mixed-canonical";
    records = generate_mixed_canonical(inv.scan);
    break;
  case ScanTarget::All:
    meta.source = "scan all";
    records = full_catalog(inv.scan);
    break;
  }
  return render_catalog({meta, std::move(records)}, inv.format, {inv.expand_torsion});
}

std::string ingest_output(const Invocation& inv, std::ostream& err) {
  std::ifstream file(*inv.input_path);
  if (!file) {
    throw IoError("cannot read weight list '" + *inv.input_path + "'");
  }
  const IngestResult result =
      ingest_weight_list(file, inv.k_range->first, inv.k_range->second, inv.scan.thread_budget);
  for (const IngestIssue& issue : result.issues) {
    err << *inv.input_path << ":" << issue.line << ": " << issue.message << '\n';
  }
  CatalogMeta meta{std::nullopt, "ingest " + *inv.input_path + " k=" +
                                     std::to_string(inv.k_range->first) + ".." +
                                     std::to_string(inv.k_range->second)};
  return render_catalog({meta, result.records}, inv.format, {inv.expand_torsion});
}

} // namespace

void run(const Invocation& inv, std::ostream& out, std::ostream& err) {
  if (inv.help_text) {
    out << *inv.help_text;
    return;
  }
  std::string data;
  switch (inv.subcommand) {
  case Subcommand::Invariants:
    data = invariants_report(inv, err);
    break;
  case Subcommand::Cover:
    data = cover_report(inv);
    break;
  case Subcommand::Certify:
    data = certify_report(inv);
    break;
  case Subcommand::Moduli:
    data = moduli_report(inv);
    break;
  case Subcommand::Scan:
    data = scan_output(inv);
    break;
  case Subcommand::Ingest:
    data = ingest_output(inv, err);
    break;
  }
  if (inv.output_path) {
    std::ofstream file(*inv.output_path, std::ios::binary | std::ios::trunc);
    file << data;
    file.flush();
    if (!file) {
      throw IoError("cannot write output file '" + *inv.output_path + "'");
    }
  } else {
    out << data;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    run(parse_invocation(args), out, err);
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kUsage;
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << '\n';
    return kIntegrity;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIo;
  }
}

} // namespace linkinv::cli
