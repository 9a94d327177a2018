#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ellk/ci/complete_intersection.hpp"
#include "ellk/cli/parser.hpp"
#include "ellk/exponents/exponents.hpp"
#include "ellk/fourfold/classify.hpp"
#include "ellk/fourfold/models.hpp"
#include "ellk/sullivan/cohomology.hpp"
#include "ellk/sullivan/minimal_model.hpp"

namespace ellk::cli {

using nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  std::optional<std::uint64_t> seed;
};

/// Deterministic reordering of sample parameters; identity without --seed.
template <class T>
void apply_seed(std::vector<T>& v, const Globals& g) {
  if (!g.seed) return;
  std::mt19937_64 rng(*g.seed);
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(rng() % i)]);
}

inline SourceDocument load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_document(ss.str());
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// ---- JSON helpers ----

inline ordered_json to_json(const ExponentTuple& t) {
  std::vector<int> a(t.a.rbegin(), t.a.rend()), b(t.b.rbegin(), t.b.rend());
  return {{"a", a}, {"b", b}};
}

inline ordered_json to_json(const HodgeDiamond& d) {
  return {{"n", d.n}, {"h", d.h}, {"betti", d.betti().values}};
}

inline ordered_json to_json(const FilterResult& f) {
  ordered_json w = ordered_json::object();
  for (const auto& [k, v] : f.witness) w[k] = v;
  return {{"name", f.name}, {"passed", f.passed}, {"detail", f.detail}, {"witness", w}};
}

inline ordered_json to_json(const ClassificationRecord& r, bool reverified) {
  ordered_json j;
  j["label"] = r.label;
  j["status"] = to_string(r.status);
  if (auto t = std::get_if<ExponentTuple>(&r.source)) {
    j["source"] = to_json(*t);
    j["source"]["kind"] = "exponents";
  } else {
    const auto& s = std::get<DiamondShape>(r.source);
    j["source"] = {{"kind", "shape"}, {"b2", s.b2}, {"b4", s.b4}, {"h20", s.h20}, {"name", s.name}};
  }
  j["diamond"] = r.diamond ? to_json(*r.diamond) : ordered_json(nullptr);
  j["realization"] = r.realization;
  j["filters"] = ordered_json::array();
  for (const auto& f : r.filters) j["filters"].push_back(to_json(f));
  j["samples"] = ordered_json::array();
  for (const auto& [k, l] : r.samples) j["samples"].push_back({to_string(k), to_string(l)});
  j["notes"] = r.notes;
  j["reverified"] = reverified;
  return j;
}

inline std::vector<std::string> to_strings(const std::vector<BigInt>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

inline std::string join(const std::vector<std::string>& v, const std::string& sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

template <class T>
std::string join_numbers(const std::vector<T>& v, const std::string& sep = ",") {
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(std::to_string(x));
  return join(s, sep);
}

inline std::string level_string(int level) { return level == kLevelNegInfinity ? "-inf" : std::to_string(level); }

// ---- subcommands ----

inline int cmd_exponents(int m, bool equal_ranks, const Globals& g, std::ostream& out) {
  if (m < 2 || m % 2) throw UsageError("--dim must be an even integer >= 2");
  const auto tuples = enumerate(m, equal_ranks);
  if (g.json) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : tuples) {
      auto j = to_json(t);
      j["m"] = formal_dimension(t);
      if (t.q() == t.r()) {
        j["total"] = total_dimension(t);
        j["betti"] = hilbert_series(t).values;
      } else {
        j["total"] = nullptr;
        j["betti"] = nullptr;
      }
      arr.push_back(j);
    }
    out << ordered_json{{"dim", m}, {"equal_ranks", equal_ranks}, {"tuples", arr}}.dump(2) << "\n";
    return kOk;
  }
  for (const auto& t : tuples)
    out << t.to_string() << " m=" << formal_dimension(t)
        << " total=" << (t.q() == t.r() ? std::to_string(total_dimension(t)) : "-") << "\n";
  return kOk;
}

inline std::string indent(const std::string& block, const std::string& pad) {
  std::istringstream is(block);
  std::string line, out;
  while (std::getline(is, line)) out += pad + line + "\n";
  return out;
}

inline int cmd_classify4(const Globals& g, std::ostream& out) {
  auto samples = default_samples_i();
  apply_seed(samples, g);
  const auto records = classify(samples);
  std::vector<bool> ok;
  for (const auto& r : records) ok.push_back(reverify(r));
  const bool all_ok = std::all_of(ok.begin(), ok.end(), [](bool b) { return b; });
  std::size_t admitted = 0;
  std::vector<std::string> unrealized;
  for (const auto& r : records) {
    if (r.status != RecordStatus::Excluded) ++admitted;
    if (r.status == RecordStatus::AdmittedUnrealized) unrealized.push_back(r.label);
  }

  if (g.json) {
    ordered_json diamonds = ordered_json::array(), exclusions = ordered_json::array();
    for (std::size_t i = 0; i < records.size(); ++i)
      (records[i].status == RecordStatus::Excluded ? exclusions : diamonds).push_back(to_json(records[i], ok[i]));
    ordered_json j{{"diamonds", diamonds},
                   {"exclusions", exclusions},
                   {"summary",
                    {{"admitted", admitted},
                     {"excluded", records.size() - admitted},
                     {"unrealized", unrealized},
                     {"reverified", all_ok}}}};
    out << j.dump(2) << "\n";
    return all_ok ? kOk : kCheckFailed;
  }

  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.status == RecordStatus::Excluded) {
      const auto* f = r.failing_filter();
      out << "excluded " << r.label << ": " << (f ? f->name + " (" + f->detail + ")" : "no failing filter") << "\n";
      if (r.diamond) out << indent(r.diamond->render(true), "    ");
      for (const auto& n : r.notes) out << "  note: " << n << "\n";
    } else {
      out << "(" << r.label << ") " << to_string(r.status) << ", " << r.source_string()
          << ", realization: " << r.realization << "\n";
      out << indent(r.diamond->render(true), "    ");
      for (const auto& f : r.filters) out << "  " << f.name << ": " << (f.passed ? "pass" : "fail") << " (" << f.detail << ")\n";
    }
    out << "  witness " << (ok[i] ? "re-verified" : "FAILED to re-verify") << "\n\n";
  }
  out << admitted << " diamonds admitted (unrealized: " << join(unrealized) << "), " << records.size() - admitted
      << " exclusions, " << (all_ok ? "all witnesses re-verified" : "re-verification FAILED") << "\n";
  return all_ok ? kOk : kCheckFailed;
}

/// Σ(odd degrees) - Σ(even degrees - 1), the top degree of an elliptic space.
inline int formal_dimension_of(const SullivanAlgebra& alg) {
  int m = 0;
  for (const auto& gdesc : alg.generators()->list()) m += gdesc.is_odd() ? gdesc.degree : -(gdesc.degree - 1);
  return m;
}

/// Finite-dimensionality of the associated pure algebra, i.e. ellipticity.
inline bool pure_finite(const SullivanAlgebra& alg) {
  SourceDocument doc{associated_pure(alg), {}, std::nullopt};
  return is_finite_quotient(doc.presentation().basis());
}

inline int cmd_cohomology(const std::string& path, std::optional<int> up_to, const Globals& g, std::ostream& out) {
  const auto doc = load(path);
  if (up_to && *up_to < 0) throw UsageError("--up-to must be non-negative");
  // With `rel` lines the file describes a ring; its cohomology is that of the minimal model.
  std::optional<SullivanAlgebra> model;
  int n = 0;
  bool elliptic = false;
  if (doc.has_relations()) {
    const auto pres = doc.presentation();
    const auto gb = pres.basis();
    if (gb.is_unit_ideal() || !is_finite_quotient(gb))
      throw UsageError(path + ": the relations do not define a finite-dimensional ring");
    const auto hv = hilbert_values(gb, *socle_degree_bound(gb));
    int top = 0;
    for (std::size_t k = 0; k < hv.size(); ++k)
      if (hv[k]) top = static_cast<int>(k);
    n = up_to.value_or(top);
    model = minimal_model_from_ring(pres, n);
    elliptic = pure_finite(*model);
  } else {
    model = doc.algebra;
    elliptic = pure_finite(doc.algebra);
    n = up_to.value_or(elliptic ? std::max(formal_dimension_of(doc.algebra), 0) : 16);
  }
  if (n > model->truncation_bound())
    throw UsageError("--up-to exceeds the truncation bound " + std::to_string(model->truncation_bound()));
  const auto b = cohomology(*model, n);
  if (g.json) {
    ordered_json j{{"up_to", n}, {"elliptic", elliptic}, {"betti", b.values}};
    if (doc.has_relations()) j["minimal_model"] = print_cdga(*model);
    out << j.dump(2) << "\n";
    return kOk;
  }
  if (doc.has_relations()) out << "minimal model through degree " << n << ":\n" << indent(print_cdga(*model), "  ");
  out << "elliptic: " << (elliptic ? "yes" : "no") << "\n";
  out << "betti (degrees 0.." << n << "): " << b.to_string() << "\n";
  for (int k = 0; k <= n; ++k)
    if (b[static_cast<std::size_t>(k)]) out << "  H^" << k << " = " << b[static_cast<std::size_t>(k)] << "\n";
  return kOk;
}

inline int cmd_pure(const std::string& path, const Globals& g, std::ostream& out) {
  const auto doc = load(path);
  const auto p = associated_pure(doc.algebra);
  const bool elliptic = pure_finite(p);
  if (g.json) {
    out << ordered_json{{"model", print_cdga(p)}, {"pure_input", doc.algebra.is_pure()}, {"elliptic", elliptic}}.dump(2)
        << "\n";
    return kOk;
  }
  out << print_cdga(p) << "# elliptic: " << (elliptic ? "yes" : "no") << "\n";
  return kOk;
}

inline int cmd_groebner(const std::string& path, const Globals& g, std::ostream& out) {
  const auto doc = load(path);
  RingPresentation pres = [&] {
    try {
      return doc.presentation();
    } catch (const std::invalid_argument& e) {
      throw UsageError(path + ": " + e.what());
    }
  }();
  const auto gb = pres.basis();
  const bool finite = is_finite_quotient(gb);
  constexpr int kInfinitePreview = 16;
  std::vector<std::size_t> hf = hilbert_values(gb, finite ? *socle_degree_bound(gb) : kInfinitePreview);
  if (finite)
    while (hf.size() > 1 && hf.back() == 0) hf.pop_back();
  std::vector<std::string> basis;
  for (const auto& p : gb.generators()) basis.push_back(p.to_string());
  if (g.json) {
    ordered_json j{{"basis", basis}, {"finite", finite}, {"hilbert", hf}};
    j["dimension"] = finite ? ordered_json(*quotient_dimension(gb)) : ordered_json(nullptr);
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "basis:\n";
  for (const auto& s : basis) out << "  " << s << "\n";
  out << "finite: " << (finite ? "yes" : "no") << "\n";
  out << "hilbert: " << join_numbers(hf) << (finite ? "" : ",...") << "\n";
  if (finite) out << "dimension: " << *quotient_dimension(gb) << "\n";
  return kOk;
}

inline bool expected_candidate(const CIConfig& c) { return c.is_projective_space() || c.is_quadric(); }

inline int cmd_ci_scan(int max_dim, int max_degree, unsigned jobs, const Globals& g, std::ostream& out) {
  if (max_dim < 3) throw UsageError("--max-dim must be at least 3");
  if (max_degree < 0) throw UsageError("--max-degree must be non-negative");
  const auto entries = scan_report(max_dim, max_degree, jobs);
  bool ok = true;
  std::vector<std::string> candidates;
  for (const auto& e : entries)
    if (e.verdict.candidate) {
      candidates.push_back(e.config.to_string());
      ok = ok && expected_candidate(e.config);
    }
  if (g.json) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : entries)
      arr.push_back({{"n", e.config.n},
                     {"degrees", e.config.degrees},
                     {"config", e.config.to_string()},
                     {"middle_row", to_strings(e.middle_row)},
                     {"level", e.level == kLevelNegInfinity ? ordered_json(nullptr) : ordered_json(e.level)},
                     {"candidate", e.verdict.candidate},
                     {"reason", e.verdict.reason}});
    out << ordered_json{{"entries", arr}, {"candidates", candidates}, {"only_projective_and_quadrics", ok}}.dump(2)
        << "\n";
    return ok ? kOk : kCheckFailed;
  }
  for (const auto& e : entries)
    out << e.config.to_string() << "  row=" << join(to_strings(e.middle_row)) << "  level=" << level_string(e.level)
        << "  " << (e.verdict.candidate ? "candidate" : "rejected") << "  " << e.verdict.reason << "\n";
  out << candidates.size() << " candidates of " << entries.size() << ": "
      << (ok ? "projective spaces and quadrics only" : "UNEXPECTED candidate") << "\n";
  return ok ? kOk : kCheckFailed;
}

/// "0;1;-5/2" or "2,0;0,0": samples separated by ';', coordinates by ','.
inline std::vector<std::vector<Rational>> parse_params(const std::string& s, std::size_t arity) {
  std::vector<std::vector<Rational>> out;
  std::stringstream ss(s);
  std::string sample;
  while (std::getline(ss, sample, ';')) {
    std::vector<Rational> v;
    std::stringstream cs(sample);
    std::string c;
    while (std::getline(cs, c, ',')) {
      c.erase(std::remove_if(c.begin(), c.end(), [](unsigned char ch) { return std::isspace(ch); }), c.end());
      try {
        v.push_back(parse_rational(c));
      } catch (const std::exception&) {
        throw UsageError("bad rational '" + c + "' in --params");
      }
    }
    if (v.size() != arity)
      throw UsageError("each --params sample needs " + std::to_string(arity) + " value(s), got '" + sample + "'");
    out.push_back(std::move(v));
  }
  if (out.empty()) throw UsageError("--params is empty");
  return out;
}

inline int cmd_check_model(const std::string& which, const std::optional<std::string>& params, const Globals& g,
                           std::ostream& out) {
  const std::size_t arity = which == "c" ? 1 : 2;
  std::vector<std::vector<Rational>> samples;
  if (params) {
    samples = parse_params(*params, arity);
  } else if (which == "c") {
    for (const auto& b : default_samples_c()) samples.push_back({b});
  } else {
    for (const auto& [x, y] : which == "d" ? default_samples_d() : default_samples_i()) samples.push_back({x, y});
  }
  apply_seed(samples, g);

  std::vector<ModelCheck> results;
  for (const auto& s : samples) {
    if (which == "c") {
      results.push_back(check_model_c(s[0]));
    } else if (which == "d") {
      if (s[1] == s[0] * s[0] - 1)
        throw UsageError("model d excludes beta = alpha^2 - 1 (got " + format_params(s) + ")");
      results.push_back(check_model_d(s[0], s[1]));
    } else {
      results.push_back(check_shape_i(s[0], s[1]));
    }
  }
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
  const char* names = which == "c" ? "beta" : which == "d" ? "alpha,beta" : "k,l";

  if (g.json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) {
      std::vector<std::string> ps;
      for (const auto& p : r.params) ps.push_back(to_string(p));
      ordered_json j{{"params", ps}, {"elliptic", r.elliptic}, {"degrees", r.degrees}};
      if (which != "i") {
        j["betti"] = r.betti.values;
        j["total"] = r.total;
      }
      if (r.maximal_power) j["maximal_power"] = *r.maximal_power;
      if (r.hr_valid) j["hr_valid"] = *r.hr_valid;
      if (r.free_variables) j["free_variables"] = *r.free_variables;
      j["failures"] = r.failures;
      j["passed"] = r.passed();
      arr.push_back(j);
    }
    out << ordered_json{{"model", which}, {"parameters", names}, {"samples", arr}, {"passed", ok}}.dump(2) << "\n";
    return ok ? kOk : kCheckFailed;
  }
  for (const auto& r : results) {
    out << which << " " << names << "=" << format_params(r.params) << ": "
        << (r.elliptic ? "elliptic" : "non-regular") << " degrees=" << join_numbers(r.degrees);
    if (which != "i") out << " betti=" << join_numbers(r.betti.even_part()) << " total=" << r.total;
    if (r.maximal_power) out << " (w,x)^5-in-ideal=" << (*r.maximal_power ? "yes" : "no");
    if (r.hr_valid) out << " hodge-riemann=" << (*r.hr_valid ? "yes" : "no");
    if (r.free_variables) out << " no-pure-power-of-w-x=" << (*r.free_variables ? "yes" : "no");
    out << "  " << (r.passed() ? "PASS" : "FAIL");
    for (const auto& f : r.failures) out << "; " << f;
    out << "\n";
  }
  return ok ? kOk : kCheckFailed;
}

/// Entry point; `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for elliptic Kahler spaces", "ellk"};
  app.require_subcommand(1);
  Globals g;
  std::uint64_t seed = 0;
  app.add_flag("--json", g.json, "Structured JSON output");
  auto* seed_opt = app.add_option("--seed", seed, "Reorder sample parameters deterministically");

  auto* exp = app.add_subcommand("exponents", "Enumerate exponent tuples of formal dimension m");
  int dim = 0;
  bool equal = false;
  exp->add_option("--dim", dim, "Formal dimension m (even)")->required();
  exp->add_flag("--equal-ranks", equal, "Keep only tuples with q = r");

  auto* cls = app.add_subcommand("classify4", "Classify Hodge diamonds of elliptic Kahler fourfolds");

  auto* coh = app.add_subcommand("cohomology", "Betti numbers of a model file");
  std::string file;
  std::optional<int> up_to;
  coh->add_option("file", file, "Model file")->required();
  coh->add_option("--up-to", up_to, "Highest degree");

  auto* pure = app.add_subcommand("pure", "Print the associated pure model");
  pure->add_option("file", file, "Model file")->required();

  auto* grb = app.add_subcommand("groebner", "Groebner basis, finiteness and Hilbert function of a presentation");
  grb->add_option("file", file, "Model or ideal file")->required();

  auto* ci = app.add_subcommand("ci-scan", "Scan complete intersections for elliptic candidates");
  int max_dim = 0, max_degree = 0;
  unsigned jobs = 1;
  ci->add_option("--max-dim", max_dim, "Largest complex dimension")->required();
  ci->add_option("--max-degree", max_degree, "Largest total degree")->required();
  ci->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  auto* chk = app.add_subcommand("check-model", "Check the explicit fourfold models c, d or shape (i)");
  std::string which;
  std::optional<std::string> params;
  chk->add_option("model", which, "c, d or i")->required()->check(CLI::IsMember({"c", "d", "i"}));
  chk->add_option("--params", params, "Samples, e.g. \"0;1;-5/2\" or \"2,0;0,0\"");

  for (auto* sub : {exp, cls, coh, pure, grb, ci, chk}) sub->fallthrough();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  if (*seed_opt) g.seed = seed;

  try {
    if (*exp) return cmd_exponents(dim, equal, g, out);
    if (*cls) return cmd_classify4(g, out);
    if (*coh) return cmd_cohomology(file, up_to, g, out);
    if (*pure) return cmd_pure(file, g, out);
    if (*grb) return cmd_groebner(file, g, out);
    if (*ci) return cmd_ci_scan(max_dim, max_degree, jobs, g, out);
    if (*chk) return cmd_check_model(which, params, g, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace ellk::cli
