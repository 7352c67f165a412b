// Command-line front end: verification suites, table emission, and benchmark
// timing for the quartic-coefficient kernel.
//
// Exit codes: 0 = all checks pass; 1 = at least one identity failed;
// 2 = usage or environment error (unknown names, unreadable golden files).
// JSON goes to stdout; logs go to stderr.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cliffverify/catalog.hpp"
#include "cliffverify/clifford_system.hpp"
#include "cliffverify/golden.hpp"
#include "cliffverify/lie_basis.hpp"
#include "cliffverify/serialize.hpp"
#include "cliffverify/sha256.hpp"
#include "cliffverify/version.hpp"

namespace cv = cliffverify;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

const cv::Catalog& the_catalog() {
  static const cv::Catalog cat = cv::make_catalog();
  return cat;
}

std::filesystem::path resolve_golden_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("CLIFFVERIFY_GOLDEN_DIR"); env && *env) return env;
  return "golden";
}

// Collapses a multi-item report into one identity: the witness names the
// first failing item, or counts the checks on success.
cv::IdentityReport aggregate(const cv::CheckReport& r, double millis) {
  cv::IdentityReport out;
  out.name = r.subject();
  out.pass = r.all_pass();
  out.millis = millis;
  if (out.pass) {
    out.witness = std::to_string(r.items().size()) + " checks";
  } else {
    std::size_t fails = 0;
    const cv::CheckItem* first = nullptr;
    for (const auto& it : r.items())
      if (!it.pass) {
        if (!first) first = &it;
        ++fails;
      }
    out.witness = first->name + ": " + first->detail;
    if (fails > 1) out.witness += " (+" + std::to_string(fails - 1) + " more failing)";
  }
  return out;
}

template <class Fn>
cv::IdentityReport timed_report(Fn&& fn) {
  const auto t0 = Clock::now();
  const cv::CheckReport r = fn();
  return aggregate(r, ms_since(t0));
}

cv::IdentityReport summary_of(const std::string& name,
                              const std::vector<cv::IdentityReport>& children) {
  cv::IdentityReport out;
  out.name = name;
  out.pass = cv::all_pass(children);
  std::size_t fails = 0;
  std::string first;
  for (const auto& c : children) {
    out.millis += c.millis;
    if (!c.pass) {
      if (first.empty()) first = c.name;
      ++fails;
    }
  }
  out.witness = out.pass ? std::to_string(children.size()) + " identities"
               : first + (fails > 1 ? " (+" + std::to_string(fails - 1) + " more failing)" : "");
  return out;
}

// Appends a family as one summary identity plus its prefixed children.
void append_family(std::vector<cv::IdentityReport>& out, const std::string& summary_name,
                   const std::string& child_prefix, std::vector<cv::IdentityReport> children) {
  out.push_back(summary_of(summary_name, children));
  for (auto& c : children) {
    c.name = child_prefix + "/" + c.name;
    out.push_back(std::move(c));
  }
}

// ---------------------------------------------------------------------------
// Suites.
// ---------------------------------------------------------------------------

std::vector<cv::IdentityReport> suite_tables(const std::filesystem::path& dir) {
  std::vector<cv::IdentityReport> out;
  out.push_back(timed_report([&] { return cv::verify_golden_tables(the_catalog(), dir); }));
  return out;
}

std::vector<cv::IdentityReport> suite_clifford(const std::string& system) {
  std::vector<cv::IdentityReport> out;
  const bool all = system.empty();
  if (all || system == "spin9") {
    out.push_back(timed_report([] { return cv::verify_clifford_relations(cv::build_spin9_system()); }));
    out.push_back(timed_report([] { return cv::orthogonality_scan(cv::build_spin9_system()); }));
  }
  if (all || system == "c9") {
    out.push_back(timed_report([] { return cv::verify_clifford_relations(cv::build_C9_system()); }));
    out.push_back(timed_report([] { return cv::orthogonality_scan(cv::build_C9_system()); }));
    out.push_back(timed_report([] { return cv::parity_classification_scan(cv::build_C9_system(), 6); }));
    out.push_back(timed_report([] {
      return cv::complex_linearity_scan(cv::build_C9_system(), cv::standard_complex_structure(),
                                        "standard");
    }));
    out.push_back(timed_report([] {
      return cv::complex_linearity_scan(cv::build_C9_system(), cv::quaternionic_complex_structure(),
                                        "quaternionic");
    }));
  }
  if (all || system == "pauli") {
    out.push_back(timed_report([] { return cv::verify_clifford_relations(cv::build_pauli_system()); }));
    out.push_back(timed_report([] { return cv::orthogonality_scan(cv::build_pauli_system()); }));
  }
  if (all) {
    out.push_back(timed_report([] { return cv::unitary_obstruction_check(); }));
    out.push_back(timed_report([] { return cv::delta_dimension_check(); }));
  }
  return out;
}

// Runs the commutation split against the scalar complex structure and checks
// the expected commuting/anticommuting counts.
cv::IdentityReport commutation_expectation(const std::string& name, const std::string& subject,
                                           const std::vector<cv::ExactMatrix>& mats,
                                           const std::string& want_comm,
                                           const std::string& want_anti) {
  const auto t0 = Clock::now();
  const cv::CheckReport r =
      cv::structure_commutation_split(subject, mats, cv::standard_complex_structure());
  std::string comm, anti;
  for (const auto& it : r.items()) {
    if (it.name == "commuting-count") comm = it.detail;
    if (it.name == "anticommuting-count") anti = it.detail;
  }
  cv::IdentityReport out;
  out.name = name;
  out.millis = ms_since(t0);
  out.pass = r.all_pass() && comm == want_comm && anti == want_anti;
  out.witness = comm + " commuting, " + anti + " anticommuting (expected " + want_comm + "/" +
                want_anti + ")";
  return out;
}

std::vector<cv::IdentityReport> suite_lie(const std::string& check) {
  std::vector<cv::IdentityReport> out;
  out.push_back(timed_report([] { return cv::span_dimension_check(); }));
  for (const cv::LieBasis& b : {cv::build_JC(), cv::build_JD(), cv::build_P_basis()})
    out.push_back(timed_report([&] { return cv::bracket_closure_check(b); }));
  out.push_back(timed_report([] { return cv::iso_check(); }));
  out.push_back(timed_report([] { return cv::so16_decomposition_check(); }));
  {
    std::vector<cv::ExactMatrix> mats;
    for (const auto& e : cv::build_JD().elements) mats.push_back(cv::realify(e.matrix));
    out.push_back(commutation_expectation("complex-linearity-of-jd", "jd-realified", mats,
                                          "45", "0"));
  }
  out.push_back(commutation_expectation("unitary-split-of-p-basis", "p-basis",
                                        cv::build_P_basis().matrices(), "29", "16"));
  if (!check.empty()) {
    const std::string needle = check == "closure" ? "bracket-closure"
                             : check == "iso"     ? "lie-iso"
                                                  : "so16";
    std::vector<cv::IdentityReport> filtered;
    for (auto& r : out)
      if (r.name.find(needle) != std::string::npos) filtered.push_back(std::move(r));
    return filtered;
  }
  return out;
}

cv::IdentityReport omega_shape_identity() {
  const auto t0 = Clock::now();
  const cv::Catalog& cat = the_catalog();
  const cv::ComplexView v = cv::to_complex_view(cat.omega);
  const cv::GaussianRational half_i(cv::Rational(0), cv::Rational(1, 2));
  bool ok = cat.omega.term_count() == 16 && v.term_count() == 16 && v.is_pure(1, 1);
  for (std::uint16_t a = 0; a < 16 && ok; ++a) {
    const auto bit = static_cast<std::uint16_t>(1u << a);
    ok = v.coeff(bit, bit) == half_i;
  }
  cv::IdentityReport out;
  out.name = "omega-shape";
  out.pass = ok;
  out.witness = ok ? "16 diagonal (1,1) terms, each with coefficient i/2"
                   : "unexpected term structure";
  out.millis = ms_since(t0);
  return out;
}

cv::IdentityReport family_shape_identity() {
  const auto t0 = Clock::now();
  const cv::Catalog& cat = the_catalog();
  std::size_t nonzero16 = 0, nonzero32 = 0;
  bool degrees_ok = true;
  for (std::size_t a = 0; a < 9; ++a)
    for (std::size_t b = a + 1; b < 9; ++b) {
      const cv::SparseForm& f = cat.psi16.at(a, b);
      if (!f.is_zero()) ++nonzero16;
      degrees_ok = degrees_ok && f.degree() == 2;
    }
  for (std::size_t a = 0; a < 10; ++a)
    for (std::size_t b = a + 1; b < 10; ++b) {
      const cv::SparseForm& f = cat.psi32.at(a, b);
      if (!f.is_zero()) ++nonzero32;
      degrees_ok = degrees_ok && f.degree() == 2;
    }
  cv::IdentityReport out;
  out.name = "family-shapes";
  out.pass = nonzero16 == 36 && nonzero32 == 45 && degrees_ok;
  out.witness = std::to_string(nonzero16) + " and " + std::to_string(nonzero32) +
                " nonzero upper entries, all of degree 2";
  out.millis = ms_since(t0);
  return out;
}

std::vector<cv::IdentityReport> suite_forms(const std::filesystem::path& dir, unsigned workers) {
  std::vector<cv::IdentityReport> out;
  out.push_back(omega_shape_identity());
  out.push_back(family_shape_identity());
  out.push_back(timed_report([&] { return cv::verify_golden_invariants(the_catalog(), dir, workers); }));
  return out;
}

std::vector<cv::IdentityReport> suite_theorems(unsigned workers) {
  const cv::Catalog& cat = the_catalog();
  std::vector<cv::IdentityReport> out;
  append_family(out, "theorem-tau", "tau", cv::verify_theorem_tau(cat));
  cv::PhiSpin9Result nine = cv::verify_phi_spin9(cat, workers);
  append_family(out, "phi-spin9", "phi9", std::move(nine.reports));
  cv::PhiSpin10Result ten = cv::verify_phi_spin10(cat, workers);
  append_family(out, "phi-spin10", "phi10", ten.reports);
  append_family(out, "restriction-model", "restrict",
                cv::verify_restriction_identity(cat, ten.form, workers));
  return out;
}

// ---------------------------------------------------------------------------
// Output rendering.
// ---------------------------------------------------------------------------

std::string millis_text(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", value);
  return buf;
}

int render_verification(const std::string& suite, const std::vector<cv::IdentityReport>& ids,
                        double total_millis, const std::string& format) {
  const bool pass = cv::all_pass(ids);
  if (format == "text") {
    std::cout << "suite " << suite << "  (version " << cv::kVersion << ", convention "
              << cv::convention_fingerprint() << ")\n";
    for (const auto& r : ids) {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "  (" << millis_text(r.millis)
                << " ms)";
      if (!r.witness.empty()) std::cout << "  -- " << r.witness;
      std::cout << "\n";
    }
    std::size_t failed = 0;
    for (const auto& r : ids)
      if (!r.pass) ++failed;
    if (pass)
      std::cout << "PASS: " << ids.size() << " identities in " << millis_text(total_millis)
                << " ms\n";
    else
      std::cout << "FAIL: " << failed << " of " << ids.size() << " identities failed\n";
  } else {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& r : ids)
      items.push_back({{"name", r.name}, {"pass", r.pass}, {"witness", r.witness},
                       {"millis", r.millis}});
    const nlohmann::json doc = {{"suite", suite},       {"identities", items},
                                {"millis", total_millis}, {"pass", pass},
                                {"version", cv::kVersion}, {"convention", cv::convention_fingerprint()}};
    std::cout << doc.dump() << "\n";
  }
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Subcommand drivers.
// ---------------------------------------------------------------------------

int run_verify(const std::string& suite, const std::string& only, const std::string& system,
               const std::string& check, unsigned workers, const std::filesystem::path& dir,
               const std::string& format) {
  const auto t0 = Clock::now();
  std::vector<cv::IdentityReport> ids;
  const auto extend = [&ids](std::vector<cv::IdentityReport> v) {
    for (auto& r : v) ids.push_back(std::move(r));
  };
  if (suite == "tables" || suite == "all") extend(suite_tables(dir));
  if (suite == "clifford" || suite == "all") extend(suite_clifford(system));
  if (suite == "lie" || suite == "all") extend(suite_lie(check));
  if (suite == "forms" || suite == "all") extend(suite_forms(dir, workers));
  if (suite == "theorems" || suite == "all") extend(suite_theorems(workers));
  if (!only.empty()) {
    std::vector<cv::IdentityReport> kept;
    for (auto& r : ids)
      if (r.name.find(only) != std::string::npos) kept.push_back(std::move(r));
    if (kept.empty()) {
      std::cerr << "cliffverify: --only '" << only << "' matches no identity in suite '" << suite
                << "'\n";
      return 2;
    }
    ids = std::move(kept);
  }
  return render_verification(suite, ids, ms_since(t0), format);
}

int run_emit(const std::string& target, const std::string& name, unsigned workers,
             const std::filesystem::path& dir) {
  if (target == "mul-table") {
    std::cout << cv::mul_table_json() << "\n";
    return 0;
  }
  if (target == "system") {
    if (name == "spin9") {
      std::cout << cv::golden_detail::spin9_generators(the_catalog());
    } else if (name == "c9") {
      std::cout << cv::golden_detail::spin10_generators();
    } else if (name == "pauli") {
      std::cout << cv::golden_detail::pauli_generators();
    } else {
      std::cerr << "cliffverify: emit system requires --name {spin9|c9|pauli}\n";
      return 2;
    }
    return 0;
  }
  if (target == "lie-basis") {
    cv::LieBasis basis;
    std::string prefix = "J";
    if (name == "jc") {
      basis = cv::build_JC();
    } else if (name == "jt") {
      basis = cv::build_J_triples();
    } else if (name == "jd") {
      basis = cv::build_JD();
    } else if (name == "p") {
      basis = cv::build_P_basis();
      prefix = "P";
    } else {
      std::cerr << "cliffverify: emit lie-basis requires --name {jc|jt|jd|p}\n";
      return 2;
    }
    for (const auto& e : basis.elements)
      std::cout << cv::labeled_matrix_line(cv::dotted_label(prefix, e.index), e.matrix) << "\n";
    return 0;
  }
  if (target == "form") {
    const cv::Catalog& cat = the_catalog();
    if (name == "psi-C") {
      for (std::size_t a = 1; a <= 9; ++a)
        for (std::size_t b = a + 1; b <= 9; ++b)
          std::cout << cv::labeled_form_lines(cv::dotted_label("psi", {a, b}),
                                              cat.psi16.at(a - 1, b - 1));
    } else if (name == "psi-D") {
      for (std::size_t a = 0; a <= 9; ++a)
        for (std::size_t b = a + 1; b <= 9; ++b)
          std::cout << cv::labeled_form_lines(cv::dotted_label("psi", {a, b}), cat.psi32.at(a, b));
    } else if (name == "omega") {
      std::cout << cv::form_jsonl(cat.omega);
    } else if (name == "phi9") {
      std::cout << cv::phi_spin9_payload(cat, workers);
    } else if (name == "phi10") {
      std::cerr << "cliffverify: computing the degree-8 invariant of the 10x10 family...\n";
      std::cout << cv::form_jsonl(cv::tau4(cat.psi32, workers));
    } else {
      std::cerr << "cliffverify: emit form requires --name {psi-C|psi-D|omega|phi9|phi10}\n";
      return 2;
    }
    return 0;
  }
  // golden-all: regenerate the golden directory in place.
  std::cerr << "cliffverify: regenerating golden directory " << dir << "\n";
  cv::write_golden_dir(the_catalog(), dir, workers);
  nlohmann::json files = nlohmann::json::array();
  for (const auto& spec : cv::golden_table_specs()) files.push_back(spec.name + ".jsonl");
  files.push_back("phi-spin9.jsonl");
  files.push_back("phi-spin10.jsonl");
  const nlohmann::json doc = {{"dir", dir.string()}, {"files", files}};
  std::cout << doc.dump() << "\n";
  return 0;
}

int run_bench(const std::string& workload, unsigned workers, unsigned repetitions,
              const std::filesystem::path& dir, const std::string& format) {
  const cv::Catalog& cat = the_catalog();
  std::vector<double> times;
  std::string hash, note;
  std::size_t terms = 0;
  bool scan_ok = true;
  for (unsigned rep = 0; rep < repetitions; ++rep) {
    const auto t0 = Clock::now();
    std::string rep_hash;
    if (workload == "tau4-psiD") {
      const cv::SparseForm f = cv::tau4(cat.psi32, workers);
      terms = f.term_count();
      rep_hash = cv::sha256_hex(cv::form_jsonl(f));
    } else if (workload == "tau4-psiC") {
      const cv::SparseForm f = cv::tau4(cat.psi16, workers);
      terms = f.term_count();
      rep_hash =
          cv::sha256_hex(cv::form_jsonl(f.scaled(cv::GaussianRational(cv::Rational(1, 360)))));
    } else {  // orth-scan-375
      const cv::CheckReport r = cv::orthogonality_scan(cv::build_C9_system());
      std::string canon;
      for (const auto& it : r.items())
        canon += it.name + "|" + (it.pass ? "1" : "0") + "|" + it.detail + "\n";
      rep_hash = cv::sha256_hex(canon);
      terms = 375;
      bool rank375 = false;
      for (const auto& it : r.items())
        if (it.name == "rank-equals-count" && it.detail.find("rank 375 of 375") != std::string::npos)
          rank375 = true;
      scan_ok = scan_ok && r.all_pass() && rank375;
    }
    times.push_back(ms_since(t0));
    if (rep == 0)
      hash = rep_hash;
    else if (rep_hash != hash)
      note = "output hash differs across repetitions";
    std::cerr << "bench " << workload << " repetition " << (rep + 1) << "/" << repetitions << ": "
              << millis_text(times.back()) << " ms\n";
  }
  std::sort(times.begin(), times.end());
  const double t_min = times.front();
  const double t_median = times.size() % 2 == 1
                              ? times[times.size() / 2]
                              : (times[times.size() / 2 - 1] + times[times.size() / 2]) / 2.0;

  std::string golden_hash;
  bool pass = note.empty();
  if (workload == "tau4-psiD") {
    golden_hash = cv::frozen_invariant_hash(dir, "phi-spin10");
    pass = pass && hash == golden_hash;
  } else if (workload == "tau4-psiC") {
    golden_hash = cv::frozen_invariant_hash(dir, "phi-spin9");
    pass = pass && hash == golden_hash;
  } else {
    pass = pass && scan_ok;
    if (!scan_ok) note = "orthogonality scan failed or rank differs from 375";
  }
  if (!pass && note.empty()) note = "output hash does not match the golden hash";

  if (format == "text") {
    std::cout << "bench " << workload << "  workers " << workers << "  repetitions " << repetitions
              << "\n";
    std::cout << "  min " << millis_text(t_min) << " ms, median " << millis_text(t_median)
              << " ms, terms " << terms << "\n";
    std::cout << "  hash " << hash << "\n";
    if (!golden_hash.empty()) std::cout << "  golden " << golden_hash << "\n";
    std::cout << (pass ? "PASS" : "FAIL: " + note) << "\n";
  } else {
    const nlohmann::json doc = {{"workload", workload},
                                {"workers", workers},
                                {"repetitions", repetitions},
                                {"millis-min", t_min},
                                {"millis-median", t_median},
                                {"terms", terms},
                                {"hash", hash},
                                {"golden-hash", golden_hash},
                                {"pass", pass},
                                {"note", note},
                                {"version", cv::kVersion},
                                {"convention", cv::convention_fingerprint()}};
    std::cout << doc.dump() << "\n";
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the Clifford-system and eight-form constructions"};
  app.require_subcommand(1);

  std::string format = "json", golden_flag, only, system, check, name;
  unsigned workers = 1, repetitions = 3;
  std::string verify_suite, emit_target, bench_workload;

  const auto add_common = [&](CLI::App* c) {
    c->add_option("--format", format, "output format (json|text)")
        ->check(CLI::IsMember({"json", "text"}));
    c->add_option("--golden-dir", golden_flag,
                  "golden directory (default: $CLIFFVERIFY_GOLDEN_DIR, then ./golden)");
    c->add_option("--workers", workers, "worker threads for the quartic kernel")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* v = app.add_subcommand("verify", "run a verification suite");
  v->add_option("suite", verify_suite, "clifford|lie|forms|tables|theorems|all")
      ->required()
      ->check(CLI::IsMember({"clifford", "lie", "forms", "tables", "theorems", "all"}));
  v->add_option("--only", only, "substring filter on identity names");
  v->add_option("--system", system, "restrict the clifford suite to one system")
      ->check(CLI::IsMember({"spin9", "c9", "pauli"}));
  v->add_option("--check", check, "restrict the lie suite to one check family")
      ->check(CLI::IsMember({"closure", "iso", "so16"}));
  add_common(v);

  CLI::App* e = app.add_subcommand("emit", "serialize a table, basis, or form to stdout");
  e->add_option("target", emit_target, "mul-table|system|lie-basis|form|golden-all")
      ->required()
      ->check(CLI::IsMember({"mul-table", "system", "lie-basis", "form", "golden-all"}));
  e->add_option("--name", name, "object name for system/lie-basis/form targets");
  add_common(e);

  CLI::App* b = app.add_subcommand("bench", "time a kernel workload and check its output hash");
  b->add_option("workload", bench_workload, "tau4-psiD|tau4-psiC|orth-scan-375")
      ->required()
      ->check(CLI::IsMember({"tau4-psiD", "tau4-psiC", "orth-scan-375"}));
  b->add_option("--repetitions", repetitions, "number of timed repetitions")
      ->check(CLI::PositiveNumber);
  add_common(b);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int rc = app.exit(ex);
    return rc == 0 ? 0 : 2;
  }

  try {
    const std::filesystem::path dir = resolve_golden_dir(golden_flag);
    if (v->parsed()) {
      if (!system.empty() && verify_suite != "clifford") {
        std::cerr << "cliffverify: --system applies only to the clifford suite\n";
        return 2;
      }
      if (!check.empty() && verify_suite != "lie") {
        std::cerr << "cliffverify: --check applies only to the lie suite\n";
        return 2;
      }
      return run_verify(verify_suite, only, system, check, workers, dir, format);
    }
    if (e->parsed()) return run_emit(emit_target, name, workers, dir);
    return run_bench(bench_workload, workers, repetitions, dir, format);
  } catch (const cv::GoldenError& ex) {
    std::cerr << "cliffverify: golden data error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "cliffverify: error: " << ex.what() << "\n";
    return 2;
  }
}
