// Command-line surface: spectra, transfer verdicts, enumeration,
// counting tables, fidelity traces and the property-verification batch.
// Exit codes: 0 success, 1 verification or method-disagreement failure,
// 2 input validation failure.

#include "icgpst/icgpst.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

using icgpst::i64;
using ordered_json = nlohmann::ordered_json;

std::string fmt_sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::vector<i64> parse_int_list(const std::string& text, const char* what) {
  std::vector<i64> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t comma = text.find(',', pos);
    const std::string token =
        trim(comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos));
    if (token.empty())
      throw std::invalid_argument(std::string("empty entry in ") + what + " list");
    size_t consumed = 0;
    i64 value = 0;
    try {
      value = std::stoll(token, &consumed);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse '" + token + "' in " + what + " list");
    }
    if (consumed != token.size())
      throw std::invalid_argument("cannot parse '" + token + "' in " + what + " list");
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// Comma-separated divisors; duplicates are rejected under --strict and
// warned about otherwise.
std::vector<i64> parse_divisors(const std::string& text, bool strict) {
  std::vector<i64> out = parse_int_list(text, "divisor");
  std::vector<i64> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    if (strict)
      throw std::invalid_argument("duplicate divisor " + std::to_string(*dup) +
                                  " rejected in strict mode");
    std::cerr << "warning: duplicate divisor " << *dup << " ignored\n";
  }
  return out;
}

void emit(const ordered_json& doc) { std::cout << doc.dump() << "\n"; }

std::string join_divisors(const std::vector<i64>& divisors) {
  std::string out;
  for (size_t i = 0; i < divisors.size(); ++i)
    out += (i ? ";" : "") + std::to_string(divisors[i]);
  return out;
}

int run_spectrum(i64 n, const std::vector<i64>& divisors, const std::string& format) {
  const auto ds = icgpst::make_divisor_set(n, divisors);
  const auto spec = icgpst::spectrum_exact(icgpst::build_graph(ds));
  if (format == "csv") {
    std::cout << "j,lambda\n";
    for (i64 j = 0; j < spec.n; ++j)
      std::cout << j << "," << spec.values[static_cast<size_t>(j)] << "\n";
    return 0;
  }
  ordered_json doc;
  doc["n"] = ds.n;
  doc["divisors"] = ds.divisors;
  doc["values"] = spec.values;
  emit(doc);
  return 0;
}

int run_check(i64 n, const std::vector<i64>& divisors, const std::string& format,
              bool include_spectrum) {
  const auto ds = icgpst::make_divisor_set(n, divisors);
  const auto g = icgpst::build_graph(ds);
  const auto spec = icgpst::spectrum_exact(g);
  const auto v = icgpst::decide_pst(ds);
  const bool numeric = icgpst::verify_pst_numeric(spec, 1e-9);
  const bool agreement =
      v.spectral == v.structural && v.structural == v.abstract_form && v.abstract_form == numeric;

  if (format == "csv") {
    std::cout << "n,divisors,connected,degree,has_pst,tau,pqcd,m,spectral,structural,"
                 "abstract_form,numeric,agreement\n";
    std::cout << ds.n << "," << join_divisors(ds.divisors) << "," << (g.connected ? "true" : "false")
              << "," << g.degree << "," << (v.has_pst ? "true" : "false") << ","
              << (v.tau ? fmt_sig12(*v.tau) : "") << ","
              << (v.pqcd ? std::to_string(*v.pqcd) : "") << ","
              << (v.common_valuation ? std::to_string(*v.common_valuation) : "") << ","
              << (v.spectral ? "true" : "false") << "," << (v.structural ? "true" : "false") << ","
              << (v.abstract_form ? "true" : "false") << "," << (numeric ? "true" : "false") << ","
              << (agreement ? "true" : "false") << "\n";
  } else {
    ordered_json doc;
    doc["n"] = ds.n;
    doc["divisors"] = ds.divisors;
    doc["connected"] = g.connected;
    doc["degree"] = g.degree;
    doc["has_pst"] = v.has_pst;
    doc["tau"] = v.tau ? ordered_json(*v.tau) : ordered_json(nullptr);
    doc["pqcd"] = v.pqcd ? ordered_json(*v.pqcd) : ordered_json(nullptr);
    doc["m"] = v.common_valuation ? ordered_json(*v.common_valuation) : ordered_json(nullptr);
    doc["spectral"] = v.spectral;
    doc["structural"] = v.structural;
    doc["abstract_form"] = v.abstract_form;
    doc["numeric"] = numeric;
    doc["agreement"] = agreement;
    if (include_spectrum) doc["spectrum"] = spec.values;
    emit(doc);
  }
  return agreement ? 0 : 1;
}

int run_enumerate(i64 n, bool connected_only, const std::string& format) {
  const auto sets = icgpst::enumerate_pst(n, connected_only);
  if (format == "csv") {
    std::cout << "divisors,connected,degree,pqcd,m,tau\n";
    for (const auto& ds : sets) {
      const auto g = icgpst::build_graph(ds);
      const auto v = icgpst::decide_pst(ds);
      std::cout << join_divisors(ds.divisors) << "," << (g.connected ? "true" : "false") << ","
                << g.degree << "," << *v.pqcd << "," << *v.common_valuation << ","
                << fmt_sig12(*v.tau) << "\n";
    }
    return 0;
  }
  ordered_json doc;
  doc["n"] = n;
  doc["connected_only"] = connected_only;
  doc["count"] = sets.size();
  doc["sets"] = ordered_json::array();
  for (const auto& ds : sets) {
    const auto g = icgpst::build_graph(ds);
    const auto v = icgpst::decide_pst(ds);
    ordered_json row;
    row["divisors"] = ds.divisors;
    row["connected"] = g.connected;
    row["degree"] = g.degree;
    row["pqcd"] = *v.pqcd;
    row["m"] = *v.common_valuation;
    row["tau"] = *v.tau;
    doc["sets"].push_back(std::move(row));
  }
  emit(doc);
  return 0;
}

int run_count(i64 n_min, i64 n_max, const std::string& format) {
  if (n_min < 2) throw std::invalid_argument("count: n_min must be at least 2");
  if (n_max < n_min) throw std::invalid_argument("count: n_max must be >= n_min");
  struct Row {
    i64 n, setbased, printed, brute_all, brute_connected;
  };
  std::vector<Row> rows;
  for (i64 n = n_min; n <= n_max; ++n)
    rows.push_back({n, icgpst::count_formula_setbased(n), icgpst::count_formula_printed(n),
                    icgpst::count_bruteforce(n, false), icgpst::count_bruteforce(n, true)});
  if (format == "csv") {
    std::cout << "n,setbased,printed,bruteforce_all,bruteforce_connected,printed_deviates,"
                 "setbased_matches_bruteforce\n";
    for (const auto& row : rows)
      std::cout << row.n << "," << row.setbased << "," << row.printed << "," << row.brute_all
                << "," << row.brute_connected << ","
                << (row.printed != row.setbased ? "true" : "false") << ","
                << (row.setbased == row.brute_all ? "true" : "false") << "\n";
    return 0;
  }
  ordered_json doc = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json entry;
    entry["n"] = row.n;
    entry["setbased"] = row.setbased;
    entry["printed"] = row.printed;
    entry["bruteforce_all"] = row.brute_all;
    entry["bruteforce_connected"] = row.brute_connected;
    entry["printed_deviates"] = row.printed != row.setbased;
    entry["setbased_matches_bruteforce"] = row.setbased == row.brute_all;
    doc.push_back(std::move(entry));
  }
  emit(doc);
  return 0;
}

int run_fidelity(i64 n, const std::vector<i64>& divisors, const std::string& pair_text,
                 double t_max, i64 steps, const std::string& format) {
  const auto ds = icgpst::make_divisor_set(n, divisors);
  const auto spec = icgpst::spectrum_exact(icgpst::build_graph(ds));
  i64 a, b;
  if (pair_text.empty()) {
    if (n % 2 != 0)
      throw std::invalid_argument("default pair (n/2, 0) needs even n; pass --pair a,b");
    a = n / 2;
    b = 0;
  } else {
    const auto pair = parse_int_list(pair_text, "pair");
    if (pair.size() != 2) throw std::invalid_argument("--pair expects exactly two vertices a,b");
    a = pair[0];
    b = pair[1];
  }
  const auto trace = icgpst::fidelity_trace(spec, a, b, t_max, steps);
  if (format == "csv") {
    std::cout << "t,re,im,abs\n";
    for (size_t i = 0; i < trace.times.size(); ++i)
      std::cout << fmt_sig12(trace.times[i]) << "," << fmt_sig12(trace.amplitudes[i].real())
                << "," << fmt_sig12(trace.amplitudes[i].imag()) << ","
                << fmt_sig12(trace.magnitudes[i]) << "\n";
    return 0;
  }
  ordered_json doc;
  doc["n"] = ds.n;
  doc["divisors"] = ds.divisors;
  doc["a"] = trace.a;
  doc["b"] = trace.b;
  doc["t"] = trace.times;
  ordered_json re = ordered_json::array(), im = ordered_json::array(),
               mag = ordered_json::array();
  for (size_t i = 0; i < trace.times.size(); ++i) {
    re.push_back(trace.amplitudes[i].real());
    im.push_back(trace.amplitudes[i].imag());
    mag.push_back(trace.magnitudes[i]);
  }
  doc["re"] = std::move(re);
  doc["im"] = std::move(im);
  doc["abs"] = std::move(mag);
  emit(doc);
  return 0;
}

int run_verify(i64 max_n, std::uint64_t seed, bool inject_fault) {
  const icgpst::verify::Options opt{max_n, seed, inject_fault};
  const auto results = icgpst::verify::run_all(opt);
  int failed_suites = 0;
  long long total_checks = 0;
  for (const auto& suite : results) {
    total_checks += suite.checks;
    std::printf("[%s] %-28s %lld checks, %lld failures\n", suite.passed() ? "PASS" : "FAIL",
                suite.name.c_str(), suite.checks, suite.failures);
    if (!suite.passed()) {
      ++failed_suites;
      std::printf("       witness: %s\n", suite.first_witness.c_str());
    }
    for (const auto& note : suite.notes) std::printf("       note: %s\n", note.c_str());
  }
  std::printf("verification: %zu/%zu suites passed, %lld checks (max-n %lld, seed %llu)\n",
              results.size() - static_cast<size_t>(failed_suites), results.size(), total_checks,
              static_cast<long long>(max_n), static_cast<unsigned long long>(seed));
  return failed_suites == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"integral circulant graph spectra and perfect state transfer toolkit"};
  app.require_subcommand(1);

  std::string divisors_text;
  std::string format = "json";
  std::string pair_text;
  bool strict = false;
  bool include_spectrum = false;
  bool connected_only = false;
  bool inject_fault = false;
  i64 n = 0, n_min = 0, n_max = 0;
  i64 steps = 1000;
  i64 verify_max_n = 64;
  std::uint64_t seed = 12345;
  double t_max = 2.0 * std::numbers::pi;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "exact eigenvalues in DFT index order");
  spectrum->add_option("n", n, "graph order")->required();
  spectrum->add_option("--divisors", divisors_text, "comma-separated divisor set")->required();
  spectrum->add_flag("--strict", strict, "reject duplicate divisors");
  add_format(spectrum);

  CLI::App* check = app.add_subcommand("check", "full transfer verdict for one divisor set");
  check->add_option("n", n, "graph order")->required();
  check->add_option("--divisors", divisors_text, "comma-separated divisor set")->required();
  check->add_flag("--include-spectrum", include_spectrum, "embed the spectrum in the document");
  check->add_flag("--strict", strict, "reject duplicate divisors");
  add_format(check);

  CLI::App* enumerate = app.add_subcommand("enumerate", "all transfer-positive divisor sets");
  enumerate->add_option("n", n, "graph order")->required();
  enumerate->add_flag("--connected-only", connected_only, "keep connected graphs only");
  add_format(enumerate);

  CLI::App* count = app.add_subcommand("count", "closed-form vs brute-force counting table");
  count->add_option("n_min", n_min, "first order")->required();
  count->add_option("n_max", n_max, "last order")->required();
  add_format(count);

  CLI::App* fidelity = app.add_subcommand("fidelity", "sampled transfer amplitude trace");
  fidelity->add_option("n", n, "graph order")->required();
  fidelity->add_option("--divisors", divisors_text, "comma-separated divisor set")->required();
  fidelity->add_option("--pair", pair_text, "vertex pair a,b (default n/2,0)");
  fidelity->add_option("--t-max", t_max, "end of the time grid")->capture_default_str();
  fidelity->add_option("--steps", steps, "grid points including both endpoints")
      ->capture_default_str();
  fidelity->add_flag("--strict", strict, "reject duplicate divisors");
  add_format(fidelity);

  CLI::App* verify = app.add_subcommand("verify", "run every property-verification suite");
  verify->add_option("--max-n", verify_max_n, "graph-order cap for the sweeps")
      ->capture_default_str();
  verify->add_option("--seed", seed, "seed for the randomized suites")->capture_default_str();
  verify->add_flag("--inject-fault", inject_fault)->group("");  // harness self-test hook

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(spectrum))
      return run_spectrum(n, parse_divisors(divisors_text, strict), format);
    if (app.got_subcommand(check))
      return run_check(n, parse_divisors(divisors_text, strict), format, include_spectrum);
    if (app.got_subcommand(enumerate)) return run_enumerate(n, connected_only, format);
    if (app.got_subcommand(count)) return run_count(n_min, n_max, format);
    if (app.got_subcommand(fidelity))
      return run_fidelity(n, parse_divisors(divisors_text, strict), pair_text, t_max, steps,
                          format);
    if (app.got_subcommand(verify)) return run_verify(verify_max_n, seed, inject_fault);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
