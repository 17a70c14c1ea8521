#pragma once

// Property-verification suites: every arithmetic identity, spectral
// invariant and transfer-equivalence claim the library relies on,
// runnable as one deterministic batch. The CLI `verify` subcommand and
// the acceptance binary are thin wrappers around these.

#include "icgpst/fidelity.hpp"
#include "icgpst/pst.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>

namespace icgpst::verify {

struct SuiteResult {
  std::string name;
  long long checks = 0;
  long long failures = 0;
  std::string first_witness;
  std::vector<std::string> notes;

  SuiteResult() = default;
  explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}

  bool passed() const { return failures == 0; }

  template <class WitnessFn>
  void expect(bool ok, WitnessFn&& witness) {
    ++checks;
    if (ok) return;
    ++failures;
    if (first_witness.empty()) first_witness = witness();
  }
};

struct Options {
  i64 max_n = 64;           // cap for the graph-order sweeps
  std::uint64_t seed = 12345;
  bool inject_fault = false;  // test hook: corrupts one dual-evaluation comparison
};

namespace detail {

using icgpst::detail::scaled;

inline std::string show_set(i64 n, const std::vector<i64>& divisors) {
  std::ostringstream out;
  out << "n=" << n << " D={";
  for (size_t i = 0; i < divisors.size(); ++i) out << (i ? "," : "") << divisors[i];
  out << "}";
  return out.str();
}

inline std::string show_spectrum(const IntegerSpectrum& spec) {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < spec.values.size(); ++i) out << (i ? "," : "") << spec.values[i];
  out << "]";
  return out.str();
}

inline std::vector<i64> all_divisors(i64 n) {
  auto divisors = proper_divisors(n);
  divisors.push_back(n);
  return divisors;
}

inline DivisorSet random_divisor_set(std::mt19937_64& rng, i64 n) {
  const auto divisors = proper_divisors(n);
  std::vector<i64> chosen;
  for (i64 d : divisors)
    if (rng() & 1) chosen.push_back(d);
  if (chosen.empty()) chosen.push_back(divisors[rng() % divisors.size()]);
  return make_divisor_set(n, std::move(chosen));
}

// Divisors admitted by the odd-position lemmas: S_2(n/d) <= 1.
inline std::vector<i64> odd_lemma_universe(i64 n) {
  std::vector<i64> universe;
  for (i64 d : proper_divisors(n))
    if ((n / d) % 4 != 0) universe.push_back(d);
  return universe;
}

inline std::vector<i64> sorted_union(std::vector<i64> xs, const std::vector<i64>& ys) {
  xs.insert(xs.end(), ys.begin(), ys.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Arithmetic layer
// ---------------------------------------------------------------------------

/// Formula vs primitive-root summation for every c(j, n), n <= 500.
inline SuiteResult suite_ramanujan_dual(const Options& opt) {
  SuiteResult r{"ramanujan-dual-evaluation"};
  for (i64 n = 1; n <= 500; ++n) {
    for (i64 j = 0; j < n; ++j) {
      i64 formula = ramanujan(j, n);
      if (opt.inject_fault && n == 7 && j == 3) formula += 1;
      const i64 oracle = ramanujan_oracle(j, n);
      r.expect(formula == oracle, [&] {
        std::ostringstream out;
        out << "c(" << j << "," << n << "): formula=" << formula << " oracle=" << oracle;
        return out.str();
      });
    }
  }
  return r;
}

/// c(0,n)=phi(n); c(1,n)=mu(n); the three-case c(2,n) formula; and for
/// even n, c(n/2, n/d) = +-phi(n/d) by the parity of d, for every d | n.
inline SuiteResult suite_proposition1(const Options&) {
  SuiteResult r{"ramanujan-special-values"};
  for (i64 n = 1; n <= 500; ++n) {
    r.expect(ramanujan(0, n) == euler_phi(n),
             [&] { return "c(0," + std::to_string(n) + ") != phi(n)"; });
    r.expect(ramanujan(1, n) == mobius(n),
             [&] { return "c(1," + std::to_string(n) + ") != mu(n)"; });
    const i64 expected2 = n % 2 == 1   ? mobius(n)
                          : n % 4 == 2 ? mobius(n / 2)
                                       : 2 * mobius(n / 2);
    r.expect(ramanujan(2, n) == expected2,
             [&] { return "c(2," + std::to_string(n) + ") case formula failed"; });
    if (n % 2 == 0) {
      for (i64 d : detail::all_divisors(n)) {
        const i64 m = n / d;
        const i64 expected = (d % 2 == 0 ? 1 : -1) * euler_phi(m);
        r.expect(ramanujan(n / 2, m) == expected, [&] {
          return "c(n/2, n/d) at n=" + std::to_string(n) + " d=" + std::to_string(d);
        });
      }
    }
  }
  return r;
}

/// c(j,n) is odd iff 4 does not divide n and j = (prod p_i^(a_i-1)) * J
/// with gcd(J, n) in {1, 2}. Swept for 2 <= n <= 300 and all j.
inline SuiteResult suite_parity_lemma(const Options&) {
  SuiteResult r{"ramanujan-parity-lemma"};
  for (i64 n = 2; n <= 300; ++n) {
    i64 radical_quotient = 1;  // prod over odd p | n of p^(a_p - 1)
    for (const auto& [p, e] : factorize(n)) {
      if (p == 2) continue;
      for (int i = 1; i < e; ++i) radical_quotient *= p;
    }
    const bool four_free = n % 4 != 0;
    for (i64 j = 0; j < n; ++j) {
      const bool lhs = ramanujan(j, n) % 2 != 0;
      bool rhs = false;
      if (four_free && j % radical_quotient == 0) {
        const i64 g = std::gcd(j / radical_quotient, n);
        rhs = (g == 1 || g == 2);
      }
      r.expect(lhs == rhs, [&] {
        return "parity at j=" + std::to_string(j) + " n=" + std::to_string(n) + " c=" +
               std::to_string(ramanujan(j, n));
      });
    }
  }
  return r;
}

/// For n/d odd: c(j, n/d) = -c(j, 2n/d) for odd j and c(j, n/d) = c(j, 2n/d)
/// for even j. Full sweep for even n <= 300 plus 1000 seeded triples.
inline SuiteResult suite_sign_flip(const Options& opt) {
  SuiteResult r{"ramanujan-sign-flip"};
  const auto check = [&r](i64 n, i64 d, i64 j) {
    const i64 lhs = ramanujan(j, n / d);
    const i64 rhs = ramanujan(j, 2 * n / d);
    const bool ok = (j % 2 == 1) ? (lhs == -rhs) : (lhs == rhs);
    r.expect(ok, [&] {
      return "sign flip at n=" + std::to_string(n) + " d=" + std::to_string(d) +
             " j=" + std::to_string(j);
    });
  };
  for (i64 n = 2; n <= 300; n += 2)
    for (i64 d : detail::all_divisors(n)) {
      if ((n / d) % 2 == 0) continue;
      for (i64 j = 0; j < n; ++j) check(n, d, j);
    }
  std::mt19937_64 rng(opt.seed);
  for (int iter = 0; iter < 1000; ++iter) {
    const i64 n = 2 * (static_cast<i64>(rng() % 150) + 1);
    std::vector<i64> eligible;
    for (i64 d : detail::all_divisors(n))
      if ((n / d) % 2 == 1) eligible.push_back(d);
    const i64 d = eligible[rng() % eligible.size()];
    check(n, d, static_cast<i64>(rng() % n));
  }
  return r;
}

/// Halving identities for even j, keyed on S_2(n/d): the modulus halves,
/// the divisor halves, or the value doubles. Full sweep for even
/// n <= 120 plus 1000 seeded triples up to n = 300.
inline SuiteResult suite_halving(const Options& opt) {
  SuiteResult r{"ramanujan-halving-identities"};
  const auto check = [&r](i64 n, i64 d, i64 j) {
    const i64 half_n = n / 2;
    const i64 v = two_adic(n / d);
    i64 expected;
    if (v == 0)
      expected = ramanujan(j / 2, half_n / (d / 2));
    else if (v == 1)
      expected = ramanujan(j / 2, half_n / d);
    else
      expected = 2 * ramanujan(j / 2, half_n / d);
    r.expect(ramanujan(j, n / d) == expected, [&] {
      return "halving at n=" + std::to_string(n) + " d=" + std::to_string(d) +
             " j=" + std::to_string(j) + " (S2(n/d)=" + std::to_string(v) + ")";
    });
  };
  for (i64 n = 2; n <= 120; n += 2)
    for (i64 d : detail::all_divisors(n))
      for (i64 j = 0; j < n; j += 2) check(n, d, j);
  std::mt19937_64 rng(opt.seed + 1);
  for (int iter = 0; iter < 1000; ++iter) {
    const i64 n = 2 * (static_cast<i64>(rng() % 150) + 1);
    const auto divisors = detail::all_divisors(n);
    const i64 d = divisors[rng() % divisors.size()];
    check(n, d, 2 * static_cast<i64>(rng() % (n / 2)));
  }
  return r;
}

/// Reduction identities and the zero column sum: c(j, n) = c(j mod n, n),
/// c(j, n) = c(gcd(j, n), n), c(j, 1) = 1, and sum_j c(j, n) = 0 for n >= 2.
inline SuiteResult suite_ramanujan_reduction(const Options&) {
  SuiteResult r{"ramanujan-reduction-and-sums"};
  for (i64 j = 0; j <= 5; ++j)
    r.expect(ramanujan(j, 1) == 1, [&] { return "c(" + std::to_string(j) + ",1) != 1"; });
  for (i64 n = 2; n <= 300; ++n) {
    i64 total = 0;
    for (i64 j = 0; j < n; ++j) {
      const i64 c = ramanujan(j, n);
      total += c;
      r.expect(c == ramanujan(j + n, n),
               [&] { return "period at j=" + std::to_string(j) + " n=" + std::to_string(n); });
      if (j >= 1)
        r.expect(c == ramanujan(std::gcd(j, n), n), [&] {
          return "gcd reduction at j=" + std::to_string(j) + " n=" + std::to_string(n);
        });
    }
    r.expect(total == 0, [&] {
      return "column sum " + std::to_string(total) + " at n=" + std::to_string(n);
    });
  }
  return r;
}

// ---------------------------------------------------------------------------
// Graph layer
// ---------------------------------------------------------------------------

/// Exact Ramanujan-sum spectra against the root-of-unity symbol sums on
/// 100 random divisor sets with n <= 200.
inline SuiteResult suite_spectrum_dual(const Options& opt) {
  SuiteResult r{"spectrum-dual-evaluation"};
  std::mt19937_64 rng(opt.seed + 2);
  for (int iter = 0; iter < 100; ++iter) {
    const i64 n = 2 + static_cast<i64>(rng() % 199);
    const DivisorSet ds = detail::random_divisor_set(rng, n);
    const IcgGraph g = build_graph(ds);
    r.expect(spectrum_exact(g).values == spectrum_oracle(g).values,
             [&] { return "spectrum mismatch for " + detail::show_set(ds.n, ds.divisors); });
  }
  return r;
}

/// Degree at index 0, mirror symmetry, zero trace, and the degree bound,
/// exhaustively for n <= 24 and on 100 random larger graphs.
inline SuiteResult suite_spectrum_invariants(const Options& opt) {
  SuiteResult r{"spectrum-invariants"};
  const auto check = [&r](const DivisorSet& ds) {
    const IcgGraph g = build_graph(ds);
    const IntegerSpectrum spec = spectrum_exact(g);
    const i64 n = ds.n;
    bool ok = spec.values[0] == g.degree;
    i64 total = 0;
    for (i64 j = 0; j < n; ++j) {
      total += spec.values[static_cast<size_t>(j)];
      ok = ok && std::abs(spec.values[static_cast<size_t>(j)]) <= spec.values[0];
      if (j >= 1) ok = ok && spec.values[static_cast<size_t>(j)] ==
                                 spec.values[static_cast<size_t>(n - j)];
    }
    ok = ok && total == 0;
    r.expect(ok, [&] {
      return "spectrum invariant broken for " + detail::show_set(ds.n, ds.divisors) + " " +
             detail::show_spectrum(spec);
    });
  };
  for (i64 n = 2; n <= 24; ++n) {
    const auto divisors = proper_divisors(n);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << divisors.size()); ++mask) {
      std::vector<i64> subset;
      for (size_t i = 0; i < divisors.size(); ++i)
        if (mask & (std::uint32_t{1} << i)) subset.push_back(divisors[i]);
      check(DivisorSet{n, std::move(subset)});
    }
  }
  std::mt19937_64 rng(opt.seed + 3);
  for (int iter = 0; iter < 100; ++iter)
    check(detail::random_divisor_set(rng, 2 + static_cast<i64>(rng() % 199)));
  return r;
}

/// Adjacency is symmetric and irreflexive, row 0 has `degree` neighbors,
/// and the symbol is closed under negation mod n.
inline SuiteResult suite_adjacency(const Options& opt) {
  SuiteResult r{"adjacency-invariants"};
  std::mt19937_64 rng(opt.seed + 4);
  for (int iter = 0; iter < 50; ++iter) {
    const i64 n = 2 + static_cast<i64>(rng() % 119);
    const DivisorSet ds = detail::random_divisor_set(rng, n);
    const IcgGraph g = build_graph(ds);
    i64 neighbors = 0;
    for (i64 b = 0; b < n; ++b)
      if (adjacent(g, 0, b)) ++neighbors;
    r.expect(neighbors == g.degree,
             [&] { return "neighbor count != degree for " + detail::show_set(n, ds.divisors); });
    bool symmetric = true, irreflexive = true, closed = true;
    for (int probe = 0; probe < 50; ++probe) {
      const i64 a = static_cast<i64>(rng() % n);
      const i64 b = static_cast<i64>(rng() % n);
      symmetric = symmetric && adjacent(g, a, b) == adjacent(g, b, a);
      irreflexive = irreflexive && !adjacent(g, a, a);
    }
    for (i64 s : g.symbol)
      closed = closed && std::binary_search(g.symbol.begin(), g.symbol.end(), n - s);
    r.expect(symmetric && irreflexive && closed,
             [&] { return "adjacency invariant broken for " + detail::show_set(n, ds.divisors); });
  }
  return r;
}

/// integrality_check recovers the divisor set from the built symbol for
/// every divisor set with n <= 100.
inline SuiteResult suite_integrality_roundtrip(const Options&) {
  SuiteResult r{"integrality-roundtrip"};
  for (i64 n = 2; n <= 100; ++n) {
    const auto divisors = proper_divisors(n);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << divisors.size()); ++mask) {
      std::vector<i64> subset;
      for (size_t i = 0; i < divisors.size(); ++i)
        if (mask & (std::uint32_t{1} << i)) subset.push_back(divisors[i]);
      const DivisorSet ds{n, std::move(subset)};
      const IcgGraph g = build_graph(ds);
      const IntegralityCheck res = integrality_check(n, g.symbol);
      r.expect(res.integral() && res.divisor_set->divisors == ds.divisors,
               [&] { return "round-trip failed for " + detail::show_set(n, ds.divisors); });
    }
  }
  return r;
}

/// An odd index j with odd lambda_j exists iff some d in D has d/2 and 2d
/// both outside D; restricted to divisor sets with 4 never dividing n/d.
inline SuiteResult suite_odd_eigenvalue_existence(const Options& opt) {
  SuiteResult r{"odd-eigenvalue-existence"};
  std::mt19937_64 rng(opt.seed + 5);
  int produced = 0;
  while (produced < 600) {
    const i64 n = 2 + static_cast<i64>(rng() % 119);
    const auto universe = detail::odd_lemma_universe(n);
    if (universe.empty()) continue;
    std::vector<i64> chosen;
    for (i64 d : universe)
      if (rng() & 1) chosen.push_back(d);
    if (chosen.empty()) chosen.push_back(universe[rng() % universe.size()]);
    const DivisorSet ds = make_divisor_set(n, chosen);
    ++produced;

    const IntegerSpectrum spec = spectrum_exact(build_graph(ds));
    bool lhs = false;
    for (i64 j = 1; j < n; j += 2) lhs = lhs || spec.values[static_cast<size_t>(j)] % 2 != 0;
    bool rhs = false;
    for (i64 d : ds.divisors) {
      const bool half_in = d % 2 == 0 && ds.contains(d / 2);
      const bool double_in = ds.contains(2 * d);
      rhs = rhs || (!half_in && !double_in);
    }
    r.expect(lhs == rhs,
             [&] { return "odd-eigenvalue existence at " + detail::show_set(n, ds.divisors); });
  }
  return r;
}

/// All odd-position eigenvalues even iff D = D1 union 2*D1 (same
/// restricted universe).
inline SuiteResult suite_all_even(const Options& opt) {
  SuiteResult r{"all-even-lemma"};
  std::mt19937_64 rng(opt.seed + 6);
  int produced = 0;
  while (produced < 600) {
    const i64 n = 2 * (1 + static_cast<i64>(rng() % 60));
    const auto universe = detail::odd_lemma_universe(n);
    if (universe.empty()) continue;
    std::vector<i64> chosen;
    for (i64 d : universe)
      if (rng() & 1) chosen.push_back(d);
    if (chosen.empty()) chosen.push_back(universe[rng() % universe.size()]);
    const DivisorSet ds = make_divisor_set(n, chosen);
    ++produced;

    const IntegerSpectrum spec = spectrum_exact(build_graph(ds));
    bool all_even = true;
    for (i64 j = 1; j < n; j += 2)
      all_even = all_even && spec.values[static_cast<size_t>(j)] % 2 == 0;
    const DivisorPartition part = partition_divisors(ds);
    const bool rhs = ds.divisors == detail::sorted_union(part.d1, detail::scaled(part.d1, 2));
    r.expect(all_even == rhs,
             [&] { return "all-even lemma at " + detail::show_set(n, ds.divisors); });
  }
  return r;
}

/// With n/2 in D: all odd-position eigenvalues odd iff
/// D = D1* union 2*D1* union {n/2} (same restricted universe).
inline SuiteResult suite_all_odd(const Options& opt) {
  SuiteResult r{"all-odd-lemma"};
  std::mt19937_64 rng(opt.seed + 7);
  int produced = 0;
  while (produced < 600) {
    const i64 n = 2 * (1 + static_cast<i64>(rng() % 60));
    const auto universe = detail::odd_lemma_universe(n);
    if (universe.empty()) continue;
    std::vector<i64> chosen{n / 2};
    for (i64 d : universe)
      if (rng() & 1) chosen.push_back(d);
    const DivisorSet ds = make_divisor_set(n, chosen);
    ++produced;

    const IntegerSpectrum spec = spectrum_exact(build_graph(ds));
    bool all_odd = true;
    for (i64 j = 1; j < n; j += 2)
      all_odd = all_odd && spec.values[static_cast<size_t>(j)] % 2 != 0;
    const DivisorPartition part = partition_divisors(ds);
    auto expected = detail::sorted_union(part.d1star, detail::scaled(part.d1star, 2));
    expected = detail::sorted_union(std::move(expected), {n / 2});
    const bool rhs = ds.divisors == expected;
    r.expect(all_odd == rhs,
             [&] { return "all-odd lemma at " + detail::show_set(n, ds.divisors); });
  }
  return r;
}

// ---------------------------------------------------------------------------
// Transfer layer
// ---------------------------------------------------------------------------

/// Every nonempty divisor set with n <= max_n, all four decision routes.
/// Connected graphs must agree four ways for every n; disconnected ones
/// must agree whenever 4 | n. The remaining disconnected orders are
/// censused in the notes rather than asserted.
inline SuiteResult suite_equivalence_sweep(const Options& opt) {
  SuiteResult r{"pst-equivalence-sweep"};
  long long census_entries = 0;
  std::string census_sample;
  for (i64 n = 2; n <= opt.max_n; ++n) {
    const auto divisors = proper_divisors(n);
    if (divisors.size() > 20) continue;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << divisors.size()); ++mask) {
      std::vector<i64> subset;
      for (size_t i = 0; i < divisors.size(); ++i)
        if (mask & (std::uint32_t{1} << i)) subset.push_back(divisors[i]);
      const DivisorSet ds{n, std::move(subset)};
      const IcgGraph g = build_graph(ds);
      const IntegerSpectrum spec = spectrum_exact(g);
      const bool sp = pst_spectral(spec).has_pst;
      const bool st = pst_structural(ds);
      const bool ab = pst_abstract_form(ds);
      const bool numeric = verify_pst_numeric(spec, 1e-9);
      const bool four_agree = sp == st && st == ab && ab == numeric;
      const auto witness = [&] {
        std::ostringstream out;
        out << detail::show_set(n, ds.divisors) << " connected=" << g.connected
            << " spectral=" << sp << " structural=" << st << " abstract=" << ab
            << " numeric=" << numeric << " spectrum=" << detail::show_spectrum(spec);
        return out.str();
      };
      if (g.connected || n % 4 == 0) {
        r.expect(four_agree, witness);
      } else {
        ++r.checks;
        if (!four_agree) {
          ++census_entries;
          if (census_sample.empty()) census_sample = witness();
        }
      }
    }
  }
  std::ostringstream note;
  note << "disconnected census (orders not divisible by 4): " << census_entries
       << " divisor sets where the physical criteria (spectral, numeric) hold but the"
          " divisibility-gated characterizations do not";
  if (!census_sample.empty()) note << "; first: " << census_sample;
  r.notes.push_back(note.str());
  return r;
}

/// No transfer for odd orders up to 49 and orders 2 mod 4 from 6 to 50
/// (K_2 at n = 2 is transfer-positive and sits outside this regime).
inline SuiteResult suite_negative_regimes(const Options& opt) {
  SuiteResult r{"negative-regimes"};
  for (i64 n = 3; n <= std::min<i64>(49, opt.max_n); n += 2)
    r.expect(enumerate_pst(n, false).empty(),
             [&] { return "odd order n=" + std::to_string(n) + " yielded a transfer set"; });
  for (i64 n = 6; n <= std::min<i64>(50, opt.max_n); n += 4)
    r.expect(enumerate_pst(n, false).empty(),
             [&] { return "order n=" + std::to_string(n) + " (2 mod 4) yielded a transfer set"; });
  return r;
}

/// Set-based closed form vs brute-force census for every multiple of 4;
/// the printed closed form is tabulated and its deviations noted.
inline SuiteResult suite_counting(const Options& opt) {
  SuiteResult r{"counting-formulas"};
  std::ostringstream deviations;
  for (i64 n = 4; n <= std::min<i64>(64, opt.max_n); n += 4) {
    const i64 setbased = count_formula_setbased(n);
    const i64 printed = count_formula_printed(n);
    const i64 brute = count_bruteforce(n, false);
    r.expect(setbased == brute, [&] {
      return "set-based count " + std::to_string(setbased) + " != brute-force " +
             std::to_string(brute) + " at n=" + std::to_string(n);
    });
    if (printed != setbased)
      deviations << " n=" << n << ":" << printed << " vs " << setbased;
  }
  if (opt.max_n >= 8)
    r.expect(count_formula_printed(8) == 2 && count_formula_setbased(8) == 4,
             [] { return std::string("expected printed=2 set-based=4 at n=8"); });
  if (opt.max_n >= 16)
    r.expect(count_formula_printed(16) == 4 && count_formula_setbased(16) == 8,
             [] { return std::string("expected printed=4 set-based=8 at n=16"); });
  const std::string list = deviations.str();
  r.notes.push_back(list.empty() ? "printed closed form matches the set-based count everywhere"
                                 : "printed closed form deviates at:" + list);
  return r;
}

/// Shape of every transfer-positive spectrum: odd positions all 0 or all
/// -1, even positions 2 mod 4 or 1 mod 4, shared difference valuation 1,
/// the derived set identities, the n/2 xor n/4 rule, and BFS distance
/// equal to the claimed communication distance.
inline SuiteResult suite_pst_structure(const Options& opt) {
  SuiteResult r{"pst-spectrum-structure"};
  for (i64 n = 2; n <= opt.max_n; ++n) {
    for (const DivisorSet& ds : enumerate_pst(n, false)) {
      const IcgGraph g = build_graph(ds);
      const IntegerSpectrum spec = spectrum_exact(g);
      const PstVerdict v = decide_pst(ds);
      const auto tag = [&](const char* what) {
        return [&, what] { return std::string(what) + " at " + detail::show_set(n, ds.divisors); };
      };
      r.expect(spectral_structure_check(ds, spec), tag("spectrum shape"));
      r.expect(v.common_valuation == std::optional<i64>{1}, tag("difference valuation != 1"));
      bool diffs_ok = true;
      for (i64 j = 0; j + 1 < n; ++j) {
        const i64 diff =
            spec.values[static_cast<size_t>(j + 1)] - spec.values[static_cast<size_t>(j)];
        diffs_ok = diffs_ok && ((diff % 4) + 4) % 4 == 2;
      }
      r.expect(diffs_ok, tag("difference outside +-(4N+2)"));
      const DivisorPartition part = partition_divisors(ds);
      r.expect(part.d0 == detail::scaled(part.d1star, 2), tag("D0 != 2(D1 \\ {n/2})"));
      r.expect(part.d1star == detail::scaled(part.d2star, 2), tag("D1* != 2(D2 \\ {n/4})"));
      const bool has_half = ds.contains(n / 2);
      const bool has_quarter = n % 4 == 0 && ds.contains(n / 4);
      r.expect(has_half != has_quarter, tag("n/2 xor n/4 violated"));
      const auto dist = graph_distance(g, 0, n / 2);
      r.expect(dist && v.pqcd && *dist == *v.pqcd && *v.pqcd == (has_half ? 1 : 2),
               tag("communication distance mismatch"));
    }
  }
  return r;
}

/// Adding n/4 vs adding n/2 to any base set free of both gives the same
/// verdict, for every eligible base with n <= 48.
inline SuiteResult suite_swap_theorem(const Options& opt) {
  SuiteResult r{"swap-theorem"};
  for (i64 n = 4; n <= std::min<i64>(48, opt.max_n); n += 4) {
    std::vector<i64> free;
    for (i64 d : proper_divisors(n))
      if (d != n / 2 && d != n / 4) free.push_back(d);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << free.size()); ++mask) {
      std::vector<i64> base;
      for (size_t i = 0; i < free.size(); ++i)
        if (mask & (std::uint32_t{1} << i)) base.push_back(free[i]);
      r.expect(swap_check(n, base),
               [&] { return "swap mismatch at base " + detail::show_set(n, base); });
    }
  }
  return r;
}

/// The cocktail-party sets D_n \ {n/2} transfer for every n in 4N.
inline SuiteResult suite_cocktail_party(const Options& opt) {
  SuiteResult r{"cocktail-party-family"};
  for (i64 n = 4; n <= opt.max_n; n += 4) {
    std::vector<i64> divisors = proper_divisors(n);
    std::erase(divisors, n / 2);
    r.expect(decide_pst(make_divisor_set(n, divisors)).has_pst,
             [&] { return "cocktail-party set failed at n=" + std::to_string(n); });
  }
  return r;
}

/// The two smallest transfer-positive graphs, with their distances.
inline SuiteResult suite_named_instances(const Options&) {
  SuiteResult r{"named-instances"};
  const PstVerdict k2 = decide_pst(make_divisor_set(2, {1}));
  r.expect(k2.has_pst && k2.pqcd == std::optional<int>{1},
           [] { return std::string("order-2 complete graph verdict wrong"); });
  const PstVerdict c4 = decide_pst(make_divisor_set(4, {1}));
  r.expect(c4.has_pst && c4.pqcd == std::optional<int>{2},
           [] { return std::string("4-cycle verdict wrong"); });
  return r;
}

// ---------------------------------------------------------------------------
// Fidelity layer
// ---------------------------------------------------------------------------

/// Row sums of |F(t)|^2 equal 1 on 100 random (graph, t) samples.
inline SuiteResult suite_unitarity(const Options& opt) {
  SuiteResult r{"fidelity-unitarity"};
  std::mt19937_64 rng(opt.seed + 8);
  std::uniform_real_distribution<double> time_dist(0.0, 2.0 * std::numbers::pi);
  for (int iter = 0; iter < 100; ++iter) {
    const i64 n = 2 + static_cast<i64>(rng() % std::max<i64>(1, opt.max_n - 1));
    const DivisorSet ds = detail::random_divisor_set(rng, n);
    const IntegerSpectrum spec = spectrum_exact(build_graph(ds));
    const double t = time_dist(rng);
    double total = 0.0;
    for (i64 b = 0; b < n; ++b) total += std::norm(transfer_amplitude(spec, 0, b, t));
    r.expect(std::abs(total - 1.0) <= 1e-9, [&] {
      return "row norm " + std::to_string(total) + " at t=" + std::to_string(t) + " for " +
             detail::show_set(n, ds.divisors);
    });
  }
  return r;
}

/// F(2*pi) is the identity on 100 random integral graphs (row 0 checked;
/// the rows are cyclic shifts of each other).
inline SuiteResult suite_periodicity(const Options& opt) {
  SuiteResult r{"fidelity-periodicity"};
  std::mt19937_64 rng(opt.seed + 9);
  for (int iter = 0; iter < 100; ++iter) {
    const i64 n = 2 + static_cast<i64>(rng() % std::max<i64>(1, opt.max_n - 1));
    const DivisorSet ds = detail::random_divisor_set(rng, n);
    const IntegerSpectrum spec = spectrum_exact(build_graph(ds));
    bool identity = verify_periodicity(spec);
    for (i64 b = 0; b < n && identity; ++b) {
      const auto amp = transfer_amplitude(spec, 0, b, 2.0 * std::numbers::pi);
      const double target = b == 0 ? 1.0 : 0.0;
      identity = std::abs(amp - target) <= 1e-9;
    }
    r.expect(identity,
             [&] { return "F(2pi) not identity for " + detail::show_set(n, ds.divisors); });
  }
  return r;
}

/// Every transfer-positive graph reaches |F(pi/2)| >= 1 - 1e-9 at the
/// antipodal pair.
inline SuiteResult suite_pst_fidelity(const Options& opt) {
  SuiteResult r{"pst-fidelity"};
  for (i64 n = 2; n <= opt.max_n; ++n)
    for (const DivisorSet& ds : enumerate_pst(n, false))
      r.expect(verify_pst_numeric(spectrum_exact(build_graph(ds)), 1e-9),
               [&] { return "fidelity below 1-1e-9 for " + detail::show_set(n, ds.divisors); });
  return r;
}

// ---------------------------------------------------------------------------

inline std::vector<SuiteResult> run_all(const Options& opt) {
  return {
      suite_ramanujan_dual(opt),
      suite_proposition1(opt),
      suite_parity_lemma(opt),
      suite_sign_flip(opt),
      suite_halving(opt),
      suite_ramanujan_reduction(opt),
      suite_spectrum_dual(opt),
      suite_spectrum_invariants(opt),
      suite_adjacency(opt),
      suite_integrality_roundtrip(opt),
      suite_odd_eigenvalue_existence(opt),
      suite_all_even(opt),
      suite_all_odd(opt),
      suite_equivalence_sweep(opt),
      suite_negative_regimes(opt),
      suite_counting(opt),
      suite_pst_structure(opt),
      suite_swap_theorem(opt),
      suite_cocktail_party(opt),
      suite_named_instances(opt),
      suite_unitarity(opt),
      suite_periodicity(opt),
      suite_pst_fidelity(opt),
  };
}

}  // namespace icgpst::verify
