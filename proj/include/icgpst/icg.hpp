#pragma once

// Integral circulant graphs: divisor-set validation, gcd symbol classes,
// adjacency, connectivity, the exact integer spectrum in DFT index order,
// the 2-adic divisor partition, integrality detection for arbitrary
// circulant symbols, and BFS distance.

#include "icgpst/numtheory.hpp"

#include <algorithm>
#include <optional>

namespace icgpst {

/// A validated set of proper divisors of n; the defining datum of an
/// integral circulant graph.
struct DivisorSet {
  i64 n = 0;
  std::vector<i64> divisors;  // ascending, duplicate-free, each d | n with 1 <= d < n

  bool contains(i64 d) const {
    return std::binary_search(divisors.begin(), divisors.end(), d);
  }
};

inline DivisorSet make_divisor_set(i64 n, std::vector<i64> divisors) {
  if (n < 2)
    throw std::invalid_argument("graph order must be at least 2, got " + std::to_string(n));
  if (n > kMaxOrder)
    throw std::invalid_argument("graph order " + std::to_string(n) +
                                " exceeds the supported bound 2^31-1");
  if (divisors.empty()) throw std::invalid_argument("divisor set must be nonempty");
  std::sort(divisors.begin(), divisors.end());
  divisors.erase(std::unique(divisors.begin(), divisors.end()), divisors.end());
  for (i64 d : divisors) {
    if (d < 1 || d >= n)
      throw std::invalid_argument(std::to_string(d) + " is not a proper divisor of " +
                                  std::to_string(n));
    if (n % d != 0)
      throw std::invalid_argument(std::to_string(d) + " does not divide " + std::to_string(n));
  }
  return DivisorSet{n, std::move(divisors)};
}

/// G_n(d): the residues k in 1..n-1 with gcd(k, n) = d.
inline std::vector<i64> gn_class(i64 n, i64 d) {
  if (n < 2) throw std::invalid_argument("gn_class: n must be at least 2");
  if (d < 1 || d >= n || n % d != 0)
    throw std::invalid_argument("gn_class: " + std::to_string(d) +
                                " is not a proper divisor of " + std::to_string(n));
  std::vector<i64> members;
  for (i64 k = d; k < n; k += d)
    if (std::gcd(k, n) == d) members.push_back(k);
  return members;
}

struct IcgGraph {
  DivisorSet divisor_set;
  std::vector<i64> symbol;  // ascending; closed under k -> n-k
  i64 degree = 0;
  bool connected = false;

  i64 order() const { return divisor_set.n; }
};

inline IcgGraph build_graph(const DivisorSet& ds) {
  const i64 n = ds.n;
  IcgGraph g;
  g.divisor_set = ds;
  for (i64 k = 1; k < n; ++k)
    if (ds.contains(std::gcd(k, n))) g.symbol.push_back(k);
  g.degree = static_cast<i64>(g.symbol.size());

  i64 totient_sum = 0;
  for (i64 d : ds.divisors) totient_sum += euler_phi(n / d);
  if (totient_sum != g.degree)
    throw std::logic_error("build_graph: symbol size disagrees with the totient degree sum");

  i64 common = n;
  for (i64 d : ds.divisors) common = std::gcd(common, d);
  g.connected = (common == 1);
  return g;
}

inline bool adjacent(const IcgGraph& g, i64 a, i64 b) {
  const i64 n = g.order();
  if (a < 0 || a >= n || b < 0 || b >= n)
    throw std::invalid_argument("adjacent: vertex out of range 0..n-1");
  if (a == b) return false;
  i64 diff = (a - b) % n;
  if (diff < 0) diff += n;
  return g.divisor_set.contains(std::gcd(diff, n));
}

/// Eigenvalues in DFT index order: values[j] belongs to character j of Z_n.
/// Never sorted; the transfer criterion reads consecutive indices.
struct IntegerSpectrum {
  i64 n = 0;
  std::vector<i64> values;
};

/// lambda_j = sum over d in D of c(j, n/d).
inline IntegerSpectrum spectrum_exact(const IcgGraph& g) {
  const i64 n = g.order();
  IntegerSpectrum spec{n, {}};
  spec.values.reserve(static_cast<size_t>(n));
  for (i64 j = 0; j < n; ++j) {
    i64 lambda = 0;
    for (i64 d : g.divisor_set.divisors) lambda += ramanujan(j, n / d);
    spec.values.push_back(lambda);
  }
  return spec;
}

/// lambda_j = sum over s in the symbol of exp(2*pi*i*j*s / n), rounded.
/// Disagreement with the exact route beyond 1e-6 is fatal.
inline IntegerSpectrum spectrum_oracle(const IcgGraph& g) {
  const i64 n = g.order();
  std::vector<std::complex<double>> root(static_cast<size_t>(n));
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (i64 r = 0; r < n; ++r) root[static_cast<size_t>(r)] = std::polar(1.0, step * static_cast<double>(r));

  IntegerSpectrum spec{n, {}};
  spec.values.reserve(static_cast<size_t>(n));
  for (i64 j = 0; j < n; ++j) {
    std::complex<double> sum{0.0, 0.0};
    for (i64 s : g.symbol) sum += root[static_cast<size_t>((j * s) % n)];
    const double rounded = std::round(sum.real());
    if (std::abs(sum.real() - rounded) >= 1e-6 || std::abs(sum.imag()) >= 1e-6)
      throw std::logic_error("spectrum_oracle: residual above 1e-6 at j=" + std::to_string(j));
    spec.values.push_back(static_cast<i64>(rounded));
  }
  return spec;
}

/// The 2-adic divisor classes D_i = {d in D : S_2(n/d) = i} together with
/// the derived sets used by the transfer characterization.
struct DivisorPartition {
  std::vector<i64> d0, d1, d2;  // S_2(n/d) = 0, 1, 2
  std::vector<i64> d3tilde;     // S_2(n/d) >= 3
  std::vector<i64> d1tilde;     // d0 union d1
  std::vector<i64> d1star;      // d1 without n/2
  std::vector<i64> d2star;      // d2 without n/4
};

inline DivisorPartition partition_divisors(const DivisorSet& ds) {
  DivisorPartition part;
  const i64 n = ds.n;
  for (i64 d : ds.divisors) {
    const i64 v = two_adic(n / d);
    if (v == 0)
      part.d0.push_back(d);
    else if (v == 1)
      part.d1.push_back(d);
    else if (v == 2)
      part.d2.push_back(d);
    else
      part.d3tilde.push_back(d);
  }
  std::merge(part.d0.begin(), part.d0.end(), part.d1.begin(), part.d1.end(),
             std::back_inserter(part.d1tilde));
  part.d1star = part.d1;
  if (n % 2 == 0) std::erase(part.d1star, n / 2);
  part.d2star = part.d2;
  if (n % 4 == 0) std::erase(part.d2star, n / 4);
  return part;
}

/// Result of testing whether a raw circulant symbol is a union of gcd
/// classes. When it is not, `witness` names an element whose class is
/// incomplete.
struct IntegralityCheck {
  std::optional<DivisorSet> divisor_set;
  std::optional<i64> witness;
  bool integral() const { return divisor_set.has_value(); }
};

inline IntegralityCheck integrality_check(i64 n, std::vector<i64> symbol) {
  if (n < 2) throw std::invalid_argument("integrality_check: n must be at least 2");
  if (n > kMaxOrder)
    throw std::invalid_argument("integrality_check: n exceeds the supported bound 2^31-1");
  if (symbol.empty()) throw std::invalid_argument("integrality_check: symbol must be nonempty");
  std::sort(symbol.begin(), symbol.end());
  symbol.erase(std::unique(symbol.begin(), symbol.end()), symbol.end());
  for (i64 s : symbol)
    if (s < 1 || s >= n)
      throw std::invalid_argument("integrality_check: symbol element " + std::to_string(s) +
                                  " outside 1..n-1");
  for (i64 s : symbol)
    if (!std::binary_search(symbol.begin(), symbol.end(), n - s))
      throw std::invalid_argument("integrality_check: symbol is not closed under k -> n-k (" +
                                  std::to_string(n - s) + " is missing)");

  std::vector<i64> recovered;
  for (i64 s : symbol) {
    const i64 d = std::gcd(s, n);
    for (i64 k : gn_class(n, d))
      if (!std::binary_search(symbol.begin(), symbol.end(), k))
        return IntegralityCheck{std::nullopt, s};
    recovered.push_back(d);
  }
  std::sort(recovered.begin(), recovered.end());
  recovered.erase(std::unique(recovered.begin(), recovered.end()), recovered.end());
  return IntegralityCheck{make_divisor_set(n, std::move(recovered)), std::nullopt};
}

/// BFS shortest-path length from a to b; nullopt across components.
inline std::optional<i64> graph_distance(const IcgGraph& g, i64 a, i64 b) {
  const i64 n = g.order();
  if (a < 0 || a >= n || b < 0 || b >= n)
    throw std::invalid_argument("graph_distance: vertex out of range 0..n-1");
  if (a == b) return 0;
  std::vector<i64> dist(static_cast<size_t>(n), -1);
  std::vector<i64> frontier;
  frontier.reserve(static_cast<size_t>(n));
  dist[static_cast<size_t>(a)] = 0;
  frontier.push_back(a);
  for (size_t head = 0; head < frontier.size(); ++head) {
    const i64 u = frontier[head];
    for (i64 s : g.symbol) {
      const i64 v = (u + s) % n;
      if (dist[static_cast<size_t>(v)] != -1) continue;
      dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
      if (v == b) return dist[static_cast<size_t>(v)];
      frontier.push_back(v);
    }
  }
  return std::nullopt;
}

}  // namespace icgpst
