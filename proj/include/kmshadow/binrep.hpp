#pragma once

#include <optional>
#include <vector>

#include "kmshadow/bigint.hpp"

namespace kmshadow {

// Binomial coefficient C(m, j) for machine-word m (possibly negative) and
// j >= 0. Returns 0 whenever m < j, including all negative m; this makes the
// vanishing terms of the Kruskal-Macaulay sum drop out without special cases
// (C(i-2, i-1) and C(-1, 0) are both 0).
BigInt binomial(long m, int j);

// The k-binomial representation of n >= 0:
//
//   n = C(n_k, k) + C(n_{k-1}, k-1) + ... + C(n_1, 1),
//   0 <= n_1 < n_2 < ... < n_k.
//
// Unique for every (n, k). Positions whose term is zero carry n_i = i-1.
// coeffs stores [n_k, n_{k-1}, ..., n_1].
struct KBinomialRep {
  int order = 0;              // k
  std::vector<long> coeffs;   // size k, top coefficient first

  long coeff(int i) const { return coeffs[static_cast<std::size_t>(order - i)]; }
  long top() const { return coeffs.front(); }
  // A zero term at position i is exactly n_i = i-1.
  bool term_is_zero(int i) const { return coeff(i) < i; }
};

// Greedy descent: n_k is the largest m with C(m, k) <= n, recurse on the
// remainder. Exact binary search, no floating point. Throws
// std::invalid_argument for n < 0 or k < 1 and std::overflow_error if a
// coefficient would not fit a machine word (only reachable at k = 1 with
// astronomically large n).
KBinomialRep decompose(const BigInt& n, int k);

// Inverse of decompose. Validates 0 <= n_1 < ... < n_k and throws
// std::invalid_argument on violation.
BigInt value(const KBinomialRep& rep);

// Kruskal-Macaulay function of n at order k:
//   del^k(n) = C(n_k - 1, k - 1) + ... + C(n_1 - 1, 0),
// over the full k-term representation (zero terms vanish by the binomial
// convention). Equals |shadow(FM_k(n))|.
BigInt kruskal_macaulay(const BigInt& n, int k);

// Kruskal-Katona function of n at order k:
//   del_k(n) = sum of C(n_i, i - 1) over the NONZERO terms only.
// Zero terms must be omitted: a padded n_i = i-1 would contribute
// C(i-1, i-1) = 1 and break del_k(n) = |shadow(FS_k(n))| (e.g. n=3, k=2).
BigInt kruskal_katona(const BigInt& n, int k);

// n is k-short when n_1 = 0, k-long when n_1 >= 1. Controls the step of
// del^k: del^k(n+1) - del^k(n) is 1 for short n and 0 for long n.
enum class Parity { Short, Long };

Parity classify(const BigInt& n, int k);

// Extended k-binomial representation of a >= 1:
//
//   a = C(a'_k, k) + ... + C(a'_1, 1) + C(a'_0, 0),
//   0 <= a'_0 = a'_1 - 1 < a'_1 < ... < a'_k.
//
// coeffs stores [a'_k, ..., a'_1, a'_0] (size k+1).
struct ExtendedRep {
  int order = 0;              // k
  std::vector<long> coeffs;

  long coeff(int i) const { return coeffs[static_cast<std::size_t>(order - i)]; }
};

// Exists iff the lowest nonzero term C(a_v, v) of decompose(a, k) has
// a_v >= v + 1; built by splitting that term along the Pascal chain.
// Returns nullopt when no extended representation exists. Throws
// std::invalid_argument for a < 1 (a = 0 has no extended representation).
std::optional<ExtendedRep> extended_decompose(const BigInt& a, int k);

// Validating inverse: sum of C(a'_i, i). Throws on invariant violation.
BigInt extended_value(const ExtendedRep& rep);

// del_e^k(a) = sum over i = 1..k of C(a'_i - 1, i - 1). Agrees with
// kruskal_macaulay(a, k) whenever the extended representation exists.
BigInt kruskal_macaulay_extended(const ExtendedRep& rep);

// Pascal identity expansion for m > j >= 0:
//   C(m, j) = C(m-1, j) + C(m-2, j-1) + ... + C(m-j, 1) + C(m-j-1, 0),
// returned as the j+1 terms in that order. Throws for m <= j.
std::vector<BigInt> pascal_chain(long m, int j);

// Maximum number of translated copies of a rational simplex with k+1 points
// among n points: n - del^k(n). Always >= 0.
BigInt max_translates(const BigInt& n, int k);

}  // namespace kmshadow
