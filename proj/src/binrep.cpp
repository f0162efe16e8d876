#include "kmshadow/binrep.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace kmshadow {

namespace {

// Coefficients must stay well clear of LONG_MAX so the galloping upper bound
// below cannot overflow.
constexpr long kCoeffMax = std::numeric_limits<long>::max() / 4;

}  // namespace

BigInt parse_bigint(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty numeral");
  for (char c : text) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("not a nonnegative decimal numeral: '" + text + "'");
  }
  BigInt v;
  if (mpz_set_str(v.get_mpz_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("not a nonnegative decimal numeral: '" + text + "'");
  return v;
}

BigInt binomial(long m, int j) {
  if (j < 0) throw std::invalid_argument("binomial: j must be >= 0");
  if (m < j) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m),
               static_cast<unsigned long>(j));
  return r;
}

namespace {

// Largest m >= i-1 with C(m, i) <= rem. Gallops to bracket, then binary
// searches; every comparison is exact.
long top_coefficient(const BigInt& rem, int i) {
  if (rem == 0) return i - 1;
  long lo = i;  // C(i, i) = 1 <= rem
  long hi = i + 1;
  while (binomial(hi, i) <= rem) {
    lo = hi;
    if (hi > kCoeffMax)
      throw std::overflow_error("decompose: coefficient exceeds machine word");
    hi *= 2;
  }
  while (hi - lo > 1) {
    long mid = lo + (hi - lo) / 2;
    if (binomial(mid, i) <= rem)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

KBinomialRep decompose(const BigInt& n, int k) {
  if (k < 1) throw std::invalid_argument("decompose: k must be >= 1");
  if (n < 0) throw std::invalid_argument("decompose: n must be >= 0");
  KBinomialRep rep;
  rep.order = k;
  rep.coeffs.resize(static_cast<std::size_t>(k));
  BigInt rem = n;
  for (int i = k; i >= 1; --i) {
    long m = top_coefficient(rem, i);
    rep.coeffs[static_cast<std::size_t>(k - i)] = m;
    rem -= binomial(m, i);
  }
  // Greedy maximality forces strict decrease and a zero remainder.
  return rep;
}

BigInt value(const KBinomialRep& rep) {
  if (rep.order < 1 || rep.coeffs.size() != static_cast<std::size_t>(rep.order))
    throw std::invalid_argument("value: order/coefficient size mismatch");
  if (rep.coeff(1) < 0)
    throw std::invalid_argument("value: coefficients must be nonnegative");
  for (int i = 2; i <= rep.order; ++i) {
    if (rep.coeff(i) <= rep.coeff(i - 1))
      throw std::invalid_argument("value: coefficients must be strictly increasing");
  }
  BigInt total = 0;
  for (int i = 1; i <= rep.order; ++i) total += binomial(rep.coeff(i), i);
  return total;
}

BigInt kruskal_macaulay(const BigInt& n, int k) {
  KBinomialRep rep = decompose(n, k);
  BigInt total = 0;
  for (int i = 1; i <= k; ++i) total += binomial(rep.coeff(i) - 1, i - 1);
  return total;
}

BigInt kruskal_katona(const BigInt& n, int k) {
  KBinomialRep rep = decompose(n, k);
  BigInt total = 0;
  for (int i = 1; i <= k; ++i) {
    if (rep.term_is_zero(i)) continue;
    total += binomial(rep.coeff(i), i - 1);
  }
  return total;
}

Parity classify(const BigInt& n, int k) {
  KBinomialRep rep = decompose(n, k);
  return rep.coeff(1) == 0 ? Parity::Short : Parity::Long;
}

std::optional<ExtendedRep> extended_decompose(const BigInt& a, int k) {
  if (a < 1)
    throw std::invalid_argument("extended_decompose: a = 0 has no extended representation");
  KBinomialRep rep = decompose(a, k);
  int v = 0;  // lowest position with a nonzero term; exists since a >= 1
  for (int i = 1; i <= k; ++i) {
    if (!rep.term_is_zero(i)) {
      v = i;
      break;
    }
  }
  long av = rep.coeff(v);
  if (av < v + 1) return std::nullopt;
  // Split C(a_v, v) along the Pascal chain:
  //   a'_i = a_v - v - 1 + i for i = 0..v, higher coefficients unchanged.
  ExtendedRep ext;
  ext.order = k;
  ext.coeffs.resize(static_cast<std::size_t>(k) + 1);
  for (int i = k; i > v; --i)
    ext.coeffs[static_cast<std::size_t>(k - i)] = rep.coeff(i);
  for (int i = v; i >= 0; --i)
    ext.coeffs[static_cast<std::size_t>(k - i)] = av - v - 1 + i;
  return ext;
}

BigInt extended_value(const ExtendedRep& rep) {
  if (rep.order < 1 || rep.coeffs.size() != static_cast<std::size_t>(rep.order) + 1)
    throw std::invalid_argument("extended_value: order/coefficient size mismatch");
  if (rep.coeff(0) < 0 || rep.coeff(0) != rep.coeff(1) - 1)
    throw std::invalid_argument("extended_value: requires 0 <= a'_0 = a'_1 - 1");
  for (int i = 2; i <= rep.order; ++i) {
    if (rep.coeff(i) <= rep.coeff(i - 1))
      throw std::invalid_argument("extended_value: coefficients must be strictly increasing");
  }
  BigInt total = 0;
  for (int i = 0; i <= rep.order; ++i) total += binomial(rep.coeff(i), i);
  return total;
}

BigInt kruskal_macaulay_extended(const ExtendedRep& rep) {
  BigInt total = 0;
  for (int i = 1; i <= rep.order; ++i) total += binomial(rep.coeff(i) - 1, i - 1);
  return total;
}

std::vector<BigInt> pascal_chain(long m, int j) {
  if (j < 0) throw std::invalid_argument("pascal_chain: j must be >= 0");
  if (m <= j) throw std::invalid_argument("pascal_chain: requires m > j");
  std::vector<BigInt> terms;
  terms.reserve(static_cast<std::size_t>(j) + 1);
  for (int t = 0; t <= j; ++t) terms.push_back(binomial(m - 1 - t, j - t));
  return terms;
}

BigInt max_translates(const BigInt& n, int k) {
  return n - kruskal_macaulay(n, k);
}

}  // namespace kmshadow
