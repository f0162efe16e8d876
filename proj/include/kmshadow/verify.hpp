#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kmshadow/bigint.hpp"
#include "kmshadow/families.hpp"

namespace kmshadow {

// Outcome of one verified statement. For inequality checks holds is
// lhs >= rhs with lhs always the side that must dominate; for identity
// checks holds is lhs == rhs. Aggregate sweep reports store
// lhs = #passed, rhs = #checked, so holds keeps the same reading.
// witness is nonempty exactly when the check fails and carries the
// least failing parameter tuple.
struct CheckReport {
  std::string check_id;
  std::vector<std::pair<std::string, std::string>> params;
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
  bool equality = false;
  std::vector<std::pair<std::string, std::string>> witness;
};

struct SweepStats {
  std::uint64_t checked = 0;
  std::uint64_t strict = 0;
  std::uint64_t equal = 0;
};

// All pairs (n, a) with 1 <= a < del^{k+1}(n) attaining equality in
//   del^k(a) + del^{k+1}(n-a) >= del^{k+1}(n),
// for 0 <= n <= n_max, sorted by n then a. Never contains a pair whose n
// equals C(N, k+1): for those n equality occurs only at a = 0.
struct EqualityCatalog {
  int k = 0;
  BigInt n_max;
  std::vector<std::pair<BigInt, BigInt>> pairs;
  SweepStats stats;
};

// Thrown by sweep engines when a statement that must hold fails; carries
// the minimal failing report.
class VerificationFailure : public std::runtime_error {
 public:
  explicit VerificationFailure(CheckReport report);
  const CheckReport& report() const { return report_; }

 private:
  CheckReport report_;
};

// Called by long sweeps as (done, total) in units of work blocks.
using ProgressFn = std::function<void(std::uint64_t, std::uint64_t)>;

// ---- The main inequality ---------------------------------------------------

// del^k(a) + del^{k+1}(n-a) >= del^{k+1}(n). Requires k >= 1 and
// 0 <= a <= n with a < del^{k+1}(n); violations of the hypothesis are
// input errors (std::invalid_argument), never mathematical failures:
// at a = del^{k+1}(n) the inequality genuinely fails by 1 (see
// sharpness_witness), so the hypothesis cannot be weakened.
CheckReport check_main_inequality(int k, const BigInt& n, const BigInt& a);

// Checks every admissible (n, a) with n <= n_max and 1 <= a < del^{k+1}(n),
// cataloging the equality pairs. Throws VerificationFailure if the
// inequality ever fails or an equality pair lands on n = C(N, k+1);
// BudgetError on deadline or n_max > 10^7. Byte-identical catalogs for
// every jobs value.
EqualityCatalog sweep_main_inequality(int k, const BigInt& n_max, int jobs = 1,
                                      const Budget& budget = Budget::unlimited(),
                                      const ProgressFn& progress = nullptr);

// The boundary case a = del^{k+1}(n) for the coefficient pattern
// (k+2, k+1, ..., 5, 4, 2, 1): the left side comes out exactly
// del^{k+1}(n) - 1, so the hypothesis a < del^{k+1}(n) is tight.
// Reports lhs = del^k(a) + del^{k+1}(n-a), rhs = del^{k+1}(n) - 1,
// holds = equality = (lhs == rhs). Requires k >= 2.
CheckReport sharpness_witness(int k);

// ---- Shadow bounds ---------------------------------------------------------

// For every subset A of the first m members of M_k (or S_k), verifies
// |shadow(A)| >= del^k(|A|) (multiset) or del_k(|A|) (set), and that every
// lex prefix attains the bound with equality. Aggregate report:
// lhs = #passed subsets, rhs = 2^m; params include prefix_equality.
// Requires m <= 20 (BudgetError above).
CheckReport check_subset_shadow_bound(FamilyKind kind, int k, int m,
                                      const Budget& budget = Budget::unlimited());

// |shadow(enumerate_prefix(kind, k, n))| equals del^k(n) / del_k(n) exactly;
// holds = equality.
CheckReport check_shadow_identity(FamilyKind kind, int k, const BigInt& n);

// check_shadow_identity for both kinds, every k <= k_max, every n <= n_max,
// with the shadow grown incrementally. Aggregate report.
CheckReport sweep_shadow_identity(int k_max, const BigInt& n_max,
                                  const Budget& budget = Budget::unlimited());

// |shadow(A)| = |shadow(kept_ending_big) u stripped_ending_big|
//             + |shadow(stripped_ending_one u stripped_ending_big)|
// for a multiset family A of length >= 2; holds = equality.
CheckReport check_decomposition_identity(const Family& a);

// check_decomposition_identity for every subset of the first m members of
// M_{k_plus_1}. Aggregate report. Requires m <= 20.
CheckReport sweep_decomposition_identity(int k_plus_1, int m,
                                         const Budget& budget = Budget::unlimited());

// ---- Step, extended-representation, and coefficient-chain properties -------

// del^k(a+1) - del^k(a) is 1 when a is k-short and 0 when a is k-long,
// for all 0 <= a <= a_max. Aggregate report.
CheckReport check_step_property(int k, const BigInt& a_max);

// For 1 <= a <= a_max: the extended representation exists iff the lowest
// nonzero coefficient satisfies a_v >= v + 1; when it exists it
// reconstructs a and agrees with del^k(a). Aggregate report.
CheckReport check_extended_agreement(int k, const BigInt& a_max);

// For 0 <= a < del^{k+1}(n) with b = n - a: the top coefficient of the
// k-representation of a is < the top coefficient of the (k+1)-representation
// of n, which is <= the top coefficient of the (k+1)-representation of b,
// plus 1. Aggregate report over a for this one n.
CheckReport check_coefficient_chain(int k, const BigInt& n);

// check_coefficient_chain for every n <= n_max. Aggregate report.
CheckReport sweep_coefficient_chain(int k, const BigInt& n_max,
                                    const Budget& budget = Budget::unlimited());

// ---- Bjorner-Vrecica partition bounds --------------------------------------

// kPartial: parts = (n_0..n_r) with r < k, and
//   del^k(sum n_i) <= sum_{i=0..r} max{n_{i+1}, del^{k-i}(n_i)},
// reading the out-of-range n_{r+1} as 0.
// kAugmented: parts = (n_0..n_k), and
//   del^k(1 + sum n_i) <= 1 + sum_{i=0..k-1} max{n_{i+1}, del^{k-i}(n_i)}.
// The report stores the bound as lhs and the del^k value as rhs, so
// holds = lhs >= rhs as everywhere else.
enum class BvVariant { kPartial, kAugmented };

CheckReport check_bjorner_vrecica(int k, const std::vector<BigInt>& parts,
                                  BvVariant variant);

// Randomized sweep: for each k <= k_max and each variant, draws `samples`
// part vectors with entries uniform in [0, part_max] (kPartial also draws
// r uniform in [0, k-1]) from a fixed-seed generator. Aggregate report;
// deterministic for fixed arguments.
CheckReport sweep_bjorner_vrecica(int k_max, std::uint64_t samples, long part_max,
                                  const Budget& budget = Budget::unlimited(),
                                  const ProgressFn& progress = nullptr);

// ---- Two-family bound -------------------------------------------------------

// For multiset families A of length k and B of length k+1 with
// |A| < del^{k+1}(|A| + |B|) (hypothesis; violations are input errors):
//   |shadow(A)| + |shadow(B)| >= del^{k+1}(|A| + |B|).
CheckReport check_two_family_bound(const Family& a, const Family& b);

// ---- Observational max-term inequality --------------------------------------

// max(del_k(a), n - a) + del_{k+1}(n - a) >= del_{k+1}(n) for n >= a >= 0.
// Purely observational: a failing report is data, not an error — the
// transcription fails at (k=1, n=1, a=1) and the checker catalogs such
// violations instead of asserting.
CheckReport check_eckhoff_wegner(int k, const BigInt& n, const BigInt& a);

struct EwObservations {
  int k = 0;
  BigInt n_max;
  SweepStats stats;                     // over all pairs n <= n_max, a <= n
  std::vector<CheckReport> violations;  // holds = false reports, (n, a) order
};

EwObservations sweep_eckhoff_wegner(int k, const BigInt& n_max,
                                    const Budget& budget = Budget::unlimited(),
                                    const ProgressFn& progress = nullptr);

}  // namespace kmshadow
