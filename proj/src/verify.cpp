#include "kmshadow/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <thread>
#include <utility>

#include "kmshadow/binrep.hpp"

namespace kmshadow {

namespace {

constexpr std::uint64_t kSweepGuard = 10'000'000;  // hard n_max cap for sweeps
constexpr int kSubsetCap = 20;                     // hard m cap for 2^m loops

std::string describe_failure(const CheckReport& r) {
  std::string msg = r.check_id + " failed:";
  for (const auto& [key, val] : r.params) msg += " " + key + "=" + val;
  msg += " lhs=" + to_string(r.lhs) + " rhs=" + to_string(r.rhs);
  for (const auto& [key, val] : r.witness) msg += " " + key + "=" + val;
  return msg;
}

std::uint64_t to_u64_checked(const BigInt& v) {
  if (v < 0 || !v.fits_ulong_p())
    throw std::overflow_error("value " + to_string(v) + " does not fit a sweep table");
  return v.get_ui();
}

// Runs fn(block) for every block in [0, blocks), spread over up to `jobs`
// threads. fn must write only to its own block's output slot; the first
// exception aborts the pool and is rethrown.
void run_blocks(std::uint64_t blocks, int jobs,
                const std::function<void(std::uint64_t)>& fn) {
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  const std::uint64_t workers =
      std::min<std::uint64_t>(blocks, static_cast<std::uint64_t>(jobs));
  if (workers <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) fn(b);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex error_mu;
  std::exception_ptr first_error;
  auto worker = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const std::uint64_t b = next.fetch_add(1, std::memory_order_relaxed);
      if (b >= blocks) return;
      try {
        fn(b);
      } catch (...) {
        {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!first_error) first_error = std::current_exception();
        }
        stop.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

// del^k(x) for x = 0..x_max as machine words (values are <= x <= the sweep
// guard, so they always fit).
std::vector<std::uint64_t> km_table(std::uint64_t x_max, int k,
                                    const Budget& budget, const char* what) {
  std::vector<std::uint64_t> t(x_max + 1);
  for (std::uint64_t x = 0; x <= x_max; ++x) {
    if ((x & 0xfff) == 0) budget.enforce(what);
    t[x] = to_u64_checked(kruskal_macaulay(BigInt(static_cast<unsigned long>(x)), k));
  }
  return t;
}

// del_k(x) for x = 0..x_max. Values can exceed x (e.g. del_2(1) = 2) but
// stay below ~k*x + k^2, far from overflow at sweep scales.
std::vector<std::uint64_t> kk_table(std::uint64_t x_max, int k,
                                    const Budget& budget, const char* what) {
  std::vector<std::uint64_t> t(x_max + 1);
  for (std::uint64_t x = 0; x <= x_max; ++x) {
    if ((x & 0xfff) == 0) budget.enforce(what);
    t[x] = to_u64_checked(kruskal_katona(BigInt(static_cast<unsigned long>(x)), k));
  }
  return t;
}

bool is_binomial_form(std::uint64_t n, int order) {
  if (n == 0) return true;  // 0 = C(m, order) for any m < order
  KBinomialRep rep = decompose(BigInt(static_cast<unsigned long>(n)), order);
  for (int i = 1; i < order; ++i) {
    if (!rep.term_is_zero(i)) return false;
  }
  return true;
}

std::string format_u64(std::uint64_t v) { return std::to_string(v); }

std::string format_members(const Family& a) {
  std::string out;
  for (std::size_t i = 0; i < a.members.size(); ++i) {
    if (i) out += ' ';
    out += format_seq(a.members[i]);
  }
  return out.empty() ? "(none)" : out;
}

// Builds the aggregate report shape shared by all sweep-style checks:
// lhs = #passed, rhs = #checked, holds = equality = all passed.
CheckReport aggregate_report(std::string check_id,
                             std::vector<std::pair<std::string, std::string>> params,
                             std::uint64_t passed, std::uint64_t checked,
                             std::vector<std::pair<std::string, std::string>> witness) {
  CheckReport r;
  r.check_id = std::move(check_id);
  r.params = std::move(params);
  r.params.emplace_back("checked", format_u64(checked));
  r.params.emplace_back("passed", format_u64(passed));
  r.lhs = BigInt(static_cast<unsigned long>(passed));
  r.rhs = BigInt(static_cast<unsigned long>(checked));
  r.holds = passed == checked;
  r.equality = r.holds;
  r.witness = std::move(witness);
  return r;
}

}  // namespace

VerificationFailure::VerificationFailure(CheckReport report)
    : std::runtime_error(describe_failure(report)), report_(std::move(report)) {}

// ---- The main inequality ---------------------------------------------------

CheckReport check_main_inequality(int k, const BigInt& n, const BigInt& a) {
  if (k < 1) throw std::invalid_argument("check_main_inequality: k must be >= 1");
  if (a < 0 || a > n)
    throw std::invalid_argument("check_main_inequality: requires 0 <= a <= n");
  const BigInt rhs = kruskal_macaulay(n, k + 1);
  if (a >= rhs)
    throw std::invalid_argument(
        "check_main_inequality: hypothesis a < del^{k+1}(n) fails (a = " +
        to_string(a) + ", del^{k+1}(n) = " + to_string(rhs) +
        "); this is an input error, not a counterexample");
  CheckReport r;
  r.check_id = "main-inequality";
  r.params = {{"k", std::to_string(k)}, {"n", to_string(n)}, {"a", to_string(a)}};
  r.lhs = kruskal_macaulay(a, k) + kruskal_macaulay(n - a, k + 1);
  r.rhs = rhs;
  r.holds = r.lhs >= r.rhs;
  r.equality = r.lhs == r.rhs;
  if (!r.holds) r.witness = r.params;
  return r;
}

EqualityCatalog sweep_main_inequality(int k, const BigInt& n_max, int jobs,
                                      const Budget& budget,
                                      const ProgressFn& progress) {
  if (k < 1) throw std::invalid_argument("sweep_main_inequality: k must be >= 1");
  if (n_max < 0) throw std::invalid_argument("sweep_main_inequality: n_max must be >= 0");
  if (n_max > BigInt(static_cast<unsigned long>(kSweepGuard)))
    throw BudgetError("main-inequality sweep: n_max exceeds the 10^7 guard");
  const std::uint64_t top = to_u64_checked(n_max);

  const auto del_k1 = km_table(top, k + 1, budget, "main-inequality table build");
  const std::uint64_t a_hi =
      *std::max_element(del_k1.begin(), del_k1.end());
  const auto del_k = km_table(a_hi, k, budget, "main-inequality table build");

  struct BlockOut {
    std::vector<std::pair<BigInt, BigInt>> pairs;
    SweepStats stats;
    std::optional<CheckReport> failure;
  };
  constexpr std::uint64_t kBlock = 64;
  const std::uint64_t blocks = top / kBlock + 1;
  std::vector<BlockOut> out(blocks);
  std::atomic<std::uint64_t> done{0};

  run_blocks(blocks, jobs, [&](std::uint64_t b) {
    budget.enforce("main-inequality sweep");
    BlockOut& slot = out[b];
    const std::uint64_t lo = b * kBlock;
    const std::uint64_t hi = std::min(top + 1, lo + kBlock);
    for (std::uint64_t n = lo; n < hi && !slot.failure; ++n) {
      const std::uint64_t rhs = del_k1[n];
      for (std::uint64_t a = 1; a < rhs; ++a) {
        const std::uint64_t lhs = del_k[a] + del_k1[n - a];
        ++slot.stats.checked;
        if (lhs < rhs) {
          CheckReport fail;
          fail.check_id = "main-inequality";
          fail.params = {{"k", std::to_string(k)},
                         {"n", format_u64(n)},
                         {"a", format_u64(a)}};
          fail.lhs = BigInt(static_cast<unsigned long>(lhs));
          fail.rhs = BigInt(static_cast<unsigned long>(rhs));
          fail.holds = false;
          fail.witness = fail.params;
          slot.failure = std::move(fail);
          break;
        }
        if (lhs == rhs) {
          ++slot.stats.equal;
          if (is_binomial_form(n, k + 1)) {
            CheckReport fail;
            fail.check_id = "main-inequality-equality-clause";
            fail.params = {{"k", std::to_string(k)},
                           {"n", format_u64(n)},
                           {"a", format_u64(a)}};
            fail.lhs = BigInt(static_cast<unsigned long>(lhs));
            fail.rhs = BigInt(static_cast<unsigned long>(rhs));
            fail.holds = false;
            fail.witness = fail.params;
            fail.witness.emplace_back(
                "reason", "equality with a >= 1 at n of the form C(N, k+1)");
            slot.failure = std::move(fail);
            break;
          }
          slot.pairs.emplace_back(BigInt(static_cast<unsigned long>(n)),
                                  BigInt(static_cast<unsigned long>(a)));
        } else {
          ++slot.stats.strict;
        }
      }
    }
    if (progress) progress(done.fetch_add(1) + 1, blocks);
  });

  EqualityCatalog cat;
  cat.k = k;
  cat.n_max = n_max;
  for (BlockOut& slot : out) {
    if (slot.failure) throw VerificationFailure(std::move(*slot.failure));
    cat.stats.checked += slot.stats.checked;
    cat.stats.strict += slot.stats.strict;
    cat.stats.equal += slot.stats.equal;
    cat.pairs.insert(cat.pairs.end(),
                     std::make_move_iterator(slot.pairs.begin()),
                     std::make_move_iterator(slot.pairs.end()));
  }
  return cat;
}

CheckReport sharpness_witness(int k) {
  if (k < 2) throw std::invalid_argument("sharpness_witness: k must be >= 2");
  // Coefficients (k+2, k+1, ..., 5, 4, 2, 1): the tight low configuration
  // n_3 = 4, n_2 = 2, n_1 = 1 padded upward with the minimal admissible
  // coefficients n_i = i + 1, so the pattern survives as the canonical
  // (k+1)-representation of its own value.
  KBinomialRep rep;
  rep.order = k + 1;
  for (int i = k + 1; i >= 3; --i) rep.coeffs.push_back(i + 1);
  rep.coeffs.push_back(2);
  rep.coeffs.push_back(1);
  const BigInt n = value(rep);
  const BigInt a = kruskal_macaulay(n, k + 1);
  CheckReport r;
  r.check_id = "sharpness";
  r.params = {{"k", std::to_string(k)}, {"n", to_string(n)}, {"a", to_string(a)}};
  r.lhs = kruskal_macaulay(a, k) + kruskal_macaulay(n - a, k + 1);
  r.rhs = a - 1;  // del^{k+1}(n) - 1
  r.holds = r.lhs == r.rhs;
  r.equality = r.holds;
  if (!r.holds) r.witness = r.params;
  return r;
}

// ---- Shadow bounds ---------------------------------------------------------

namespace {

BigInt shadow_bound(FamilyKind kind, const BigInt& size, int k) {
  return kind == FamilyKind::kMultiset ? kruskal_macaulay(size, k)
                                       : kruskal_katona(size, k);
}

}  // namespace

CheckReport check_subset_shadow_bound(FamilyKind kind, int k, int m,
                                      const Budget& budget) {
  if (k < 1) throw std::invalid_argument("check_subset_shadow_bound: k must be >= 1");
  if (m < 0) throw std::invalid_argument("check_subset_shadow_bound: m must be >= 0");
  if (m > kSubsetCap)
    throw BudgetError("check_subset_shadow_bound: 2^" + std::to_string(m) +
                      " subsets exceed the exhaustive cap (m <= 20)");
  const Family prefix = enumerate_prefix(kind, k, BigInt(m));
  const Family universe = shadow(prefix);

  // Per-member shadow bitmasks over the full prefix's shadow universe.
  const std::size_t words = universe.members.empty() ? 1 : (universe.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> masks(
      prefix.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    Family one;
    one.kind = kind;
    one.length = k;
    one.members = {prefix.members[i]};
    for (const Seq& s : shadow(one).members) {
      const auto it = std::lower_bound(
          universe.members.begin(), universe.members.end(), s,
          [](const Seq& x, const Seq& y) { return lex_compare(x, y) < 0; });
      const std::size_t idx =
          static_cast<std::size_t>(it - universe.members.begin());
      masks[i][idx / 64] |= std::uint64_t{1} << (idx % 64);
    }
  }

  std::vector<std::uint64_t> bounds(static_cast<std::size_t>(m) + 1);
  for (int p = 0; p <= m; ++p)
    bounds[static_cast<std::size_t>(p)] =
        to_u64_checked(shadow_bound(kind, BigInt(p), k));

  std::uint64_t checked = 0, passed = 0;
  std::vector<std::pair<std::string, std::string>> witness;
  bool prefix_equality = true;

  // Lex prefixes must attain the bound with equality.
  {
    std::vector<std::uint64_t> acc(words, 0);
    for (int p = 0; p <= m; ++p) {
      if (p > 0) {
        const auto& mask = masks[static_cast<std::size_t>(p - 1)];
        for (std::size_t w = 0; w < words; ++w) acc[w] |= mask[w];
      }
      std::uint64_t card = 0;
      for (std::uint64_t w : acc) card += static_cast<std::uint64_t>(__builtin_popcountll(w));
      ++checked;
      if (card == bounds[static_cast<std::size_t>(p)]) {
        ++passed;
      } else {
        prefix_equality = false;
        if (witness.empty()) {
          witness = {{"prefix_size", std::to_string(p)},
                     {"shadow_size", format_u64(card)},
                     {"bound", format_u64(bounds[static_cast<std::size_t>(p)])}};
        }
      }
    }
  }

  // Every subset must satisfy the bound.
  const std::uint64_t total = std::uint64_t{1} << m;
  std::vector<std::uint64_t> acc(words);
  for (std::uint64_t s = 0; s < total; ++s) {
    if ((s & 0xfff) == 0) budget.enforce("subset shadow bound check");
    std::fill(acc.begin(), acc.end(), 0);
    int size = 0;
    for (int i = 0; i < m; ++i) {
      if (s >> i & 1) {
        ++size;
        const auto& mask = masks[static_cast<std::size_t>(i)];
        for (std::size_t w = 0; w < words; ++w) acc[w] |= mask[w];
      }
    }
    std::uint64_t card = 0;
    for (std::uint64_t w : acc) card += static_cast<std::uint64_t>(__builtin_popcountll(w));
    ++checked;
    if (card >= bounds[static_cast<std::size_t>(size)]) {
      ++passed;
    } else if (witness.empty()) {
      std::string members;
      for (int i = 0; i < m; ++i) {
        if (s >> i & 1) {
          if (!members.empty()) members += ' ';
          members += format_seq(prefix.members[static_cast<std::size_t>(i)]);
        }
      }
      witness = {{"subset", format_u64(s)},
                 {"family", members.empty() ? "(none)" : members},
                 {"shadow_size", format_u64(card)},
                 {"bound", format_u64(bounds[static_cast<std::size_t>(size)])}};
    }
  }

  return aggregate_report(
      "subset-shadow-bound",
      {{"kind", to_string(kind)},
       {"k", std::to_string(k)},
       {"m", std::to_string(m)},
       {"prefix_equality", prefix_equality ? "true" : "false"}},
      passed, checked, std::move(witness));
}

CheckReport check_shadow_identity(FamilyKind kind, int k, const BigInt& n) {
  const Family prefix = enumerate_prefix(kind, k, n);
  CheckReport r;
  r.check_id = "shadow-identity";
  r.params = {{"kind", to_string(kind)}, {"k", std::to_string(k)}, {"n", to_string(n)}};
  r.lhs = BigInt(static_cast<unsigned long>(shadow(prefix).size()));
  r.rhs = shadow_bound(kind, n, k);
  r.holds = r.lhs == r.rhs;
  r.equality = r.holds;
  if (!r.holds) r.witness = r.params;
  return r;
}

CheckReport sweep_shadow_identity(int k_max, const BigInt& n_max,
                                  const Budget& budget) {
  if (k_max < 1) throw std::invalid_argument("sweep_shadow_identity: k_max must be >= 1");
  if (n_max < 0) throw std::invalid_argument("sweep_shadow_identity: n_max must be >= 0");
  if (n_max > BigInt(1'000'000ul))
    throw BudgetError("shadow-identity sweep: n_max exceeds the 10^6 guard");
  const std::uint64_t top = to_u64_checked(n_max);

  std::uint64_t checked = 0, passed = 0;
  std::vector<std::pair<std::string, std::string>> witness;
  for (FamilyKind kind : {FamilyKind::kMultiset, FamilyKind::kSet}) {
    for (int k = 1; k <= k_max; ++k) {
      // Grow the prefix one member at a time, maintaining its shadow as a
      // set, so every n <= n_max is checked in one pass.
      std::set<Seq> shade;
      Seq member;
      for (std::uint64_t n = 0; n <= top; ++n) {
        if ((n & 0x3ff) == 0) budget.enforce("shadow-identity sweep");
        if (n > 0) {
          member = n == 1 ? first_seq(kind, k) : next_seq(kind, member);
          if (k == 1) {
            shade.insert(Seq{});
          } else {
            Seq sub(member.size() - 1);
            for (std::size_t drop = 0; drop < member.size(); ++drop) {
              std::size_t t = 0;
              for (std::size_t j = 0; j < member.size(); ++j) {
                if (j != drop) sub[t++] = member[j];
              }
              shade.insert(sub);
            }
          }
        }
        const BigInt expected =
            shadow_bound(kind, BigInt(static_cast<unsigned long>(n)), k);
        ++checked;
        if (BigInt(static_cast<unsigned long>(shade.size())) == expected) {
          ++passed;
        } else if (witness.empty()) {
          witness = {{"kind", to_string(kind)},
                     {"k", std::to_string(k)},
                     {"n", format_u64(n)},
                     {"shadow_size", format_u64(shade.size())},
                     {"expected", to_string(expected)}};
        }
      }
    }
  }
  return aggregate_report(
      "shadow-identity-sweep",
      {{"k_max", std::to_string(k_max)}, {"n_max", to_string(n_max)}},
      passed, checked, std::move(witness));
}

CheckReport check_decomposition_identity(const Family& a) {
  const FamilySplit split = split_family(a);
  CheckReport r;
  r.check_id = "decomposition-identity";
  r.params = {{"length", std::to_string(a.length)},
              {"size", std::to_string(a.size())}};
  const Family with_big =
      family_union(shadow(split.kept_ending_big), split.stripped_ending_big);
  const Family ending_one =
      family_union(split.stripped_ending_one, split.stripped_ending_big);
  r.lhs = BigInt(static_cast<unsigned long>(shadow(a).size()));
  r.rhs = BigInt(static_cast<unsigned long>(with_big.size())) +
          BigInt(static_cast<unsigned long>(shadow(ending_one).size()));
  r.holds = r.lhs == r.rhs;
  r.equality = r.holds;
  if (!r.holds) {
    r.witness = {{"family", format_members(a)}};
  }
  return r;
}

CheckReport sweep_decomposition_identity(int k_plus_1, int m, const Budget& budget) {
  if (k_plus_1 < 2)
    throw std::invalid_argument("sweep_decomposition_identity: requires length >= 2");
  if (m < 0) throw std::invalid_argument("sweep_decomposition_identity: m must be >= 0");
  if (m > kSubsetCap)
    throw BudgetError("sweep_decomposition_identity: 2^" + std::to_string(m) +
                      " subsets exceed the exhaustive cap (m <= 20)");
  const Family prefix = enumerate_prefix(FamilyKind::kMultiset, k_plus_1, BigInt(m));
  const std::uint64_t total = std::uint64_t{1} << m;
  std::uint64_t passed = 0;
  std::vector<std::pair<std::string, std::string>> witness;
  for (std::uint64_t s = 0; s < total; ++s) {
    if ((s & 0xff) == 0) budget.enforce("decomposition-identity sweep");
    Family sub;
    sub.kind = FamilyKind::kMultiset;
    sub.length = k_plus_1;
    for (int i = 0; i < m; ++i) {
      if (s >> i & 1) sub.members.push_back(prefix.members[static_cast<std::size_t>(i)]);
    }
    const CheckReport one = check_decomposition_identity(sub);
    if (one.holds) {
      ++passed;
    } else if (witness.empty()) {
      witness = {{"subset", format_u64(s)},
                 {"family", format_members(sub)},
                 {"lhs", to_string(one.lhs)},
                 {"rhs", to_string(one.rhs)}};
    }
  }
  return aggregate_report(
      "decomposition-identity-sweep",
      {{"k_plus_1", std::to_string(k_plus_1)}, {"m", std::to_string(m)}},
      passed, total, std::move(witness));
}

// ---- Step, extended-representation, and coefficient-chain properties -------

CheckReport check_step_property(int k, const BigInt& a_max) {
  if (k < 1) throw std::invalid_argument("check_step_property: k must be >= 1");
  if (a_max < 0) throw std::invalid_argument("check_step_property: a_max must be >= 0");
  if (a_max > BigInt(static_cast<unsigned long>(kSweepGuard)))
    throw BudgetError("step-property sweep: a_max exceeds the 10^7 guard");
  const std::uint64_t top = to_u64_checked(a_max);
  std::uint64_t checked = 0, passed = 0;
  std::vector<std::pair<std::string, std::string>> witness;
  BigInt prev = kruskal_macaulay(BigInt(0), k);
  for (std::uint64_t a = 0; a <= top; ++a) {
    const BigInt av(static_cast<unsigned long>(a));
    const BigInt cur = kruskal_macaulay(av + 1, k);
    const int expected = classify(av, k) == Parity::Short ? 1 : 0;
    ++checked;
    if (cur - prev == expected) {
      ++passed;
    } else if (witness.empty()) {
      witness = {{"a", format_u64(a)},
                 {"step", to_string(cur - prev)},
                 {"expected", std::to_string(expected)}};
    }
    prev = cur;
  }
  return aggregate_report(
      "step-property",
      {{"k", std::to_string(k)}, {"a_max", to_string(a_max)}},
      passed, checked, std::move(witness));
}

CheckReport check_extended_agreement(int k, const BigInt& a_max) {
  if (k < 1) throw std::invalid_argument("check_extended_agreement: k must be >= 1");
  if (a_max > BigInt(static_cast<unsigned long>(kSweepGuard)))
    throw BudgetError("extended-agreement sweep: a_max exceeds the 10^7 guard");
  const std::uint64_t top = a_max < 1 ? 0 : to_u64_checked(a_max);
  std::uint64_t checked = 0, passed = 0;
  std::vector<std::pair<std::string, std::string>> witness;
  auto fail = [&](std::uint64_t a, const std::string& reason) {
    if (witness.empty())
      witness = {{"a", format_u64(a)}, {"reason", reason}};
  };
  for (std::uint64_t a = 1; a <= top; ++a) {
    const BigInt av(static_cast<unsigned long>(a));
    const KBinomialRep rep = decompose(av, k);
    int v = 0;
    for (int i = 1; i <= k; ++i) {
      if (!rep.term_is_zero(i)) {
        v = i;
        break;
      }
    }
    const bool rule_exists = rep.coeff(v) >= v + 1;
    const std::optional<ExtendedRep> ext = extended_decompose(av, k);
    ++checked;
    bool ok = ext.has_value() == rule_exists;
    if (!ok) fail(a, "existence disagrees with the a_v >= v+1 rule");
    if (ok && ext) {
      try {
        if (extended_value(*ext) != av) {
          ok = false;
          fail(a, "extended coefficients do not reconstruct a");
        }
      } catch (const std::invalid_argument& e) {
        ok = false;
        fail(a, std::string("invalid extended coefficients: ") + e.what());
      }
      if (ok && kruskal_macaulay_extended(*ext) != kruskal_macaulay(av, k)) {
        ok = false;
        fail(a, "extended del^k disagrees with del^k");
      }
    }
    if (ok) ++passed;
  }
  return aggregate_report(
      "extended-agreement",
      {{"k", std::to_string(k)}, {"a_max", to_string(a_max)}},
      passed, checked, std::move(witness));
}

namespace {

CheckReport coefficient_chain_impl(int k, const BigInt& n_max, bool sweep_all_n,
                                   const Budget& budget) {
  if (k < 1) throw std::invalid_argument("coefficient chain: k must be >= 1");
  if (n_max < 0) throw std::invalid_argument("coefficient chain: n must be >= 0");
  if (n_max > BigInt(1'000'000ul))
    throw BudgetError("coefficient-chain sweep: n exceeds the 10^6 guard");
  const std::uint64_t top = to_u64_checked(n_max);

  // Top coefficients as machine words: tops_k1[x] for the (k+1)-representation
  // of x <= n_max, tops_k[a] for the k-representation of every admissible a.
  std::vector<long> tops_k1(top + 1);
  std::vector<std::uint64_t> del_k1(top + 1);
  for (std::uint64_t x = 0; x <= top; ++x) {
    if ((x & 0xfff) == 0) budget.enforce("coefficient-chain table build");
    const BigInt xv(static_cast<unsigned long>(x));
    tops_k1[x] = decompose(xv, k + 1).top();
    del_k1[x] = to_u64_checked(kruskal_macaulay(xv, k + 1));
  }
  const std::uint64_t a_hi = *std::max_element(del_k1.begin(), del_k1.end());
  std::vector<long> tops_k(a_hi + 1);
  for (std::uint64_t a = 0; a <= a_hi; ++a) {
    if ((a & 0xfff) == 0) budget.enforce("coefficient-chain table build");
    tops_k[a] = decompose(BigInt(static_cast<unsigned long>(a)), k).top();
  }

  std::uint64_t checked = 0, passed = 0;
  std::vector<std::pair<std::string, std::string>> witness;
  const std::uint64_t n_lo = sweep_all_n ? 0 : top;
  for (std::uint64_t n = n_lo; n <= top; ++n) {
    budget.enforce("coefficient-chain sweep");
    const long n_top = tops_k1[n];
    for (std::uint64_t a = 0; a < del_k1[n]; ++a) {
      const long a_top = tops_k[a];
      const long b_top = tops_k1[n - a];
      ++checked;
      if (a_top < n_top && n_top <= b_top + 1) {
        ++passed;
      } else if (witness.empty()) {
        witness = {{"n", format_u64(n)},
                   {"a", format_u64(a)},
                   {"a_top", std::to_string(a_top)},
                   {"n_top", std::to_string(n_top)},
                   {"b_top", std::to_string(b_top)}};
      }
    }
  }
  return aggregate_report(
      sweep_all_n ? "coefficient-chain-sweep" : "coefficient-chain",
      {{"k", std::to_string(k)},
       {sweep_all_n ? "n_max" : "n", to_string(n_max)}},
      passed, checked, std::move(witness));
}

}  // namespace

CheckReport check_coefficient_chain(int k, const BigInt& n) {
  return coefficient_chain_impl(k, n, false, Budget::unlimited());
}

CheckReport sweep_coefficient_chain(int k, const BigInt& n_max, const Budget& budget) {
  return coefficient_chain_impl(k, n_max, true, budget);
}

// ---- Bjorner-Vrecica partition bounds --------------------------------------

namespace {

std::string format_parts(const std::vector<BigInt>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += to_string(parts[i]);
  }
  out += ')';
  return out;
}

}  // namespace

CheckReport check_bjorner_vrecica(int k, const std::vector<BigInt>& parts,
                                  BvVariant variant) {
  if (k < 1) throw std::invalid_argument("check_bjorner_vrecica: k must be >= 1");
  for (const BigInt& p : parts) {
    if (p < 0)
      throw std::invalid_argument("check_bjorner_vrecica: parts must be >= 0");
  }
  const bool partial = variant == BvVariant::kPartial;
  if (partial) {
    if (parts.empty() || static_cast<int>(parts.size()) > k)
      throw std::invalid_argument(
          "check_bjorner_vrecica: the partial variant needs 1..k parts");
  } else if (static_cast<int>(parts.size()) != k + 1) {
    throw std::invalid_argument(
        "check_bjorner_vrecica: the augmented variant needs exactly k+1 parts");
  }
  const int terms = partial ? static_cast<int>(parts.size()) : k;
  BigInt total = 0;
  for (const BigInt& p : parts) total += p;
  BigInt bound = partial ? BigInt(0) : BigInt(1);
  for (int i = 0; i < terms; ++i) {
    const BigInt next =
        static_cast<std::size_t>(i + 1) < parts.size() ? parts[static_cast<std::size_t>(i + 1)] : BigInt(0);
    bound += std::max(next, kruskal_macaulay(parts[static_cast<std::size_t>(i)], k - i));
  }
  CheckReport r;
  r.check_id = "bjorner-vrecica";
  r.params = {{"k", std::to_string(k)},
              {"variant", partial ? "partial" : "augmented"},
              {"parts", format_parts(parts)}};
  r.lhs = bound;
  r.rhs = kruskal_macaulay(partial ? total : total + 1, k);
  r.holds = r.lhs >= r.rhs;
  r.equality = r.lhs == r.rhs;
  if (!r.holds) r.witness = r.params;
  return r;
}

CheckReport sweep_bjorner_vrecica(int k_max, std::uint64_t samples, long part_max,
                                  const Budget& budget, const ProgressFn& progress) {
  if (k_max < 1) throw std::invalid_argument("sweep_bjorner_vrecica: k_max must be >= 1");
  if (part_max < 0) throw std::invalid_argument("sweep_bjorner_vrecica: part_max must be >= 0");
  std::mt19937_64 rng(0x6b6d736861646f77ULL);  // fixed seed: reproducible sweeps
  auto draw = [&](long hi) {
    return BigInt(static_cast<unsigned long>(rng() % (static_cast<std::uint64_t>(hi) + 1)));
  };
  std::uint64_t checked = 0, passed = 0;
  std::vector<std::pair<std::string, std::string>> witness;
  const std::uint64_t total_steps = static_cast<std::uint64_t>(k_max) * 2;
  std::uint64_t steps = 0;
  for (int k = 1; k <= k_max; ++k) {
    for (BvVariant variant : {BvVariant::kPartial, BvVariant::kAugmented}) {
      for (std::uint64_t s = 0; s < samples; ++s) {
        if ((s & 0xff) == 0) budget.enforce("partition-bound sweep");
        std::vector<BigInt> parts;
        const std::size_t count =
            variant == BvVariant::kPartial
                ? 1 + static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(k))
                : static_cast<std::size_t>(k) + 1;
        parts.reserve(count);
        for (std::size_t i = 0; i < count; ++i) parts.push_back(draw(part_max));
        const CheckReport one = check_bjorner_vrecica(k, parts, variant);
        ++checked;
        if (one.holds) {
          ++passed;
        } else if (witness.empty()) {
          witness = one.params;
          witness.emplace_back("lhs", to_string(one.lhs));
          witness.emplace_back("rhs", to_string(one.rhs));
        }
      }
      ++steps;
      if (progress) progress(steps, total_steps);
    }
  }
  return aggregate_report(
      "bjorner-vrecica-sweep",
      {{"k_max", std::to_string(k_max)},
       {"samples", format_u64(samples)},
       {"part_max", std::to_string(part_max)}},
      passed, checked, std::move(witness));
}

// ---- Two-family bound -------------------------------------------------------

CheckReport check_two_family_bound(const Family& a, const Family& b) {
  if (a.kind != FamilyKind::kMultiset || b.kind != FamilyKind::kMultiset)
    throw std::invalid_argument("check_two_family_bound: requires multiset families");
  if (a.length < 1 || b.length != a.length + 1)
    throw std::invalid_argument(
        "check_two_family_bound: B's length must be A's length + 1 (>= 2)");
  const int k = a.length;
  const BigInt total(static_cast<unsigned long>(a.size() + b.size()));
  const BigInt threshold = kruskal_macaulay(total, k + 1);
  if (BigInt(static_cast<unsigned long>(a.size())) >= threshold)
    throw std::invalid_argument(
        "check_two_family_bound: hypothesis |A| < del^{k+1}(|A|+|B|) fails (|A| = " +
        std::to_string(a.size()) + ", bound = " + to_string(threshold) + ")");
  CheckReport r;
  r.check_id = "two-family-bound";
  r.params = {{"k", std::to_string(k)},
              {"size_a", std::to_string(a.size())},
              {"size_b", std::to_string(b.size())}};
  r.lhs = BigInt(static_cast<unsigned long>(shadow(a).size())) +
          BigInt(static_cast<unsigned long>(shadow(b).size()));
  r.rhs = threshold;
  r.holds = r.lhs >= r.rhs;
  r.equality = r.lhs == r.rhs;
  if (!r.holds)
    r.witness = {{"family_a", format_members(a)}, {"family_b", format_members(b)}};
  return r;
}

// ---- Observational max-term inequality --------------------------------------

CheckReport check_eckhoff_wegner(int k, const BigInt& n, const BigInt& a) {
  if (k < 1) throw std::invalid_argument("check_eckhoff_wegner: k must be >= 1");
  if (a < 0 || a > n)
    throw std::invalid_argument("check_eckhoff_wegner: requires 0 <= a <= n");
  CheckReport r;
  r.check_id = "eckhoff-wegner";
  r.params = {{"k", std::to_string(k)}, {"n", to_string(n)}, {"a", to_string(a)}};
  const BigInt rest = n - a;
  r.lhs = std::max(kruskal_katona(a, k), rest) + kruskal_katona(rest, k + 1);
  r.rhs = kruskal_katona(n, k + 1);
  r.holds = r.lhs >= r.rhs;
  r.equality = r.lhs == r.rhs;
  if (!r.holds) r.witness = r.params;
  return r;
}

EwObservations sweep_eckhoff_wegner(int k, const BigInt& n_max,
                                    const Budget& budget,
                                    const ProgressFn& progress) {
  if (k < 1) throw std::invalid_argument("sweep_eckhoff_wegner: k must be >= 1");
  if (n_max < 0) throw std::invalid_argument("sweep_eckhoff_wegner: n_max must be >= 0");
  if (n_max > BigInt(1'000'000ul))
    throw BudgetError("eckhoff-wegner sweep: n_max exceeds the 10^6 guard");
  const std::uint64_t top = to_u64_checked(n_max);
  const auto kk_k = kk_table(top, k, budget, "eckhoff-wegner table build");
  const auto kk_k1 = kk_table(top, k + 1, budget, "eckhoff-wegner table build");

  EwObservations obs;
  obs.k = k;
  obs.n_max = n_max;
  for (std::uint64_t n = 0; n <= top; ++n) {
    budget.enforce("eckhoff-wegner sweep");
    const std::uint64_t rhs = kk_k1[n];
    for (std::uint64_t a = 0; a <= n; ++a) {
      const std::uint64_t rest = n - a;
      const std::uint64_t lhs = std::max(kk_k[a], rest) + kk_k1[rest];
      ++obs.stats.checked;
      if (lhs >= rhs) {
        if (lhs == rhs)
          ++obs.stats.equal;
        else
          ++obs.stats.strict;
      } else {
        CheckReport viol;
        viol.check_id = "eckhoff-wegner";
        viol.params = {{"k", std::to_string(k)},
                       {"n", format_u64(n)},
                       {"a", format_u64(a)}};
        viol.lhs = BigInt(static_cast<unsigned long>(lhs));
        viol.rhs = BigInt(static_cast<unsigned long>(rhs));
        viol.holds = false;
        viol.witness = viol.params;
        obs.violations.push_back(std::move(viol));
      }
    }
    if (progress && (n & 0x3ff) == 0) progress(n + 1, top + 1);
  }
  return obs;
}

}  // namespace kmshadow
