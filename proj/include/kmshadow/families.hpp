#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmshadow/bigint.hpp"

namespace kmshadow {

// A member of M_k (nonincreasing) or S_k (strictly decreasing): a tuple of
// positive machine-word integers. The empty sequence (k = 0) is valid; it is
// the sole element of the length-0 universe.
using Seq = std::vector<int>;

enum class FamilyKind { kMultiset, kSet };

const char* to_string(FamilyKind kind);  // "multiset" / "set"

// Entries >= 1 and ordered per kind: nonincreasing for multisets, strictly
// decreasing for sets.
bool is_valid_seq(FamilyKind kind, const Seq& x);

// Dictionary order on equal-length sequences: the first differing index
// decides. Throws std::invalid_argument on a length mismatch.
std::strong_ordering lex_compare(const Seq& x, const Seq& y);

// A finite, duplicate-free set of same-length sequences of one kind.
// members is kept sorted ascending by lex_compare.
struct Family {
  FamilyKind kind = FamilyKind::kMultiset;
  int length = 0;            // length of every member, kept even when empty
  std::vector<Seq> members;  // sorted, duplicate-free

  std::size_t size() const { return members.size(); }
  bool contains(const Seq& x) const;
};

// Validates every member against (kind, length), sorts, and silently drops
// duplicates. Throws std::invalid_argument on an invalid member.
Family make_family(FamilyKind kind, int length, std::vector<Seq> members);

// Union of two families of identical kind and length.
Family family_union(const Family& a, const Family& b);

// Lex-least member: all 1s for multisets, (k, k-1, ..., 1) for sets.
Seq first_seq(FamilyKind kind, int k);

// Lex successor within M_k / S_k: increment the rightmost position that can
// grow, reset the suffix to its minimal valid completion. Always exists
// (both universes are unbounded above). Requires k >= 1.
Seq next_seq(FamilyKind kind, const Seq& x);

inline constexpr std::uint64_t kDefaultEnumerationCap = 2'000'000;

// FM_k(n) / FS_k(n): the lexicographically first n members. Successive calls
// are prefixes of each other. Throws std::invalid_argument for k < 1 or
// n < 0, BudgetError when n exceeds cap.
Family enumerate_prefix(FamilyKind kind, int k, const BigInt& n,
                        std::uint64_t cap = kDefaultEnumerationCap);

// All length-(k-1) subsequences of members of A, duplicate-free. For k = 1
// and A nonempty the result is the singleton {()}. Throws
// std::invalid_argument for length-0 input families.
Family shadow(const Family& a);

// x with an entry 1 appended; valid in M_{k+1} for any multiset x (including
// the empty sequence).
Seq concat_one(const Seq& x);

// Split of a multiset family A of length k+1 >= 2 by its members' tails:
//   stripped_ending_one: x of length k with x*1 in A and x ending in 1
//   stripped_ending_big: x of length k with x*1 in A and x ending >= 2
//   kept_ending_big:     members of A whose last entry is >= 2, untouched
// Reconstruction: A = (stripped_ending_one*1) u (stripped_ending_big*1)
// u kept_ending_big, pairwise disjoint.
struct FamilySplit {
  Family stripped_ending_one;
  Family stripped_ending_big;
  Family kept_ending_big;
};

// Throws std::invalid_argument for set-kind families or length < 2.
FamilySplit split_family(const Family& a);

// Entrywise decrement. Preserves cardinality and shadow cardinality. Throws
// std::invalid_argument if any entry equals 1.
Family shift_down(const Family& a);

// Family file format:
//   kind=<multiset|set> k=<int>
//   3,1
//   2,2
// One member per line, comma-separated positive integers; blank lines and
// lines starting with '#' are skipped. The parser rejects malformed lines,
// wrong lengths, out-of-order entries, and duplicates, reporting the
// offending line number.
class FamilyParseError : public std::runtime_error {
 public:
  FamilyParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

Family parse_family(std::istream& in);
Family parse_family_file(const std::string& path);  // adds the path to errors

// Inverse of parse_family; members in sorted order. Requires length >= 1
// (length-0 members have no line representation).
std::string format_family(const Family& a);

// Display form of one sequence: "(3,1)" / "()".
std::string format_seq(const Seq& x);

}  // namespace kmshadow
