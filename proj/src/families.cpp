#include "kmshadow/families.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <utility>

namespace kmshadow {

const char* to_string(FamilyKind kind) {
  return kind == FamilyKind::kMultiset ? "multiset" : "set";
}

bool is_valid_seq(FamilyKind kind, const Seq& x) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < 1) return false;
    if (j > 0) {
      if (kind == FamilyKind::kMultiset ? x[j - 1] < x[j] : x[j - 1] <= x[j])
        return false;
    }
  }
  return true;
}

std::strong_ordering lex_compare(const Seq& x, const Seq& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("lex_compare: sequences have different lengths");
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] != y[j]) return x[j] <=> y[j];
  }
  return std::strong_ordering::equal;
}

namespace {

bool lex_less(const Seq& x, const Seq& y) { return lex_compare(x, y) < 0; }

}  // namespace

bool Family::contains(const Seq& x) const {
  return std::binary_search(members.begin(), members.end(), x, lex_less);
}

Family make_family(FamilyKind kind, int length, std::vector<Seq> members) {
  if (length < 0) throw std::invalid_argument("make_family: negative length");
  for (const Seq& x : members) {
    if (static_cast<int>(x.size()) != length)
      throw std::invalid_argument("make_family: member " + format_seq(x) +
                                  " has length " + std::to_string(x.size()) +
                                  ", expected " + std::to_string(length));
    if (!is_valid_seq(kind, x))
      throw std::invalid_argument("make_family: member " + format_seq(x) +
                                  " is not a valid " +
                                  std::string(to_string(kind)) + " sequence");
  }
  std::sort(members.begin(), members.end(), lex_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return Family{kind, length, std::move(members)};
}

Family family_union(const Family& a, const Family& b) {
  if (a.kind != b.kind || a.length != b.length)
    throw std::invalid_argument("family_union: kind/length mismatch");
  Family out;
  out.kind = a.kind;
  out.length = a.length;
  out.members.reserve(a.size() + b.size());
  std::set_union(a.members.begin(), a.members.end(), b.members.begin(),
                 b.members.end(), std::back_inserter(out.members), lex_less);
  return out;
}

Seq first_seq(FamilyKind kind, int k) {
  if (k < 0) throw std::invalid_argument("first_seq: negative length");
  Seq x(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j)
    x[static_cast<std::size_t>(j)] = kind == FamilyKind::kMultiset ? 1 : k - j;
  return x;
}

Seq next_seq(FamilyKind kind, const Seq& x) {
  if (x.empty()) throw std::invalid_argument("next_seq: empty sequence has no successor");
  if (!is_valid_seq(kind, x))
    throw std::invalid_argument("next_seq: invalid " + std::string(to_string(kind)) +
                                " sequence " + format_seq(x));
  Seq y = x;
  const std::size_t k = y.size();
  // Rightmost position that can grow without breaking the order constraint
  // against its left neighbor; position 0 always can.
  std::size_t j = k - 1;
  if (kind == FamilyKind::kMultiset) {
    while (j > 0 && y[j] + 1 > y[j - 1]) --j;
    ++y[j];
    for (std::size_t t = j + 1; t < k; ++t) y[t] = 1;
  } else {
    while (j > 0 && y[j] + 1 >= y[j - 1]) --j;
    ++y[j];
    for (std::size_t t = j + 1; t < k; ++t) y[t] = static_cast<int>(k - t);
  }
  return y;
}

Family enumerate_prefix(FamilyKind kind, int k, const BigInt& n, std::uint64_t cap) {
  if (k < 1) throw std::invalid_argument("enumerate_prefix: k must be >= 1");
  if (n < 0) throw std::invalid_argument("enumerate_prefix: n must be >= 0");
  if (n > BigInt(static_cast<unsigned long>(cap)))
    throw BudgetError("enumeration of " + to_string(n) +
                      " members exceeds the cap of " + std::to_string(cap));
  const std::uint64_t count = n.get_ui();
  Family out;
  out.kind = kind;
  out.length = k;
  out.members.reserve(count);
  if (count == 0) return out;
  Seq x = first_seq(kind, k);
  out.members.push_back(x);
  for (std::uint64_t i = 1; i < count; ++i) {
    x = next_seq(kind, x);
    out.members.push_back(x);
  }
  return out;
}

Family shadow(const Family& a) {
  if (a.length < 1)
    throw std::invalid_argument("shadow: length-0 families have no shadow");
  Family out;
  out.kind = a.kind;
  out.length = a.length - 1;
  out.members.reserve(a.size() * static_cast<std::size_t>(a.length));
  Seq sub(static_cast<std::size_t>(a.length) - 1);
  for (const Seq& y : a.members) {
    for (std::size_t drop = 0; drop < y.size(); ++drop) {
      std::size_t t = 0;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (j != drop) sub[t++] = y[j];
      }
      out.members.push_back(sub);
    }
  }
  std::sort(out.members.begin(), out.members.end(), lex_less);
  out.members.erase(std::unique(out.members.begin(), out.members.end()),
                    out.members.end());
  return out;
}

Seq concat_one(const Seq& x) {
  Seq y = x;
  y.push_back(1);
  return y;
}

FamilySplit split_family(const Family& a) {
  if (a.kind != FamilyKind::kMultiset)
    throw std::invalid_argument("split_family: requires a multiset family");
  if (a.length < 2)
    throw std::invalid_argument("split_family: requires member length >= 2");
  std::vector<Seq> ones, bigs, kept;
  for (const Seq& y : a.members) {
    if (y.back() == 1) {
      Seq x(y.begin(), y.end() - 1);
      (x.back() == 1 ? ones : bigs).push_back(std::move(x));
    } else {
      kept.push_back(y);
    }
  }
  return FamilySplit{
      make_family(a.kind, a.length - 1, std::move(ones)),
      make_family(a.kind, a.length - 1, std::move(bigs)),
      make_family(a.kind, a.length, std::move(kept)),
  };
}

Family shift_down(const Family& a) {
  std::vector<Seq> shifted;
  shifted.reserve(a.size());
  for (const Seq& y : a.members) {
    Seq x = y;
    for (int& e : x) {
      if (e < 2)
        throw std::invalid_argument("shift_down: member " + format_seq(y) +
                                    " has an entry equal to 1");
      --e;
    }
    shifted.push_back(std::move(x));
  }
  return make_family(a.kind, a.length, std::move(shifted));
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_positive_int(const std::string& token, int line, const char* what) {
  int v = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || token.empty())
    throw FamilyParseError(line, std::string(what) + " '" + token +
                                     "' is not a positive integer");
  if (v < 1)
    throw FamilyParseError(line, std::string(what) + " '" + token +
                                     "' must be >= 1");
  return v;
}

}  // namespace

Family parse_family(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw FamilyParseError(1, "missing header 'kind=<multiset|set> k=<int>'");
  std::istringstream header(trim(line));
  std::string kind_field, k_field, extra;
  header >> kind_field >> k_field;
  if (header >> extra)
    throw FamilyParseError(1, "unexpected token '" + extra + "' in header");
  FamilyKind kind;
  if (kind_field == "kind=multiset")
    kind = FamilyKind::kMultiset;
  else if (kind_field == "kind=set")
    kind = FamilyKind::kSet;
  else
    throw FamilyParseError(1, "expected kind=multiset or kind=set, got '" +
                                  kind_field + "'");
  if (k_field.rfind("k=", 0) != 0)
    throw FamilyParseError(1, "expected k=<int>, got '" + k_field + "'");
  const int k = parse_positive_int(k_field.substr(2), 1, "length");

  std::vector<Seq> members;
  std::set<Seq> seen;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    Seq x;
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = body.find(',', pos);
      const std::string token =
          trim(body.substr(pos, comma == std::string::npos ? comma : comma - pos));
      x.push_back(parse_positive_int(token, line_no, "entry"));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (static_cast<int>(x.size()) != k)
      throw FamilyParseError(line_no, "expected " + std::to_string(k) +
                                          " entries, got " +
                                          std::to_string(x.size()));
    if (!is_valid_seq(kind, x))
      throw FamilyParseError(line_no, "sequence " + format_seq(x) + " is not " +
                                          (kind == FamilyKind::kMultiset
                                               ? "nonincreasing"
                                               : "strictly decreasing"));
    if (!seen.insert(x).second)
      throw FamilyParseError(line_no, "duplicate member " + format_seq(x));
    members.push_back(std::move(x));
  }
  return make_family(kind, k, std::move(members));
}

Family parse_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open family file: " + path);
  try {
    return parse_family(in);
  } catch (const FamilyParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string format_family(const Family& a) {
  if (a.length < 1)
    throw std::invalid_argument(
        "format_family: length-0 members have no line representation");
  std::string out = "kind=" + std::string(to_string(a.kind)) +
                    " k=" + std::to_string(a.length) + "\n";
  for (const Seq& x : a.members) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(x[j]);
    }
    out += '\n';
  }
  return out;
}

std::string format_seq(const Seq& x) {
  std::string out = "(";
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(x[j]);
  }
  out += ')';
  return out;
}

}  // namespace kmshadow
