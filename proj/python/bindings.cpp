// Python bindings for the kmshadow core: representations, shadow functions,
// family enumeration, and the headline verification checks. Arbitrary
// precision values cross the boundary as native Python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "kmshadow/binrep.hpp"
#include "kmshadow/families.hpp"
#include "kmshadow/verify.hpp"

namespace py = pybind11;

namespace pybind11 {
namespace detail {

// mpz_class <-> Python int, via the decimal string form both sides parse
// exactly.
template <>
struct type_caster<kmshadow::BigInt> {
 public:
  PYBIND11_TYPE_CASTER(kmshadow::BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    PyObject* text = PyObject_Str(src.ptr());
    if (!text) {
      PyErr_Clear();
      return false;
    }
    const char* chars = PyUnicode_AsUTF8(text);
    if (!chars) {
      Py_DECREF(text);
      PyErr_Clear();
      return false;
    }
    value = kmshadow::BigInt(chars, 10);
    Py_DECREF(text);
    return true;
  }

  static handle cast(const kmshadow::BigInt& src, return_value_policy, handle) {
    return PyLong_FromString(src.get_str().c_str(), nullptr, 10);
  }
};

}  // namespace detail
}  // namespace pybind11

namespace {

using kmshadow::BigInt;
using kmshadow::CheckReport;
using kmshadow::Family;
using kmshadow::FamilyKind;
using kmshadow::KBinomialRep;
using kmshadow::Seq;

FamilyKind parse_kind(const std::string& kind) {
  if (kind == "multiset") return FamilyKind::kMultiset;
  if (kind == "set") return FamilyKind::kSet;
  throw std::invalid_argument("kind must be 'multiset' or 'set', got '" + kind + "'");
}

py::dict report_to_dict(const CheckReport& r) {
  py::dict params;
  for (const auto& [key, value] : r.params) params[key.c_str()] = value;
  py::dict witness;
  for (const auto& [key, value] : r.witness) witness[key.c_str()] = value;
  py::dict d;
  d["check_id"] = r.check_id;
  d["params"] = params;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["holds"] = r.holds;
  d["equality"] = r.equality;
  d["witness"] = witness;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact k-binomial representations, Kruskal-Macaulay and Kruskal-Katona "
      "shadow functions, lexicographic prefix families, and verification "
      "checks";
  m.attr("__version__") = kmshadow::kVersion;

  m.def("binomial", &kmshadow::binomial, py::arg("m"), py::arg("j"),
        "Binomial coefficient C(m, j); zero whenever m < j.");

  m.def(
      "decompose",
      [](const BigInt& n, int k) {
        return kmshadow::decompose(n, k).coeffs;
      },
      py::arg("n"), py::arg("k"),
      "Coefficients [n_k, ..., n_1] of the unique k-binomial representation "
      "n = C(n_k, k) + ... + C(n_1, 1) with 0 <= n_1 < ... < n_k.");

  m.def(
      "value",
      [](const std::vector<long>& coeffs) {
        KBinomialRep rep;
        rep.order = static_cast<int>(coeffs.size());
        rep.coeffs = coeffs;
        return kmshadow::value(rep);
      },
      py::arg("coefficients"),
      "The value represented by coefficients [n_k, ..., n_1]; inverse of "
      "decompose.");

  m.def(
      "kruskal_macaulay",
      [](const BigInt& n, int k) { return kmshadow::kruskal_macaulay(n, k); },
      py::arg("n"), py::arg("k"),
      "del^k(n): the shadow size of the first n multisets of M_k in "
      "lexicographic order.");

  m.def(
      "kruskal_katona",
      [](const BigInt& n, int k) { return kmshadow::kruskal_katona(n, k); },
      py::arg("n"), py::arg("k"),
      "del_k(n): the shadow size of the first n sets of S_k in lexicographic "
      "order.");

  m.def(
      "is_short",
      [](const BigInt& n, int k) {
        return kmshadow::classify(n, k) == kmshadow::Parity::Short;
      },
      py::arg("n"), py::arg("k"),
      "True when the k-binomial representation of n has n_1 = 0.");

  m.def(
      "extended_decompose",
      [](const BigInt& a, int k) -> std::optional<std::vector<long>> {
        const auto ext = kmshadow::extended_decompose(a, k);
        if (!ext) return std::nullopt;
        return ext->coeffs;
      },
      py::arg("a"), py::arg("k"),
      "Coefficients [a'_k, ..., a'_0] of the extended representation, or None "
      "when it does not exist.");

  m.def(
      "max_translates",
      [](const BigInt& n, int k) { return kmshadow::max_translates(n, k); },
      py::arg("n"), py::arg("k"),
      "n - del^k(n), the greatest number of disjoint lexicographic "
      "translates.");

  m.def(
      "enumerate_prefix",
      [](const std::string& kind, int k, const BigInt& n) {
        return kmshadow::enumerate_prefix(parse_kind(kind), k, n).members;
      },
      py::arg("kind"), py::arg("k"), py::arg("n"),
      "The first n members of M_k ('multiset') or S_k ('set') in "
      "lexicographic order.");

  m.def(
      "shadow",
      [](const std::string& kind, int k, const std::vector<Seq>& members) {
        const Family fam = kmshadow::make_family(parse_kind(kind), k, members);
        return kmshadow::shadow(fam).members;
      },
      py::arg("kind"), py::arg("k"), py::arg("members"),
      "All length-(k-1) subsequences of the given length-k sequences, sorted "
      "lexicographically.");

  m.def(
      "check_main_inequality",
      [](int k, const BigInt& n, const BigInt& a) {
        return report_to_dict(kmshadow::check_main_inequality(k, n, a));
      },
      py::arg("k"), py::arg("n"), py::arg("a"),
      "Checks del^k(a) + del^{k+1}(n-a) >= del^{k+1}(n) for one admissible "
      "(k, n, a).");

  m.def(
      "sweep_main_inequality",
      [](int k, const BigInt& n_max, int jobs) {
        const kmshadow::EqualityCatalog cat =
            kmshadow::sweep_main_inequality(k, n_max, jobs);
        py::list pairs;
        for (const auto& [n, a] : cat.pairs)
          pairs.append(py::make_tuple(py::cast(n), py::cast(a)));
        py::dict stats;
        stats["checked"] = cat.stats.checked;
        stats["strict"] = cat.stats.strict;
        stats["equal"] = cat.stats.equal;
        py::dict d;
        d["k"] = cat.k;
        d["n_max"] = cat.n_max;
        d["pairs"] = pairs;
        d["stats"] = stats;
        return d;
      },
      py::arg("k"), py::arg("n_max"), py::arg("jobs") = 1,
      "Catalogs every equality pair (n, a) of the main inequality with "
      "n <= n_max; raises on any failure.");

  m.def(
      "sharpness_witness",
      [](int k) { return report_to_dict(kmshadow::sharpness_witness(k)); },
      py::arg("k"),
      "The boundary witness showing the hypothesis a < del^{k+1}(n) cannot "
      "be weakened (k >= 2).");

  m.def(
      "check_eckhoff_wegner",
      [](int k, const BigInt& n, const BigInt& a) {
        return report_to_dict(kmshadow::check_eckhoff_wegner(k, n, a));
      },
      py::arg("k"), py::arg("n"), py::arg("a"),
      "Observational max-term inequality check; a report with holds=False is "
      "data, not an error.");

  py::register_exception<kmshadow::BudgetError>(m, "BudgetError");
  py::register_exception<kmshadow::VerificationFailure>(m, "VerificationFailure");
}
