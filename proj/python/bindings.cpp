#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dedekind/admissible.hpp"
#include "dedekind/scan.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Python int <-> mpz_class through the decimal representation.
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    const std::string text = py::str(src);
    return value.set_str(text, 10) == 0;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

// Rat -> fractions.Fraction.
template <>
struct type_caster<dedekind::Rat> {
  PYBIND11_TYPE_CASTER(dedekind::Rat, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
    mpz_class num, den;
    if (num.set_str(py::str(src.attr("numerator")), 10) != 0) return false;
    if (den.set_str(py::str(src.attr("denominator")), 10) != 0) return false;
    value = dedekind::rat_normalize(num, den);
    return true;
  }

  static handle cast(const dedekind::Rat& v, return_value_policy, handle) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::object num = py::reinterpret_steal<py::object>(
        PyLong_FromString(v.num().get_str().c_str(), nullptr, 10));
    py::object den = py::reinterpret_steal<py::object>(
        PyLong_FromString(v.den().get_str().c_str(), nullptr, 10));
    return fraction(num, den).release();
  }
};

}  // namespace pybind11::detail

namespace {

using namespace dedekind;

ClassicalFact parse_fact(const std::string& kind) {
  if (kind == "inverse" || kind == "INVERSE") return ClassicalFact::kInverse;
  if (kind == "negation" || kind == "NEGATION") return ClassicalFact::kNegation;
  if (kind == "vanish" || kind == "VANISH") return ClassicalFact::kVanish;
  if (kind == "one" || kind == "one_formula" || kind == "ONE_FORMULA") {
    return ClassicalFact::kOneFormula;
  }
  throw py::value_error("unknown fact kind: " + kind);
}

py::object witness_dict(u64 t) {
  const Admissibility adm = is_admissible(t);
  if (!adm.admissible) return py::none();
  const AdmissibleWitness& w = *adm.witness;
  py::list factors;
  for (const auto& pp : w.factorization) factors.append(py::make_tuple(pp.prime, pp.exponent));
  py::dict d;
  d["t"] = w.t;
  d["factorization"] = factors;
  d["m"] = w.m;
  d["doubled"] = w.doubled;
  d["roots"] = w.roots;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Dedekind sums and reciprocity identity residuals";

  py::register_exception<Error>(m, "DedekindError", PyExc_ValueError);

  m.def(
      "egcd",
      [](const Int& x, const Int& y) {
        const auto e = egcd(x, y);
        return py::make_tuple(e.g, e.u, e.v);
      },
      py::arg("x"), py::arg("y"));
  m.def("mod_inverse", &mod_inverse, py::arg("x"), py::arg("m"));
  m.def("sawtooth", &sawtooth, py::arg("num"), py::arg("den"));
  m.def(
      "dedekind_sum",
      [](const Int& a, const Int& b, bool naive) {
        const auto args = SumArgs::make(a, b);
        return naive ? dedekind_sum_naive(args) : dedekind_sum_fast(args);
      },
      py::arg("a"), py::arg("b"), py::arg("naive") = false, "s(a, b)");
  m.def(
      "normalized_sum", [](const Int& a, const Int& b) { return normalized_sum(a, b); },
      py::arg("a"), py::arg("b"), "S(a, b) = 12 s(a, b)");

  m.def("reciprocity_residual", &reciprocity_residual, py::arg("a"), py::arg("b"));
  m.def("du_zhang_residual", &du_zhang_residual, py::arg("a"), py::arg("b"));
  m.def(
      "theorem1_residual",
      [](const Int& t, const Int& a, const Int& b) {
        return theorem1_residual(Theorem1Instance::make(t, a, b));
      },
      py::arg("t"), py::arg("a"), py::arg("b"));
  m.def(
      "corollary2_residual",
      [](const Int& t, const Int& a, const Int& b) {
        const auto [branch, residual] = corollary2_residual(Theorem1Instance::make(t, a, b));
        return py::make_tuple(std::string(branch_label(branch)), residual);
      },
      py::arg("t"), py::arg("a"), py::arg("b"));
  m.def(
      "three_term_residual",
      [](const Int& a, const Int& b, const Int& c, const Int& d, std::optional<Int> j,
         std::optional<Int> k) {
        if (j.has_value() != k.has_value()) throw py::value_error("pass both j and k or neither");
        const auto w = j ? ThreeTermWitness::make(a, b, c, d, *j, *k)
                         : ThreeTermWitness::make(a, b, c, d);
        return three_term_residual(w);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("j") = py::none(),
      py::arg("k") = py::none());
  m.def(
      "girstmair_th4_residual",
      [](const Int& a, const Int& b, const Int& t) {
        return girstmair_th4_residual(Eq22Instance::make(a, b, t));
      },
      py::arg("a"), py::arg("b"), py::arg("t"));
  m.def(
      "classical_fact_residual",
      [](const std::string& kind, const Int& a, const Int& b) {
        return classical_fact_residual(parse_fact(kind), a, b);
      },
      py::arg("kind"), py::arg("a"), py::arg("b"));

  m.def(
      "factorize",
      [](u64 n) {
        std::vector<std::pair<u64, unsigned>> out;
        for (const auto& pp : factorize(n)) out.emplace_back(pp.prime, pp.exponent);
        return out;
      },
      py::arg("n"));
  m.def(
      "is_admissible", [](u64 t) { return is_admissible(t).admissible; }, py::arg("t"));
  m.def("admissible_witness", &witness_dict, py::arg("t"));
  m.def("sqrt_minus_one", &sqrt_minus_one, py::arg("t"));
  m.def(
      "theorem1_instances",
      [](u64 t_max, u64 b_max, u64 multiplier) {
        std::vector<std::tuple<Int, Int, Int>> out;
        Theorem1Stream stream(t_max, b_max, multiplier);
        while (auto inst = stream.next()) out.emplace_back(inst->t(), inst->a(), inst->b());
        return out;
      },
      py::arg("t_max"), py::arg("b_max"), py::arg("multiplier") = 1);

  m.def(
      "scan",
      [](const std::string& identity, u64 t_max, u64 b_max, const std::string& format,
         unsigned jobs, u64 multiplier) {
        const auto id = parse_scan_identity(identity);
        if (!id) throw py::value_error("unknown identity: " + identity);
        if (format != "csv" && format != "json") throw py::value_error("format: csv or json");
        ScanReport report;
        {
          py::gil_scoped_release release;
          report = run_scan(*id, {.t_max = t_max, .b_max = b_max, .multiplier = multiplier,
                                  .jobs = jobs});
        }
        std::ostringstream os;
        if (format == "json") {
          write_json(os, report.rows);
        } else {
          write_csv(os, report.rows);
        }
        return py::make_tuple(report.ok(), report.instances_checked, os.str());
      },
      py::arg("identity"), py::arg("t_max") = 1, py::arg("b_max") = 1,
      py::arg("format") = "csv", py::arg("jobs") = 1, py::arg("multiplier") = 1,
      "Returns (all_zero, instances_checked, table).");
}
