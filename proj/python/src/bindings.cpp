#include "dcalg/acceptance.hpp"
#include "dcalg/formal_sum.hpp"
#include "dcalg/hypotheses.hpp"
#include "dcalg/partition.hpp"
#include "dcalg/polynomiality.hpp"
#include "dcalg/structure_formula.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace dcalg;

namespace {

std::shared_ptr<const Family> make(const std::string& family, int n, int q) {
    return Family::make(family_from_name(family), n, q);
}

py::object fraction(const Rational& v) {
    py::object F = py::module_::import("fractions").attr("Fraction");
    return F(num_str(v), den_str(v));
}

py::dict breakdown_dict(const CoefficientBreakdown& bd) {
    py::dict d;
    d["total"] = fraction(bd.total);
    d["prefactor"] = fraction(bd.prefactor);
    d["k1"] = bd.k1;
    d["k2"] = bd.k2;
    d["k3"] = bd.k3;
    d["eval_level"] = bd.eval_level;
    py::list terms;
    for (const auto& t : bd.terms) {
        py::dict td;
        td["k"] = t.k;
        td["m"] = t.m;
        td["x"] = element_str(t.x);
        td["intersection"] = t.intersection;
        td["contribution"] = fraction(t.contribution);
        terms.append(td);
    }
    d["terms"] = terms;
    return d;
}

}  // namespace

PYBIND11_MODULE(_dcalg, m) {
    m.doc() = "exact structure coefficients for double-class algebras and group-algebra "
              "centers of classical group towers";

    m.def("z", [](const std::string& parts) { return Partition::parse(parts).z().str(); },
          py::arg("partition"));
    m.def("partition_union", [](const std::string& a, const std::string& b) {
        return Partition::parse(a).unite(Partition::parse(b)).str();
    });
    m.def("strip_ones",
          [](const std::string& a) { return Partition::parse(a).strip_ones().str(); });
    m.def("pad_to", [](const std::string& a, int n) { return Partition::parse(a).pad_to(n).str(); });

    m.def("cycle_type", [](const std::string& cycles, int degree) {
        return Perm::parse_cycles(cycles, degree).cycle_type().str();
    });
    m.def("coset_type", [](const std::string& cycles, int degree) {
        return coset_type(Perm::parse_cycles(cycles, degree)).str();
    });
    m.def("bn_type", [](const std::string& cycles, int degree) {
        return bn_type(Perm::parse_cycles(cycles, degree)).str();
    });

    m.def("group_order",
          [](const std::string& family, int n, int q) { return make(family, n, q)->G_order().str(); },
          py::arg("family"), py::arg("n"), py::arg("q") = 0);

    m.def("labels",
          [](const std::string& family, int n, int q) {
              std::vector<std::string> out;
              for (const auto& l : make(family, n, q)->labels()) out.push_back(label_str(l));
              return out;
          },
          py::arg("family"), py::arg("n"), py::arg("q") = 0);

    m.def("class_size",
          [](const std::string& family, int n, const std::string& label, int q) {
              auto fam = make(family, n, q);
              return fam->class_size(fam->pad_label(parse_label(label, q, n))).str();
          },
          py::arg("family"), py::arg("n"), py::arg("label"), py::arg("q") = 0);

    m.def("coefficient",
          [](const std::string& family, int n, const std::string& left, const std::string& right,
             const std::string& target, int q, int threads) {
              auto fam = make(family, n, q);
              Rational v = structure_coefficient_bruteforce(
                  fam, fam->pad_label(parse_label(left, q, n)),
                  fam->pad_label(parse_label(right, q, n)),
                  fam->pad_label(parse_label(target, q, n)), threads);
              return fraction(v);
          },
          py::arg("family"), py::arg("n"), py::arg("left"), py::arg("right"), py::arg("target"),
          py::arg("q") = 0, py::arg("threads") = 1);

    m.def("decompose_product",
          [](const std::string& family, int n, const std::string& left, const std::string& right,
             int q, int threads) {
              auto fam = make(family, n, q);
              py::dict out;
              for (const auto& [label, v] :
                   product_decomposition(fam, fam->pad_label(parse_label(left, q, n)),
                                         fam->pad_label(parse_label(right, q, n)), threads))
                  out[py::str(label_str(label))] = fraction(v);
              return out;
          },
          py::arg("family"), py::arg("n"), py::arg("left"), py::arg("right"), py::arg("q") = 0,
          py::arg("threads") = 1);

    m.def("theorem_coefficient",
          [](const std::string& family, int n, const std::string& left, const std::string& right,
             const std::string& target) {
              auto fam = make(family, n, 0);
              return breakdown_dict(coefficient_via_theorem(
                  fam, fam->pad_label(parse_label(left)), fam->pad_label(parse_label(right)),
                  fam->pad_label(parse_label(target))));
          },
          py::arg("family"), py::arg("n"), py::arg("left"), py::arg("right"), py::arg("target"));

    m.def("verify_hypotheses",
          [](const std::string& family, int n_max, int k_max, const std::string& hypothesis,
             int q) {
              std::vector<HypothesisReport> reports;
              FamilyKind kind = family_from_name(family);
              if (hypothesis == "all")
                  reports = check_all_hypotheses(kind, n_max, k_max, q);
              else
                  reports.push_back(
                      check_hypothesis(kind, hypothesis_from_name(hypothesis), 1, n_max, k_max, q));
              py::list out;
              for (const auto& r : reports) {
                  py::dict d;
                  d["hypothesis"] = hypothesis_name(r.hypothesis);
                  d["family"] = family_name(r.family);
                  d["pass"] = r.pass;
                  if (r.witness) d["witness"] = r.witness->description;
                  out.append(d);
              }
              return out;
          },
          py::arg("family"), py::arg("n_max"), py::arg("k_max") = 3, py::arg("hypothesis") = "all",
          py::arg("q") = 0);

    m.def("polyfit",
          [](const std::string& family, const std::string& left, const std::string& right,
             const std::string& target, int holdouts) {
              FamilyKind kind = family_from_name(family);
              auto cert = verify_polynomiality_auto(kind, parse_label(left), parse_label(right),
                                                    parse_label(target), holdouts);
              py::dict d;
              d["pass"] = cert.pass;
              d["polynomial"] = cert.poly.str();
              d["degree_bound"] = cert.degree_bound;
              py::list coeffs;
              for (const auto& c : cert.poly.coefficients()) coeffs.append(fraction(c));
              d["coefficients"] = coeffs;
              d["note"] = cert.note;
              return d;
          },
          py::arg("family"), py::arg("left"), py::arg("right"), py::arg("target"),
          py::arg("holdouts") = 2);

    m.def("selftest_quick", []() { return run_acceptance_suite(true) == 0; });
}
