#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "vrq/cli.hpp"
#include "vrq/closed_forms.hpp"
#include "vrq/errors.hpp"
#include "vrq/experiments.hpp"

namespace py = pybind11;
using namespace vrq;

namespace {

py::int_ to_py(const BigInt& x) { return py::int_(py::str(x.str())); }

SpaceSpec space_from(std::optional<unsigned> n, std::optional<std::uint64_t> m, unsigned r) {
  if (n.has_value() == m.has_value()) throw InvalidArgument("give exactly one of n or m");
  return n ? SpaceSpec::hypercube(*n, r) : SpaceSpec::truncated(*m, r);
}

EnumerationOptions options(std::uint64_t budget, unsigned threads) {
  EnumerationOptions o;
  o.budget = budget;
  o.threads = threads;
  return o;
}

py::dict betti_dict(const BettiVector& b) {
  py::dict d;
  d["field"] = b.p;
  d["betti"] = b.reduced_betti;
  d["trusted_through"] = b.trusted_through;
  return d;
}

py::dict betti(unsigned r, std::optional<unsigned> n, std::optional<std::uint64_t> m,
               unsigned maxdim, std::uint32_t field, std::uint64_t budget, unsigned threads) {
  const SpaceSpec space = space_from(n, m, r);
  Skeleton skel = [&] {
    py::gil_scoped_release release;
    return enumerate_skeleton(space, maxdim + 1, options(budget, threads));
  }();
  BettiVector b;
  {
    py::gil_scoped_release release;
    b = betti_numbers(skel, PrimeField(field), maxdim);
  }
  py::dict d = betti_dict(b);
  d["counts"] = skel.counts();
  d["space"] = space.describe();
  return d;
}

py::dict prediction(unsigned n, unsigned r) {
  const PredictionRecord p = predicted_betti(n, r);
  py::dict values;
  for (const auto& [dim, v] : p.predicted_reduced_betti) values[py::int_(dim)] = to_py(v);
  py::dict d;
  d["status"] = to_string(p.status);
  d["exhaustive"] = p.exhaustive;
  d["values"] = values;
  d["description"] = p.homotopy_description;
  return d;
}

py::tuple integer_homology(unsigned r, unsigned i, std::optional<unsigned> n,
                           std::optional<std::uint64_t> m) {
  const Skeleton skel = enumerate_skeleton(space_from(n, m, r), i + 1);
  const IntegerHomologySummary h = integer_homology_snf(skel, i);
  py::list torsion;
  for (const BigInt& t : h.torsion) torsion.append(to_py(t));
  return py::make_tuple(h.free_rank, torsion);
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv = {"vrq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_vrq, m) {
  m.doc() = "Vietoris-Rips complexes of Hamming cubes";

  py::register_exception<SizeBudgetExceeded>(m, "SizeBudgetExceeded", PyExc_MemoryError);

  m.def("hamming_distance", &hamming_distance, py::arg("x"), py::arg("y"));
  m.def("alpha", &alpha, py::arg("x"));
  m.def("alpha_partial_sum", [](std::uint64_t n) { return to_py(alpha_partial_sum(n)); },
        py::arg("m"), "Sum of alpha(k) for k < m.");
  m.def("c_n", [](unsigned n) { return to_py(c_n(n)); }, py::arg("n"));
  m.def("taylor_coefficient", [](unsigned k) { return to_py(taylor_coefficient(k)); },
        py::arg("k"));
  m.def("predicted_betti", &prediction, py::arg("n"), py::arg("r"));

  m.def("betti", &betti, py::kw_only(), py::arg("r"), py::arg("n") = py::none(),
        py::arg("m") = py::none(), py::arg("maxdim") = 3, py::arg("field") = 2,
        py::arg("budget") = kDefaultBudget, py::arg("threads") = 1,
        "Reduced Betti numbers of VR(V_m, r) or VR(Q_n, r).");
  m.def("simplex_counts",
        [](unsigned r, unsigned dim_cap, std::optional<unsigned> n, std::optional<std::uint64_t> mm) {
          return enumerate_skeleton(space_from(n, mm, r), dim_cap).counts();
        },
        py::kw_only(), py::arg("r"), py::arg("dim_cap"), py::arg("n") = py::none(),
        py::arg("m") = py::none());
  m.def("integer_homology", &integer_homology, py::kw_only(), py::arg("r"), py::arg("i"),
        py::arg("n") = py::none(), py::arg("m") = py::none(),
        "Unreduced H_i over Z as (free rank, torsion coefficients).");

  m.def("splitting_check",
        [](std::uint64_t mm, unsigned r, unsigned maxdim, std::uint32_t field) {
          const SplittingReport rep = splitting_check(mm, r, PrimeField(field), maxdim);
          py::dict d;
          d["holds"] = rep.all_hold();
          d["trusted_through"] = rep.trusted_through;
          d["G_m"] = rep.betti_G_m.reduced_betti;
          d["G_m_minus_1"] = rep.betti_G_m_minus_1.reduced_betti;
          d["L_m"] = rep.betti_L_m.reduced_betti;
          return d;
        },
        py::arg("m"), py::arg("r") = 2, py::arg("maxdim") = 3, py::arg("field") = 2);
  m.def("link_check",
        [](std::uint64_t mm, std::uint32_t field) {
          const LinkReport rep = link_homotopy_check(mm, PrimeField(field));
          return py::make_tuple(rep.passed, rep.expected_alpha, rep.betti.reduced_betti);
        },
        py::arg("m"), py::arg("field") = 2);
  m.def("kneser_check",
        [](unsigned n, std::uint32_t field) {
          const KneserReport rep = kneser_check(n, PrimeField(field));
          return py::make_tuple(rep.passed, rep.expected, rep.betti.reduced_betti);
        },
        py::arg("n"), py::arg("field") = 2);

  m.def("run_cli", &run_cli, py::arg("args"),
        "Run the command-line front end in-process; returns (exit code, stdout, stderr).");
}
