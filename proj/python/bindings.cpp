// Rationals cross the boundary as "num/den" strings; the Python package
// converts them to and from fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

#include "harmonid/catalog.hpp"
#include "harmonid/error.hpp"
#include "harmonid/harness.hpp"
#include "harmonid/hypergeom.hpp"
#include "harmonid/special.hpp"

namespace py = pybind11;
using namespace harmonid;

namespace {

std::vector<Rational> parse_all(const std::vector<std::string>& values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    out.push_back(Rational::parse(v));
  }
  return out;
}

PfqSpec exact_spec(const std::vector<std::string>& num, const std::vector<std::string>& den, const std::string& z) {
  return PfqSpec{parse_all(num), parse_all(den), Rational::parse(z)};
}

Assignment to_assignment(const std::map<std::string, std::string>& values) {
  Assignment a;
  for (const auto& [name, value] : values) {
    a.set(name, Rational::parse(value));
  }
  return a;
}

py::dict report_dict(const VerificationReport& r) {
  py::list counterexamples;
  for (const auto& c : r.counterexamples) {
    py::dict assignment;
    for (const auto& [name, value] : c.assignment.bindings()) {
      assignment[py::str(name)] = value.to_string();
    }
    counterexamples.append(py::dict(py::arg("check") = c.check, py::arg("assignment") = assignment,
                                    py::arg("lhs") = c.lhs, py::arg("rhs") = c.rhs, py::arg("note") = c.note));
  }
  return py::dict(py::arg("identity_id") = r.identity_id, py::arg("mode") = std::string(to_string(r.mode)),
                  py::arg("total") = r.total, py::arg("passed") = r.passed, py::arg("failed") = r.failed,
                  py::arg("skipped_pole") = r.skipped_pole, py::arg("counterexamples") = counterexamples);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact verification of harmonic-number summation identities";

  py::register_exception<PoleError>(m, "PoleError", PyExc_ZeroDivisionError);
  py::register_exception<ArithmeticError>(m, "ArithmeticError", PyExc_ZeroDivisionError);
  py::register_exception<ModeError>(m, "ModeError", PyExc_ValueError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<SamplingError>(m, "SamplingError", PyExc_RuntimeError);

  m.def("pochhammer", [](const std::string& x, unsigned n) { return pochhammer(Rational::parse(x), n).to_string(); });
  m.def("binomial", [](const std::string& z, unsigned t) { return binomial_gen(Rational::parse(z), t).to_string(); });
  m.def(
      "harmonic",
      [](unsigned n, unsigned ell, const std::string& x) {
        return harmonic(n, HarmonicOrder(ell), Rational::parse(x)).to_string();
      },
      py::arg("n"), py::arg("ell") = 1, py::arg("x") = "0/1");

  m.def("pfq_exact", [](const std::vector<std::string>& num, const std::vector<std::string>& den,
                        const std::string& z) { return pfq_exact(exact_spec(num, den, z)).to_string(); });
  m.def("pfq_exact_incremental", [](const std::vector<std::string>& num, const std::vector<std::string>& den,
                                    const std::string& z) {
    return pfq_exact_incremental(exact_spec(num, den, z)).to_string();
  });
  m.def(
      "pfq_float",
      [](std::vector<double> num, std::vector<double> den, double z, double tol, std::size_t max_terms) {
        const FloatSum s = pfq_float(RealPfqSpec{std::move(num), std::move(den), z}, tol, max_terms);
        return py::make_tuple(s.value, s.converged, s.terms);
      },
      py::arg("numerator"), py::arg("denominator"), py::arg("z") = 1.0, py::arg("tol") = 1e-14,
      py::arg("max_terms") = 500000);
  m.def("gamma", &gamma_float);

  m.def("jet_deriv_binom_check",
        [](const std::string& x, unsigned s, unsigned t) { return jet_deriv_binom_check(Rational::parse(x), s, t); });
  m.def("jet_deriv_harmonic_check", [](unsigned n, unsigned ell, const std::string& x) {
    return jet_deriv_harmonic_check(n, ell, Rational::parse(x));
  });
  m.def("reversal_symmetry_check", [](unsigned n, const std::string& x, const std::string& y) {
    return reversal_symmetry_check(n, Rational::parse(x), Rational::parse(y));
  });

  m.def("catalog", [] {
    py::list out;
    for (const auto& e : catalog_entries()) {
      py::list params;
      for (const auto& p : e.params()) {
        params.append(py::make_tuple(p.name, std::string(to_string(p.kind))));
      }
      out.append(py::dict(py::arg("id") = e.id, py::arg("params") = params, py::arg("anchor") = e.anchor,
                          py::arg("mode") = std::string(to_string(e.mode()))));
    }
    return out;
  });

  m.def("evaluate", [](const std::string& id, const std::map<std::string, std::string>& values) -> py::object {
    const IdentitySpec* spec = find_entry(id);
    if (spec == nullptr) {
      throw UsageError("unknown identity id: " + id);
    }
    const Evaluation ev = evaluate(*spec, to_assignment(values));
    if (const auto* e = std::get_if<ExactPair>(&ev)) {
      return py::make_tuple(e->lhs.to_string(), e->rhs.to_string());
    }
    const auto& f = std::get<FloatPair>(ev);
    return py::make_tuple(f.lhs.value, f.rhs.value);
  });

  m.def(
      "verify",
      [](const std::vector<std::string>& ids, unsigned n_max, unsigned p_max, unsigned q_max, unsigned samples,
         std::uint64_t seed, unsigned jobs) {
        SweepConfig cfg;
        cfg.n_max = n_max;
        cfg.p_max = p_max;
        cfg.q_max = q_max;
        cfg.rational_samples = samples;
        cfg.seed = seed;
        cfg.jobs = jobs;
        std::vector<VerificationReport> reports;
        {
          py::gil_scoped_release release;
          reports = run_all(cfg, ids);
        }
        py::list out;
        for (const auto& r : reports) {
          out.append(report_dict(r));
        }
        return out;
      },
      py::arg("ids") = std::vector<std::string>{}, py::arg("n_max") = 20, py::arg("p_max") = 6,
      py::arg("q_max") = 6, py::arg("samples") = 25, py::arg("seed") = 42, py::arg("jobs") = 0);

  m.def(
      "bench",
      [](const std::vector<unsigned>& grid) {
        py::list out;
        for (const auto& r : bench_series(grid)) {
          out.append(py::dict(py::arg("n") = r.n, py::arg("full_mults") = r.full_mults,
                              py::arg("incremental_mults") = r.incremental_mults, py::arg("equal") = r.equal));
        }
        return out;
      },
      py::arg("grid") = std::vector<unsigned>{10, 50, 100, 200});
}
