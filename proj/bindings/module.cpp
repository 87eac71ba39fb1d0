#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rnagell/bounds.hpp"
#include "rnagell/classifier.hpp"
#include "rnagell/core_arith.hpp"
#include "rnagell/gaps.hpp"
#include "rnagell/pade.hpp"
#include "rnagell/search.hpp"
#include "rnagell/solver.hpp"

namespace py = pybind11;
using namespace rnagell;

namespace {

// python ints <-> mpz via decimal strings; exact at any size
mpz_class to_mpz(const py::object& obj) {
  return mpz_class(py::str(obj).cast<std::string>());
}

py::int_ to_pyint(const mpz_class& v) {
  std::string s = v.get_str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

mpq_class to_mpq(const py::object& obj) {
  if (py::isinstance<py::int_>(obj)) return mpq_class(to_mpz(obj));
  std::string s = py::str(obj).cast<std::string>();
  mpq_class q(s);
  q.canonicalize();
  return q;
}

py::dict gap_report_dict(const GapReport& r) {
  static const char* names[] = {"weak-pair", "weak-triple", "strong"};
  py::dict d;
  d["kind"] = names[static_cast<int>(r.kind)];
  d["j"] = r.j;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  if (r.kind == GapReport::Kind::WeakTriple) d["rhs_chained"] = r.rhs_chained;
  d["satisfied"] = r.satisfied();
  py::list xs;
  for (const auto& w : r.witnesses) xs.append(to_pyint(w.x));
  d["witnesses"] = xs;
  return d;
}

py::dict record_dict(const SearchRecord& rec) {
  py::dict d;
  d["D"] = to_pyint(rec.D);
  d["p1"] = to_pyint(rec.p1);
  d["p2"] = to_pyint(rec.p2);
  d["total"] = rec.total;
  py::dict classes;
  for (const auto& [key, count] : rec.per_class)
    classes[py::make_tuple(key.j, key.u, key.v)] = count;
  d["classes"] = classes;
  d["max_y"] = to_pyint(rec.max_y);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact solver and verification kit for x^2 + D = 2^s p1^k p2^l";

  py::class_<Instance>(m, "Instance")
      .def(py::init([](const py::object& D, const py::object& p1, const py::object& p2) {
             return Instance(to_mpz(D), to_mpz(p1), to_mpz(p2));
           }),
           py::arg("D"), py::arg("p1"), py::arg("p2"))
      .def_property_readonly("D", [](const Instance& i) { return to_pyint(i.D); })
      .def_property_readonly("p1", [](const Instance& i) { return to_pyint(i.p1); })
      .def_property_readonly("p2", [](const Instance& i) { return to_pyint(i.p2); })
      .def("__repr__", [](const Instance& i) {
        return "Instance(D=" + i.D.get_str() + ", p1=" + i.p1.get_str() +
               ", p2=" + i.p2.get_str() + ")";
      });

  py::class_<Solution>(m, "Solution")
      .def_property_readonly("x", [](const Solution& s) { return to_pyint(s.x); })
      .def_readonly("s", &Solution::s)
      .def_readonly("k", &Solution::k)
      .def_readonly("l", &Solution::l)
      .def_property_readonly("y", [](const Solution& s) { return to_pyint(s.y); })
      .def("__repr__", [](const Solution& s) {
        return "Solution(x=" + s.x.get_str() + ", s=" + std::to_string(s.s) +
               ", k=" + std::to_string(s.k) + ", l=" + std::to_string(s.l) +
               ", y=" + s.y.get_str() + ")";
      });

  // exact integer primitives
  m.def("isqrt", [](const py::object& n) { return to_pyint(isqrt(to_mpz(n))); });
  m.def("as_square", [](const py::object& n) -> std::optional<py::int_> {
    auto r = as_square(to_mpz(n));
    if (!r) return std::nullopt;
    return to_pyint(*r);
  });
  m.def(
      "sqrt_mod_prime_power",
      [](const py::object& a, const py::object& p, unsigned e) {
        py::list out;
        for (const auto& r : sqrt_mod_prime_power(to_mpz(a), Modulus(to_mpz(p), e)))
          out.append(to_pyint(r));
        return out;
      },
      py::arg("a"), py::arg("p"), py::arg("e") = 1);
  m.def(
      "roots_of_x2_plus_d",
      [](const py::object& D, const py::object& p1, unsigned f, const py::object& p2, unsigned g) {
        py::list out;
        for (const auto& r :
             roots_of_x2_plus_D(to_mpz(D), Modulus(to_mpz(p1), f), Modulus(to_mpz(p2), g)))
          out.append(to_pyint(r));
        return out;
      },
      py::arg("D"), py::arg("p1"), py::arg("f"), py::arg("p2"), py::arg("g"));
  m.def("squarefree_part", [](const py::object& D) {
    auto r = squarefree_part(to_mpz(D));
    return py::make_tuple(to_pyint(r.d), to_pyint(r.b));
  });

  // solver
  m.def("enumerate_smooth", [](const Instance& inst, const py::object& bound) {
    py::list out;
    for (const auto& sv : enumerate_smooth(inst, to_mpz(bound)))
      out.append(py::make_tuple(to_pyint(sv.y), sv.s, sv.k, sv.l));
    return out;
  });
  m.def("solve", [](const Instance& inst, const py::object& bound) {
    return solve(inst, to_mpz(bound));
  });
  m.def("smallest_solution", [](const Instance& inst, const py::object& bound) {
    return smallest_solution(inst, to_mpz(bound));
  });

  // classifier
  m.def("fraction", &fraction);
  m.def("quarter_class", [](const Solution& sol, const Instance& inst) {
    ClassKey key = quarter_class(sol, inst);
    return py::make_tuple(key.j, key.u, key.v);
  });
  m.def(
      "membership",
      [](const Solution& sol, const Instance& inst, const py::object& alpha,
         const py::object& delta, const py::object& low_y, const py::object& high_y) {
        std::optional<mpz_class> high;
        if (!high_y.is_none()) high = to_mpz(high_y);
        return membership(sol, inst, Window(to_mpq(alpha), to_mpq(delta), to_mpz(low_y), high));
      },
      py::arg("sol"), py::arg("inst"), py::arg("alpha"), py::arg("delta"), py::arg("low_y") = 0,
      py::arg("high_y") = py::none());
  m.def(
      "partition",
      [](const std::vector<Solution>& sols, const Instance& inst, const py::object& low_y,
         const py::object& high_y) {
        std::optional<mpz_class> high;
        if (!high_y.is_none()) high = to_mpz(high_y);
        py::dict out;
        for (const auto& [key, group] : partition(sols, inst, to_mpz(low_y), high))
          out[py::make_tuple(key.j, key.u, key.v)] = group;
        return out;
      },
      py::arg("solutions"), py::arg("inst"), py::arg("low_y") = 0, py::arg("high_y") = py::none());

  // gaps
  m.def(
      "weak_gap_pair",
      [](const std::vector<Solution>& cls, const Instance& inst, int j) -> py::object {
        auto r = weak_gap_pair(cls, inst, j);
        return r ? gap_report_dict(*r) : py::none().cast<py::object>();
      },
      py::arg("cls"), py::arg("inst"), py::arg("j"));
  m.def(
      "weak_gap_triple",
      [](const std::vector<Solution>& cls, const Instance& inst, int j) -> py::object {
        auto r = weak_gap_triple(cls, inst, j);
        return r ? gap_report_dict(*r) : py::none().cast<py::object>();
      },
      py::arg("cls"), py::arg("inst"), py::arg("j"));
  m.def(
      "strong_gap",
      [](const std::vector<Solution>& cls, const Instance& inst, int j, int digits) -> py::object {
        auto r = strong_gap(cls, inst, j, digits);
        return r ? gap_report_dict(*r) : py::none().cast<py::object>();
      },
      py::arg("cls"), py::arg("inst"), py::arg("j"), py::arg("digits") = 50);
  m.def(
      "check_all_gaps",
      [](const std::vector<Solution>& sols, const Instance& inst, const py::object& low_y,
         const py::object& high_y, int digits) {
        std::optional<mpz_class> high;
        if (!high_y.is_none()) high = to_mpz(high_y);
        py::list out;
        for (const auto& r : check_all_gaps(sols, inst, to_mpz(low_y), high, digits))
          out.append(gap_report_dict(r));
        return out;
      },
      py::arg("solutions"), py::arg("inst"), py::arg("low_y") = 0, py::arg("high_y") = py::none(),
      py::arg("digits") = 50);
  m.def(
      "lambda_diagnostic",
      [](const Solution& a, const Solution& b, const Solution& c, const Instance& inst, int digits,
         double tolerance) {
        auto diag = lambda_diagnostic({a, b, c}, inst, digits, tolerance);
        py::dict d;
        d["d"] = to_pyint(diag.d);
        d["f"] = diag.f;
        d["degenerate"] = diag.degenerate;
        d["min_distance"] = diag.min_distance;
        d["best_e"] = diag.best_e;
        d["within_tolerance"] = diag.within_tolerance();
        py::list choices;
        for (const auto& ch : diag.choices) {
          py::dict cd;
          cd["e"] = ch.e;
          cd["branch"] = ch.branch;
          cd["lambda"] = ch.lambda;
          cd["distance"] = ch.distance;
          choices.append(cd);
        }
        d["choices"] = choices;
        return d;
      },
      py::arg("s1"), py::arg("s2"), py::arg("s3"), py::arg("inst"), py::arg("digits") = 50,
      py::arg("tolerance") = 1e-30);

  // pade
  m.def("pade_build", [](unsigned n1, unsigned n2) {
    auto pa = build(n1, n2);
    py::dict d;
    auto rationals = [](const std::vector<mpq_class>& cs) {
      py::list out;
      for (const auto& c : cs) out.append(c.get_str());
      return out;
    };
    auto integers = [](const std::vector<mpz_class>& cs) {
      py::list out;
      for (const auto& c : cs) out.append(to_pyint(c));
      return out;
    };
    d["n1"] = pa.n1;
    d["n2"] = pa.n2;
    d["g"] = rationals(pa.g_coeffs);
    d["h"] = rationals(pa.h_coeffs);
    d["g_scaled"] = integers(pa.g_scaled_int);
    d["h_scaled"] = integers(pa.h_scaled_int);
    return d;
  });
  m.def("g_at_1", [](unsigned n1, unsigned n2) { return g_at_1(n1, n2).get_str(); });
  m.def(
      "verify_inequality_a",
      [](unsigned n1, unsigned n2, const py::object& z, int digits) {
        auto r = verify_inequality_a(build(n1, n2), to_mpq(z), digits);
        return py::make_tuple(r.satisfied, r.residual);
      },
      py::arg("n1"), py::arg("n2"), py::arg("z"), py::arg("digits") = 50);
  m.def("verify_monotonic_c", [](unsigned n1, unsigned n2, const std::vector<std::string>& zs) {
    std::vector<mpq_class> qs;
    qs.reserve(zs.size());
    for (const auto& z : zs) qs.push_back(mpq_class(z));
    return verify_monotonic_c(build(n1, n2), qs);
  });
  m.def("wronskian_e", [](unsigned n1, unsigned n2) {
    auto r = wronskian_e(n1, n2);
    return py::make_tuple(r.c.get_str(), r.ok);
  });
  m.def("choose_approximant",
        [](const py::object& w, const py::object& q, const py::object& D) {
          auto r = choose_approximant(to_mpz(w), to_mpz(q), to_mpz(D));
          return py::make_tuple(r.lambda, r.candidates[0], r.candidates[1]);
        });

  // bounds
  m.def(
      "constants",
      [](const py::object& D, int digits) {
        BoundSet bs = constants(to_mpz(D), digits);
        py::dict d;
        d["D"] = to_pyint(bs.D);
        d["delta"] = bs.delta.get_str();
        d["delta1"] = bs.delta1.get_str();
        d["Y"] = to_pyint(bs.Y);
        d["c"] = bs.c.str(digits);
        d["W1"] = bs.w1.str(digits);
        d["W2"] = bs.w2.str(digits);
        d["W"] = bs.w.str(digits);
        d["W3_paper"] = bs.w3_paper_real.str(digits);
        d["W3_computed"] = bs.w3_computed.str(digits);
        return d;
      },
      py::arg("D"), py::arg("digits") = 50);
  m.def(
      "weak_gap_map",
      [](const py::object& y, int digits) { return weak_gap_map(to_mpz(y), digits).str(digits); },
      py::arg("y"), py::arg("digits") = 50);
  m.def(
      "strong_gap_map",
      [](const py::object& y, int digits) { return strong_gap_map(to_mpz(y), digits).str(digits); },
      py::arg("y"), py::arg("digits") = 50);
  m.def(
      "budget",
      [](const std::string& tag) {
        Budget b = budget(tag);
        py::dict d;
        d["case"] = b.tag;
        if (!b.per_class.empty()) {
          py::dict caps;
          for (const auto& [key, cap] : b.per_class)
            caps[py::make_tuple(key.j, key.u, key.v)] = cap;
          d["per_class"] = caps;
        } else {
          d["per_quarter"] = b.per_quarter;
          d["small_region"] = b.small_region;
        }
        d["section_total"] = b.section_total;
        return d;
      },
      py::arg("case_tag"));
  m.def("grand_total", &grand_total);

  // search
  m.def(
      "search_run",
      [](const py::object& d_min, const py::object& d_max, unsigned long prime_bound,
         const py::object& y_bound, unsigned workers, std::optional<unsigned long> sample,
         unsigned long seed) {
        SearchSpec spec;
        spec.d_min = to_mpz(d_min);
        spec.d_max = to_mpz(d_max);
        spec.prime_bound = prime_bound;
        spec.y_bound = to_mpz(y_bound);
        spec.sample_count = sample;
        spec.sample_seed = seed;
        py::list out;
        for (const auto& rec : run(spec, workers)) out.append(record_dict(rec));
        return out;
      },
      py::arg("d_min"), py::arg("d_max"), py::arg("prime_bound"), py::arg("y_bound"),
      py::arg("workers") = 1, py::arg("sample") = py::none(), py::arg("seed") = 0);
}
