#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aqecc/serialize.hpp"
#include "aqecc/tables.hpp"
#include "aqecc/verify.hpp"

namespace py = pybind11;
using namespace aqecc;

namespace {

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(json_to_py(e));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default:
      return py::none();
  }
}

FieldPtr field_of(std::uint64_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    std::uint64_t v = q;
    std::uint32_t t = 0;
    while (v % p == 0) {
      v /= p;
      ++t;
    }
    if (v == 1) return FiniteField::make(p, t);
    break;
  }
  throw std::invalid_argument("q must be a prime power");
}

Budget make_budget(std::uint64_t max_codewords, unsigned threads) {
  return Budget{max_codewords, threads};
}

struct PyField {
  FieldPtr f;
};

struct PyBasis {
  FieldBasis b;
};

struct PyCode {
  LinearCode c;
};

struct PyPair {
  CssPair p;
};

struct PyAdditive {
  AdditiveCode c;
};

PyBasis basis_for(std::uint64_t q_top, std::uint64_t q_bottom,
                  const std::string& kind) {
  auto top = field_of(q_top);
  auto bottom = q_bottom == 0 ? FiniteField::make(top->p(), 1) : field_of(q_bottom);
  auto tower = FieldTower::make(bottom, top);
  if (kind == "polynomial") return PyBasis{FieldBasis::polynomial(tower)};
  if (kind == "dual-of-polynomial")
    return PyBasis{FieldBasis::polynomial(tower).dual()};
  if (kind == "normal") return PyBasis{FieldBasis::normal(tower)};
  throw std::invalid_argument("unknown basis kind: " + kind);
}

}  // namespace

PYBIND11_MODULE(_aqecc, m) {
  m.doc() = "asymmetric quantum code workbench (CSS derivations, code "
            "families, exhaustive distance oracles)";

  py::class_<PyField>(m, "Field")
      .def(py::init([](std::uint64_t q) { return PyField{field_of(q)}; }),
           py::arg("q"))
      .def_property_readonly("p", [](const PyField& s) { return s.f->p(); })
      .def_property_readonly("m", [](const PyField& s) { return s.f->m(); })
      .def_property_readonly("q", [](const PyField& s) { return s.f->q(); })
      .def_property_readonly("modulus",
                             [](const PyField& s) { return s.f->modulus(); })
      .def_property_readonly("generator",
                             [](const PyField& s) { return s.f->generator(); })
      .def("add", [](const PyField& s, GfElem a, GfElem b) { return s.f->add(a, b); })
      .def("mul", [](const PyField& s, GfElem a, GfElem b) { return s.f->mul(a, b); })
      .def("inv", [](const PyField& s, GfElem a) { return s.f->inv(a); })
      .def("pow", [](const PyField& s, GfElem a, std::uint64_t e) { return s.f->pow(a, e); })
      .def("trace_to_prime",
           [](const PyField& s, GfElem a) { return s.f->trace_to_prime(a); });

  py::class_<PyBasis>(m, "Basis")
      .def(py::init([](std::uint64_t q_top, std::uint64_t q_bottom,
                       const std::string& kind) {
             return basis_for(q_top, q_bottom, kind);
           }),
           py::arg("q_top"), py::arg("q_bottom") = 0,
           py::arg("kind") = "polynomial")
      .def_property_readonly("elements",
                             [](const PyBasis& s) { return s.b.elements(); })
      .def("dual", [](const PyBasis& s) { return PyBasis{s.b.dual()}; })
      .def("gram", [](const PyBasis& s) { return s.b.gram(); })
      .def("coords", [](const PyBasis& s, GfElem a) { return s.b.coords(a); })
      .def("is_self_dual", [](const PyBasis& s) { return s.b.is_self_dual(); });

  py::class_<PyCode>(m, "Code")
      .def(py::init([](std::uint64_t q, std::size_t n,
                       const std::vector<std::vector<GfElem>>& rows) {
             return PyCode{LinearCode(field_of(q), n, rows)};
           }),
           py::arg("q"), py::arg("n"), py::arg("rows"))
      .def_property_readonly("n", [](const PyCode& s) { return s.c.n(); })
      .def_property_readonly("k", [](const PyCode& s) { return s.c.k(); })
      .def_property_readonly("q", [](const PyCode& s) { return s.c.field()->q(); })
      .def_property_readonly("generator",
                             [](const PyCode& s) {
                               std::vector<std::vector<GfElem>> rows;
                               for (std::size_t r = 0; r < s.c.k(); ++r) {
                                 auto row = s.c.row(r);
                                 rows.emplace_back(row.begin(), row.end());
                               }
                               return rows;
                             })
      .def("dual", [](const PyCode& s) { return PyCode{dual(s.c)}; })
      .def("contains",
           [](const PyCode& s, const std::vector<GfElem>& w) {
             return s.c.contains(w);
           })
      .def("min_distance",
           [](const PyCode& s, std::uint64_t budget, unsigned threads) {
             return json_to_py(
                 weight_report_to_json(min_distance(s.c, make_budget(budget, threads))));
           },
           py::arg("budget") = (1ull << 26), py::arg("threads") = 1)
      .def("even_odd_weights",
           [](const PyCode& s, std::uint64_t budget) {
             auto eo = even_odd_weights(s.c, make_budget(budget, 1));
             py::dict d;
             d["status"] = to_string(eo.status);
             d["even"] = eo.even ? py::object(py::int_(*eo.even)) : py::none();
             d["odd"] = eo.odd ? py::object(py::int_(*eo.odd)) : py::none();
             return d;
           },
           py::arg("budget") = (1ull << 26))
      .def("expand",
           [](const PyCode& s, const PyBasis& b) {
             return PyCode{expand(s.c, b.b)};
           })
      .def("puncture", [](const PyCode& s, std::size_t i) { return PyCode{puncture(s.c, i)}; })
      .def("shorten", [](const PyCode& s, std::size_t i) { return PyCode{shorten(s.c, i)}; })
      .def("extend", [](const PyCode& s) { return PyCode{extend(s.c)}; })
      .def("is_subcode_of",
           [](const PyCode& s, const PyCode& big) { return is_subcode(s.c, big.c); })
      .def("to_json", [](const PyCode& s) { return code_to_json(s.c).dump(); })
      .def_static("from_json",
                  [](const std::string& text) {
                    return PyCode{code_from_json(Json::parse(text))};
                  })
      .def("__eq__", [](const PyCode& a, const PyCode& b) { return a.c == b.c; })
      .def("__repr__", [](const PyCode& s) {
        return "[" + std::to_string(s.c.n()) + "," + std::to_string(s.c.k()) +
               "]_" + std::to_string(s.c.field()->q());
      });

  m.def("direct_sum",
        [](const PyCode& a, const PyCode& b) { return PyCode{direct_sum(a.c, b.c)}; });
  m.def("uuv", [](const PyCode& a, const PyCode& b) { return PyCode{uuv(a.c, b.c)}; });
  m.def("relative_min_weight",
        [](const PyCode& c1, const PyCode& c2, std::uint64_t budget) {
          return json_to_py(weight_report_to_json(
              relative_min_weight(c1.c, c2.c, make_budget(budget, 1))));
        },
        py::arg("c1"), py::arg("c2"), py::arg("budget") = (1ull << 26));

  py::class_<PyPair>(m, "Pair")
      .def(py::init([](const PyCode& c1, const PyCode& c2) {
             return PyPair{CssPair(c1.c, c2.c)};
           }),
           py::arg("c1"), py::arg("c2"))
      .def_property_readonly("n", [](const PyPair& s) { return s.p.n(); })
      .def_property_readonly("k", [](const PyPair& s) { return s.p.k(); })
      .def_property_readonly("c1", [](const PyPair& s) { return PyCode{s.p.c1()}; })
      .def_property_readonly("c2", [](const PyPair& s) { return PyCode{s.p.c2()}; })
      .def("derive",
           [](const PyPair& s, std::uint64_t budget, unsigned threads) {
             return json_to_py(
                 params_to_json(derive(s.p, make_budget(budget, threads))));
           },
           py::arg("budget") = (1ull << 26), py::arg("threads") = 1)
      .def("to_json", [](const PyPair& s) { return pair_to_json(s.p).dump(); })
      .def_static("from_json", [](const std::string& text) {
        return PyPair{pair_from_json(Json::parse(text))};
      });

  auto deriv = [](const AqeccDerivation& d) { return json_to_py(derivation_to_json(d)); };
  m.def("expand_aqecc",
        [deriv](const PyPair& p, const PyBasis& b, std::uint64_t budget) {
          return deriv(expand_aqecc(p.p, b.b, make_budget(budget, 1)));
        },
        py::arg("pair"), py::arg("basis"), py::arg("budget") = (1ull << 26));
  m.def("direct_sum_aqecc",
        [deriv](const PyPair& a, const PyPair& b, std::uint64_t budget) {
          return deriv(direct_sum_aqecc(a.p, b.p, make_budget(budget, 1)));
        },
        py::arg("pair_a"), py::arg("pair_b"), py::arg("budget") = (1ull << 26));
  m.def("puncture_aqecc",
        [deriv](const PyPair& p, std::size_t i, std::uint64_t budget) {
          return deriv(puncture_aqecc(p.p, i, make_budget(budget, 1)));
        },
        py::arg("pair"), py::arg("i"), py::arg("budget") = (1ull << 26));
  m.def("extend_aqecc",
        [deriv](const PyPair& p, std::uint64_t budget) {
          return deriv(extend_aqecc(p.p, make_budget(budget, 1)));
        },
        py::arg("pair"), py::arg("budget") = (1ull << 26));
  m.def("uuv_aqecc",
        [deriv](const PyPair& a, const PyPair& b, std::uint64_t budget) {
          return deriv(uuv_aqecc(a.p, b.p, make_budget(budget, 1)));
        },
        py::arg("pair_a"), py::arg("pair_b"), py::arg("budget") = (1ull << 26));

  py::class_<PyAdditive>(m, "Additive")
      .def_property_readonly("n", [](const PyAdditive& s) { return s.c.n(); })
      .def_property_readonly("rank", [](const PyAdditive& s) { return s.c.rank(); })
      .def_property_readonly("size", [](const PyAdditive& s) { return s.c.size(); })
      .def("is_self_orthogonal",
           [](const PyAdditive& s) { return is_self_orthogonal(s.c); })
      .def("dual", [](const PyAdditive& s) { return PyAdditive{symplectic_dual(s.c)}; })
      .def("stabilizer_params",
           [](const PyAdditive& s, std::uint64_t budget) {
             return json_to_py(
                 params_to_json(stabilizer_params(s.c, make_budget(budget, 1))));
           },
           py::arg("budget") = (1ull << 26))
      .def("to_json", [](const PyAdditive& s) { return additive_to_json(s.c).dump(); });
  m.def("css_to_additive",
        [](const PyPair& p) { return PyAdditive{css_to_additive(p.p)}; });
  m.def("expand_additive_aqecc",
        [](const PyAdditive& c, const PyBasis& b, std::uint64_t budget) {
          return json_to_py(additive_derivation_to_json(
              expand_additive_aqecc(c.c, b.b, make_budget(budget, 1))));
        },
        py::arg("code"), py::arg("basis"), py::arg("budget") = (1ull << 26));
  m.def("puncture_additive_aqecc",
        [](const PyAdditive& c, std::size_t i, std::uint64_t budget) {
          return json_to_py(additive_derivation_to_json(
              puncture_additive_aqecc(c.c, i, make_budget(budget, 1))));
        },
        py::arg("code"), py::arg("i"), py::arg("budget") = (1ull << 26));

  m.def("grm",
        [](std::uint64_t q, std::uint32_t m, std::uint32_t alpha) {
          auto [c, spec] = grm(field_of(q), m, alpha);
          py::dict d;
          d["q"] = spec.q;
          d["m"] = spec.m;
          d["alpha"] = spec.alpha;
          d["predicted_k"] = spec.predicted_k;
          d["predicted_d"] = spec.predicted_d;
          d["alpha_dual"] = spec.alpha_dual;
          return py::make_tuple(PyCode{std::move(c)}, d);
        },
        py::arg("q"), py::arg("m"), py::arg("alpha"));
  m.def("character_code",
        [](std::uint64_t q, std::uint32_t r, std::uint32_t m) {
          return PyCode{character_code(field_of(q), r, m)};
        },
        py::arg("q"), py::arg("r"), py::arg("m"));
  m.def("bch",
        [](std::uint64_t q, std::size_t n, std::uint32_t delta, std::uint32_t b) {
          auto [c, spec] = bch(field_of(q), n, b, delta);
          py::dict d;
          d["q"] = spec.q;
          d["n"] = spec.n;
          d["b"] = spec.b;
          d["delta"] = spec.delta;
          d["splitting_degree"] = spec.splitting_degree;
          d["cosets"] = spec.cosets;
          d["gen_poly"] = spec.gen_poly;
          return py::make_tuple(PyCode{std::move(c)}, d);
        },
        py::arg("q"), py::arg("n"), py::arg("delta"), py::arg("b") = 1);
  m.def("qr",
        [](std::uint32_t p_len, std::uint64_t q) {
          QrCodes codes = qr(p_len, field_of(q));
          return py::make_tuple(PyCode{codes.Q()}, PyCode{codes.Qd()},
                                PyCode{codes.C()}, PyCode{codes.Cd()});
        },
        py::arg("p"), py::arg("q"));

  m.def("grm_aqecc",
        [deriv](std::uint32_t p, std::uint32_t t, std::uint32_t m,
                std::uint32_t a1, std::uint32_t a2, std::uint64_t budget) {
          return deriv(grm_aqecc(p, t, m, a1, a2, std::nullopt, make_budget(budget, 1)));
        },
        py::arg("p"), py::arg("t"), py::arg("m"), py::arg("alpha1"),
        py::arg("alpha2"), py::arg("budget") = (1ull << 26));
  m.def("character_aqecc",
        [deriv](std::uint32_t p, std::uint32_t t, std::uint32_t m,
                std::uint32_t r1, std::uint32_t r2, std::uint64_t budget) {
          return deriv(
              character_aqecc(p, t, m, r1, r2, std::nullopt, make_budget(budget, 1)));
        },
        py::arg("p"), py::arg("t"), py::arg("m"), py::arg("r1"), py::arg("r2"),
        py::arg("budget") = (1ull << 26));
  m.def("bch_nested_aqecc",
        [deriv](std::uint32_t p, std::uint32_t t, std::size_t n,
                std::uint32_t d1, std::uint32_t d2, std::uint64_t budget) {
          return deriv(
              bch_nested_aqecc(p, t, n, d1, d2, std::nullopt, make_budget(budget, 1)));
        },
        py::arg("p"), py::arg("t"), py::arg("n"), py::arg("delta1"),
        py::arg("delta2"), py::arg("budget") = (1ull << 26));
  m.def("bch_abch1_aqecc",
        [deriv](std::uint32_t p, std::uint32_t t, std::uint32_t m,
                std::uint32_t bullet, std::uint32_t c, std::uint32_t l,
                std::uint64_t budget) {
          return deriv(bch_abch1_aqecc(p, t, m, bullet, c, l, std::nullopt,
                                       make_budget(budget, 1)));
        },
        py::arg("p"), py::arg("t"), py::arg("m"), py::arg("bullet"),
        py::arg("c") = 0, py::arg("l") = 0, py::arg("budget") = (1ull << 26));
  m.def("qr_aqecc",
        [deriv](std::uint32_t p_len, std::uint32_t p_star, std::uint32_t t,
                std::uint64_t budget) {
          return deriv(qr_aqecc(p_len, p_star, t, std::nullopt, make_budget(budget, 1)));
        },
        py::arg("p"), py::arg("p_star"), py::arg("t"),
        py::arg("budget") = (1ull << 26));

  m.def("table",
        [](const std::string& family, const std::string& format,
           std::uint32_t max_m, std::uint32_t max_p, std::size_t max_n,
           std::uint64_t max_q, std::uint64_t budget) -> py::object {
          TableCaps caps;
          caps.max_m = max_m;
          caps.max_p = max_p;
          caps.max_n = max_n;
          caps.max_q = max_q;
          caps.budget = make_budget(budget, 1);
          auto rows = make_table(family, caps);
          if (format == "csv") return py::str(table_to_csv(rows));
          return json_to_py(table_to_json(rows));
        },
        py::arg("family"), py::arg("format") = "csv", py::arg("max_m") = 3,
        py::arg("max_p") = 13, py::arg("max_n") = 31, py::arg("max_q") = 9,
        py::arg("budget") = (1ull << 20));
  m.def("table_families", [] { return table_families(); });

  m.def("verify",
        [](const std::string& suite, std::uint64_t seed, std::uint64_t budget) {
          VerifyOptions opts;
          opts.seed = seed;
          opts.budget = make_budget(budget, 1);
          auto results = run_verify(suite, opts);
          py::list out;
          for (const auto& r : results) {
            py::dict d;
            d["suite"] = r.suite;
            d["checks"] = r.checks;
            d["failures"] = r.failures;
            d["messages"] = r.messages;
            d["warnings"] = r.warnings;
            out.append(d);
          }
          return out;
        },
        py::arg("suite"), py::arg("seed") = 18781729,
        py::arg("budget") = (1ull << 26));
  m.def("verify_suites", [] { return verify_suite_names(); });
}
