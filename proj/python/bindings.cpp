#include "frieze/bounds.hpp"
#include "frieze/dynkin.hpp"
#include "frieze/frieze.hpp"
#include "frieze/io.hpp"
#include "frieze/search.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace frieze;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

BigInt from_py(const py::handle& h) {
  BigInt v;
  if (v.set_str(py::str(py::int_(py::reinterpret_borrow<py::object>(h))).cast<std::string>(), 10) != 0) {
    throw py::value_error("expected an integer");
  }
  return v;
}

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_py(q.get_num()), to_py(q.get_den()));
}

py::list ints(const std::vector<BigInt>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::list fractions(const std::vector<Rational>& v) {
  py::list out;
  for (const auto& x : v) out.append(fraction(x));
  return out;
}

std::vector<BigInt> big_vector(const py::sequence& seq) {
  std::vector<BigInt> out;
  for (const auto& h : seq) out.push_back(from_py(h));
  return out;
}

FriezePattern make_pattern(const std::string& type, const py::sequence& rows) {
  const DynkinType t = DynkinType::parse(type);
  if (rows.size() != t.size()) throw py::value_error("expected one row per vertex");
  std::vector<std::vector<BigInt>> r;
  for (const auto& row : rows) r.push_back(big_vector(row.cast<py::sequence>()));
  const std::size_t p = r.empty() ? 0 : r[0].size();
  std::vector<FriezeSlice> cols;
  for (std::size_t k = 0; k < p; ++k) {
    std::vector<BigInt> col;
    for (const auto& row : r) {
      if (row.size() != p) throw py::value_error("rows differ in length");
      col.push_back(row[k]);
    }
    cols.emplace_back(t, col);
  }
  return FriezePattern(t, cols);
}

py::list rows_of(const FriezePattern& f) {
  py::list out;
  for (std::size_t i = 0; i < f.rank(); ++i) {
    py::list row;
    for (const auto& c : f.columns()) row.append(to_py(c[i]));
    out.append(row);
  }
  return out;
}

py::object propagated(const Propagation& p) {
  if (const auto* s = std::get_if<FriezeSlice>(&p)) return ints(s->values());
  return py::none();
}

py::dict lemma_dict(const LemmaCertificate& c) {
  py::list rows;
  for (const auto& r : c.rows) {
    py::dict d;
    d["M"] = to_py(r.m);
    d["P"] = to_py(r.p);
    d["upper"] = to_py(r.upper);
    d["pass"] = r.pass;
    rows.append(d);
  }
  py::dict out;
  out["rows"] = rows;
  out["passed"] = c.passed();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Friezes of Dynkin type: verification, bounds and enumeration";

  py::register_exception<InadmissibleType>(m, "InadmissibleType", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("catalog", [](int max_rank) {
    std::vector<std::string> out;
    for (const auto& t : catalog_up_to_rank(max_rank)) out.push_back(t.name());
    return out;
  }, py::arg("max_rank"));

  m.def("cartan_matrix", [](const std::string& type) {
    const CartanMatrix c = cartan_matrix(DynkinType::parse(type));
    std::vector<std::vector<int>> out(c.size(), std::vector<int>(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) out[i][j] = c(i, j);
    return out;
  }, py::arg("type"));

  m.def("inverse_cartan", [](const std::string& type) {
    const InverseCartan inv = inverse_cartan(DynkinType::parse(type));
    py::list out;
    for (std::size_t i = 0; i < inv.size(); ++i) {
      py::list row;
      for (std::size_t j = 0; j < inv.size(); ++j) row.append(fraction(inv(i, j)));
      out.append(row);
    }
    return out;
  }, py::arg("type"));

  m.def("type_profile", [](const std::string& type) {
    const TypeProfile p = type_profile(DynkinType::parse(type));
    py::dict out;
    out["b"] = fractions(p.b);
    out["d"] = p.d;
    out["period_cap"] = p.period_cap;
    return out;
  }, py::arg("type"));

  py::class_<FriezePattern>(m, "Frieze")
      .def(py::init(&make_pattern), py::arg("type"), py::arg("rows"))
      .def_property_readonly("dynkin", [](const FriezePattern& f) { return f.dynkin().name(); })
      .def_property_readonly("period", &FriezePattern::period)
      .def_property_readonly("rows", &rows_of)
      .def("column", [](const FriezePattern& f, long k) { return ints(f.column(k).values()); })
      .def("verify", [](const FriezePattern& f) {
        py::list out;
        for (const auto& v : verify_pattern(f)) {
          py::dict d;
          d["vertex"] = v.vertex + 1;
          d["column"] = v.column;
          d["lhs"] = to_py(v.lhs);
          d["rhs"] = to_py(v.rhs);
          out.append(d);
        }
        return out;
      })
      .def("minimal_period", &minimal_period)
      .def("canonical", &canonical_orbit)
      .def("rotated", &FriezePattern::rotated)
      .def("a_vector", [](const FriezePattern& f, std::size_t period) {
        const LogVector v = a_vector(f, period);
        return py::make_tuple(v.a, v.ca);
      }, py::arg("period"))
      .def("lemma", [](const FriezePattern& f, std::size_t period) {
        return lemma_dict(lemma_check_exact(f, period));
      }, py::arg("period"))
      .def("check_bounds", [](const FriezePattern& f, std::size_t period) {
        return check_pattern_against_bounds(f, period).passed();
      }, py::arg("period"))
      .def("__eq__", [](const FriezePattern& a, const FriezePattern& b) { return a == b; })
      .def("__repr__", [](const FriezePattern& f) {
        return "<Frieze " + f.dynkin().name() + " period " + std::to_string(f.period()) + ">";
      });

  m.def("parse_frieze", [](const std::string& text) { return parse_frieze(text); }, py::arg("text"));
  m.def("emit_frieze", &emit_frieze, py::arg("frieze"));

  m.def("propagate_forward", [](const std::string& type, const py::sequence& col) {
    return propagated(propagate_forward(FriezeSlice(DynkinType::parse(type), big_vector(col))));
  }, py::arg("type"), py::arg("column"));
  m.def("propagate_backward", [](const std::string& type, const py::sequence& col) {
    return propagated(propagate_backward(FriezeSlice(DynkinType::parse(type), big_vector(col))));
  }, py::arg("type"), py::arg("column"));

  m.def("detect_period", [](const std::string& type, const py::sequence& seed, std::size_t cap) {
    const DynkinType t = DynkinType::parse(type);
    if (cap == 0) cap = static_cast<std::size_t>(type_profile(t).period_cap);
    const PeriodResult r = detect_period(FriezeSlice(t, big_vector(seed)), cap);
    py::dict out;
    if (const auto* f = std::get_if<PeriodFound>(&r)) {
      out["status"] = "period";
      out["period"] = f->period;
      py::list cols;
      for (const auto& c : f->columns) cols.append(ints(c.values()));
      out["columns"] = cols;
    } else if (const auto* d = std::get_if<DeadEnd>(&r)) {
      out["status"] = "dead_end";
      out["step"] = d->step;
      out["vertex"] = d->vertex + 1;
    } else {
      out["status"] = "no_recurrence";
      out["cap"] = std::get<NoRecurrence>(r).cap;
    }
    return out;
  }, py::arg("type"), py::arg("seed"), py::arg("cap") = 0);

  m.def("bounds", [](const std::string& type, std::size_t period) {
    const DynkinType t = DynkinType::parse(type);
    if (period == 0) period = static_cast<std::size_t>(type_profile(t).period_cap);
    const BoundsReport r = bounds_report(t, period);
    py::dict out;
    out["period"] = r.period;
    out["b"] = fractions(r.b);
    out["entry_cap_exponents"] = fractions(r.entry_cap_exponents);
    out["count_bound_exponent"] = fraction(r.count_bound_exponent);
    out["d"] = r.d;
    out["refined_formula_log2"] = r.refined_rowwise_log2;
    out["unit_exponent_base"] = fraction(r.unit_exponent_base);
    out["refined_flat_log2"] = r.unit_exponent_log2;
    return out;
  }, py::arg("type"), py::arg("period") = 0);

  m.def("enumerate", [](const std::string& type, const std::string& strategy, py::object cap,
                        unsigned jobs, std::size_t period_cap) {
    SearchConfig cfg{DynkinType::parse(type)};
    cfg.strategy = parse_strategy(strategy);
    cfg.jobs = jobs;
    cfg.period_cap = period_cap;
    if (!cap.is_none()) cfg.entry_cap_override = from_py(cap);
    SearchOutcome o = [&] {
      py::gil_scoped_release release;
      return enumerate_friezes(cfg);
    }();
    py::list orbits;
    for (const auto& orbit : o.orbits) orbits.append(orbit.pattern);
    py::dict out;
    out["frieze_count"] = o.frieze_count;
    out["orbits"] = orbits;
    out["complete"] = o.complete;
    out["nodes_explored"] = o.nodes_explored;
    out["entry_caps"] = ints(o.entry_caps);
    py::list diags;
    for (const auto& d : o.diagnostics) diags.append(d.message);
    out["diagnostics"] = diags;
    return out;
  }, py::arg("type"), py::arg("strategy") = "row_seeded", py::arg("cap") = py::none(),
     py::arg("jobs") = 1, py::arg("period_cap") = 0);

  m.def("quiver_dot", [](const std::string& type, long k_lo, long k_hi, const FriezePattern* f) {
    return emit_quiver_dot(DynkinType::parse(type), k_lo, k_hi, f);
  }, py::arg("type"), py::arg("k_lo"), py::arg("k_hi"), py::arg("frieze") = nullptr);
}
