#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wrlat/survey.hpp"

namespace py = pybind11;

namespace {

py::object fraction(const wrlat::Rational& q)
{
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

py::dict record_dict(const wrlat::SurveyRecord& r)
{
    py::dict d;
    d["D"] = r.D;
    d["a"] = r.a;
    d["b"] = r.b;
    d["g"] = r.g;
    d["norm"] = r.norm;
    d["minimum"] = fraction(r.minimum);
    d["n_minimal"] = r.n_minimal;
    d["wr"] = r.wr;
    d["hexagonal"] = r.hexagonal;
    d["bound_ok"] = r.bound_ok;
    d["order_maximal"] = r.order_maximal;
    return d;
}

py::dict survey(std::int64_t d_min, std::int64_t d_max, std::int64_t norm_bound, bool squarefree, unsigned workers)
{
    wrlat::SurveyConfig cfg;
    cfg.d_min = d_min;
    cfg.d_max = d_max;
    cfg.norm_bound = norm_bound;
    cfg.require_squarefree = squarefree;
    cfg.workers = workers;
    wrlat::SurveyResult res;
    {
        py::gil_scoped_release release;
        res = wrlat::run_survey(cfg);
    }
    py::list records;
    for (const auto& r : res.records) records.append(record_dict(r));
    py::dict summary;
    summary["fields"] = res.summary.fields;
    summary["records"] = res.summary.records;
    summary["wr"] = res.summary.wr;
    summary["hexagonal"] = res.summary.hexagonal;
    summary["bound_ok"] = res.summary.bound_ok;
    py::dict out;
    out["records"] = records;
    out["summary"] = summary;
    return out;
}

py::dict cyclo(std::int64_t k)
{
    if (k >= 3 && wrlat::euler_phi(k) > static_cast<std::int64_t>(wrlat::kMaxEnumerationDim))
        throw wrlat::InvalidInput("phi(k) exceeds the enumeration guard");
    const auto c = wrlat::verify_cyclotomic_theorem(wrlat::cyclo_field(k));
    py::dict d;
    d["k"] = k;
    d["phi"] = wrlat::euler_phi(k);
    d["minimum"] = fraction(c.minimum);
    d["expected_minimum"] = fraction(c.expected);
    d["n_minimal"] = c.n_minimal;
    d["expected_count"] = c.expected_count;
    d["wr"] = c.wr;
    d["roots_of_unity_minimal"] = c.roots_of_unity_minimal;
    d["pass"] = c.pass();
    return d;
}

py::list tables()
{
    py::list out;
    for (const auto& r : wrlat::tables_report()) {
        py::dict d;
        d["kind"] = r.kind == wrlat::FamilyKind::Imaginary ? "imaginary" : "real";
        d["t"] = r.t;
        d["D"] = r.D;
        d["ideal"] = r.ideal;
        d["minimal_elements"] = r.minimal_elements;
        d["match"] = r.match();
        d["order_maximal"] = r.order_maximal;
        out.append(d);
    }
    return out;
}

py::list family(const std::string& kind, std::int64_t t_max, bool squarefree, bool prime)
{
    if (kind != "imaginary" && kind != "real") throw wrlat::InvalidInput("kind must be 'imaginary' or 'real'");
    const auto k = kind == "real" ? wrlat::FamilyKind::Real : wrlat::FamilyKind::Imaginary;
    py::list out;
    for (const auto& inst : wrlat::family_stream(k, t_max, squarefree, prime)) {
        py::dict d;
        d["t"] = inst.t;
        d["D"] = inst.D;
        d["a"] = inst.triple.a;
        d["b"] = inst.triple.b;
        d["g"] = inst.triple.g;
        d["form"] = py::make_tuple(fraction(inst.closed_form.c1), fraction(inst.closed_form.c2),
                                   fraction(inst.closed_form.c3));
        d["p_prime"] = inst.filters.p_prime;
        d["squarefree"] = inst.filters.squarefree;
        d["matches"] = wrlat::closed_form_matches(inst);
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact classification of well-rounded ideal lattices";

    py::register_exception<wrlat::InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<wrlat::InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

    m.def(
        "classify",
        [](std::int64_t D, std::int64_t a, std::int64_t b, std::int64_t g) {
            return record_dict(wrlat::classify(D, a, b, g));
        },
        py::arg("D"), py::arg("a"), py::arg("b"), py::arg("g"),
        "Classify the lattice of the ideal <a, b + g*delta> of Z[delta].");
    m.def("survey", &survey, py::arg("d_min") = -20, py::arg("d_max") = -1, py::arg("norm_bound") = 10,
          py::arg("squarefree") = false, py::arg("workers") = 1);
    m.def("cyclo", &cyclo, py::arg("k"));
    m.def("tables", &tables);
    m.def("family", &family, py::arg("kind") = "imaginary", py::arg("t_max") = 15, py::arg("squarefree") = false,
          py::arg("prime") = false);
}
