// Python bindings. Simplices cross the boundary as bar strings and chains as
// JSON text; the kz1morse package turns both into native Python values.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kz1/catalogue.hpp"
#include "kz1/errors.hpp"
#include "kz1/fields.hpp"
#include "kz1/homology.hpp"
#include "kz1/io.hpp"
#include "kz1/simplicial.hpp"
#include "kz1/verify.hpp"

namespace py = pybind11;
using namespace kz1;

namespace {

std::shared_ptr<const KZ1> space() {
    static const auto s = std::make_shared<const KZ1>();
    return s;
}

BasisFn critical_basis_for(const std::string& field) {
    return field == "bs" ? BasisFn{} : BasisFn{composed_critical_basis};
}

EvaluationOptions budgeted(std::size_t budget) {
    EvaluationOptions eo = options_from_env();
    eo.max_nodes = budget;
    return eo;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Discrete vector fields on K(Z,1)";

    auto base = py::register_exception<Error>(m, "Kz1Error");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<AdmissibilityViolation>(m, "AdmissibilityViolation", base.ptr());
    py::register_exception<IterationCapExceeded>(m, "IterationCapExceeded", base.ptr());
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

    m.def("normalize", [](const std::string& s) { return format_bar(parse_simplex(s)); });
    m.def("to_btuple", [](const std::string& s) { return format_btuple(to_btuple(parse_simplex(s))); });
    m.def("face", [](std::size_t i, const std::string& s) { return format_bar(face(i, parse_simplex(s))); });

    m.def("differential", [](const std::string& chain) {
        return chain_to_json(differential(*space(), chain_from_json(chain)));
    });

    m.def("classify", [](const std::string& s, const std::string& field) {
        const BarSimplex x = parse_simplex(s);
        return classification_to_json(x, make_field(field)->classify(x));
    });

    m.def("reach", [](const std::string& s, const std::string& field, std::size_t budget) {
        ReachOptions ro;
        ro.node_budget = budget;
        ro.collect_simplices = false;
        const BarSimplex x = parse_simplex(s);
        return reach_to_json(x, reach(*space(), *make_field(field), x, ro));
    });

    m.def("trace", [](const std::string& s, const std::string& field, std::size_t max_steps) {
        return trace_to_json(trace(*space(), *make_field(field), parse_simplex(s), max_steps));
    });

    m.def("phi", [](const std::string& chain, const std::string& field, bool infinity, std::size_t budget) {
        const Chain c = chain_from_json(chain);
        const auto f = make_field(field);
        py::gil_scoped_release release;
        return chain_to_json(infinity ? phi_infinity(*space(), *f, c, budgeted(budget)) : phi(*space(), *f, c));
    });

    m.def("reduce", [](const std::string& map, const std::string& chain, const std::string& field,
                       std::size_t budget) {
        if (map != "f" && map != "g" && map != "h") {
            throw PreconditionError("map must be f, g, or h");
        }
        const Chain c = chain_from_json(chain);
        py::gil_scoped_release release;
        const FieldReduction fr =
            reduction_from_field(space(), make_field(field), critical_basis_for(field), budgeted(budget));
        const ChainMap& f = map == "f" ? fr.reduction.f : map == "g" ? fr.reduction.g : fr.reduction.h;
        return chain_to_json(f(c));
    });

    m.def("homology", [](const std::string& field, std::size_t kmax) {
        const FieldReduction fr = reduction_from_field(space(), make_field(field), critical_basis_for(field));
        return homology_to_json(homology_of_critical(fr.critical, kmax));
    });

    m.def("catalogue", [](const std::string& s) {
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (const auto& p : catalogue_predictions(parse_simplex(s))) {
            out.emplace_back(p.label, format_bar(p.face), format_bar(p.successor));
        }
        return out;
    });
}
