#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tensortopo/cli.hpp"
#include "tensortopo/completion.hpp"
#include "tensortopo/sheaf.hpp"

namespace py = pybind11;
using namespace tensortopo;

namespace {

struct Category {
    std::string name;
    std::shared_ptr<const MonoidalTable> table;
};

Category make(std::string name, MonoidalTable t) { return {std::move(name), std::make_shared<const MonoidalTable>(std::move(t))}; }

std::string zi_json_text(const Category& c, std::uint64_t budget) {
    const ZILattice zi = central_idempotents(*c.table, {budget, 1});
    const auto names = zi.names(c.table->base());
    nlohmann::ordered_json j;
    j["classes"] = names;
    std::vector<std::vector<bool>> leq(zi.size(), std::vector<bool>(zi.size()));
    std::vector<std::vector<std::string>> meet(zi.size(), std::vector<std::string>(zi.size()));
    for (int a = 0; a < zi.size(); ++a)
        for (int b = 0; b < zi.size(); ++b) {
            leq[a][b] = zi.leq(a, b);
            meet[a][b] = names[zi.meet(a, b)];
        }
    j["leq"] = leq;
    j["meet"] = meet;
    j["top"] = names[zi.top];
    return j.dump();
}

}  // namespace

PYBIND11_MODULE(_tensortopo, m) {
    m.doc() = "Sheaf representation checks for finite strict monoidal categories";

    static py::exception<Error> exc(m, "TensorTopoError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(exc, e.what());
        }
    });

    py::class_<Category>(m, "Category")
        .def_readonly("name", &Category::name)
        .def_property_readonly("num_objects", [](const Category& c) { return c.table->num_objects(); })
        .def_property_readonly("num_morphisms", [](const Category& c) { return c.table->num_morphisms(); })
        .def_property_readonly("symmetric", [](const Category& c) { return c.table->has_symmetry(); })
        .def("object_names",
             [](const Category& c) {
                 std::vector<std::string> out;
                 for (Obj a = 0; a < c.table->num_objects(); ++a) out.push_back(c.table->base().object_name(a));
                 return out;
             })
        .def("hom_size",
             [](const Category& c, const std::string& a, const std::string& b) {
                 const auto& t = c.table->base();
                 auto x = t.find_object(a), y = t.find_object(b);
                 if (!x || !y) throw Error(ErrorKind::SchemaError, "unknown object");
                 return t.hom(*x, *y).size();
             })
        .def("validate", [](const Category& c) { return validate_monoidal(*c.table).violations; })
        .def("to_json", [](const Category& c) { return emit_description(describe_table(c.name, *c.table)); })
        .def("__repr__", [](const Category& c) {
            std::ostringstream os;
            os << "<Category " << c.name << ": " << c.table->num_objects() << " objects, " << c.table->num_morphisms()
               << " morphisms>";
            return os.str();
        });

    m.def("boolean", [](int n) { return make("boolean" + std::to_string(n), from_boolean(n)); }, py::arg("atoms"));
    m.def("chain", [](int n) { return make("chain" + std::to_string(n), from_chain(n)); }, py::arg("n"));
    m.def("semilattice", [](const std::vector<std::string>& e, const std::vector<std::vector<int>>& meet) {
        return make("semilattice", from_semilattice(e, meet));
    });
    m.def("topology", [](const std::vector<std::string>& pts, const std::vector<std::vector<std::string>>& opens) {
        return make("topology", from_topology(pts, opens));
    });
    m.def("monoid", [](const std::vector<std::string>& e, const std::vector<std::vector<int>>& mul, int unit) {
        return make("monoid", from_monoid(e, mul, unit));
    });
    m.def("quantale", [](const std::vector<std::string>& e, const std::vector<std::vector<bool>>& leq,
                         const std::vector<std::vector<int>>& mul, int unit) {
        return make("quantale", from_quantale(e, leq, mul, unit));
    });
    m.def("load", [](const std::string& path) {
        const auto d = parse_description(path);
        return make(d.name, build(d));
    });
    m.def("loads", [](const std::string& text) {
        const auto d = parse_description_text(text);
        return make(d.name, build(d));
    });

    m.def("_zi", &zi_json_text, py::arg("category"), py::arg("budget") = 1'000'000);
    m.def(
        "_represent",
        [](const Category& c, int jobs) {
            RunConfig cfg;
            cfg.jobs = jobs;
            SheafReport r;
            {
                py::gil_scoped_release release;
                r = represent(c.table, {cfg.halfbraiding_budget, 200'000, jobs});
            }
            return report_json(c.name, r, *c.table, cfg).dump();
        },
        py::arg("category"), py::arg("jobs") = 1);
    m.def(
        "_complete",
        [](const Category& c, std::uint64_t budget) {
            const ZILattice zi = central_idempotents(*c.table);
            const Completion D = build_completion(c.table, zi, {budget, false});
            nlohmann::ordered_json j;
            j["downsets"] = D.downsets.size();
            j["objects"] = D.table->num_objects();
            j["morphisms"] = D.table->num_morphisms();
            j["zi_completion"] = to_string(check_zi_completion(D).status);
            j["universal_joins"] = to_string(check_completion_joins(D).status);
            j["embed"] = to_string(embed(D).verdict.status);
            return j.dump();
        },
        py::arg("category"), py::arg("budget") = 10'000);
    m.def(
        "run",
        [](const std::string& command, const std::string& file, const std::string& at, int jobs) {
            CommandArgs a;
            a.file = file;
            a.at = at;
            a.config.jobs = jobs;
            std::ostringstream out, err;
            const int code = run_command(command, a, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("command"), py::arg("file"), py::arg("at") = "", py::arg("jobs") = 1);
}
