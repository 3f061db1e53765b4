#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rbh4/runs.hpp"

namespace py = pybind11;

namespace {

std::string run(const std::string& command, std::optional<std::uint32_t> p, const std::string& weight,
                const std::string& strategy, const std::string& scope, std::size_t shards, std::uint64_t seed,
                std::size_t samples) {
    rbh4::RunConfig cfg;
    cfg.command = command;
    cfg.p = p;
    cfg.weight = weight;
    cfg.strategy = strategy;
    cfg.scope = scope;
    cfg.shards = shards;
    cfg.seed = seed;
    cfg.samples = samples;
    py::gil_scoped_release release;
    const auto r = rbh4::run_command(cfg);
    return rbh4::envelope(cfg, r.results).dump();
}

std::string families() { return rbh4::registry_to_json().dump(); }

std::string instantiate(const std::string& id, const std::string& weight, const std::vector<std::string>& params) {
    const rbh4::Field q = rbh4::Field::rationals();
    std::vector<rbh4::Scalar> values;
    for (const auto& s : params) values.push_back(q.parse(s));
    return rbh4::to_json(rbh4::instantiate(rbh4::find_family(id), q.parse(weight), values)).dump();
}

bool is_rb(const std::string& op_json, std::optional<std::uint32_t> p) {
    const rbh4::Field f = p ? rbh4::Field::prime(*p) : rbh4::Field::rationals();
    const auto w = rbh4::operator_from_json(f, rbh4::Json::parse(op_json));
    return rbh4::is_rb(rbh4::h4(f), w);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Rota-Baxter operators on the Sweedler algebra";
    m.attr("__version__") = rbh4::kToolVersion;

    py::register_exception<rbh4::Error>(m, "Error", PyExc_ValueError);

    m.def("run", &run, py::arg("command"), py::arg("p") = std::nullopt, py::arg("weight") = "1",
          py::arg("strategy") = "auto", py::arg("scope") = "", py::arg("shards") = 1, py::arg("seed") = 1,
          py::arg("samples") = 0, "Run a command and return the JSON envelope as a string.");
    m.def("families", &families, "The family registry as a JSON string.");
    m.def("instantiate", &instantiate, py::arg("family"), py::arg("weight"), py::arg("params"),
          "Instantiate a family over Q; returns operator JSON.");
    m.def("is_rb", &is_rb, py::arg("operator_json"), py::arg("p") = std::nullopt,
          "Check the Rota-Baxter identity for operator JSON over Q or F_p.");
}
