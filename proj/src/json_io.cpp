#include "rbh4/json_io.hpp"

namespace rbh4 {

Json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Field& field, const Json& j) {
    if (j.is_number_integer()) return field.from_int(j.get<long long>());
    if (j.is_string()) return field.parse(j.get<std::string>());
    throw ParseError("scalar must be a string or an integer, got " + j.dump());
}

Json to_json(const StructureAlgebra& alg) {
    const std::size_t n = alg.dim();
    Json constants = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < n; ++j) {
            Json cell = Json::array();
            for (std::size_t k = 0; k < n; ++k) cell.push_back(to_json(alg.constant(i, j, k)));
            row.push_back(std::move(cell));
        }
        constants.push_back(std::move(row));
    }
    return Json{{"dim", n},
                {"basis_names", alg.basis_names()},
                {"unit_index", alg.unit_index()},
                {"field", alg.field().name()},
                {"constants", std::move(constants)}};
}

namespace {

Json images(const LinearOperator& op) {
    Json out = Json::array();
    for (std::size_t j = 0; j < op.dim(); ++j) {
        Json col = Json::array();
        for (std::size_t i = 0; i < op.dim(); ++i) col.push_back(to_json(op.at(i, j)));
        out.push_back(std::move(col));
    }
    return out;
}

Json matrix(const LinearOperator& op) {
    Json out = Json::array();
    for (std::size_t i = 0; i < op.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < op.dim(); ++j) row.push_back(to_json(op.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

Json scalars(const std::vector<Scalar>& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(to_json(s));
    return out;
}

Json named_params(const std::vector<std::string>& names, const std::vector<Scalar>& values) {
    Json out = Json::object();
    for (std::size_t i = 0; i < names.size() && i < values.size(); ++i) out[names[i]] = to_json(values[i]);
    return out;
}

}  // namespace

Json to_json(const WeightedOperator& w) { return Json{{"weight", to_json(w.weight)}, {"images", images(w.op)}}; }

WeightedOperator operator_from_json(const Field& field, const Json& j) {
    if (!j.contains("weight") || !j.contains("images")) throw ParseError("operator JSON needs 'weight' and 'images'");
    const Json& imgs = j.at("images");
    if (!imgs.is_array()) throw ParseError("'images' must be an array");
    std::vector<std::vector<Scalar>> cols;
    for (const auto& col : imgs) {
        std::vector<Scalar> c;
        for (const auto& e : col) c.push_back(scalar_from_json(field, e));
        cols.push_back(std::move(c));
    }
    return WeightedOperator{LinearOperator::from_images(field, cols), scalar_from_json(field, j.at("weight"))};
}

Json packed_to_json(const Packed& m, std::uint32_t p, std::uint32_t lambda) {
    Json out = Json::array();
    for (std::size_t j = 0; j < 4; ++j) {
        Json col = Json::array();
        for (std::size_t i = 0; i < 4; ++i) col.push_back(std::to_string(m[i * 4 + j]));
        out.push_back(std::move(col));
    }
    return Json{{"weight", std::to_string(lambda % p)}, {"images", std::move(out)}};
}

Json to_json(const AutoMap& phi) {
    Json params = nullptr;
    if (phi.params) {
        params = Json{{"eps", to_json(phi.params->eps)},
                      {"a", to_json(phi.params->a)},
                      {"b", to_json(phi.params->b)},
                      {"p", to_json(phi.params->p)},
                      {"q", to_json(phi.params->q)}};
    }
    return Json{{"anti", phi.anti}, {"params", std::move(params)}, {"matrix", matrix(phi.op)}};
}

Json to_json(const Subspace& s) {
    Json rows = Json::array();
    for (const auto& b : s.basis()) rows.push_back(scalars(b.coords));
    return rows;
}

Json to_json(const CensusEntry& e) {
    return Json{{"basis", to_json(e.space)},
                {"class_label", label(e.cls)},
                {"shape", e.shape ? Json(*e.shape) : Json(nullptr)}};
}

Json to_json(const RBFamily& f) {
    Json domain = Json::array();
    for (const auto& c : f.domain) domain.push_back(c.text);
    Json valid = Json::array();
    for (const auto& c : f.valid_when) valid.push_back(c.text);
    Json imgs = Json::array();
    for (const auto& col : f.images) {
        Json c = Json::array();
        for (const auto& e : col) c.push_back(e.to_string());
        imgs.push_back(std::move(c));
    }
    Json out{{"id", f.id},
             {"scope", scope_name(f.scope)},
             {"params", f.params},
             {"domain", std::move(domain)},
             {"valid_when", std::move(valid)},
             {"images", std::move(imgs)},
             {"source", {{"section", f.section}, {"item", f.item}}}};
    if (f.reducing_map) {
        const auto& m = *f.reducing_map;
        out["normal_form"] = Json{{"params", f.reduced_params},
                                  {"map",
                                   {{"eps", m.eps.to_string()},
                                    {"a", m.a.to_string()},
                                    {"b", m.b.to_string()},
                                    {"p", m.p.to_string()},
                                    {"q", m.q.to_string()}}}};
    }
    if (!f.notes.empty()) out["notes"] = f.notes;
    return out;
}

Json registry_to_json() {
    Json out = Json::array();
    for (const auto& f : all_families()) out.push_back(to_json(f));
    return out;
}

Json to_json(const OrbitReport& r) {
    Json orbits = Json::array();
    for (const auto& o : r.orbits) {
        Json witness = nullptr;
        if (o.witness) {
            const RBFamily& f = find_family(o.witness->family);
            witness = Json{{"family", o.witness->family},
                           {"params", named_params(f.params, o.witness->params)},
                           {"map", to_json(o.witness->map)},
                           {"dual", o.witness->dual}};
        }
        orbits.push_back(Json{{"canonical", to_json(o.canonical)},
                              {"size", o.size},
                              {"kernel_dim", o.kernel_dim},
                              {"trivial", o.trivial},
                              {"matched_families", o.matched_families},
                              {"witness", std::move(witness)}});
    }
    Json unmatched = Json::array();
    for (const auto& w : r.unmatched) unmatched.push_back(to_json(w));
    return Json{{"field_p", r.field_p},
                {"weight", to_json(r.weight)},
                {"total_rb_count", r.total_rb_count},
                {"trivial_count", r.trivial_count},
                {"orbit_count", r.orbits.size()},
                {"orbits", std::move(orbits)},
                {"unmatched", std::move(unmatched)},
                {"findings", r.findings},
                {"errors", r.errors}};
}

Json to_json(const ClaimCheck& c) {
    Json witnesses = Json::array();
    const CorollaryClaim* claim = nullptr;
    for (const auto& cc : corollary_claims())
        if (cc.item == c.item) claim = &cc;
    for (const auto& w : c.witnesses) {
        Json entry{{"p", w.p}};
        if (claim) {
            entry["params"] = named_params(find_family(claim->family).params, w.params);
            entry["target_params"] = named_params(find_family(claim->target).params, w.target_params);
        }
        entry["map"] = to_json(w.map);
        witnesses.push_back(std::move(entry));
    }
    return Json{{"item", c.item},
                {"claim", c.text},
                {"pass", c.pass},
                {"method", c.method},
                {"details", c.details},
                {"witnesses", std::move(witnesses)}};
}

Json to_json(const TheoremCheck& c, std::uint32_t p, std::uint32_t lambda) {
    Json missing = Json::array();
    for (const auto& m : c.missing) missing.push_back(packed_to_json(m, p, lambda));
    Json extra = Json::array();
    for (const auto& m : c.extra) extra.push_back(packed_to_json(m, p, lambda));
    return Json{{"theorem", c.theorem},
                {"header", c.header},
                {"pass", c.pass()},
                {"enumerated", c.enumerated},
                {"instantiated", c.instantiated},
                {"missing", std::move(missing)},
                {"extra", std::move(extra)}};
}

}  // namespace rbh4
