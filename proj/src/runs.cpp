#include "rbh4/runs.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <set>

namespace rbh4 {

namespace {

const std::set<std::string> kCommands = {"enumerate", "classify", "verify", "report"};
const std::set<std::string> kVerifyScopes = {"families", "corollary", "kernel-theorems", "subalgebras"};

constexpr std::size_t kDefaultFamilySamples = 100;
constexpr std::size_t kDefaultCorollarySamples = 20;

std::uint32_t prime_of(const RunConfig& cfg) { return cfg.p.value_or(3); }

Strategy strategy_of(const RunConfig& cfg) {
    if (cfg.strategy == "auto") return prime_of(cfg) == 3 ? Strategy::Exhaustive : Strategy::Backtracking;
    return parse_strategy(cfg.strategy);
}

Scalar prime_weight(const RunConfig& cfg) {
    const Field f = Field::prime(prime_of(cfg));
    const Scalar w = f.parse(cfg.weight);
    if (w.is_zero()) throw WeightMismatch("weight " + cfg.weight + " vanishes in " + f.name());
    return w;
}

Scalar rational_weight(const RunConfig& cfg) {
    const Scalar w = Field::rationals().parse(cfg.weight);
    if (w.is_zero()) throw WeightMismatch("the weight must be nonzero");
    return w;
}

std::filesystem::path golden_path(const RunConfig& cfg, std::uint32_t p, std::uint32_t lambda, Strategy s) {
    return std::filesystem::path(cfg.golden_dir) / golden_file_name(p, lambda, s);
}

// Compares `counts` with the golden file, or writes it under --bless.
Json golden_check(const RunConfig& cfg, std::uint32_t p, std::uint32_t lambda, Strategy s, const Json& counts,
                  bool& mismatch) {
    Json out{{"file", golden_file_name(p, lambda, s)}};
    mismatch = false;
    if (cfg.golden_dir.empty()) {
        out["status"] = "disabled";
        return out;
    }
    const auto path = golden_path(cfg, p, lambda, s);
    Json stored = Json::object();
    if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        stored = Json::parse(in);
    }
    if (cfg.bless) {
        for (const auto& [k, v] : counts.items()) stored[k] = v;
        stored["p"] = p;
        stored["weight"] = std::to_string(lambda);
        stored["strategy"] = strategy_name(s);
        std::filesystem::create_directories(path.parent_path());
        std::ofstream o(path);
        o << stored.dump(2) << "\n";
        out["status"] = "blessed";
        return out;
    }
    if (stored.empty()) {
        out["status"] = "missing";
        return out;
    }
    Json diffs = Json::array();
    for (const auto& [k, v] : counts.items()) {
        if (!stored.contains(k)) continue;
        if (stored[k] != v) diffs.push_back(Json{{"key", k}, {"golden", stored[k]}, {"observed", v}});
    }
    mismatch = !diffs.empty();
    out["status"] = mismatch ? "mismatch" : "match";
    if (mismatch) out["differences"] = std::move(diffs);
    return out;
}

Scalar random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-12, 12);
    std::uniform_int_distribution<long long> den(1, 6);
    return Scalar::rational(num(rng), den(rng));
}

// Random domain-respecting parameters; when `want_valid`, also tries to meet
// the family's valid_when conditions by setting single parameters to small
// integers.
std::vector<Scalar> sample(const RBFamily& f, const Scalar& lambda, bool want_valid, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Scalar> ps;
        for (std::size_t i = 0; i < f.params.size(); ++i) ps.push_back(random_rational(rng));
        if (want_valid && !f.valid_when.empty()) {
            for (std::size_t i = 0; i < ps.size() && !satisfies_valid_when(f, make_assignment(f, lambda, ps)); ++i) {
                const Scalar keep = ps[i];
                for (long long v = -3; v <= 3; ++v) {
                    ps[i] = Scalar::rational(v);
                    if (satisfies_valid_when(f, make_assignment(f, lambda, ps))) break;
                }
                if (!satisfies_valid_when(f, make_assignment(f, lambda, ps))) ps[i] = keep;
            }
        }
        if (!domain_violation(f, make_assignment(f, lambda, ps))) return ps;
    }
    throw DomainViolation("no admissible parameters found for " + f.id);
}

}  // namespace

std::string golden_file_name(std::uint32_t p, std::uint32_t lambda, Strategy strategy) {
    return "p" + std::to_string(p) + "_w" + std::to_string(lambda % p) + "_" + strategy_name(strategy) + ".json";
}

Json config_json(const RunConfig& cfg) {
    Json c{{"command", cfg.command}};
    c["p"] = cfg.p ? Json(*cfg.p) : Json(nullptr);
    c["weight"] = cfg.weight;
    c["strategy"] = cfg.strategy;
    c["scope"] = cfg.scope;
    c["shards"] = cfg.shards;
    c["seed"] = cfg.seed;
    c["bless"] = cfg.bless;
    if (cfg.samples) c["samples"] = cfg.samples;
    return c;
}

Json envelope(const RunConfig& cfg, const Json& results) {
    return Json{{"tool_version", kToolVersion}, {"config", config_json(cfg)}, {"results", results}};
}

void check_config(const RunConfig& cfg) {
    if (!kCommands.count(cfg.command)) throw ParseError("unknown command '" + cfg.command + "'");
    if (cfg.shards == 0) throw InvalidParams("--shards must be at least 1");
    if (cfg.p) Field::prime(*cfg.p);
    if (cfg.strategy != "auto") parse_strategy(cfg.strategy);
    if (cfg.command == "verify" && !kVerifyScopes.count(cfg.scope)) {
        throw ParseError("verify needs --scope families|corollary|kernel-theorems|subalgebras");
    }
    if (cfg.command == "enumerate" || cfg.command == "classify" || cfg.command == "report" ||
        (cfg.command == "verify" && (cfg.scope == "kernel-theorems" || cfg.scope == "subalgebras"))) {
        prime_weight(cfg);
    } else {
        rational_weight(cfg);
    }
}

RunResult run_enumerate(const RunConfig& cfg) {
    const std::uint32_t p = prime_of(cfg);
    const std::uint32_t lam = prime_weight(cfg).as_residue();
    const Strategy s = strategy_of(cfg);
    const auto ops = enumerate_rb_packed(p, lam, s, cfg.shards);
    Json list = Json::array();
    for (const auto& m : ops) list.push_back(packed_to_json(m, p, lam));
    bool mismatch = false;
    Json golden = golden_check(cfg, p, lam, s, Json{{"total_rb_count", ops.size()}}, mismatch);
    RunResult r;
    r.results = Json{{"p", p},
                     {"weight", std::to_string(lam)},
                     {"strategy", strategy_name(s)},
                     {"count", ops.size()},
                     {"golden", std::move(golden)},
                     {"operators", std::move(list)}};
    r.exit_code = mismatch ? 1 : 0;
    return r;
}

RunResult run_classify(const RunConfig& cfg) {
    const std::uint32_t p = prime_of(cfg);
    const std::uint32_t lam = prime_weight(cfg).as_residue();
    const Strategy s = strategy_of(cfg);
    const auto ops = enumerate_rb_packed(p, lam, s, cfg.shards);
    const OrbitReport report = match_catalog(partition_orbits(ops, p, lam, cfg.shards), Scope::Final);
    bool mismatch = false;
    Json golden = golden_check(cfg, p, lam, s,
                               Json{{"total_rb_count", report.total_rb_count},
                                    {"trivial_count", report.trivial_count},
                                    {"orbit_count", report.orbits.size()}},
                               mismatch);
    RunResult r;
    r.results = to_json(report);
    r.results["strategy"] = strategy_name(s);
    r.results["golden"] = std::move(golden);
    const bool ok = report.unmatched.empty() && report.errors.empty() && !mismatch;
    r.results["pass"] = ok;
    r.exit_code = ok ? 0 : 1;
    return r;
}

RunResult verify_families(const std::vector<Scalar>& weights, std::size_t samples, std::uint64_t seed) {
    const StructureAlgebra alg = h4(Field::rationals());
    std::mt19937_64 rng(seed);
    Json items = Json::array();
    bool all = true;
    for (const auto& f : all_families()) {
        std::size_t checked = 0, passed = 0, conditional_true = 0, conditional_false = 0;
        Json failures = Json::array();
        for (const auto& lambda : weights) {
            for (std::size_t s = 0; s < samples; ++s) {
                const auto ps = sample(f, lambda, s % 2 == 0, rng);
                const auto w = instantiate(f, lambda, ps);
                const bool valid = satisfies_valid_when(f, make_assignment(f, lambda, ps));
                const bool rb = is_rb(alg, w);
                ++checked;
                if (!f.valid_when.empty()) ++(valid ? conditional_true : conditional_false);
                if (rb == valid) {
                    ++passed;
                } else if (failures.size() < 5) {
                    Json params = Json::object();
                    for (std::size_t i = 0; i < ps.size(); ++i) params[f.params[i]] = to_json(ps[i]);
                    failures.push_back(Json{{"weight", to_json(lambda)}, {"params", std::move(params)}, {"is_rb", rb}});
                }
            }
        }
        const bool ok = passed == checked;
        all = all && ok;
        std::string status = ok ? "pass" : "fail";
        if (ok && !f.valid_when.empty()) {
            status = "conditional:";
            for (const auto& c : f.valid_when) status += " " + c.text;
        }
        Json item{{"id", f.id}, {"status", status}, {"pass", ok}, {"checked", checked}, {"passed", passed}};
        if (!f.valid_when.empty()) {
            item["samples_meeting_condition"] = conditional_true;
            item["samples_violating_condition"] = conditional_false;
        }
        if (!failures.empty()) item["failures"] = std::move(failures);
        items.push_back(std::move(item));
    }
    Json ws = Json::array();
    for (const auto& w : weights) ws.push_back(to_json(w));
    return RunResult{Json{{"scope", "families"}, {"weights", std::move(ws)}, {"samples_per_weight", samples},
                          {"pass", all}, {"families", std::move(items)}},
                     all ? 0 : 1};
}

RunResult verify_corollary_run(const Scalar& weight, std::size_t samples, std::uint64_t seed) {
    const auto checks = verify_corollary(weight, samples, seed);
    Json items = Json::array();
    std::size_t passed = 0;
    for (const auto& c : checks) {
        items.push_back(to_json(c));
        passed += c.pass ? 1 : 0;
    }
    const bool ok = passed == checks.size();
    return RunResult{Json{{"scope", "corollary"},
                          {"weight", to_json(weight)},
                          {"samples", samples},
                          {"passed", passed},
                          {"total", checks.size()},
                          {"pass", ok},
                          {"items", std::move(items)}},
                     ok ? 0 : 1};
}

RunResult verify_subalgebras(std::uint32_t p) {
    const auto census = subalgebra_census(p);
    const auto maps = enumerate_maps(p, true);
    std::map<std::string, std::size_t> by_label;
    std::size_t shapeless = 0, witnessless = 0;
    Json entries = Json::array();
    for (const auto& e : census) {
        ++by_label[label(e.cls)];
        if (!e.shape) ++shapeless;
        const auto w = find_isomorphism_witness(e.space, maps);
        if (!w) ++witnessless;
        Json j = to_json(e);
        j["witness_map"] = w ? to_json(maps[*w]) : Json(nullptr);
        entries.push_back(std::move(j));
    }
    std::size_t dim2 = 0, dim3 = 0;
    Json labels = Json::object();
    for (SubalgebraClass c : kAllSubalgebraClasses) {
        const std::size_t n = by_label.count(label(c)) ? by_label[label(c)] : 0;
        labels[label(c)] = n;
        if (n > 0) ++(class_dim(c) == 2 ? dim2 : dim3);
    }
    const bool ok = shapeless == 0 && witnessless == 0 && dim2 == 5 && dim3 == 3 && by_label.size() == 8;
    return RunResult{Json{{"scope", "subalgebras"},
                          {"p", p},
                          {"subalgebra_count", census.size()},
                          {"labels_attained_dim2", dim2},
                          {"labels_attained_dim3", dim3},
                          {"label_counts", std::move(labels)},
                          {"without_shape", shapeless},
                          {"without_witness", witnessless},
                          {"pass", ok},
                          {"subalgebras", std::move(entries)}},
                     ok ? 0 : 1};
}

RunResult verify_kernel_theorems_run(std::uint32_t p, std::uint32_t lambda, Strategy strategy, std::size_t shards) {
    const auto ops = enumerate_rb_packed(p, lambda, strategy, shards);
    const auto checks = verify_kernel_theorems(ops, p, lambda, kernel_theorems(), all_families());
    Json items = Json::array();
    bool ok = true;
    for (const auto& c : checks) {
        items.push_back(to_json(c, p, lambda));
        ok = ok && c.pass();
    }
    return RunResult{Json{{"scope", "kernel-theorems"},
                          {"p", p},
                          {"weight", std::to_string(lambda)},
                          {"strategy", strategy_name(strategy)},
                          {"total_rb_count", ops.size()},
                          {"pass", ok},
                          {"theorems", std::move(items)}},
                     ok ? 0 : 1};
}

RunResult run_verify(const RunConfig& cfg) {
    if (cfg.scope == "families") {
        std::vector<Scalar> weights;
        if (cfg.weight == "1") {
            weights = {Scalar::rational(1), Scalar::rational(2), Scalar::rational(-1, 2)};
        } else {
            weights = {rational_weight(cfg)};
        }
        return verify_families(weights, cfg.samples ? cfg.samples : kDefaultFamilySamples, cfg.seed);
    }
    if (cfg.scope == "corollary") {
        return verify_corollary_run(rational_weight(cfg), cfg.samples ? cfg.samples : kDefaultCorollarySamples,
                                    cfg.seed);
    }
    if (cfg.scope == "subalgebras") return verify_subalgebras(prime_of(cfg));
    return verify_kernel_theorems_run(prime_of(cfg), prime_weight(cfg).as_residue(), strategy_of(cfg), cfg.shards);
}

RunResult run_report(const RunConfig& cfg) {
    Json sections = Json::object();
    Json summary = Json::object();
    bool ok = true;
    auto add = [&](const std::string& name, RunResult r) {
        summary[name] = r.exit_code == 0;
        ok = ok && r.exit_code == 0;
        sections[name] = std::move(r.results);
    };
    const std::uint32_t p = prime_of(cfg);
    const std::uint32_t lam = prime_weight(cfg).as_residue();
    add("families", verify_families({Scalar::rational(1), Scalar::rational(2), Scalar::rational(-1, 2)},
                                    cfg.samples ? cfg.samples : kDefaultFamilySamples, cfg.seed));
    add("corollary", verify_corollary_run(Scalar::rational(1), kDefaultCorollarySamples, cfg.seed));
    add("subalgebras", verify_subalgebras(p));
    add("kernel-theorems", verify_kernel_theorems_run(p, lam, strategy_of(cfg), cfg.shards));
    RunConfig c = cfg;
    c.command = "classify";
    add("classify", run_classify(c));
    return RunResult{Json{{"pass", ok}, {"summary", std::move(summary)}, {"sections", std::move(sections)}},
                     ok ? 0 : 1};
}

RunResult run_command(const RunConfig& cfg) {
    check_config(cfg);
    if (cfg.command == "enumerate") return run_enumerate(cfg);
    if (cfg.command == "classify") return run_classify(cfg);
    if (cfg.command == "verify") return run_verify(cfg);
    return run_report(cfg);
}

}  // namespace rbh4
