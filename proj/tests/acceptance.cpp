#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "rbh4/runs.hpp"

#ifndef RBH4_GOLDEN_DIR
#define RBH4_GOLDEN_DIR ""
#endif

using namespace rbh4;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

const std::vector<Packed>& exhaustive_f3() {
    static const auto ops = enumerate_rb_packed(3, 1, Strategy::Exhaustive, 4);
    return ops;
}

Json read_golden(const std::string& name) {
    const char* env = std::getenv("RBH4_GOLDEN_DIR");
    const std::string dir = env ? env : RBH4_GOLDEN_DIR;
    std::ifstream in(dir + "/" + name);
    if (!in) return Json();
    return Json::parse(in);
}

Outcome family_validity() {
    const auto r = verify_families({Scalar::rational(1), Scalar::rational(2), Scalar::rational(-1, 2)}, 100, 101);
    std::size_t families = 0, failed = 0;
    for (const auto& f : r.results["families"]) {
        if (f["id"] == "ma-h") continue;
        ++families;
        if (f["status"] != "pass") ++failed;
    }
    return {failed == 0 && families == 56,
            std::to_string(families - failed) + "/" + std::to_string(families) + " families, 300 samples each"};
}

Outcome h_dichotomy() {
    const auto& f = find_family("ma-h");
    const auto alg = h4(Field::rationals());
    const Scalar one = Scalar::rational(1);
    std::mt19937_64 rng(202);
    std::uniform_int_distribution<long long> num(-20, 20), den(1, 7);
    std::size_t agree = 0, zero_p1 = 0;
    for (int i = 0; i < 200; ++i) {
        const Scalar p1 = i % 2 ? Scalar::rational(num(rng), den(rng)) : Scalar::rational(0);
        const Scalar p2 = Scalar::rational(num(rng), den(rng));
        const bool rb = is_rb(alg, instantiate(f, one, {p1, p2}));
        agree += rb == p1.is_zero() ? 1 : 0;
        zero_p1 += p1.is_zero() ? 1 : 0;
    }
    return {agree == 200 && zero_p1 > 0 && zero_p1 < 200,
            std::to_string(agree) + "/200 agree, " + std::to_string(zero_p1) + " with p1 = 0"};
}

Outcome closure(std::uint32_t p, const std::vector<Packed>& ops, std::size_t samples) {
    const Field f = Field::prime(p);
    const auto alg = h4(f);
    const std::set<Packed> all(ops.begin(), ops.end());
    std::size_t dual_ok = 0;
    for (const auto& m : ops) {
        const WeightedOperator w{from_packed(m, p), f.one()};
        dual_ok += is_rb(alg, dual(w)) ? 1 : 0;
    }
    const auto maps = enumerate_maps(p, true);
    FpContext ctx(p, 1);
    ctx.set_maps(maps);
    std::mt19937_64 rng(303);
    std::size_t conj_ok = 0, generic_checked = 0, generic_ok = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const Packed& m = ops[rng() % ops.size()];
        const std::size_t k = rng() % maps.size();
        const Packed c = ctx.conjugate(m, k);
        conj_ok += ctx.is_rb(c) && all.count(c) ? 1 : 0;
        if (i % 100 == 0) {
            ++generic_checked;
            const auto w = conjugate(WeightedOperator{from_packed(m, p), f.one()}, maps[k]);
            generic_ok += is_rb(alg, w) && to_packed(w.op) == c ? 1 : 0;
        }
    }
    std::ostringstream s;
    s << "duals " << dual_ok << "/" << ops.size() << ", conjugates " << conj_ok << "/" << samples
      << ", generic recheck " << generic_ok << "/" << generic_checked;
    return {dual_ok == ops.size() && conj_ok == samples && generic_ok == generic_checked, s.str()};
}

Outcome completeness() {
    const auto report = match_catalog(partition_orbits(exhaustive_f3(), 3, 1, 4), Scope::Final);
    std::size_t unmatched_nontrivial = 0;
    for (const auto& o : report.orbits)
        if (!o.trivial && o.matched_families.empty()) ++unmatched_nontrivial;
    const Json golden = read_golden(golden_file_name(3, 1, Strategy::Exhaustive));
    const bool golden_ok = !golden.is_null() && golden["total_rb_count"] == report.total_rb_count &&
                           golden["trivial_count"] == report.trivial_count &&
                           golden["orbit_count"] == report.orbits.size();
    std::ostringstream s;
    s << report.total_rb_count << " operators, " << report.orbits.size() << " orbits, " << report.unmatched.size()
      << " unmatched, " << report.errors.size() << " catalog errors, golden "
      << (golden.is_null() ? "missing" : golden_ok ? "match" : "mismatch");
    return {report.unmatched.empty() && unmatched_nontrivial == 0 && report.errors.empty() && golden_ok, s.str()};
}

Outcome kernel_conformance() {
    const auto checks = verify_kernel_theorems(exhaustive_f3(), 3, 1, kernel_theorems(), all_families());
    std::size_t ok = 0, mismatches = 0;
    for (const auto& c : checks) {
        ok += c.pass() ? 1 : 0;
        mismatches += c.missing.size() + c.extra.size();
    }
    return {ok == checks.size() && !checks.empty(), std::to_string(ok) + "/" + std::to_string(checks.size()) +
                                                        " theorems, " + std::to_string(mismatches) + " mismatches"};
}

Outcome subalgebra_census_check() {
    const auto r3 = verify_subalgebras(3);
    const auto r5 = verify_subalgebras(5);
    std::ostringstream s;
    s << "F_3: " << r3.results["subalgebra_count"] << " subalgebras, F_5: " << r5.results["subalgebra_count"]
      << " subalgebras, labels " << r3.results["labels_attained_dim2"] << "+" << r3.results["labels_attained_dim3"]
      << " / " << r5.results["labels_attained_dim2"] << "+" << r5.results["labels_attained_dim3"];
    return {r3.exit_code == 0 && r5.exit_code == 0, s.str()};
}

Outcome corollary() {
    const auto r = verify_corollary_run(Scalar::rational(1), 20, 1);
    std::string failed;
    bool witnesses = true;
    for (const auto& item : r.results["items"]) {
        if (item["pass"] != true) failed += (failed.empty() ? "" : ",") + item["item"].get<std::string>();
        if (item["method"].get<std::string>().find("orbit") != std::string::npos && item["pass"] == true &&
            item["witnesses"].empty())
            witnesses = false;
    }
    std::string detail = r.results["passed"].dump() + "/7 items";
    if (!failed.empty()) detail += ", failing: " + failed;
    return {r.exit_code == 0 && witnesses, detail};
}

Outcome cross_strategy() {
    const auto bt3 = enumerate_rb_packed(3, 1, Strategy::Backtracking);
    const bool same = bt3 == exhaustive_f3();
    const auto t0 = std::chrono::steady_clock::now();
    const auto bt5 = enumerate_rb_packed(5, 1, Strategy::Backtracking, 4);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    FpContext ctx(5, 1);
    std::mt19937_64 rng(808);
    const std::size_t sample = std::max<std::size_t>(1, bt5.size() / 100);
    std::size_t recheck_ok = 0;
    const auto alg = h4(Field::prime(5));
    for (std::size_t i = 0; i < sample; ++i) {
        const Packed& m = bt5[rng() % bt5.size()];
        const WeightedOperator w{from_packed(m, 5), Scalar::residue(1, 5)};
        recheck_ok += ctx.rb_failures(m) == 0 && !first_rb_failure(alg, w) ? 1 : 0;
    }
    const Outcome cl = closure(5, bt5, 100000);
    const Json golden = read_golden(golden_file_name(5, 1, Strategy::Backtracking));
    const bool golden_ok = !golden.is_null() && golden["total_rb_count"] == bt5.size();
    std::ostringstream s;
    s << "F_3 sets " << (same ? "identical" : "differ") << " (" << bt3.size() << "), F_5 " << bt5.size()
      << " operators in " << secs << " s, recheck " << recheck_ok << "/" << sample << ", " << cl.detail
      << ", golden " << (golden.is_null() ? "missing" : golden_ok ? "match" : "mismatch");
    return {same && secs < 1800 && recheck_ok == sample && cl.pass && golden_ok, s.str()};
}

Outcome determinism() {
    RunConfig cfg;
    cfg.command = "classify";
    cfg.p = 3;
    cfg.weight = "1";
    cfg.shards = 8;
    const std::string a = envelope(cfg, run_command(cfg).results).dump(2);
    const std::string b = envelope(cfg, run_command(cfg).results).dump(2);
    return {a == b, std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different")};
}

struct Criterion {
    int number;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "family validity over Q", 10, family_validity},
        {2, "(h) dichotomy", 1, h_dichotomy},
        {3, "closure over F_3", 120, [] { return closure(3, exhaustive_f3(), 100000); }},
        {4, "completeness over F_3", 600, completeness},
        {5, "kernel-theorem conformance", 120, kernel_conformance},
        {6, "subalgebra census", 30, subalgebra_census_check},
        {7, "corollary", 60, corollary},
        {8, "cross-strategy agreement", 1800, cross_strategy},
        {9, "determinism", 600, determinism},
    };
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& c : criteria) {
        if (!selected.empty() && !selected.count(c.number)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs <= c.budget_seconds;
        const bool pass = o.pass && in_time;
        failures += pass ? 0 : 1;
        std::ostringstream t;
        t.precision(3);
        t << secs;
        std::cout << "criterion " << c.number << " [" << c.name << "]: " << (pass ? "PASS" : "FAIL") << " - "
                  << o.detail << " (" << t.str() << " s" << (in_time ? "" : ", over budget") << ")" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
