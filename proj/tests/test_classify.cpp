#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "rbh4/classify.hpp"
#include "rbh4/errors.hpp"

using namespace rbh4;

namespace {

const std::vector<Packed>& rb3() {
    static const auto ops = enumerate_rb_packed(3, 1, Strategy::Backtracking);
    return ops;
}

Packed random_packed(std::mt19937_64& rng, std::uint32_t p) {
    std::uniform_int_distribution<int> d(0, static_cast<int>(p) - 1);
    Packed m{};
    for (auto& e : m) e = static_cast<std::uint8_t>(d(rng));
    return m;
}

}  // namespace

TEST_CASE("packed encoding") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 1000; ++i) {
        const Packed m = random_packed(rng, 5);
        CHECK(unpack_index(packed_index(m, 5), 5) == m);
        CHECK(to_packed(from_packed(m, 5)) == m);
        const Packed n = random_packed(rng, 5);
        CHECK((packed_index(m, 5) < packed_index(n, 5)) == (m < n));
        CHECK((from_packed(m, 5) < from_packed(n, 5)) == (m < n));
    }
}

TEST_CASE("the fast checker agrees with the generic one") {
    const FpContext ctx(3, 1);
    const auto alg = h4(Field::prime(3));
    std::mt19937_64 rng(59);
    for (int i = 0; i < 3000; ++i) {
        const Packed m = i % 2 ? random_packed(rng, 3) : rb3()[static_cast<std::size_t>(i) % rb3().size()];
        const bool fast = ctx.is_rb(m);
        CHECK(fast == is_rb(alg, WeightedOperator{from_packed(m, 3), Scalar::residue(1, 3)}));
        CHECK(fast == (ctx.rb_failures(m) == 0));
    }
}

TEST_CASE("enumeration guards") {
    CHECK_THROWS_AS(enumerate_rb_packed(5, 1, Strategy::Exhaustive), Infeasible);
    CHECK_THROWS_AS(enumerate_rb_packed(11, 1, Strategy::Backtracking), Infeasible);
    CHECK_THROWS_AS(enumerate_rb_packed(3, 0, Strategy::Backtracking), WeightMismatch);
    CHECK_THROWS_AS(enumerate_rb_packed(4, 1, Strategy::Backtracking), InvalidModulus);
    CHECK_THROWS_AS(parse_strategy("random"), ParseError);
}

TEST_CASE("enumeration over F_3") {
    const auto& ops = rb3();
    CHECK(std::is_sorted(ops.begin(), ops.end()));
    CHECK(std::adjacent_find(ops.begin(), ops.end()) == ops.end());
    const Packed zero{};
    const FpContext ctx(3, 1);
    CHECK(std::binary_search(ops.begin(), ops.end(), zero));
    CHECK(std::binary_search(ops.begin(), ops.end(), ctx.dual(zero)));
    CHECK(enumerate_rb_packed(3, 1, Strategy::Exhaustive, 4) == ops);
    CHECK(enumerate_rb_packed(3, 1, Strategy::Backtracking, 3) == ops);
    const auto typed = enumerate_rb(3, Scalar::residue(1, 3), Strategy::Backtracking);
    REQUIRE(typed.size() == ops.size());
    CHECK(to_packed(typed.front().op) == ops.front());
}

TEST_CASE("closure of the F_3 operators") {
    const auto& ops = rb3();
    const std::set<Packed> all(ops.begin(), ops.end());
    FpContext ctx(3, 1);
    ctx.set_maps(enumerate_maps(3, true));
    for (const auto& m : ops) {
        CHECK(all.count(ctx.dual(m)) == 1);
        for (std::size_t k = 0; k < ctx.map_count(); k += 13) CHECK(all.count(ctx.conjugate(m, k)) == 1);
    }
}

TEST_CASE("weight rescaling maps weight 1 to weight 2") {
    const FpContext ctx2(3, 2);
    std::set<Packed> scaled;
    for (const auto& m : rb3()) {
        Packed s = m;
        for (auto& e : s) e = static_cast<std::uint8_t>((e * 2) % 3);
        CHECK(ctx2.is_rb(s));
        scaled.insert(s);
    }
    const auto w2 = enumerate_rb_packed(3, 2, Strategy::Backtracking);
    CHECK(std::set<Packed>(w2.begin(), w2.end()) == scaled);
}

TEST_CASE("canonical forms") {
    const Field f = Field::prime(3);
    const WeightedOperator zero{LinearOperator::zero(f, 4), f.one()};
    CHECK(canonical_form(zero, 3) == zero);
    CHECK(canonical_form(dual(zero), 3) == zero);

    const Scalar one = Scalar::rational(1);
    const Scalar a = Scalar::rational(2);
    const auto w1 = reduce_mod_p(instantiate(find_family("ker2-1g.1a"), one, {a}), 3);
    const auto w2 = conjugate(w1, from_params(f.one() * f.from_int(-1), f.zero(), f.zero(), f.one(), f.zero(), false));
    CHECK(canonical_form(w1, 3) == canonical_form(w2, 3));
    CHECK(canonical_form(canonical_form(w1, 3), 3) == canonical_form(w1, 3));

    FpContext ctx(3, 1);
    const auto maps = enumerate_maps(3, true);
    ctx.set_maps(maps);
    std::mt19937_64 rng(61);
    for (int i = 0; i < 10000; ++i) {
        const Packed m = rb3()[rng() % rb3().size()];
        const std::size_t k = rng() % maps.size();
        const Packed c = ctx.canonical(m);
        CHECK(ctx.canonical(ctx.conjugate(m, k)) == c);
        CHECK(ctx.canonical(ctx.dual(m)) == c);
        if (i % 500 == 0) {
            const WeightedOperator w{from_packed(m, 3), f.one()};
            CHECK(to_packed(canonical_form(w, 3).op) == c);
            CHECK(to_packed(conjugate(w, maps[k]).op) == ctx.conjugate(m, k));
        }
    }
}

TEST_CASE("orbit partition over F_3") {
    const auto report = partition_orbits(rb3(), 3, 1, 2);
    std::size_t total = 0;
    for (const auto& o : report.orbits) total += o.size;
    CHECK(total == report.total_rb_count);
    CHECK(report.total_rb_count == rb3().size());
    CHECK(report.trivial_count == 2);
    CHECK(report.member_orbit.size() == rb3().size());
    std::size_t trivial = 0;
    for (const auto& o : report.orbits) {
        if (!o.trivial) continue;
        ++trivial;
        CHECK(o.size == 2);
    }
    CHECK(trivial == 1);
    CHECK(report.orbits.front().canonical.op.is_zero());

    const auto typed = partition_orbits(enumerate_rb(3, Scalar::residue(1, 3), Strategy::Backtracking), 3);
    CHECK(typed.orbits.size() == report.orbits.size());
}

TEST_CASE("every orbit of F_3 is matched by the final list") {
    const auto report = match_catalog(partition_orbits(rb3(), 3, 1), Scope::Final);
    CHECK(report.unmatched.empty());
    CHECK(report.errors.empty());
    for (const auto& o : report.orbits) {
        REQUIRE_FALSE(o.matched_families.empty());
        if (o.trivial) {
            CHECK(o.matched_families == std::vector<std::string>{"trivial"});
            continue;
        }
        REQUIRE(o.witness.has_value());
        const auto& f = find_family(o.witness->family);
        auto w = instantiate(f, Scalar::residue(1, 3), o.witness->params);
        if (o.witness->dual) w = dual(w);
        CHECK(conjugate(w, o.witness->map) == o.canonical);
    }
    const auto m4 = reduce_mod_p(instantiate(find_family("final-4"), Scalar::rational(1), {}), 3);
    const auto pos = report.member_orbit.at(packed_index(to_packed(m4.op), 3));
    const auto& fams = report.orbits[pos].matched_families;
    CHECK(std::find(fams.begin(), fams.end(), "final-4") != fams.end());
}

TEST_CASE("kernels of nontrivial operators are subalgebras") {
    const auto alg = h4(Field::prime(3));
    const FpContext ctx(3, 1);
    for (const auto& m : rb3()) {
        const auto op = from_packed(m, 3);
        const auto k = kernel(op);
        if (k.dim() == 4 || (k.dim() == 0 && m == ctx.dual(Packed{}))) continue;
        CHECK(k.dim() <= 3);
        if (k.dim() >= 2) {
            CHECK(is_subalgebra(alg, k));
            CHECK(lemma_shape(k).has_value());
        }
    }
}

TEST_CASE("kernel theorems over F_3 and a mutation") {
    const auto checks = verify_kernel_theorems(rb3(), 3, 1, kernel_theorems(), all_families());
    REQUIRE(checks.size() == 12);
    for (const auto& c : checks) CHECK_MESSAGE(c.pass(), c.theorem);

    std::vector<RBFamily> mutated = all_families();
    using Col = std::array<std::string, 4>;
    for (auto& f : mutated) {
        if (f.id != "ker2-xgx.1") continue;
        f = make_family(f.id, f.scope, f.section, f.item, f.params,
                        {Col{"lambda", "0", "0", "0"}, Col{"0", "-lambda", "gamma_gx", "delta_gx"},
                         Col{"0", "0", "0", "0"}, Col{"0", "0", "0", "0"}});
    }
    std::vector<KernelTheorem> only;
    for (const auto& t : kernel_theorems())
        if (t.id == "ker2-xgx") only.push_back(t);
    const auto bad = verify_kernel_theorems(rb3(), 3, 1, only, mutated);
    REQUIRE(bad.size() == 1);
    CHECK_FALSE(bad[0].pass());
}

TEST_CASE("corollary items") {
    const auto checks = verify_corollary(Scalar::rational(1), 10, 5);
    REQUIRE(checks.size() == 7);
    std::map<std::string, bool> pass;
    for (const auto& c : checks) pass[c.item] = c.pass;
    CHECK(pass["i"]);
    CHECK(pass["ii"]);
    CHECK(pass["iii"]);
    CHECK(pass["iv"]);
    CHECK(pass["vii"]);
    for (const auto& c : checks) {
        if (c.item == "iii" || c.item == "iv" || c.item == "vii") CHECK(c.witnesses.size() == 10);
    }
    CHECK_THROWS_AS(verify_corollary(Scalar::rational(0), 1, 1), WeightMismatch);
}
