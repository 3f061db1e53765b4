#include <doctest.h>

#include <random>

#include "rbh4/catalog.hpp"
#include "rbh4/errors.hpp"

using namespace rbh4;

namespace {

const Scalar q0 = Scalar::rational(0);
const Scalar q1 = Scalar::rational(1);

std::string what_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const std::exception& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("registry sizes") {
    CHECK(list_families(Scope::Final).size() == 14);
    CHECK(list_families(Scope::Ma).size() == 8);
    CHECK(kernel_theorems().size() == 12);
    CHECK(corollary_claims().size() == 7);
    const auto& f1 = find_family("final-1");
    REQUIRE(f1.domain.size() == 1);
    CHECK(f1.domain[0].text == "alpha_x != 0");
    CHECK_THROWS_AS(find_family("final-15"), UnknownFamily);
    for (const auto& t : kernel_theorems())
        for (const auto& id : t.families) CHECK(find_family(id).scope == Scope::Theorems);
}

TEST_CASE("instantiate") {
    const auto w = instantiate(find_family("final-4"), q1, {});
    CHECK(w.op == LinearOperator::from_images(Field::rationals(), std::vector<std::vector<long long>>{
                                                                      {-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
    CHECK(is_rb(h4(Field::rationals()), w));

    CHECK_THROWS_AS(instantiate(find_family("ma-d"), q1, {q1, q1, q0}), DomainViolation);
    CHECK(what_of([] { instantiate(find_family("ma-d"), q1, {q1, q1, q0}); }).find("p3 != 0") != std::string::npos);
    CHECK(what_of([] { instantiate(find_family("ma-f"), q1, {q1, -q1}); }).find("lambda + p2 != 0") !=
          std::string::npos);
    CHECK_THROWS_AS(instantiate(find_family("final-1"), q1, {q0}), DomainViolation);
    CHECK_THROWS_AS(instantiate(find_family("final-4"), q0, {}), WeightMismatch);
    CHECK_THROWS_AS(instantiate(find_family("final-1"), q1, {}), InvalidParams);
}

TEST_CASE("reduction mod p") {
    const auto w = reduce_mod_p(instantiate(find_family("final-6"), q1, {}), 3);
    CHECK(w.op.at(0, 0) == Scalar::residue(1, 3));
    CHECK(w.weight == Scalar::residue(1, 3));
    CHECK(is_rb(h4(Field::prime(5)), reduce_mod_p(instantiate(find_family("final-3"), q1, {}), 5)));
    const auto third = instantiate(find_family("final-12"), q1, {Scalar::rational(1, 3)});
    CHECK_THROWS_AS(reduce_mod_p(third, 3), BadReduction);
}

TEST_CASE("symbolic denominators enter the domain") {
    const auto& f = find_family("ma-d");
    bool found = false;
    for (const auto& c : f.domain) found = found || c.text == "p3 != 0";
    CHECK(found);
    for (const auto& fam : all_families())
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t i = 0; i < 4; ++i) {
                if (!fam.images[j][i].has_symbolic_denominator()) continue;
                bool listed = false;
                for (const auto& c : fam.domain) listed = listed || (c.nonzero && c.expr == fam.images[j][i].den);
                CHECK_MESSAGE(listed, fam.id);
            }
}

TEST_CASE("Ma's (f) as printed is not Rota-Baxter in general") {
    using Col = std::array<std::string, 4>;
    const auto printed = make_family("ma-f-printed", Scope::Ma, "test", "(f)", {"p1", "p2"},
                                     {Col{"-lambda", "0", "0", "0"}, Col{"lambda", "0", "p1", "p1*p2/(lambda+p2)"},
                                      Col{"0", "0", "-(lambda+p1)", "-p2"}, Col{"0", "0", "lambda+p2", "p2"}});
    const auto alg = h4(Field::rationals());
    CHECK_FALSE(is_rb(alg, instantiate(printed, q1, {Scalar::rational(2), Scalar::rational(3)})));
    CHECK(is_rb(alg, instantiate(printed, q1, {Scalar::rational(3), Scalar::rational(3)})));
    CHECK(is_rb(alg, instantiate(find_family("ma-f"), q1, {Scalar::rational(2), Scalar::rational(3)})));
}

TEST_CASE("instantiations of theorem families have the theorem's kernel") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<long long> num(-9, 9), den(1, 4);
    const Field q = Field::rationals();
    for (const auto& t : kernel_theorems()) {
        for (const auto& id : t.families) {
            const auto& f = find_family(id);
            for (int s = 0; s < 20; ++s) {
                std::vector<Scalar> ps;
                for (std::size_t i = 0; i < f.params.size(); ++i) ps.push_back(Scalar::rational(num(rng), den(rng)));
                const Scalar lam = Scalar::rational(num(rng) == 0 ? 1 : 2, den(rng));
                if (domain_violation(f, make_assignment(f, lam, ps))) continue;
                const auto w = instantiate(f, lam, ps);
                CHECK_MESSAGE(kernel(w.op).dim() == t.kernel_dim, id);
                if (t.kernel) CHECK_MESSAGE(kernel(w.op) == representative(*t.kernel, q), id);
                if (t.image) CHECK_MESSAGE(image(w.op) == representative(*t.image, q), id);
            }
        }
    }
}

TEST_CASE("reducing maps bring families to their normal form") {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<long long> num(-9, 9), den(1, 4);
    std::size_t checked = 0;
    for (const auto& f : all_families()) {
        if (!f.reducing_map) continue;
        for (int s = 0; s < 10; ++s) {
            std::vector<Scalar> ps;
            for (std::size_t i = 0; i < f.params.size(); ++i) ps.push_back(Scalar::rational(num(rng), den(rng)));
            const Scalar lam = Scalar::rational(1 + s % 3, 1 + s % 2);
            if (domain_violation(f, make_assignment(f, lam, ps))) continue;
            const auto reduced = reduced_parameters(f, ps);
            if (domain_violation(f, make_assignment(f, lam, reduced))) continue;
            const auto phi = reducing_automorphism(f, lam, ps);
            CHECK_MESSAGE(conjugate(instantiate(f, lam, ps), phi) == instantiate(f, lam, reduced), f.id);
            ++checked;
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("parameter sweeps over F_p") {
    const auto sweep = parameter_sweep(find_family("final-1"), Scalar::residue(1, 5));
    CHECK(sweep.size() == 4);
    CHECK(parameter_sweep(find_family("final-4"), Scalar::residue(1, 3)).size() == 1);
    CHECK(parameter_sweep(find_family("ma-d"), Scalar::residue(1, 3)).size() == 18);
}

TEST_CASE("scope names round-trip") {
    for (Scope s : {Scope::Ma, Scope::Theorems, Scope::Final}) CHECK(parse_scope(scope_name(s)) == s);
    CHECK_THROWS_AS(parse_scope("everything"), ParseError);
}
