#include <doctest.h>

#include <random>

#include "rbh4/catalog.hpp"
#include "rbh4/rb.hpp"

using namespace rbh4;

namespace {

const Scalar q1 = Scalar::rational(1);

WeightedOperator zero_op(const Field& f, const Scalar& w) { return {LinearOperator::zero(f, 4), w}; }

WeightedOperator minus_lambda_id(const Field& f, const Scalar& w) {
    return {LinearOperator::identity(f, 4).scaled(-w), w};
}

}  // namespace

TEST_CASE("rb_defect on trivial operators and Ma's (h)") {
    const Field q = Field::rationals();
    const auto alg = h4(q);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(rb_defect(alg, zero_op(q, q1), alg.basis(i), alg.basis(j)).is_zero());
            CHECK(rb_defect(alg, minus_lambda_id(q, Scalar::rational(3)), alg.basis(i), alg.basis(j)).is_zero());
        }
    namespace b = h4_basis;
    const auto h = instantiate(find_family("ma-h"), q1, {q1, Scalar::rational(0)});
    CHECK(rb_defect(alg, h, alg.basis(b::one), alg.basis(b::one)) == alg.basis(b::gx).scaled(Scalar::rational(2)));
    CHECK(rb_defect(alg, h, alg.basis(b::g), alg.basis(b::one)) == alg.basis(b::x).scaled(Scalar::rational(2)));
    CHECK(rb_defect(alg, h, alg.basis(b::g), alg.basis(b::g)).is_zero());
}

TEST_CASE("is_rb examples") {
    const Field q = Field::rationals();
    const auto alg = h4(q);
    CHECK(is_rb(alg, instantiate(find_family("final-6"), Scalar::rational(2), {})));
    CHECK(is_rb(alg, instantiate(find_family("ma-h"), q1, {Scalar::rational(0), q1})));
    CHECK_FALSE(is_rb(alg, instantiate(find_family("ma-h"), q1, {q1, q1})));
    CHECK(first_rb_failure(alg, instantiate(find_family("ma-h"), q1, {q1, q1})).has_value());
}

TEST_CASE("pair order starts with the pairs of 1 and g") {
    const auto order = rb_pair_order(4);
    REQUIRE(order.size() == 16);
    CHECK(order[0] == std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(order[1] == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(order[2] == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(order[3] == std::pair<std::size_t, std::size_t>{1, 0});
}

TEST_CASE("dual and triviality") {
    const Field q = Field::rationals();
    CHECK(dual(zero_op(q, q1)) == minus_lambda_id(q, q1));
    CHECK(dual(instantiate(find_family("ma-a"), q1, {})) == instantiate(find_family("ma-b"), q1, {}));
    const auto w = instantiate(find_family("final-12"), q1, {Scalar::rational(5, 3)});
    CHECK(dual(dual(w)) == w);
    CHECK(is_trivial(zero_op(q, q1)));
    CHECK(is_trivial(minus_lambda_id(q, Scalar::rational(-1, 2))));
    CHECK_FALSE(is_trivial(instantiate(find_family("final-4"), q1, {})));
    CHECK(is_zero_weight(zero_op(q, Scalar::rational(0))));
}

TEST_CASE("basis pairs suffice: RB operators have zero defect on random elements") {
    const Field q = Field::rationals();
    const auto alg = h4(q);
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long long> d(-6, 6);
    std::vector<WeightedOperator> ops;
    const auto& fams = all_families();
    for (std::size_t k = 0; ops.size() < 100; ++k) {
        const RBFamily& f = fams[k % fams.size()];
        if (!f.valid_when.empty()) continue;
        std::vector<Scalar> ps;
        for (std::size_t i = 0; i < f.params.size(); ++i) ps.push_back(Scalar::rational(d(rng), 1 + (k % 3)));
        if (domain_violation(f, make_assignment(f, q1, ps))) continue;
        ops.push_back(instantiate(f, q1, ps));
    }
    auto rnd = [&] { return alg.element({d(rng), d(rng), d(rng), d(rng)}); };
    for (const auto& w : ops) {
        REQUIRE(is_rb(alg, w));
        for (int i = 0; i < 10; ++i) CHECK(rb_defect(alg, w, rnd(), rnd()).is_zero());
    }
}

TEST_CASE("rb_defect is bilinear") {
    const Field q = Field::rationals();
    const auto alg = h4(q);
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long long> d(-5, 5);
    auto rnd = [&] { return alg.element({d(rng), d(rng), d(rng), d(rng)}); };
    for (int i = 0; i < 200; ++i) {
        LinearOperator r(q, 4);
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b) r.at(a, b) = Scalar::rational(d(rng));
        const WeightedOperator w{r, Scalar::rational(d(rng) == 0 ? 1 : 2)};
        const auto a = rnd(), a2 = rnd(), b = rnd(), b2 = rnd();
        CHECK(rb_defect(alg, w, a + a2, b) == rb_defect(alg, w, a, b) + rb_defect(alg, w, a2, b));
        CHECK(rb_defect(alg, w, a, b + b2) == rb_defect(alg, w, a, b) + rb_defect(alg, w, a, b2));
    }
}
