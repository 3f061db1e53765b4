#include <doctest.h>

#include <random>

#include "rbh4/errors.hpp"
#include "rbh4/linops.hpp"

using namespace rbh4;

namespace {

AlgebraElement vec(std::initializer_list<long long> v) {
    AlgebraElement e;
    for (long long c : v) e.coords.push_back(Scalar::rational(c));
    return e;
}

LinearOperator random_op(const Field& f, std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<long long> d(lo, hi);
    LinearOperator r(f, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r.at(i, j) = f.from_int(d(rng));
    return r;
}

}  // namespace

TEST_CASE("apply") {
    const Field q = Field::rationals();
    CHECK(apply(LinearOperator::identity(q, 4), vec({0, 1, 0, 0})) == vec({0, 1, 0, 0}));
    CHECK(apply(LinearOperator::identity(q, 4).scaled(Scalar::rational(-1)), vec({0, 0, 1, 0})) ==
          vec({0, 0, -1, 0}));
    // R(1) = -1, R(g) = -1 - g, R(x) = 0, R(gx) = -gx at weight 1
    const auto r3 = LinearOperator::from_images(q, std::vector<std::vector<long long>>{
                                                       {-1, 0, 0, 0}, {-1, -1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}});
    CHECK(apply(r3, vec({0, 1, 0, 0})) == vec({-1, -1, 0, 0}));
    CHECK_THROWS_AS(apply(r3, vec({1, 0})), DimMismatch);
}

TEST_CASE("kernel and image") {
    const Field q = Field::rationals();
    const auto zero = LinearOperator::zero(q, 4);
    const auto mid = LinearOperator::identity(q, 4).scaled(Scalar::rational(-1));
    CHECK(kernel(zero).dim() == 4);
    CHECK(kernel(mid).dim() == 0);
    CHECK(image(zero).dim() == 0);
    CHECK(image(mid).dim() == 4);

    const auto r4 = LinearOperator::from_images(q, std::vector<std::vector<long long>>{
                                                       {-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
    CHECK(kernel(r4) == Subspace(q, 4, {vec({0, 0, 1, 0}), vec({0, 0, 0, 1})}));

    // image <1-g, x, gx>
    const auto r = LinearOperator::from_images(q, std::vector<std::vector<long long>>{
                                                      {0, 0, 0, 0}, {-1, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}});
    CHECK(image(r) == Subspace(q, 4, {vec({1, -1, 0, 0}), vec({0, 0, 1, 0}), vec({0, 0, 0, 1})}));
}

TEST_CASE("compose and invert") {
    const Field q = Field::rationals();
    const auto id = LinearOperator::identity(q, 4);
    std::mt19937_64 rng(5);
    const auto r = random_op(q, rng, -4, 4);
    CHECK(compose(id, r) == r);
    CHECK(compose(r, LinearOperator::zero(q, 4)).is_zero());
    const auto phi = LinearOperator::from_images(q, std::vector<std::vector<long long>>{
                                                        {1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}});
    CHECK(compose(phi, invert(phi)) == id);
    CHECK(invert(id) == id);
    CHECK_THROWS_AS(invert(LinearOperator::zero(q, 4)), Singular);

    // phi(g) = g + c x + d gx, phi(x) = x: the inverse flips the signs of c and d
    const Scalar c = Scalar::rational(-3, 2), d = Scalar::rational(5, 7);
    LinearOperator shear = id;
    shear.at(2, 1) = c;
    shear.at(3, 1) = d;
    LinearOperator back = id;
    back.at(2, 1) = -c;
    back.at(3, 1) = -d;
    CHECK(invert(shear) == back);
}

TEST_CASE("rank-nullity and canonical subspaces") {
    std::mt19937_64 rng(17);
    const Field f3 = Field::prime(3);
    for (int i = 0; i < 10000; ++i) {
        const auto r = random_op(f3, rng, 0, 2);
        CHECK(rank(r) + kernel(r).dim() == 4);
        CHECK(image(r).dim() == rank(r));
    }
    const Field q = Field::rationals();
    for (int i = 0; i < 1000; ++i) {
        auto r = random_op(q, rng, -3, 3);
        if (i % 3 == 0) {
            for (std::size_t k = 0; k < 4; ++k) r.at(k, 3) = r.at(k, 0) + r.at(k, 1);
        }
        CHECK(rank(r) + kernel(r).dim() == 4);
        const Subspace k = kernel(r);
        CHECK(Subspace(q, 4, k.basis()) == k);
        CHECK(Subspace(q, 4, k.basis()).basis() == k.basis());
        for (const auto& v : k.basis()) CHECK(apply(r, v).is_zero());
    }
}

TEST_CASE("composition agrees with successive application") {
    std::mt19937_64 rng(23);
    const Field q = Field::rationals();
    std::uniform_int_distribution<long long> d(-5, 5);
    for (int i = 0; i < 300; ++i) {
        const auto s = random_op(q, rng, -3, 3), r = random_op(q, rng, -3, 3);
        const auto u = vec({d(rng), d(rng), d(rng), d(rng)});
        CHECK(apply(compose(s, r), u) == apply(s, apply(r, u)));
    }
}

TEST_CASE("subspace operations") {
    const Field q = Field::rationals();
    const Subspace a(q, 4, {vec({1, 0, 0, 0}), vec({0, 1, 0, 0})});
    const Subspace b(q, 4, {vec({1, 1, 0, 0}), vec({0, 0, 1, 0})});
    CHECK(a.intersect(b) == Subspace(q, 4, {vec({1, 1, 0, 0})}));
    CHECK(a.contains(vec({2, -3, 0, 0})));
    CHECK_FALSE(a.contains(vec({0, 0, 1, 0})));
    CHECK(Subspace(q, 4, {vec({1, 1, 0, 0})}).is_subspace_of(a));
}
