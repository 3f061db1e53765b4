#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "rbh4/linops.hpp"

namespace rbh4 {

/// A linear operator paired with the weight of the Rota-Baxter identity it is
/// tested against.
struct WeightedOperator {
    LinearOperator op;
    Scalar weight;

    bool operator==(const WeightedOperator& o) const { return weight == o.weight && op == o.op; }
};

/// R(a)R(b) - R(R(a)b + aR(b) + lambda*ab). Zero iff the identity holds at (a, b).
AlgebraElement rb_defect(const StructureAlgebra& alg, const WeightedOperator& w, const AlgebraElement& a,
                         const AlgebraElement& b);

/// Ordered basis pairs in the order `is_rb` visits them: the pairs built from
/// the first two basis vectors come first, then the rest row by row.
std::vector<std::pair<std::size_t, std::size_t>> rb_pair_order(std::size_t dim);

/// True iff the identity holds on every ordered pair of basis vectors, which
/// suffices by bilinearity. Stops at the first failing pair.
bool is_rb(const StructureAlgebra& alg, const WeightedOperator& w);

/// First failing basis pair, if any.
std::optional<std::pair<std::size_t, std::size_t>> first_rb_failure(const StructureAlgebra& alg,
                                                                    const WeightedOperator& w);

/// -lambda*id - R, same weight.
WeightedOperator dual(const WeightedOperator& w);

/// R = 0 or R = -lambda*id.
bool is_trivial(const WeightedOperator& w);

/// Weight 0 is a legal input to the checks above but is outside the
/// classified range.
inline bool is_zero_weight(const WeightedOperator& w) { return w.weight.is_zero(); }

}  // namespace rbh4
