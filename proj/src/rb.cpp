#include "rbh4/rb.hpp"

namespace rbh4 {

namespace {

void check_compatible(const StructureAlgebra& alg, const WeightedOperator& w) {
    if (w.op.dim() != alg.dim()) throw DimMismatch("operator dimension differs from algebra dimension");
    if (!(w.op.field() == alg.field()) || !(w.weight.field() == alg.field())) {
        throw FieldMismatch("operator, weight and algebra must share one field");
    }
}

}  // namespace

AlgebraElement rb_defect(const StructureAlgebra& alg, const WeightedOperator& w, const AlgebraElement& a,
                         const AlgebraElement& b) {
    check_compatible(alg, w);
    const AlgebraElement ra = apply(w.op, a);
    const AlgebraElement rb = apply(w.op, b);
    const AlgebraElement lhs = alg.multiply(ra, rb);
    const AlgebraElement inner = alg.multiply(ra, b) + alg.multiply(a, rb) + alg.multiply(a, b).scaled(w.weight);
    return lhs - apply(w.op, inner);
}

std::vector<std::pair<std::size_t, std::size_t>> rb_pair_order(std::size_t dim) {
    std::vector<std::pair<std::size_t, std::size_t>> order;
    order.reserve(dim * dim);
    // (1,1), (g,g), (1,g), (g,1) carry most of the constraints on H4.
    const std::size_t lead = dim >= 2 ? 2 : 1;
    const std::pair<std::size_t, std::size_t> first[] = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
    for (const auto& pr : first) {
        if (pr.first < lead && pr.second < lead) order.push_back(pr);
    }
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            if (i < lead && j < lead) continue;
            order.emplace_back(i, j);
        }
    return order;
}

std::optional<std::pair<std::size_t, std::size_t>> first_rb_failure(const StructureAlgebra& alg,
                                                                    const WeightedOperator& w) {
    check_compatible(alg, w);
    const std::size_t n = alg.dim();
    std::vector<AlgebraElement> basis, images;
    for (std::size_t i = 0; i < n; ++i) {
        basis.push_back(alg.basis(i));
        images.push_back(w.op.image_of_basis(i));
    }
    for (const auto& [i, j] : rb_pair_order(n)) {
        const AlgebraElement lhs = alg.multiply(images[i], images[j]);
        AlgebraElement inner = alg.multiply(images[i], basis[j]) + alg.multiply(basis[i], images[j]);
        for (const auto& t : alg.terms()) {
            if (t.i == i && t.j == j) inner.coords[t.k] += w.weight * t.c;
        }
        if (!(lhs == apply(w.op, inner))) return std::make_pair(i, j);
    }
    return std::nullopt;
}

bool is_rb(const StructureAlgebra& alg, const WeightedOperator& w) { return !first_rb_failure(alg, w).has_value(); }

WeightedOperator dual(const WeightedOperator& w) {
    const LinearOperator id = LinearOperator::identity(w.op.field(), w.op.dim());
    return WeightedOperator{id.scaled(-w.weight) - w.op, w.weight};
}

bool is_trivial(const WeightedOperator& w) {
    if (w.op.is_zero()) return true;
    return w.op == LinearOperator::identity(w.op.field(), w.op.dim()).scaled(-w.weight);
}

}  // namespace rbh4
