#include "rbh4/algebra.hpp"

namespace rbh4 {

bool AlgebraElement::is_zero() const noexcept {
    for (const auto& c : coords) {
        if (!c.is_zero()) return false;
    }
    return true;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (dim() != o.dim()) throw DimMismatch("element dimensions differ");
    AlgebraElement r = *this;
    for (std::size_t i = 0; i < dim(); ++i) r.coords[i] += o.coords[i];
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    if (dim() != o.dim()) throw DimMismatch("element dimensions differ");
    AlgebraElement r = *this;
    for (std::size_t i = 0; i < dim(); ++i) r.coords[i] -= o.coords[i];
    return r;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
    AlgebraElement r = *this;
    for (auto& v : r.coords) v *= c;
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    if (dim() != o.dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!(coords[i] == o.coords[i])) return false;
    }
    return true;
}

StructureAlgebra::StructureAlgebra(Field field, std::vector<std::string> basis_names, std::vector<Scalar> constants,
                                   std::size_t unit_index)
    : field_(field), names_(std::move(basis_names)), constants_(std::move(constants)), unit_(unit_index) {
    const std::size_t n = names_.size();
    if (n == 0) throw InvalidDim("algebra must have positive dimension");
    if (constants_.size() != n * n * n) throw DimMismatch("structure constant table must have dim^3 entries");
    if (unit_ >= n) throw InvalidDim("unit index out of range");
    for (const auto& c : constants_) {
        if (!(c.field() == field_)) throw FieldMismatch("structure constant outside " + field_.name());
    }
    rebuild_terms();
}

void StructureAlgebra::rebuild_terms() {
    terms_.clear();
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = constants_[(i * n + j) * n + k];
                if (!c.is_zero()) terms_.push_back({i, j, k, c});
            }
}

const Scalar& StructureAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t n = dim();
    return constants_.at((i * n + j) * n + k);
}

AlgebraElement StructureAlgebra::zero() const { return AlgebraElement{std::vector<Scalar>(dim(), field_.zero())}; }

AlgebraElement StructureAlgebra::basis(std::size_t i) const {
    if (i >= dim()) throw InvalidDim("basis index out of range");
    AlgebraElement e = zero();
    e.coords[i] = field_.one();
    return e;
}

AlgebraElement StructureAlgebra::element(const std::vector<long long>& coords) const {
    if (coords.size() != dim()) throw DimMismatch("coordinate count differs from algebra dimension");
    AlgebraElement e;
    e.coords.reserve(dim());
    for (long long c : coords) e.coords.push_back(field_.from_int(c));
    return e;
}

void StructureAlgebra::check_element(const AlgebraElement& u) const {
    if (u.dim() != dim()) throw DimMismatch("element has " + std::to_string(u.dim()) + " coordinates, algebra has dim " +
                                            std::to_string(dim()));
    for (const auto& c : u.coords) {
        if (!(c.field() == field_)) throw FieldMismatch("element coordinate outside " + field_.name());
    }
}

AlgebraElement StructureAlgebra::multiply(const AlgebraElement& u, const AlgebraElement& v) const {
    check_element(u);
    check_element(v);
    AlgebraElement r = zero();
    for (const auto& t : terms_) {
        if (u.coords[t.i].is_zero() || v.coords[t.j].is_zero()) continue;
        r.coords[t.k] += t.c * u.coords[t.i] * v.coords[t.j];
    }
    return r;
}

std::vector<std::string> StructureAlgebra::verify_presentation() const {
    std::vector<std::string> violations;
    const std::size_t n = dim();
    const AlgebraElement one = unit();
    for (std::size_t i = 0; i < n; ++i) {
        const AlgebraElement ei = basis(i);
        if (!(multiply(one, ei) == ei)) violations.push_back("unit law fails: 1*" + names_[i]);
        if (!(multiply(ei, one) == ei)) violations.push_back("unit law fails: " + names_[i] + "*1");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const AlgebraElement ij = multiply(basis(i), basis(j));
            for (std::size_t k = 0; k < n; ++k) {
                const AlgebraElement ek = basis(k);
                if (!(multiply(ij, ek) == multiply(basis(i), multiply(basis(j), ek)))) {
                    violations.push_back("associativity fails: (" + names_[i] + "*" + names_[j] + ")*" + names_[k]);
                }
            }
        }
    return violations;
}

StructureAlgebra StructureAlgebra::with_constant(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) const {
    StructureAlgebra copy = *this;
    const std::size_t n = dim();
    copy.constants_.at((i * n + j) * n + k) = c;
    copy.rebuild_terms();
    return copy;
}

StructureAlgebra h4(const Field& field) {
    using namespace h4_basis;
    const std::size_t n = 4;
    std::vector<Scalar> c(n * n * n, field.zero());
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, long long v) { c[(i * n + j) * n + k] = field.from_int(v); };
    for (std::size_t i = 0; i < n; ++i) {
        set(one, i, i, 1);
        set(i, one, i, 1);
    }
    set(g, g, one, 1);
    set(g, x, gx, 1);
    set(x, g, gx, -1);
    set(g, gx, x, 1);
    set(gx, g, x, -1);
    // x*x, x*gx, gx*x, gx*gx vanish.
    return StructureAlgebra(field, {"1", "g", "x", "gx"}, std::move(c), one);
}

StructureAlgebra split_pair(const Field& field) {
    const std::size_t n = 2;
    std::vector<Scalar> c(n * n * n, field.zero());
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) { c[(i * n + j) * n + k] = field.one(); };
    set(0, 0, 0);
    set(0, 1, 1);
    set(1, 0, 1);
    set(1, 1, 1);
    return StructureAlgebra(field, {"1", "e"}, std::move(c), 0);
}

std::vector<std::string> verify_presentation(const StructureAlgebra& a) { return a.verify_presentation(); }

}  // namespace rbh4
