#pragma once

#include <cstddef>
#include <vector>

#include "rbh4/algebra.hpp"

namespace rbh4 {

/// Square matrix over a field. Column j holds the coordinates of the image
/// of basis vector e_j.
class LinearOperator {
public:
    LinearOperator(Field field, std::size_t dim);
    /// `images[j]` = coordinates of R(e_j).
    static LinearOperator from_images(const Field& field, const std::vector<std::vector<Scalar>>& images);
    static LinearOperator from_images(const Field& field, const std::vector<std::vector<long long>>& images);
    static LinearOperator identity(const Field& field, std::size_t dim);
    static LinearOperator zero(const Field& field, std::size_t dim) { return LinearOperator(field, dim); }

    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }

    const Scalar& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    Scalar& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

    AlgebraElement image_of_basis(std::size_t j) const;
    bool is_zero() const noexcept;

    LinearOperator operator+(const LinearOperator& o) const;
    LinearOperator operator-(const LinearOperator& o) const;
    LinearOperator scaled(const Scalar& c) const;

    bool operator==(const LinearOperator& o) const;
    /// Row-major lexicographic order under the field's scalar order.
    bool operator<(const LinearOperator& o) const;

private:
    Field field_;
    std::size_t dim_;
    std::vector<Scalar> entries_;  // row-major
};

/// Subspace given by the reduced row-echelon basis of its coordinate rows;
/// two subspaces are equal iff their canonical bases are equal.
class Subspace {
public:
    Subspace(Field field, std::size_t ambient_dim, std::vector<AlgebraElement> spanning);

    const Field& field() const noexcept { return field_; }
    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<AlgebraElement>& basis() const noexcept { return basis_; }
    /// Column index of the leading 1 in each basis row.
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(const AlgebraElement& v) const;
    bool is_subspace_of(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;

    bool operator==(const Subspace& o) const;
    bool operator<(const Subspace& o) const;

private:
    Field field_;
    std::size_t ambient_;
    std::vector<AlgebraElement> basis_;
    std::vector<std::size_t> pivots_;
};

/// In-place reduced row-echelon form; pivot = first nonzero entry scanning
/// columns left to right. Returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Scalar>>& rows);

AlgebraElement apply(const LinearOperator& r, const AlgebraElement& u);
LinearOperator compose(const LinearOperator& s, const LinearOperator& r);
std::size_t rank(const LinearOperator& r);
Subspace kernel(const LinearOperator& r);
Subspace image(const LinearOperator& r);
/// Throws Singular if rank < dim.
LinearOperator invert(const LinearOperator& r);
/// Image of a subspace under r.
Subspace map_subspace(const LinearOperator& r, const Subspace& s);

}  // namespace rbh4
