#include "rbh4/linops.hpp"

#include <algorithm>

namespace rbh4 {

LinearOperator::LinearOperator(Field field, std::size_t dim)
    : field_(field), dim_(dim), entries_(dim * dim, field.zero()) {
    if (dim == 0) throw InvalidDim("operator dimension must be positive");
}

LinearOperator LinearOperator::from_images(const Field& field, const std::vector<std::vector<Scalar>>& images) {
    LinearOperator r(field, images.size());
    for (std::size_t j = 0; j < images.size(); ++j) {
        if (images[j].size() != images.size()) throw DimMismatch("operator images must form a square matrix");
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (!(images[j][i].field() == field)) throw FieldMismatch("operator entry outside " + field.name());
            r.at(i, j) = images[j][i];
        }
    }
    return r;
}

LinearOperator LinearOperator::from_images(const Field& field, const std::vector<std::vector<long long>>& images) {
    LinearOperator r(field, images.size());
    for (std::size_t j = 0; j < images.size(); ++j) {
        if (images[j].size() != images.size()) throw DimMismatch("operator images must form a square matrix");
        for (std::size_t i = 0; i < images.size(); ++i) r.at(i, j) = field.from_int(images[j][i]);
    }
    return r;
}

LinearOperator LinearOperator::identity(const Field& field, std::size_t dim) {
    LinearOperator r(field, dim);
    for (std::size_t i = 0; i < dim; ++i) r.at(i, i) = field.one();
    return r;
}

AlgebraElement LinearOperator::image_of_basis(std::size_t j) const {
    AlgebraElement e;
    e.coords.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) e.coords.push_back(at(i, j));
    return e;
}

bool LinearOperator::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

LinearOperator LinearOperator::operator+(const LinearOperator& o) const {
    if (dim_ != o.dim_) throw DimMismatch("operator dimensions differ");
    LinearOperator r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
    return r;
}

LinearOperator LinearOperator::operator-(const LinearOperator& o) const {
    if (dim_ != o.dim_) throw DimMismatch("operator dimensions differ");
    LinearOperator r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] -= o.entries_[i];
    return r;
}

LinearOperator LinearOperator::scaled(const Scalar& c) const {
    LinearOperator r = *this;
    for (auto& e : r.entries_) e *= c;
    return r;
}

bool LinearOperator::operator==(const LinearOperator& o) const {
    if (dim_ != o.dim_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!(entries_[i] == o.entries_[i])) return false;
    }
    return true;
}

bool LinearOperator::operator<(const LinearOperator& o) const {
    if (dim_ != o.dim_) return dim_ < o.dim_;
    return std::lexicographical_compare(entries_.begin(), entries_.end(), o.entries_.begin(), o.entries_.end());
}

std::vector<std::size_t> rref(std::vector<std::vector<Scalar>>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const Scalar scale = rows[r][c].inv();
        for (auto& v : rows[r]) v *= scale;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const Scalar f = rows[i][c];
            for (std::size_t k = c; k < ncols; ++k) rows[i][k] -= f * rows[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

Subspace::Subspace(Field field, std::size_t ambient_dim, std::vector<AlgebraElement> spanning)
    : field_(field), ambient_(ambient_dim) {
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(spanning.size());
    for (auto& v : spanning) {
        if (v.dim() != ambient_dim) throw DimMismatch("spanning vector has wrong length");
        rows.push_back(std::move(v.coords));
    }
    pivots_ = rref(rows);
    basis_.reserve(rows.size());
    for (auto& row : rows) basis_.push_back(AlgebraElement{std::move(row)});
}

bool Subspace::contains(const AlgebraElement& v) const {
    if (v.dim() != ambient_) throw DimMismatch("vector has wrong length");
    // Reduce v against the echelon basis.
    AlgebraElement w = v;
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        const Scalar f = w.coords[pivots_[r]];
        if (f.is_zero()) continue;
        for (std::size_t k = 0; k < ambient_; ++k) w.coords[k] -= f * basis_[r].coords[k];
    }
    return w.is_zero();
}

bool Subspace::is_subspace_of(const Subspace& o) const {
    return std::all_of(basis_.begin(), basis_.end(), [&](const AlgebraElement& v) { return o.contains(v); });
}

Subspace Subspace::intersect(const Subspace& o) const {
    // Solve sum a_i u_i = sum b_j w_j through the kernel of [U; -W]^T.
    const std::size_t m = dim() + o.dim();
    if (m == 0) return Subspace(field_, ambient_, {});
    LinearOperator stacked(field_, std::max(m, ambient_));
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t k = 0; k < ambient_; ++k) stacked.at(k, i) = basis_[i].coords[k];
    for (std::size_t j = 0; j < o.dim(); ++j)
        for (std::size_t k = 0; k < ambient_; ++k) stacked.at(k, dim() + j) = -o.basis_[j].coords[k];
    Subspace rel = kernel(stacked);
    std::vector<AlgebraElement> span;
    for (const auto& coeffs : rel.basis()) {
        AlgebraElement v{std::vector<Scalar>(ambient_, field_.zero())};
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t k = 0; k < ambient_; ++k) v.coords[k] += coeffs.coords[i] * basis_[i].coords[k];
        span.push_back(std::move(v));
    }
    return Subspace(field_, ambient_, std::move(span));
}

bool Subspace::operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

bool Subspace::operator<(const Subspace& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        const auto& a = basis_[r].coords;
        const auto& b = o.basis_[r].coords;
        if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())) return true;
        if (std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end())) return false;
    }
    return false;
}

AlgebraElement apply(const LinearOperator& r, const AlgebraElement& u) {
    if (u.dim() != r.dim()) throw DimMismatch("operator and element dimensions differ");
    AlgebraElement out{std::vector<Scalar>(r.dim(), r.field().zero())};
    for (std::size_t j = 0; j < r.dim(); ++j) {
        if (!(u.coords[j].field() == r.field())) throw FieldMismatch("element and operator fields differ");
        if (u.coords[j].is_zero()) continue;
        for (std::size_t i = 0; i < r.dim(); ++i) {
            if (!r.at(i, j).is_zero()) out.coords[i] += r.at(i, j) * u.coords[j];
        }
    }
    return out;
}

LinearOperator compose(const LinearOperator& s, const LinearOperator& r) {
    if (s.dim() != r.dim()) throw DimMismatch("cannot compose operators of different dimension");
    if (!(s.field() == r.field())) throw FieldMismatch("cannot compose operators over different fields");
    const std::size_t n = s.dim();
    LinearOperator out(s.field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (s.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!r.at(k, j).is_zero()) out.at(i, j) += s.at(i, k) * r.at(k, j);
            }
        }
    return out;
}

namespace {

std::vector<std::vector<Scalar>> rows_of(const LinearOperator& r) {
    std::vector<std::vector<Scalar>> rows(r.dim());
    for (std::size_t i = 0; i < r.dim(); ++i) {
        rows[i].reserve(r.dim());
        for (std::size_t j = 0; j < r.dim(); ++j) rows[i].push_back(r.at(i, j));
    }
    return rows;
}

}  // namespace

std::size_t rank(const LinearOperator& r) {
    auto rows = rows_of(r);
    return rref(rows).size();
}

Subspace kernel(const LinearOperator& r) {
    auto rows = rows_of(r);
    const auto pivots = rref(rows);
    const std::size_t n = r.dim();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<AlgebraElement> span;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        AlgebraElement v{std::vector<Scalar>(n, r.field().zero())};
        v.coords[free] = r.field().one();
        for (std::size_t row = 0; row < pivots.size(); ++row) v.coords[pivots[row]] = -rows[row][free];
        span.push_back(std::move(v));
    }
    return Subspace(r.field(), n, std::move(span));
}

Subspace image(const LinearOperator& r) {
    std::vector<AlgebraElement> cols;
    for (std::size_t j = 0; j < r.dim(); ++j) cols.push_back(r.image_of_basis(j));
    return Subspace(r.field(), r.dim(), std::move(cols));
}

LinearOperator invert(const LinearOperator& r) {
    const std::size_t n = r.dim();
    std::vector<std::vector<Scalar>> aug(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i].push_back(r.at(i, j));
        for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? r.field().one() : r.field().zero());
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw Singular("operator has rank below " + std::to_string(n));
    LinearOperator out(r.field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug[i][n + j];
    return out;
}

Subspace map_subspace(const LinearOperator& r, const Subspace& s) {
    std::vector<AlgebraElement> imgs;
    for (const auto& v : s.basis()) imgs.push_back(apply(r, v));
    return Subspace(r.field(), r.dim(), std::move(imgs));
}

}  // namespace rbh4
