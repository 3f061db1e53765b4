#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rbh4/field.hpp"

namespace rbh4 {

/// Coordinates of an algebra element in the algebra's fixed basis.
struct AlgebraElement {
    std::vector<Scalar> coords;

    std::size_t dim() const noexcept { return coords.size(); }
    bool is_zero() const noexcept;
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement scaled(const Scalar& c) const;
    bool operator==(const AlgebraElement& o) const;
};

/// Finite-dimensional unital associative algebra presented by structure
/// constants: e_i * e_j = sum_k constants(i, j, k) e_k.
class StructureAlgebra {
public:
    struct Term {
        std::size_t i, j, k;
        Scalar c;
    };

    StructureAlgebra(Field field, std::vector<std::string> basis_names, std::vector<Scalar> constants,
                     std::size_t unit_index);

    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return names_.size(); }
    const std::vector<std::string>& basis_names() const noexcept { return names_; }
    std::size_t unit_index() const noexcept { return unit_; }
    const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const;
    /// Nonzero structure constants, in (i, j, k) order.
    const std::vector<Term>& terms() const noexcept { return terms_; }

    AlgebraElement zero() const;
    AlgebraElement basis(std::size_t i) const;
    AlgebraElement unit() const { return basis(unit_); }
    AlgebraElement element(const std::vector<long long>& coords) const;

    AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v) const;

    /// Human-readable violations of associativity and the unit law; empty
    /// iff the table presents a unital associative algebra.
    std::vector<std::string> verify_presentation() const;

    /// Copy with one structure constant replaced (for negative controls).
    StructureAlgebra with_constant(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) const;

    void check_element(const AlgebraElement& u) const;

private:
    void rebuild_terms();

    Field field_;
    std::vector<std::string> names_;
    std::vector<Scalar> constants_;
    std::size_t unit_;
    std::vector<Term> terms_;
};

/// Basis indices of the Sweedler algebra in the fixed order (1, g, x, gx).
namespace h4_basis {
inline constexpr std::size_t one = 0;
inline constexpr std::size_t g = 1;
inline constexpr std::size_t x = 2;
inline constexpr std::size_t gx = 3;
}  // namespace h4_basis

/// The Sweedler algebra: x^2 = 0, g^2 = 1, gx = -xg, basis (1, g, x, gx).
StructureAlgebra h4(const Field& field);

/// F x F with orthogonal idempotents e1, e2 (unit e1 + e2 is not a basis
/// vector, so the algebra is presented on the basis (1, e1)).
StructureAlgebra split_pair(const Field& field);

std::vector<std::string> verify_presentation(const StructureAlgebra& a);

}  // namespace rbh4
