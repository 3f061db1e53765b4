#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "rbh4/field.hpp"

namespace rbh4 {

/// Symbols that may appear in family formulas. Index order is fixed.
inline constexpr std::array<std::string_view, 11> kSymbols = {
    "lambda", "p1", "p2", "p3", "alpha_x", "alpha_gx", "beta_gx", "gamma_g", "gamma_gx", "delta_g", "delta_gx",
};

/// Symbol index for a name, or throws ParseError.
std::size_t symbol_index(std::string_view name);

/// Values for symbols; unset symbols may not occur in an evaluated formula.
class Assignment {
public:
    explicit Assignment(Field field) : field_(field) {}
    void set(std::string_view name, const Scalar& v);
    const Scalar* get(std::size_t index) const;
    const Field& field() const noexcept { return field_; }

private:
    Field field_;
    std::map<std::size_t, Scalar> values_;
};

/// Multivariate polynomial with rational coefficients over kSymbols.
class Poly {
public:
    using Monomial = std::array<std::uint8_t, kSymbols.size()>;

    Poly() = default;
    static Poly constant(const mpq_class& c);
    static Poly symbol(std::size_t index);

    bool is_zero() const noexcept { return terms_.empty(); }
    /// Nonzero constant polynomial.
    bool is_nonzero_constant() const;
    bool uses(std::size_t index) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    Scalar evaluate(const Assignment& a) const;
    /// Canonical text, e.g. "-2*lambda^2 + p1*p3 - 1/2".
    std::string to_string() const;

private:
    void add_term(const Monomial& m, const mpq_class& c);
    std::map<Monomial, mpq_class> terms_;
};

/// numerator / denominator, parsed from a formula with at most one top-level
/// fraction bar.
struct RationalExpr {
    Poly num;
    Poly den;
    std::string source;

    /// Throws DivisionByZero if the denominator vanishes at `a`.
    Scalar evaluate(const Assignment& a) const;
    bool has_symbolic_denominator() const { return !den.is_nonzero_constant(); }
    /// Canonical text "num" or "(num) / (den)".
    std::string to_string() const;
};

/// Grammar: expr := sum ['/' term]; sum := ['-'] term (('+'|'-') term)*;
/// term := factor ('*' factor)*; factor := integer | symbol | '(' sum ')'
/// optionally followed by '^' integer.
RationalExpr parse_expr(std::string_view text);
Poly parse_poly(std::string_view text);

}  // namespace rbh4
