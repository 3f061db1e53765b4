#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "rbh4/errors.hpp"

namespace rbh4 {

class Scalar;

/// Descriptor of a ground field: either Q or F_p with p an odd prime.
class Field {
public:
    enum class Kind : std::uint8_t { Rational, Prime };

    static Field rationals() noexcept { return Field(Kind::Rational, 0); }
    /// Throws InvalidModulus unless p is an odd prime.
    static Field prime(std::uint64_t p);

    Kind kind() const noexcept { return kind_; }
    bool is_rational() const noexcept { return kind_ == Kind::Rational; }
    bool is_prime() const noexcept { return kind_ == Kind::Prime; }
    /// Modulus for F_p, 0 for Q.
    std::uint32_t modulus() const noexcept { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long n) const;
    /// Accepts "n", "-n", "n/d". Over F_p the fraction is evaluated mod p.
    Scalar parse(std::string_view text) const;

    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    friend class Scalar;
    Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}

    Kind kind_;
    std::uint32_t p_;
};

bool is_odd_prime(std::uint64_t p) noexcept;

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator; residues satisfy 0 <= value < p.
class Scalar {
public:
    struct Residue {
        std::uint32_t value;
        std::uint32_t modulus;
    };

    static Scalar rational(const mpq_class& q);
    static Scalar rational(long long num, long long den = 1);
    static Scalar residue(long long value, std::uint32_t modulus);

    Field field() const noexcept;
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Only valid for rationals.
    const mpq_class& as_rational() const;
    /// Only valid for residues.
    std::uint32_t as_residue() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Throws DivisionByZero on zero.
    Scalar inv() const;

    bool operator==(const Scalar& o) const;
    /// Fixed total order: residue order on F_p, (numerator, denominator)
    /// lexicographic on Q. Comparing across fields throws FieldMismatch.
    std::strong_ordering operator<=>(const Scalar& o) const;

    /// "n/d" (denominator 1 omitted) for Q, decimal residue for F_p.
    std::string to_string() const;

private:
    using Repr = std::variant<mpq_class, Residue>;
    explicit Scalar(Repr r) : repr_(std::move(r)) {}

    void require_same_field(const Scalar& o) const;

    Repr repr_;
};

Scalar add(const Scalar& a, const Scalar& b);
Scalar mul(const Scalar& a, const Scalar& b);
Scalar inv(const Scalar& a);

/// All elements of F_p in ascending residue order.
std::vector<Scalar> enumerate_field(std::uint64_t p);

/// Maps a rational into F_p; BadReduction if p divides the denominator.
Scalar reduce_mod(const Scalar& q, std::uint32_t p);

}  // namespace rbh4
