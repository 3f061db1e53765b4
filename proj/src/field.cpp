#include "rbh4/field.hpp"

#include <charconv>

namespace rbh4 {

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    // a^(p-2) mod p; p is prime.
    std::uint64_t result = 1, base = a % p;
    std::uint64_t e = p - 2;
    while (e > 0) {
        if (e & 1U) result = result * base % p;
        base = base * base % p;
        e >>= 1U;
    }
    return static_cast<std::uint32_t>(result);
}

std::uint32_t normalize(long long v, std::uint32_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

mpz_class parse_integer(std::string_view s) {
    if (s.empty()) throw ParseError("empty integer");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw ParseError("bad integer '" + std::string(s) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw ParseError("bad integer '" + std::string(s) + "'");
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
}

}  // namespace

bool is_odd_prime(std::uint64_t p) noexcept {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_odd_prime(p)) {
        throw InvalidModulus(std::to_string(p) + " is not an odd prime (characteristic 2 and composites are unsupported)");
    }
    if (p > 65521) throw InvalidModulus("modulus " + std::to_string(p) + " too large");
    return Field(Kind::Prime, static_cast<std::uint32_t>(p));
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long n) const {
    if (is_rational()) return Scalar::rational(n);
    return Scalar::residue(n, p_);
}

Scalar Field::parse(std::string_view text) const {
    // Allow the unicode minus that appears in hand-typed weights.
    std::string s(text);
    if (s.rfind("\xe2\x88\x92", 0) == 0) s = "-" + s.substr(3);
    auto slash = s.find('/');
    mpz_class num = parse_integer(std::string_view(s).substr(0, slash));
    mpz_class den = 1;
    if (slash != std::string::npos) den = parse_integer(std::string_view(s).substr(slash + 1));
    if (den == 0) throw DivisionByZero("zero denominator in '" + s + "'");
    if (is_rational()) {
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar::rational(q);
    }
    mpz_class pz = p_;
    mpz_class n = num % pz;
    mpz_class d = den % pz;
    Scalar sn = Scalar::residue(n.get_si(), p_);
    Scalar sd = Scalar::residue(d.get_si(), p_);
    return sn / sd;
}

std::string Field::name() const {
    if (is_rational()) return "Q";
    return "F_" + std::to_string(p_);
}

Scalar Scalar::rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(Repr(std::in_place_index<0>, std::move(c)));
}

Scalar Scalar::rational(long long num, long long den) {
    if (den == 0) throw DivisionByZero("zero denominator");
    mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q.canonicalize();
    return Scalar(Repr(std::in_place_index<0>, std::move(q)));
}

Scalar Scalar::residue(long long value, std::uint32_t modulus) {
    return Scalar(Repr(std::in_place_index<1>, Residue{normalize(value, modulus), modulus}));
}

Field Scalar::field() const noexcept {
    if (repr_.index() == 0) return Field::rationals();
    // Modulus was validated when the residue was created through a Field.
    return Field(Field::Kind::Prime, std::get<1>(repr_).modulus);
}

bool Scalar::is_zero() const noexcept {
    if (repr_.index() == 0) return sgn(std::get<0>(repr_)) == 0;
    return std::get<1>(repr_).value == 0;
}

bool Scalar::is_one() const noexcept {
    if (repr_.index() == 0) return std::get<0>(repr_) == 1;
    return std::get<1>(repr_).value == 1;
}

const mpq_class& Scalar::as_rational() const {
    if (repr_.index() != 0) throw FieldMismatch("scalar " + to_string() + " is not rational");
    return std::get<0>(repr_);
}

std::uint32_t Scalar::as_residue() const {
    if (repr_.index() != 1) throw FieldMismatch("scalar " + to_string() + " is not a residue");
    return std::get<1>(repr_).value;
}

void Scalar::require_same_field(const Scalar& o) const {
    if (repr_.index() != o.repr_.index() ||
        (repr_.index() == 1 && std::get<1>(repr_).modulus != std::get<1>(o.repr_).modulus)) {
        throw FieldMismatch("cannot combine " + field().name() + " and " + o.field().name());
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    if (repr_.index() == 0) return Scalar(Repr(std::in_place_index<0>, mpq_class(std::get<0>(repr_) + std::get<0>(o.repr_))));
    const auto& a = std::get<1>(repr_);
    return Scalar(Repr(std::in_place_index<1>, Residue{(a.value + std::get<1>(o.repr_).value) % a.modulus, a.modulus}));
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(o);
    if (repr_.index() == 0) return Scalar(Repr(std::in_place_index<0>, mpq_class(std::get<0>(repr_) - std::get<0>(o.repr_))));
    const auto& a = std::get<1>(repr_);
    return Scalar(Repr(std::in_place_index<1>,
                       Residue{(a.value + a.modulus - std::get<1>(o.repr_).value) % a.modulus, a.modulus}));
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    if (repr_.index() == 0) return Scalar(Repr(std::in_place_index<0>, mpq_class(std::get<0>(repr_) * std::get<0>(o.repr_))));
    const auto& a = std::get<1>(repr_);
    auto prod = static_cast<std::uint64_t>(a.value) * std::get<1>(o.repr_).value % a.modulus;
    return Scalar(Repr(std::in_place_index<1>, Residue{static_cast<std::uint32_t>(prod), a.modulus}));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
    if (repr_.index() == 0) return Scalar(Repr(std::in_place_index<0>, mpq_class(-std::get<0>(repr_))));
    const auto& a = std::get<1>(repr_);
    return Scalar(Repr(std::in_place_index<1>, Residue{(a.modulus - a.value) % a.modulus, a.modulus}));
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + field().name());
    if (repr_.index() == 0) return Scalar(Repr(std::in_place_index<0>, mpq_class(1 / std::get<0>(repr_))));
    const auto& a = std::get<1>(repr_);
    return Scalar(Repr(std::in_place_index<1>, Residue{mod_inverse(a.value, a.modulus), a.modulus}));
}

bool Scalar::operator==(const Scalar& o) const {
    require_same_field(o);
    if (repr_.index() == 0) return std::get<0>(repr_) == std::get<0>(o.repr_);
    return std::get<1>(repr_).value == std::get<1>(o.repr_).value;
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
    require_same_field(o);
    if (repr_.index() == 1) return std::get<1>(repr_).value <=> std::get<1>(o.repr_).value;
    const auto& a = std::get<0>(repr_);
    const auto& b = std::get<0>(o.repr_);
    int c = cmp(a.get_num(), b.get_num());
    if (c == 0) c = cmp(a.get_den(), b.get_den());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
    if (repr_.index() == 1) return std::to_string(std::get<1>(repr_).value);
    const auto& q = std::get<0>(repr_);
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
Scalar inv(const Scalar& a) { return a.inv(); }

std::vector<Scalar> enumerate_field(std::uint64_t p) {
    Field f = Field::prime(p);
    std::vector<Scalar> out;
    out.reserve(p);
    for (std::uint64_t v = 0; v < p; ++v) out.push_back(f.from_int(static_cast<long long>(v)));
    return out;
}

Scalar reduce_mod(const Scalar& q, std::uint32_t p) {
    Field f = Field::prime(p);
    const mpq_class& r = q.as_rational();
    mpz_class pz = p;
    mpz_class den = r.get_den() % pz;
    if (den == 0) throw BadReduction("denominator of " + q.to_string() + " is divisible by " + std::to_string(p));
    mpz_class num = r.get_num() % pz;
    return f.from_int(num.get_si()) / f.from_int(den.get_si());
}

}  // namespace rbh4
