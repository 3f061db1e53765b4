#include "rbh4/expr.hpp"

#include <algorithm>
#include <cctype>

namespace rbh4 {

std::size_t symbol_index(std::string_view name) {
    for (std::size_t i = 0; i < kSymbols.size(); ++i) {
        if (kSymbols[i] == name) return i;
    }
    throw ParseError("unknown symbol '" + std::string(name) + "'");
}

void Assignment::set(std::string_view name, const Scalar& v) {
    if (!(v.field() == field_)) throw FieldMismatch("assignment value outside " + field_.name());
    values_.insert_or_assign(symbol_index(name), v);
}

const Scalar* Assignment::get(std::size_t index) const {
    auto it = values_.find(index);
    return it == values_.end() ? nullptr : &it->second;
}

Poly Poly::constant(const mpq_class& c) {
    Poly p;
    p.add_term(Monomial{}, c);
    return p;
}

Poly Poly::symbol(std::size_t index) {
    Poly p;
    Monomial m{};
    m.at(index) = 1;
    p.add_term(m, 1);
    return p;
}

bool Poly::is_nonzero_constant() const { return terms_.size() == 1 && terms_.begin()->first == Monomial{}; }

bool Poly::uses(std::size_t index) const {
    for (const auto& [m, c] : terms_) {
        if (m[index] != 0) return true;
    }
    return false;
}

void Poly::add_term(const Monomial& m, const mpq_class& c) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m{};
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint8_t>(m1[i] + m2[i]);
            r.add_term(m, c1 * c2);
        }
    return r;
}

Scalar Poly::evaluate(const Assignment& a) const {
    const Field& f = a.field();
    Scalar total = f.zero();
    for (const auto& [m, c] : terms_) {
        Scalar term = f.is_rational() ? Scalar::rational(c) : reduce_mod(Scalar::rational(c), f.modulus());
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            const Scalar* v = a.get(i);
            if (v == nullptr) throw ParseError("symbol '" + std::string(kSymbols[i]) + "' has no value");
            for (int e = 0; e < m[i]; ++e) term *= *v;
        }
        total += term;
    }
    return total;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Higher total degree first, then the map's order.
    std::vector<std::pair<Monomial, mpq_class>> items(terms_.rbegin(), terms_.rend());
    std::stable_sort(items.begin(), items.end(), [](const auto& l, const auto& r) {
        int dl = 0, dr = 0;
        for (auto e : l.first) dl += e;
        for (auto e : r.first) dr += e;
        return dl > dr;
    });
    bool first = true;
    for (const auto& [m, c] : items) {
        mpq_class mag = abs(c);
        std::string sign = sgn(c) < 0 ? "-" : "+";
        if (first) out += (sign == "-" ? "-" : "");
        else out += " " + sign + " ";
        first = false;
        std::string body;
        bool constant = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            constant = false;
            if (!body.empty()) body += "*";
            body += std::string(kSymbols[i]);
            if (m[i] > 1) body += "^" + std::to_string(m[i]);
        }
        std::string coef = mag.get_den() == 1 ? mag.get_num().get_str() : mag.get_num().get_str() + "/" + mag.get_den().get_str();
        if (constant) out += coef;
        else if (mag == 1) out += body;
        else out += coef + "*" + body;
    }
    return out;
}

Scalar RationalExpr::evaluate(const Assignment& a) const {
    const Scalar d = den.evaluate(a);
    if (d.is_zero()) throw DivisionByZero("denominator " + den.to_string() + " vanishes");
    return num.evaluate(a) / d;
}

std::string RationalExpr::to_string() const {
    if (den == Poly::constant(1)) return num.to_string();
    return "(" + num.to_string() + ") / (" + den.to_string() + ")";
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    RationalExpr parse_full() {
        RationalExpr e;
        e.source = std::string(s_);
        e.num = parse_sum();
        e.den = Poly::constant(1);
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            e.den = parse_term();
        }
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        if (e.den.is_zero()) throw DivisionByZero("zero denominator in '" + e.source + "'");
        return e;
    }

    Poly parse_only_poly() {
        Poly p = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly parse_sum() {
        Poly acc;
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        Poly t = parse_term();
        acc = negate ? -t : t;
        while (true) {
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            Poly next = parse_term();
            acc = c == '+' ? acc + next : acc - next;
        }
        return acc;
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (peek() == '*') {
            ++pos_;
            acc = acc * parse_factor();
        }
        return acc;
    }

    Poly parse_factor() {
        char c = peek();
        Poly base;
        if (c == '(') {
            ++pos_;
            base = parse_sum();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            base = Poly::constant(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)), 10)));
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            base = Poly::symbol(symbol_index(s_.substr(start, pos_ - start)));
        } else {
            fail("expected a number, symbol or '('");
        }
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
            Poly r = Poly::constant(1);
            for (int i = 0; i < e; ++i) r = r * base;
            base = r;
        }
        return base;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalExpr parse_expr(std::string_view text) { return Parser(text).parse_full(); }

Poly parse_poly(std::string_view text) { return Parser(text).parse_only_poly(); }

}  // namespace rbh4
