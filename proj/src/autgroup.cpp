#include "rbh4/autgroup.hpp"

namespace rbh4 {

AutoMap from_params(const Scalar& eps, const Scalar& a, const Scalar& b, const Scalar& p, const Scalar& q, bool anti) {
    const Field f = eps.field();
    for (const Scalar* s : {&a, &b, &p, &q}) {
        if (!(s->field() == f)) throw FieldMismatch("automorphism parameters must share one field");
    }
    if (!(eps * eps).is_one()) throw InvalidParams("eps must satisfy eps^2 = 1, got " + eps.to_string());
    if ((p * p - q * q).is_zero()) throw InvalidParams("p^2 - q^2 must be nonzero (p=" + p.to_string() + ", q=" + q.to_string() + ")");
    const Scalar z = f.zero();
    const Scalar o = f.one();
    // Columns: phi(1), phi(g), phi(x), phi(gx). For an automorphism
    // phi(gx) = phi(g)phi(x) = eps*q x + eps*p gx; for an antiautomorphism
    // phi(gx) = phi(x)phi(g) = -eps*q x - eps*p gx.
    const Scalar sign = anti ? -o : o;
    LinearOperator op = LinearOperator::from_images(
        f, std::vector<std::vector<Scalar>>{
               {o, z, z, z}, {z, eps, a, b}, {z, z, p, q}, {z, z, sign * eps * q, sign * eps * p}});
    return AutoMap{std::move(op), anti, AutoParams{eps, a, b, p, q}};
}

bool validate(const StructureAlgebra& alg, const AutoMap& phi) {
    if (phi.op.dim() != alg.dim() || !(phi.op.field() == alg.field())) return false;
    if (rank(phi.op) != alg.dim()) return false;
    if (!(apply(phi.op, alg.unit()) == alg.unit())) return false;
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const AlgebraElement ei = alg.basis(i);
            const AlgebraElement ej = alg.basis(j);
            const AlgebraElement lhs = apply(phi.op, alg.multiply(ei, ej));
            const AlgebraElement pi = apply(phi.op, ei);
            const AlgebraElement pj = apply(phi.op, ej);
            const AlgebraElement rhs = phi.anti ? alg.multiply(pj, pi) : alg.multiply(pi, pj);
            if (!(lhs == rhs)) return false;
        }
    return true;
}

std::vector<AutoMap> enumerate_maps(std::uint64_t p, bool include_anti) {
    const auto elems = enumerate_field(p);
    const Field f = Field::prime(p);
    std::vector<AutoMap> out;
    for (int anti = 0; anti < (include_anti ? 2 : 1); ++anti)
        for (const Scalar& eps : {f.one(), -f.one()})
            for (const auto& a : elems)
                for (const auto& b : elems)
                    for (const auto& pp : elems)
                        for (const auto& q : elems) {
                            if ((pp * pp - q * q).is_zero()) continue;
                            out.push_back(from_params(eps, a, b, pp, q, anti == 1));
                        }
    return out;
}

WeightedOperator conjugate(const WeightedOperator& w, const AutoMap& phi) {
    return WeightedOperator{compose(invert(phi.op), compose(w.op, phi.op)), w.weight};
}

AutoMap compose_maps(const AutoMap& phi, const AutoMap& psi) {
    return AutoMap{compose(phi.op, psi.op), phi.anti != psi.anti, std::nullopt};
}

AutoMap inverse_map(const AutoMap& phi) { return AutoMap{invert(phi.op), phi.anti, std::nullopt}; }

}  // namespace rbh4
