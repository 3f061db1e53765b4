#pragma once

#include <optional>
#include <vector>

#include "rbh4/rb.hpp"

namespace rbh4 {

/// Parameters of an automorphism of H4:
///   phi(g) = eps*g + a*x + b*gx,  phi(x) = p*x + q*gx,  eps^2 = 1, p^2 != q^2.
struct AutoParams {
    Scalar eps, a, b, p, q;
};

/// An algebra automorphism (anti = false) or antiautomorphism (anti = true)
/// of H4, stored as its linear map.
struct AutoMap {
    LinearOperator op;
    bool anti = false;
    std::optional<AutoParams> params;
};

/// Builds phi from its parameters. With `anti` set, phi(gx) is forced to
/// phi(x)phi(g) instead of phi(g)phi(x). Throws InvalidParams when
/// eps^2 != 1 or p^2 == q^2.
AutoMap from_params(const Scalar& eps, const Scalar& a, const Scalar& b, const Scalar& p, const Scalar& q, bool anti);

/// Checks invertibility, phi(1) = 1 and phi(uv) = phi(u)phi(v) (or
/// phi(v)phi(u) when anti) on all basis pairs. Works for any algebra.
bool validate(const StructureAlgebra& alg, const AutoMap& phi);

/// All automorphisms of H4 over F_p (then all antiautomorphisms when
/// `include_anti`), in the deterministic order eps in (1, -1), a, b, p, q
/// ascending residues.
std::vector<AutoMap> enumerate_maps(std::uint64_t p, bool include_anti);

/// phi^{-1} R phi with the same weight.
WeightedOperator conjugate(const WeightedOperator& w, const AutoMap& phi);

/// Composition as maps (phi after psi); anti flags combine by parity.
AutoMap compose_maps(const AutoMap& phi, const AutoMap& psi);
AutoMap inverse_map(const AutoMap& phi);

}  // namespace rbh4
