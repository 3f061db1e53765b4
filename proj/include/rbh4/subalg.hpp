#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbh4/autgroup.hpp"

namespace rbh4 {

/// Conjugacy classes of 2- and 3-dimensional subalgebras of H4 under
/// automorphisms and antiautomorphisms.
enum class SubalgebraClass {
    OneMinusG_XMinusGx,  // <1-g, x-gx>
    One_G,               // <1, g>
    One_XMinusGx,        // <1, x-gx>
    One_X,               // <1, x>
    X_Gx,                // <x, gx>
    OneMinusG_X_Gx,      // <1-g, x, gx>
    One_G_XMinusGx,      // <1, g, x-gx>
    One_X_Gx,            // <1, x, gx>
};

inline constexpr SubalgebraClass kAllSubalgebraClasses[] = {
    SubalgebraClass::OneMinusG_XMinusGx, SubalgebraClass::One_G,          SubalgebraClass::One_XMinusGx,
    SubalgebraClass::One_X,              SubalgebraClass::X_Gx,           SubalgebraClass::OneMinusG_X_Gx,
    SubalgebraClass::One_G_XMinusGx,     SubalgebraClass::One_X_Gx,
};

std::string label(SubalgebraClass c);
std::size_t class_dim(SubalgebraClass c);
/// The subspace spanned by the label's generators.
Subspace representative(SubalgebraClass c, const Field& field);

/// Multiplicatively closed; 1 need not belong to S.
bool is_subalgebra(const StructureAlgebra& alg, const Subspace& s);

/// Every d-dimensional subspace of F_p^n, one per reduced echelon basis.
std::vector<Subspace> enumerate_subspaces(std::uint64_t p, std::size_t n, std::size_t d);

/// Every d-dimensional subalgebra of H4 over F_p, d in {2, 3}.
std::vector<Subspace> enumerate_subalgebras(std::uint64_t p, std::size_t d);

/// Class of a subalgebra of H4 from invariants that survive conjugation:
/// dimension, whether 1 is in S, dim(S n <x, gx>), and for a nilpotent
/// generator a x + b gx whether a^2 = b^2.
/// Throws NotASubalgebra if S is not closed, Unclassifiable if the
/// invariants fall outside the eight known classes.
SubalgebraClass classify_subalgebra(const Subspace& s);

/// Which structural form S takes, if any:
///   dim 3: "<1+sg, x, gx>", "<1, g+y3x+y4gx, x+sgx>", "<1, x, gx>"
///   dim 2: "<1+sg+y3x+y4gx, x+mgx>", "<x, gx>", "<1, x2g+x3x+x4gx>"
/// with s, m in {1, -1}.
std::optional<std::string> lemma_shape(const Subspace& s);

/// For a 3-dimensional subalgebra avoiding 1 but containing some 1 + c*g,
/// the value c (must satisfy c^2 = 1).
std::optional<Scalar> unit_shift(const Subspace& s);

struct CensusEntry {
    Subspace space;
    SubalgebraClass cls;
    std::optional<std::string> shape;
};

/// Every 2- and 3-dimensional subalgebra over F_p with its class and shape.
std::vector<CensusEntry> subalgebra_census(std::uint64_t p);

/// Searches `maps` for phi with phi(S) = representative(class(S)).
std::optional<std::size_t> find_isomorphism_witness(const Subspace& s, const std::vector<AutoMap>& maps);

}  // namespace rbh4
