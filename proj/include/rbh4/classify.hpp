#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rbh4/autgroup.hpp"
#include "rbh4/catalog.hpp"
#include "rbh4/rb.hpp"

namespace rbh4 {

enum class Strategy { Exhaustive, Backtracking };

std::string strategy_name(Strategy s);
Strategy parse_strategy(std::string_view s);

/// Largest prime the backtracking search accepts.
inline constexpr std::uint32_t kMaxBacktrackingPrime = 7;

/// A 4x4 matrix over F_p, row-major, entries in [0, p).
using Packed = std::array<std::uint8_t, 16>;

/// Base-p integer of the row-major entries, first entry most significant, so
/// index order equals lexicographic order.
std::uint64_t packed_index(const Packed& m, std::uint32_t p);
Packed unpack_index(std::uint64_t index, std::uint32_t p);

Packed to_packed(const LinearOperator& op);
LinearOperator from_packed(const Packed& m, std::uint32_t p);

/// H4 over F_p with a fixed weight, with the arithmetic needed by the search
/// and the orbit computations done on small integers.
class FpContext {
public:
    FpContext(std::uint32_t p, std::uint32_t lambda);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t lambda() const noexcept { return lambda_; }

    bool is_rb(const Packed& r) const;
    /// Checks the pairs (a, b) in rb_pair_order without stopping early; number
    /// of failing pairs.
    std::size_t rb_failures(const Packed& r) const;
    Packed dual(const Packed& r) const;
    Packed multiply(const Packed& a, const Packed& b) const;
    std::size_t rank(const Packed& r) const;

    /// The matrices of phi and phi^{-1} for every map in `maps`.
    void set_maps(const std::vector<AutoMap>& maps);
    std::size_t map_count() const noexcept { return maps_.size(); }
    Packed conjugate(const Packed& r, std::size_t map) const;
    /// Every phi^{-1} S phi with S in {r, dual(r)}, sorted and deduplicated.
    std::vector<Packed> orbit(const Packed& r) const;
    Packed canonical(const Packed& r) const;

    std::uint8_t add(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint8_t>((a + b) % p_); }
    std::uint8_t mul(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint8_t>((a * b) % p_); }
    std::uint8_t neg(std::uint32_t a) const { return static_cast<std::uint8_t>((p_ - a % p_) % p_); }
    std::uint8_t inv(std::uint32_t a) const { return inv_[a]; }

    /// Products of basis vectors: e_i e_j = sum_k table(i, j)[k] e_k.
    const std::array<std::uint8_t, 4>& table(std::size_t i, std::size_t j) const { return table_[i * 4 + j]; }

private:
    struct MapPair {
        Packed phi;
        Packed phi_inv;
    };

    std::uint32_t p_;
    std::uint32_t lambda_;
    std::vector<std::uint8_t> inv_;
    std::array<std::array<std::uint8_t, 4>, 16> table_{};
    std::vector<MapPair> maps_;
};

/// Every R over F_p with (R, lambda) Rota-Baxter, sorted by packed index.
/// Throws Infeasible for exhaustive search with p >= 5 or backtracking with
/// p > kMaxBacktrackingPrime, WeightMismatch for lambda = 0.
std::vector<Packed> enumerate_rb_packed(std::uint32_t p, std::uint32_t lambda, Strategy strategy,
                                        std::size_t shards = 1);
std::vector<WeightedOperator> enumerate_rb(std::uint64_t p, const Scalar& lambda, Strategy strategy,
                                           std::size_t shards = 1);

/// Lexicographic minimum of phi^{-1} S phi over all (anti)automorphisms phi
/// of H4 over F_p and S in {W, dual(W)}.
WeightedOperator canonical_form(const WeightedOperator& w, std::uint64_t p);

struct OrbitWitness {
    std::string family;
    std::vector<Scalar> params;
    /// canonical = phi^{-1} S phi with S the instantiation or its dual.
    AutoMap map;
    bool dual = false;
};

struct Orbit {
    WeightedOperator canonical{LinearOperator(Field::prime(3), 4), Scalar::residue(0, 3)};
    std::size_t size = 0;
    std::size_t kernel_dim = 0;
    bool trivial = false;
    std::vector<std::string> matched_families;
    std::optional<OrbitWitness> witness;
};

struct OrbitReport {
    std::uint32_t field_p = 0;
    Scalar weight = Scalar::residue(1, 3);
    std::size_t total_rb_count = 0;
    std::size_t trivial_count = 0;
    std::vector<Orbit> orbits;
    std::vector<WeightedOperator> unmatched;
    /// Distinct families sharing an orbit, and families spread over several
    /// orbits; informational.
    std::vector<std::string> findings;
    /// Family instantiations that were not among the enumerated operators.
    std::vector<std::string> errors;
    /// packed index of every member -> position in `orbits`.
    std::unordered_map<std::uint64_t, std::size_t> member_orbit;
};

OrbitReport partition_orbits(const std::vector<Packed>& ops, std::uint32_t p, std::uint32_t lambda,
                             std::size_t shards = 1);
OrbitReport partition_orbits(const std::vector<WeightedOperator>& ops, std::uint64_t p, std::size_t shards = 1);

/// Fills matched_families, witnesses, unmatched and findings by sweeping every
/// parameter tuple over F_p of each family in `families`.
OrbitReport match_catalog(OrbitReport report, const std::vector<RBFamily>& families);
OrbitReport match_catalog(OrbitReport report, Scope scope);

struct ClaimCheck {
    std::string item;
    std::string text;
    bool pass = false;
    std::string method;
    std::vector<std::string> details;
    /// One entry per sample for conjugacy claims.
    struct Witness {
        std::uint32_t p;
        std::vector<Scalar> params;
        std::vector<Scalar> target_params;
        AutoMap map;
    };
    std::vector<Witness> witnesses;
};

/// The seven corollary items. Conjugacy claims are tested on `samples` random
/// rational parameter tuples, each reduced modulo the first of 3, 5, 7 where
/// the reduction is defined.
std::vector<ClaimCheck> verify_corollary(const Scalar& lambda, std::size_t samples, std::uint64_t seed);

struct TheoremCheck {
    std::string theorem;
    std::string header;
    std::size_t enumerated = 0;
    std::size_t instantiated = 0;
    /// Enumerated operators not produced by any family of the theorem.
    std::vector<Packed> missing;
    /// Family instantiations outside the filtered enumeration.
    std::vector<Packed> extra;
    bool pass() const { return missing.empty() && extra.empty(); }
};

/// Compares, for each theorem, the enumerated operators with the theorem's
/// kernel (and image, for kernel dimension 1) against the union of its
/// families' instantiations. Families are looked up by id in `families`.
std::vector<TheoremCheck> verify_kernel_theorems(const std::vector<Packed>& ops, std::uint32_t p,
                                                 std::uint32_t lambda, const std::vector<KernelTheorem>& theorems,
                                                 const std::vector<RBFamily>& families);

}  // namespace rbh4
