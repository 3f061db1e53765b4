#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rbh4/autgroup.hpp"
#include "rbh4/expr.hpp"
#include "rbh4/subalg.hpp"

namespace rbh4 {

enum class Scope { Ma, Theorems, Final };

std::string scope_name(Scope s);
Scope parse_scope(std::string_view s);

struct Constraint {
    Poly expr;
    bool nonzero = true;  // "expr != 0"; otherwise "expr = 0"
    std::string text;

    bool holds(const Assignment& a) const;
};

/// Automorphism parameters written as formulas in lambda and the family's
/// parameters.
struct SymbolicAutoParams {
    RationalExpr eps, a, b, p, q;
};

/// A parametrized Rota-Baxter operator family on H4.
struct RBFamily {
    std::string id;
    Scope scope;
    std::string section;
    std::string item;
    std::vector<std::string> params;
    /// Explicit restrictions plus one "d != 0" per symbolic denominator.
    std::vector<Constraint> domain;
    /// Extra conditions under which the family satisfies the identity
    /// (empty: always, given the domain).
    std::vector<Constraint> valid_when;
    /// images[j][i] = coefficient of e_i in R(e_j), basis (1, g, x, gx).
    std::array<std::array<RationalExpr, 4>, 4> images;
    /// Parameter values of the normal form reached by `reducing_map`.
    std::map<std::string, std::string> reduced_params;
    std::optional<SymbolicAutoParams> reducing_map;
    std::vector<std::string> notes;
};

/// One classification statement restricted to operators with a fixed kernel
/// (or, in kernel dimension 1, a fixed image).
struct KernelTheorem {
    std::string id;
    std::string header;
    std::size_t kernel_dim;
    /// Exact kernel required; none for the kernel-dimension-1 statements.
    std::optional<SubalgebraClass> kernel;
    std::optional<SubalgebraClass> image;
    std::vector<std::string> families;
};

struct CorollaryClaim {
    enum class Kind { Dual, Trivial, Conjugate, ConjugateToDual };
    std::string item;
    std::string family;
    Kind kind;
    std::string target;                        // family id; empty for Trivial
    std::map<std::string, std::string> fixed;  // parameters pinned by the claim
    std::string text;
};

const std::vector<RBFamily>& all_families();
std::vector<RBFamily> list_families(Scope scope);
/// Throws UnknownFamily.
const RBFamily& find_family(std::string_view id);
const std::vector<KernelTheorem>& kernel_theorems();
const std::vector<CorollaryClaim>& corollary_claims();

/// Fills lambda and parameters; `params` follows `f.params` order.
Assignment make_assignment(const RBFamily& f, const Scalar& weight, const std::vector<Scalar>& params);

/// First violated domain constraint, if any.
std::optional<std::string> domain_violation(const RBFamily& f, const Assignment& a);
bool satisfies_valid_when(const RBFamily& f, const Assignment& a);

/// Throws WeightMismatch for lambda = 0, DomainViolation naming the first
/// violated constraint.
WeightedOperator instantiate(const RBFamily& f, const Scalar& weight, const std::vector<Scalar>& params);

/// Entry-wise reduction of a rational operator; BadReduction names the entry.
WeightedOperator reduce_mod_p(const WeightedOperator& w, std::uint64_t p);

/// Every parameter tuple over F_p satisfying the domain at `weight`.
std::vector<std::vector<Scalar>> parameter_sweep(const RBFamily& f, const Scalar& weight);

/// The reducing automorphism evaluated at (weight, params).
AutoMap reducing_automorphism(const RBFamily& f, const Scalar& weight, const std::vector<Scalar>& params);
/// `params` with the normal-form values substituted.
std::vector<Scalar> reduced_parameters(const RBFamily& f, const std::vector<Scalar>& params);

/// Builds a family from formula strings; used by the registry and by tests
/// that need deliberately altered families.
RBFamily make_family(std::string id, Scope scope, std::string section, std::string item,
                     std::vector<std::string> params, const std::array<std::array<std::string, 4>, 4>& images,
                     const std::vector<std::string>& extra_domain = {},
                     const std::vector<std::string>& valid_when = {});

}  // namespace rbh4
