#include "rbh4/subalg.hpp"

#include <algorithm>

namespace rbh4 {

namespace {

using namespace h4_basis;

AlgebraElement vec(const Field& f, long long c1, long long cg, long long cx, long long cgx) {
    return AlgebraElement{{f.from_int(c1), f.from_int(cg), f.from_int(cx), f.from_int(cgx)}};
}

Subspace nilpotent_part(const Field& f) { return Subspace(f, 4, {vec(f, 0, 0, 1, 0), vec(f, 0, 0, 0, 1)}); }

}  // namespace

std::string label(SubalgebraClass c) {
    switch (c) {
        case SubalgebraClass::OneMinusG_XMinusGx: return "<1-g, x-gx>";
        case SubalgebraClass::One_G: return "<1, g>";
        case SubalgebraClass::One_XMinusGx: return "<1, x-gx>";
        case SubalgebraClass::One_X: return "<1, x>";
        case SubalgebraClass::X_Gx: return "<x, gx>";
        case SubalgebraClass::OneMinusG_X_Gx: return "<1-g, x, gx>";
        case SubalgebraClass::One_G_XMinusGx: return "<1, g, x-gx>";
        case SubalgebraClass::One_X_Gx: return "<1, x, gx>";
    }
    return "?";
}

std::size_t class_dim(SubalgebraClass c) {
    switch (c) {
        case SubalgebraClass::OneMinusG_X_Gx:
        case SubalgebraClass::One_G_XMinusGx:
        case SubalgebraClass::One_X_Gx: return 3;
        default: return 2;
    }
}

Subspace representative(SubalgebraClass c, const Field& f) {
    switch (c) {
        case SubalgebraClass::OneMinusG_XMinusGx: return Subspace(f, 4, {vec(f, 1, -1, 0, 0), vec(f, 0, 0, 1, -1)});
        case SubalgebraClass::One_G: return Subspace(f, 4, {vec(f, 1, 0, 0, 0), vec(f, 0, 1, 0, 0)});
        case SubalgebraClass::One_XMinusGx: return Subspace(f, 4, {vec(f, 1, 0, 0, 0), vec(f, 0, 0, 1, -1)});
        case SubalgebraClass::One_X: return Subspace(f, 4, {vec(f, 1, 0, 0, 0), vec(f, 0, 0, 1, 0)});
        case SubalgebraClass::X_Gx: return nilpotent_part(f);
        case SubalgebraClass::OneMinusG_X_Gx:
            return Subspace(f, 4, {vec(f, 1, -1, 0, 0), vec(f, 0, 0, 1, 0), vec(f, 0, 0, 0, 1)});
        case SubalgebraClass::One_G_XMinusGx:
            return Subspace(f, 4, {vec(f, 1, 0, 0, 0), vec(f, 0, 1, 0, 0), vec(f, 0, 0, 1, -1)});
        case SubalgebraClass::One_X_Gx:
            return Subspace(f, 4, {vec(f, 1, 0, 0, 0), vec(f, 0, 0, 1, 0), vec(f, 0, 0, 0, 1)});
    }
    throw InvalidDim("unknown subalgebra class");
}

bool is_subalgebra(const StructureAlgebra& alg, const Subspace& s) {
    for (const auto& u : s.basis())
        for (const auto& v : s.basis()) {
            if (!s.contains(alg.multiply(u, v))) return false;
        }
    return true;
}

std::vector<Subspace> enumerate_subspaces(std::uint64_t p, std::size_t n, std::size_t d) {
    const Field f = Field::prime(p);
    if (d > n) throw InvalidDim("subspace dimension exceeds ambient dimension");
    std::vector<Subspace> out;
    // Choose pivot columns, then every assignment of the free entries that
    // keeps the rows in reduced echelon form.
    std::vector<std::size_t> pivots(d);
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(d), true);
    do {
        std::size_t k = 0;
        for (std::size_t c = 0; c < n; ++c)
            if (mask[c]) pivots[k++] = c;
        // Free slots: (row r, column c) with c > pivots[r] and c not a pivot.
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = pivots[r] + 1; c < n; ++c)
                if (!mask[c]) slots.emplace_back(r, c);
        std::vector<std::uint32_t> digits(slots.size(), 0);
        while (true) {
            std::vector<AlgebraElement> rows(d, AlgebraElement{std::vector<Scalar>(n, f.zero())});
            for (std::size_t r = 0; r < d; ++r) rows[r].coords[pivots[r]] = f.one();
            for (std::size_t s = 0; s < slots.size(); ++s) rows[slots[s].first].coords[slots[s].second] = f.from_int(digits[s]);
            out.emplace_back(f, n, std::move(rows));
            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
            if (pos == digits.size()) break;
        }
    } while (std::prev_permutation(mask.begin(), mask.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subspace> enumerate_subalgebras(std::uint64_t p, std::size_t d) {
    if (d != 2 && d != 3) throw InvalidDim("only 2- and 3-dimensional subalgebras are enumerated");
    const StructureAlgebra alg = h4(Field::prime(p));
    std::vector<Subspace> out;
    for (auto& s : enumerate_subspaces(p, 4, d)) {
        if (is_subalgebra(alg, s)) out.push_back(std::move(s));
    }
    return out;
}

SubalgebraClass classify_subalgebra(const Subspace& s) {
    const Field f = s.field();
    const StructureAlgebra alg = h4(f);
    if (s.ambient_dim() != 4) throw DimMismatch("subspace must live in H4");
    if (!is_subalgebra(alg, s)) throw NotASubalgebra("subspace is not closed under multiplication");
    const bool has_unit = s.contains(alg.unit());
    const Subspace nil = s.intersect(nilpotent_part(f));
    auto isotropic = [&](const AlgebraElement& n) {
        return (n.coords[x] * n.coords[x] - n.coords[gx] * n.coords[gx]).is_zero();
    };
    if (s.dim() == 2) {
        if (has_unit) {
            if (nil.dim() == 0) return SubalgebraClass::One_G;
            if (nil.dim() == 1) return isotropic(nil.basis()[0]) ? SubalgebraClass::One_XMinusGx : SubalgebraClass::One_X;
        } else {
            if (nil.dim() == 2) return SubalgebraClass::X_Gx;
            if (nil.dim() == 1 && isotropic(nil.basis()[0])) return SubalgebraClass::OneMinusG_XMinusGx;
        }
    } else if (s.dim() == 3) {
        if (!has_unit && nil.dim() == 2) return SubalgebraClass::OneMinusG_X_Gx;
        if (has_unit && nil.dim() == 2) return SubalgebraClass::One_X_Gx;
        if (has_unit && nil.dim() == 1 && isotropic(nil.basis()[0])) return SubalgebraClass::One_G_XMinusGx;
    }
    throw Unclassifiable("no class for a " + std::to_string(s.dim()) + "-dimensional subalgebra with unit=" +
                         (has_unit ? "yes" : "no") + " and nilpotent part of dim " + std::to_string(nil.dim()));
}

std::optional<Scalar> unit_shift(const Subspace& s) {
    const Field f = s.field();
    if (s.dim() != 3 || s.contains(AlgebraElement{{f.one(), f.zero(), f.zero(), f.zero()}})) return std::nullopt;
    // The plane of (1, g)-coordinates meets S in a line spanned by 1 + c*g
    // when S contains such an element.
    const Subspace plane(f, 4, {vec(f, 1, 0, 0, 0), vec(f, 0, 1, 0, 0)});
    const Subspace meet = s.intersect(plane);
    if (meet.dim() != 1 || meet.basis()[0].coords[one].is_zero()) return std::nullopt;
    return meet.basis()[0].coords[g] / meet.basis()[0].coords[one];
}

std::optional<std::string> lemma_shape(const Subspace& s) {
    const Field f = s.field();
    const AlgebraElement unit = vec(f, 1, 0, 0, 0);
    const Subspace nil = nilpotent_part(f);
    const Subspace ideal(f, 4, {vec(f, 1, 0, 0, 0), vec(f, 0, 0, 1, 0), vec(f, 0, 0, 0, 1)});
    const long long signs[] = {1, -1};
    if (s.dim() == 3) {
        for (long long sg : signs) {
            if (s == Subspace(f, 4, {vec(f, 1, sg, 0, 0), vec(f, 0, 0, 1, 0), vec(f, 0, 0, 0, 1)})) return "<1+sg, x, gx>";
        }
        if (s == ideal) return "<1, x, gx>";
        if (s.contains(unit) && !s.is_subspace_of(ideal)) {
            for (long long sg : signs) {
                if (s.contains(vec(f, 0, 0, 1, sg))) return "<1, g+y3x+y4gx, x+sgx>";
            }
        }
        return std::nullopt;
    }
    if (s.dim() == 2) {
        if (s == nil) return "<x, gx>";
        if (s.contains(unit)) return "<1, x2g+x3x+x4gx>";
        for (long long mu : signs) {
            if (!s.contains(vec(f, 0, 0, 1, mu))) continue;
            // The remaining direction must be normalizable to 1 + s*g + ...
            for (const auto& b : s.basis()) {
                if (b.coords[one].is_zero()) continue;
                const Scalar ratio = b.coords[g] / b.coords[one];
                if (ratio.is_one() || (-ratio).is_one()) return "<1+sg+y3x+y4gx, x+mgx>";
            }
        }
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<CensusEntry> subalgebra_census(std::uint64_t p) {
    std::vector<CensusEntry> out;
    for (std::size_t d : {2, 3}) {
        for (auto& s : enumerate_subalgebras(p, d)) {
            const SubalgebraClass c = classify_subalgebra(s);
            auto shape = lemma_shape(s);
            out.push_back({std::move(s), c, std::move(shape)});
        }
    }
    return out;
}

std::optional<std::size_t> find_isomorphism_witness(const Subspace& s, const std::vector<AutoMap>& maps) {
    const Subspace target = representative(classify_subalgebra(s), s.field());
    for (std::size_t i = 0; i < maps.size(); ++i) {
        if (map_subspace(maps[i].op, s) == target) return i;
    }
    return std::nullopt;
}

}  // namespace rbh4
