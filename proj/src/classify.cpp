#include "rbh4/classify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <thread>
#include <unordered_set>

#include "rbh4/subalg.hpp"

namespace rbh4 {

std::string strategy_name(Strategy s) { return s == Strategy::Exhaustive ? "exhaustive" : "backtracking"; }

Strategy parse_strategy(std::string_view s) {
    if (s == "exhaustive") return Strategy::Exhaustive;
    if (s == "backtracking") return Strategy::Backtracking;
    throw ParseError("unknown strategy '" + std::string(s) + "'");
}

std::uint64_t packed_index(const Packed& m, std::uint32_t p) {
    std::uint64_t idx = 0;
    for (auto v : m) idx = idx * p + v;
    return idx;
}

Packed unpack_index(std::uint64_t index, std::uint32_t p) {
    Packed m{};
    for (std::size_t k = 16; k-- > 0;) {
        m[k] = static_cast<std::uint8_t>(index % p);
        index /= p;
    }
    return m;
}

Packed to_packed(const LinearOperator& op) {
    if (op.dim() != 4) throw DimMismatch("packed matrices are 4x4");
    if (!op.field().is_prime()) throw FieldMismatch("packed matrices live over F_p");
    Packed m{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m[i * 4 + j] = static_cast<std::uint8_t>(op.at(i, j).as_residue());
    return m;
}

LinearOperator from_packed(const Packed& m, std::uint32_t p) {
    LinearOperator op(Field::prime(p), 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) op.at(i, j) = Scalar::residue(m[i * 4 + j], p);
    return op;
}

// ---------------------------------------------------------------------------
// FpContext

FpContext::FpContext(std::uint32_t p, std::uint32_t lambda) : p_(p), lambda_(lambda % p) {
    if (!is_odd_prime(p) || p > 251) throw InvalidModulus("packed arithmetic needs an odd prime below 256, got " + std::to_string(p));
    inv_.assign(p, 0);
    for (std::uint32_t a = 1; a < p; ++a)
        for (std::uint32_t b = 1; b < p; ++b)
            if (a * b % p == 1) inv_[a] = static_cast<std::uint8_t>(b);
    const StructureAlgebra alg = h4(Field::prime(p));
    for (const auto& t : alg.terms()) table_[t.i * 4 + t.j][t.k] = static_cast<std::uint8_t>(t.c.as_residue());
}

namespace {

using Vec = std::array<std::uint32_t, 4>;

Vec column(const Packed& r, std::size_t j) { return {r[j], r[4 + j], r[8 + j], r[12 + j]}; }

}  // namespace

bool FpContext::is_rb(const Packed& r) const {
    static const auto order = rb_pair_order(4);
    for (const auto& [a, b] : order) {
        const Vec ca = column(r, a);
        const Vec cb = column(r, b);
        // v = R(e_a) e_b + e_a R(e_b) + lambda e_a e_b ; lhs = R(e_a) R(e_b)
        Vec v{}, lhs{};
        for (std::size_t i = 0; i < 4; ++i) {
            const auto& tib = table(i, b);
            const auto& tai = table(a, i);
            for (std::size_t k = 0; k < 4; ++k) v[k] += ca[i] * tib[k] + cb[i] * tai[k];
            for (std::size_t j = 0; j < 4; ++j) {
                const std::uint32_t c = ca[i] * cb[j];
                if (c == 0) continue;
                const auto& tij = table(i, j);
                for (std::size_t k = 0; k < 4; ++k) lhs[k] += c * tij[k];
            }
        }
        const auto& tab = table(a, b);
        for (std::size_t k = 0; k < 4; ++k) v[k] = (v[k] + lambda_ * tab[k]) % p_;
        for (std::size_t k = 0; k < 4; ++k) {
            std::uint32_t rhs = 0;
            for (std::size_t j = 0; j < 4; ++j) rhs += r[k * 4 + j] * v[j];
            if ((lhs[k] + p_ * p_ * 16 - rhs) % p_ != 0) return false;
        }
    }
    return true;
}

std::size_t FpContext::rb_failures(const Packed& r) const {
    std::size_t failures = 0;
    const LinearOperator op = from_packed(r, p_);
    const StructureAlgebra alg = h4(Field::prime(p_));
    const WeightedOperator w{op, Scalar::residue(lambda_, p_)};
    for (const auto& [a, b] : rb_pair_order(4)) {
        if (!rb_defect(alg, w, alg.basis(a), alg.basis(b)).is_zero()) ++failures;
    }
    return failures;
}

Packed FpContext::dual(const Packed& r) const {
    Packed d{};
    for (std::size_t k = 0; k < 16; ++k) d[k] = neg(r[k]);
    for (std::size_t i = 0; i < 4; ++i) d[i * 5] = add(d[i * 5], p_ - lambda_);
    return d;
}

Packed FpContext::multiply(const Packed& a, const Packed& b) const {
    Packed c{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            std::uint32_t s = 0;
            for (std::size_t k = 0; k < 4; ++k) s += std::uint32_t{a[i * 4 + k]} * b[k * 4 + j];
            c[i * 4 + j] = static_cast<std::uint8_t>(s % p_);
        }
    return c;
}

std::size_t FpContext::rank(const Packed& r) const {
    Packed m = r;
    std::size_t rk = 0;
    for (std::size_t col = 0; col < 4 && rk < 4; ++col) {
        std::size_t piv = rk;
        while (piv < 4 && m[piv * 4 + col] == 0) ++piv;
        if (piv == 4) continue;
        for (std::size_t c = 0; c < 4; ++c) std::swap(m[piv * 4 + c], m[rk * 4 + c]);
        const std::uint8_t iv = inv(m[rk * 4 + col]);
        for (std::size_t c = 0; c < 4; ++c) m[rk * 4 + c] = mul(m[rk * 4 + c], iv);
        for (std::size_t row = 0; row < 4; ++row) {
            if (row == rk || m[row * 4 + col] == 0) continue;
            const std::uint32_t f = m[row * 4 + col];
            for (std::size_t c = 0; c < 4; ++c) m[row * 4 + c] = add(m[row * 4 + c], p_ - mul(f, m[rk * 4 + c]));
        }
        ++rk;
    }
    return rk;
}

void FpContext::set_maps(const std::vector<AutoMap>& maps) {
    maps_.clear();
    maps_.reserve(maps.size());
    for (const auto& m : maps) maps_.push_back({to_packed(m.op), to_packed(invert(m.op))});
}

Packed FpContext::conjugate(const Packed& r, std::size_t map) const {
    return multiply(maps_[map].phi_inv, multiply(r, maps_[map].phi));
}

std::vector<Packed> FpContext::orbit(const Packed& r) const {
    std::vector<Packed> out;
    out.reserve(maps_.size() * 2);
    for (std::size_t k = 0; k < maps_.size(); ++k) {
        const Packed c = conjugate(r, k);
        out.push_back(c);
        out.push_back(dual(c));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Packed FpContext::canonical(const Packed& r) const {
    Packed best = r;
    for (std::size_t k = 0; k < maps_.size(); ++k) {
        const Packed c = conjugate(r, k);
        best = std::min(best, c);
        best = std::min(best, dual(c));
    }
    return best;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

template <typename Fn>
void run_shards(std::size_t shards, Fn&& fn) {
    if (shards <= 1) {
        fn(0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(shards);
    for (std::size_t s = 0; s < shards; ++s) pool.emplace_back([&fn, s] { fn(s); });
    for (auto& t : pool) t.join();
}

std::vector<Packed> merge_sorted(std::vector<std::vector<Packed>>& parts) {
    std::vector<Packed> out;
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::vector<Packed> exhaustive(const FpContext& ctx, std::size_t shards) {
    const std::uint32_t p = ctx.p();
    const std::uint64_t total = ipow(p, 16);
    std::vector<std::vector<Packed>> parts(shards);
    run_shards(shards, [&](std::size_t s) {
        const std::uint64_t lo = total * s / shards;
        const std::uint64_t hi = total * (s + 1) / shards;
        if (lo >= hi) return;
        Packed m = unpack_index(lo, p);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            if (ctx.is_rb(m)) parts[s].push_back(m);
            for (std::size_t k = 16; k-- > 0;) {
                if (++m[k] < p) break;
                m[k] = 0;
            }
        }
    });
    return merge_sorted(parts);
}

// Column-by-column search. With columns 0..k of R fixed, every basis pair
// (a, b) with a, b <= k turns the identity into
//   sum_{j > k} v_j R(e_j) = R(e_a) R(e_b) - sum_{j <= k} v_j R(e_j),
// v = R(e_a) e_b + e_a R(e_b) + lambda e_a e_b, which is linear in the
// unknown columns with scalar coefficients.
class Backtracker {
public:
    Backtracker(const FpContext& ctx, std::vector<Packed>& out) : ctx_(ctx), out_(out) {}

    void run_from_first_column(std::uint32_t code) {
        set_column(0, code);
        descend(0);
    }

private:
    struct Row {
        std::array<std::uint32_t, 3> coef;
        Vec rhs;
    };

    void set_column(std::size_t j, std::uint32_t code) {
        for (std::size_t i = 4; i-- > 0;) {
            cols_[j][i] = code % ctx_.p();
            code /= ctx_.p();
        }
    }

    Vec product(const Vec& u, const Vec& w) const {
        Vec out{};
        for (std::size_t i = 0; i < 4; ++i) {
            if (u[i] == 0) continue;
            for (std::size_t j = 0; j < 4; ++j) {
                const std::uint32_t c = u[i] * w[j];
                if (c == 0) continue;
                const auto& t = ctx_.table(i, j);
                for (std::size_t k = 0; k < 4; ++k) out[k] += c * t[k];
            }
        }
        for (auto& x : out) x %= ctx_.p();
        return out;
    }

    // Reduced system for the unknown columns k+1..3. Returns false when
    // inconsistent; on success `forced` holds the next column if determined.
    bool solve(std::size_t k, std::optional<Vec>& forced) const {
        const std::uint32_t p = ctx_.p();
        const std::size_t unknowns = 3 - k;
        std::vector<Row> rows;
        rows.reserve((k + 1) * (k + 1));
        for (std::size_t a = 0; a <= k; ++a)
            for (std::size_t b = 0; b <= k; ++b) {
                Vec ea{}, eb{};
                ea[a] = 1;
                eb[b] = 1;
                const Vec lhs = product(cols_[a], cols_[b]);
                const Vec t1 = product(cols_[a], eb);
                const Vec t2 = product(ea, cols_[b]);
                const auto& tab = ctx_.table(a, b);
                Vec v{};
                for (std::size_t i = 0; i < 4; ++i) v[i] = (t1[i] + t2[i] + ctx_.lambda() * tab[i]) % p;
                Row row{};
                for (std::size_t i = 0; i < 4; ++i) {
                    std::uint32_t known = 0;
                    for (std::size_t j = 0; j <= k; ++j) known += v[j] * cols_[j][i];
                    row.rhs[i] = (lhs[i] + p * p * 4 - known % p) % p;
                }
                for (std::size_t u = 0; u < unknowns; ++u) row.coef[u] = v[k + 1 + u];
                rows.push_back(row);
            }
        std::size_t rank = 0;
        for (std::size_t c = 0; c < unknowns; ++c) {
            std::size_t piv = rank;
            while (piv < rows.size() && rows[piv].coef[c] == 0) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[piv], rows[rank]);
            const std::uint32_t iv = ctx_.inv(rows[rank].coef[c]);
            for (auto& x : rows[rank].coef) x = x * iv % p;
            for (auto& x : rows[rank].rhs) x = x * iv % p;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || rows[r].coef[c] == 0) continue;
                const std::uint32_t f = rows[r].coef[c];
                for (std::size_t u = 0; u < 3; ++u) rows[r].coef[u] = (rows[r].coef[u] + p * p - f * rows[rank].coef[u]) % p;
                for (std::size_t i = 0; i < 4; ++i) rows[r].rhs[i] = (rows[r].rhs[i] + p * p - f * rows[rank].rhs[i]) % p;
            }
            ++rank;
        }
        for (std::size_t r = rank; r < rows.size(); ++r) {
            for (auto x : rows[r].rhs)
                if (x != 0) return false;
        }
        forced.reset();
        if (unknowns > 0 && rank > 0 && rows[0].coef[0] == 1) {
            bool alone = true;
            for (std::size_t u = 1; u < unknowns; ++u) alone = alone && rows[0].coef[u] == 0;
            if (alone) forced = rows[0].rhs;
        }
        return true;
    }

    void descend(std::size_t k) {
        std::optional<Vec> forced;
        if (!solve(k, forced)) return;
        if (k == 3) {
            Packed m{};
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) m[i * 4 + j] = static_cast<std::uint8_t>(cols_[j][i]);
            out_.push_back(m);
            return;
        }
        if (forced) {
            cols_[k + 1] = *forced;
            descend(k + 1);
            return;
        }
        const std::uint32_t n = static_cast<std::uint32_t>(ipow(ctx_.p(), 4));
        for (std::uint32_t code = 0; code < n; ++code) {
            set_column(k + 1, code);
            descend(k + 1);
        }
    }

    const FpContext& ctx_;
    std::vector<Packed>& out_;
    std::array<Vec, 4> cols_{};
};

std::vector<Packed> backtracking(const FpContext& ctx, std::size_t shards) {
    const auto n = static_cast<std::uint32_t>(ipow(ctx.p(), 4));
    std::vector<std::vector<Packed>> parts(shards);
    run_shards(shards, [&](std::size_t s) {
        Backtracker bt(ctx, parts[s]);
        for (std::uint32_t code = static_cast<std::uint32_t>(s); code < n; code += static_cast<std::uint32_t>(shards))
            bt.run_from_first_column(code);
    });
    return merge_sorted(parts);
}

}  // namespace

std::vector<Packed> enumerate_rb_packed(std::uint32_t p, std::uint32_t lambda, Strategy strategy, std::size_t shards) {
    if (!is_odd_prime(p)) throw InvalidModulus(std::to_string(p) + " is not an odd prime");
    if (lambda % p == 0) throw WeightMismatch("the weight must be nonzero in F_" + std::to_string(p));
    if (shards == 0) throw InvalidParams("shards must be at least 1");
    if (strategy == Strategy::Exhaustive && p >= 5) {
        throw Infeasible("exhaustive search over F_" + std::to_string(p) + " visits " + std::to_string(p) +
                         "^16 matrices; use backtracking");
    }
    if (strategy == Strategy::Backtracking && p > kMaxBacktrackingPrime) {
        throw Infeasible("backtracking is limited to p <= " + std::to_string(kMaxBacktrackingPrime));
    }
    const FpContext ctx(p, lambda);
    return strategy == Strategy::Exhaustive ? exhaustive(ctx, shards) : backtracking(ctx, shards);
}

namespace {

std::uint32_t residue_weight(const Scalar& lambda, std::uint64_t p) {
    if (!lambda.field().is_prime() || lambda.field().modulus() != p) {
        throw FieldMismatch("weight must lie in F_" + std::to_string(p));
    }
    return lambda.as_residue();
}

}  // namespace

std::vector<WeightedOperator> enumerate_rb(std::uint64_t p, const Scalar& lambda, Strategy strategy, std::size_t shards) {
    const std::uint32_t lam = residue_weight(lambda, p);
    const auto packed = enumerate_rb_packed(static_cast<std::uint32_t>(p), lam, strategy, shards);
    std::vector<WeightedOperator> out;
    out.reserve(packed.size());
    for (const auto& m : packed) out.push_back({from_packed(m, static_cast<std::uint32_t>(p)), lambda});
    return out;
}

WeightedOperator canonical_form(const WeightedOperator& w, std::uint64_t p) {
    FpContext ctx(static_cast<std::uint32_t>(p), residue_weight(w.weight, p));
    ctx.set_maps(enumerate_maps(p, true));
    return {from_packed(ctx.canonical(to_packed(w.op)), static_cast<std::uint32_t>(p)), w.weight};
}

// ---------------------------------------------------------------------------
// Orbits

OrbitReport partition_orbits(const std::vector<Packed>& ops, std::uint32_t p, std::uint32_t lambda, std::size_t shards) {
    FpContext ctx(p, lambda);
    ctx.set_maps(enumerate_maps(p, true));
    OrbitReport report;
    report.field_p = p;
    report.weight = Scalar::residue(lambda, p);
    report.total_rb_count = ops.size();

    std::unordered_set<std::uint64_t> present;
    present.reserve(ops.size() * 2);
    for (const auto& m : ops) present.insert(packed_index(m, p));

    // Orbit representatives in input order; the orbit of each is computed in
    // parallel once the representatives are known.
    std::vector<std::vector<Packed>> orbit_members;
    for (const auto& m : ops) {
        const std::uint64_t idx = packed_index(m, p);
        if (report.member_orbit.count(idx)) continue;
        const auto orb = ctx.orbit(m);
        const std::size_t id = orbit_members.size();
        std::vector<Packed> members;
        for (const auto& o : orb) {
            const std::uint64_t oi = packed_index(o, p);
            if (!present.count(oi)) continue;
            report.member_orbit.emplace(oi, id);
            members.push_back(o);
        }
        orbit_members.push_back(std::move(members));
    }

    std::vector<Orbit> orbits(orbit_members.size());
    run_shards(std::max<std::size_t>(1, std::min(shards, orbit_members.size())), [&](std::size_t s) {
        for (std::size_t i = s; i < orbit_members.size(); i += std::max<std::size_t>(1, shards)) {
            const auto& members = orbit_members[i];
            const Packed canon = ctx.canonical(members.front());
            Orbit& o = orbits[i];
            o.canonical = {from_packed(canon, p), Scalar::residue(lambda, p)};
            o.size = members.size();
            o.kernel_dim = 4 - ctx.rank(canon);
            o.trivial = std::all_of(canon.begin(), canon.end(), [](std::uint8_t v) { return v == 0; });
        }
    });

    // Order orbits by canonical form and renumber the member index.
    std::vector<std::size_t> order(orbits.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::vector<Packed> canon(orbits.size());
    for (std::size_t i = 0; i < orbits.size(); ++i) canon[i] = to_packed(orbits[i].canonical.op);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return canon[a] < canon[b]; });
    std::vector<std::size_t> rank_of(orbits.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        rank_of[order[r]] = r;
        report.orbits.push_back(std::move(orbits[order[r]]));
    }
    for (auto& [idx, id] : report.member_orbit) id = rank_of[id];

    const Packed zero{};
    const Packed minus_id = ctx.dual(zero);
    report.trivial_count = present.count(packed_index(zero, p)) + present.count(packed_index(minus_id, p));
    return report;
}

OrbitReport partition_orbits(const std::vector<WeightedOperator>& ops, std::uint64_t p, std::size_t shards) {
    if (ops.empty()) throw InvalidParams("partition_orbits needs at least one operator to fix the weight");
    const std::uint32_t lam = residue_weight(ops.front().weight, p);
    std::vector<Packed> packed;
    packed.reserve(ops.size());
    for (const auto& w : ops) {
        if (!(w.weight == ops.front().weight)) throw WeightMismatch("operators must share one weight");
        packed.push_back(to_packed(w.op));
    }
    std::sort(packed.begin(), packed.end());
    packed.erase(std::unique(packed.begin(), packed.end()), packed.end());
    return partition_orbits(packed, static_cast<std::uint32_t>(p), lam, shards);
}

namespace {

std::string params_text(const RBFamily& f, const std::vector<Scalar>& params) {
    std::string s = "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) s += ", ";
        s += f.params[i] + "=" + params[i].to_string();
    }
    return s + ")";
}

}  // namespace

OrbitReport match_catalog(OrbitReport report, const std::vector<RBFamily>& families) {
    const std::uint32_t p = report.field_p;
    FpContext ctx(p, report.weight.as_residue());
    const auto maps = enumerate_maps(p, true);
    ctx.set_maps(maps);

    for (auto& o : report.orbits) {
        o.matched_families.clear();
        o.witness.reset();
        if (o.trivial) o.matched_families.push_back("trivial");
    }
    report.unmatched.clear();
    report.findings.clear();
    report.errors.clear();

    std::map<std::string, std::set<std::size_t>> family_orbits;
    for (const auto& f : families) {
        for (const auto& params : parameter_sweep(f, report.weight)) {
            const WeightedOperator w = instantiate(f, report.weight, params);
            const Packed m = to_packed(w.op);
            auto it = report.member_orbit.find(packed_index(m, p));
            if (it == report.member_orbit.end()) {
                report.errors.push_back(f.id + " " + params_text(f, params) +
                                        (ctx.is_rb(m) ? " is not among the enumerated operators"
                                                      : " does not satisfy the Rota-Baxter identity"));
                continue;
            }
            family_orbits[f.id].insert(it->second);
            Orbit& o = report.orbits[it->second];
            if (std::find(o.matched_families.begin(), o.matched_families.end(), f.id) == o.matched_families.end()) {
                o.matched_families.push_back(f.id);
            }
            if (o.witness || o.trivial) continue;
            const Packed canon = to_packed(o.canonical.op);
            for (std::size_t k = 0; k < maps.size() && !o.witness; ++k) {
                const Packed c = ctx.conjugate(m, k);
                if (c == canon) o.witness = OrbitWitness{f.id, params, maps[k], false};
                else if (ctx.dual(c) == canon) o.witness = OrbitWitness{f.id, params, maps[k], true};
            }
        }
    }

    for (std::size_t i = 0; i < report.orbits.size(); ++i) {
        const Orbit& o = report.orbits[i];
        if (!o.trivial && o.matched_families.empty()) report.unmatched.push_back(o.canonical);
        const auto real = std::count_if(o.matched_families.begin(), o.matched_families.end(),
                                        [](const std::string& s) { return s != "trivial"; });
        if (real > 1 || (o.trivial && real > 0)) {
            std::string s = "orbit " + std::to_string(i) + " is reached by";
            for (const auto& id : o.matched_families) s += " " + id;
            report.findings.push_back(s);
        }
    }
    for (const auto& [id, orbs] : family_orbits) {
        if (orbs.size() > 1) {
            std::string s = id + " meets " + std::to_string(orbs.size()) + " orbits:";
            for (auto i : orbs) s += " " + std::to_string(i);
            report.findings.push_back(s);
        }
    }
    return report;
}

OrbitReport match_catalog(OrbitReport report, Scope scope) {
    return match_catalog(std::move(report), list_families(scope));
}

// ---------------------------------------------------------------------------
// Corollary

namespace {

constexpr std::uint32_t kVerificationPrimes[] = {3, 5, 7};

Scalar random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 4);
    return Scalar::rational(num(rng), den(rng));
}

// Random parameters in the family's domain, with `fixed` pinned.
std::vector<Scalar> sample_params(const RBFamily& f, const Scalar& lambda, const std::map<std::string, std::string>& fixed,
                                  std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Scalar> ps;
        for (const auto& name : f.params) {
            auto it = fixed.find(name);
            ps.push_back(it != fixed.end() ? lambda.field().parse(it->second) : random_rational(rng));
        }
        if (!domain_violation(f, make_assignment(f, lambda, ps))) return ps;
    }
    throw DomainViolation("no admissible parameters found for " + f.id);
}

// The sample reduced mod p, or nothing if some entry, parameter or domain
// condition does not survive the reduction.
std::optional<std::vector<Scalar>> reduce_params(const RBFamily& f, const Scalar& lambda, const std::vector<Scalar>& ps,
                                                 std::uint32_t p) {
    try {
        const Scalar lp = reduce_mod(lambda, p);
        if (lp.is_zero()) return std::nullopt;
        std::vector<Scalar> out;
        for (const auto& s : ps) out.push_back(reduce_mod(s, p));
        if (domain_violation(f, make_assignment(f, lp, out))) return std::nullopt;
        return out;
    } catch (const BadReduction&) {
        return std::nullopt;
    }
}

// Which final-list operator (or dual) `m` is conjugate to.
std::string locate_in_final_list(const FpContext& ctx, const Packed& m, const Scalar& lambda) {
    std::set<Packed> conjugates;
    for (std::size_t k = 0; k < ctx.map_count(); ++k) conjugates.insert(ctx.conjugate(m, k));
    std::vector<std::string> hits;
    for (const auto& f : list_families(Scope::Final)) {
        bool direct = false, via_dual = false;
        for (const auto& ps : parameter_sweep(f, lambda)) {
            const Packed t = to_packed(instantiate(f, lambda, ps).op);
            direct = direct || conjugates.count(t) > 0;
            via_dual = via_dual || conjugates.count(ctx.dual(t)) > 0;
        }
        if (direct) hits.push_back(f.id);
        if (via_dual) hits.push_back("the dual of " + f.id);
    }
    if (hits.empty()) return "no operator of the final list";
    std::string s = hits.front();
    for (std::size_t i = 1; i < hits.size(); ++i) s += " and " + hits[i];
    return s;
}

}  // namespace

std::vector<ClaimCheck> verify_corollary(const Scalar& lambda, std::size_t samples, std::uint64_t seed) {
    if (!lambda.field().is_rational()) throw FieldMismatch("corollary checks run over Q");
    if (lambda.is_zero()) throw WeightMismatch("the weight must be nonzero");
    const StructureAlgebra alg = h4(Field::rationals());
    std::mt19937_64 rng(seed);
    std::map<std::uint32_t, std::vector<AutoMap>> maps_by_p;
    std::vector<ClaimCheck> out;

    for (const auto& claim : corollary_claims()) {
        ClaimCheck check;
        check.item = claim.item;
        check.text = claim.text;
        const RBFamily& f = find_family(claim.family);
        using K = CorollaryClaim::Kind;
        if (claim.kind == K::Dual) {
            const RBFamily& t = find_family(claim.target);
            const auto a = instantiate(f, lambda, {});
            const auto b = instantiate(t, lambda, {});
            check.method = "exact over Q";
            check.pass = is_rb(alg, a) && is_rb(alg, b) && dual(a) == b;
            check.details.push_back("dual(" + f.id + ") " + std::string(dual(a) == b ? "=" : "!=") + " " + t.id);
            out.push_back(std::move(check));
            continue;
        }
        if (claim.kind == K::Trivial) {
            const auto a = instantiate(f, lambda, {});
            check.method = "exact over Q";
            check.pass = is_rb(alg, a) && is_trivial(a);
            check.details.push_back(f.id + (is_trivial(a) ? " is" : " is not") + " trivial");
            out.push_back(std::move(check));
            continue;
        }

        const RBFamily& target = find_family(claim.target);
        const bool to_dual = claim.kind == K::ConjugateToDual;
        check.method = "orbit equality over F_p";
        check.pass = true;
        std::map<std::uint32_t, std::map<Packed, std::vector<Scalar>>> target_sets;
        for (std::size_t s = 0; s < samples; ++s) {
            const auto ps = sample_params(f, lambda, claim.fixed, rng);
            const auto w = instantiate(f, lambda, ps);
            if (!is_rb(alg, w)) {
                check.pass = false;
                check.details.push_back(f.id + " " + params_text(f, ps) + " fails the identity over Q");
                continue;
            }
            bool reduced = false;
            for (std::uint32_t p : kVerificationPrimes) {
                const auto rp = reduce_params(f, lambda, ps, p);
                if (!rp) continue;
                reduced = true;
                const Scalar lp = reduce_mod(lambda, p);
                auto& maps = maps_by_p[p];
                if (maps.empty()) maps = enumerate_maps(p, true);
                FpContext ctx(p, lp.as_residue());
                ctx.set_maps(maps);
                auto& targets = target_sets[p];
                if (targets.empty()) {
                    for (const auto& tp : parameter_sweep(target, lp)) {
                        Packed m = to_packed(instantiate(target, lp, tp).op);
                        if (to_dual) m = ctx.dual(m);
                        targets.emplace(m, tp);
                    }
                }
                const Packed m = to_packed(reduce_mod_p(w, p).op);
                bool found = false;
                for (std::size_t k = 0; k < maps.size() && !found; ++k) {
                    auto it = targets.find(ctx.conjugate(m, k));
                    if (it == targets.end()) continue;
                    found = true;
                    check.witnesses.push_back({p, *rp, it->second, maps[k]});
                }
                if (!found) {
                    check.pass = false;
                    check.details.push_back(f.id + " " + params_text(f, ps) + " reduced mod " + std::to_string(p) +
                                            " is not conjugate to " + (to_dual ? "the dual of " : "") + target.id +
                                            "; it is conjugate to " + locate_in_final_list(ctx, m, lp));
                }
                break;
            }
            if (!reduced) check.details.push_back(f.id + " " + params_text(f, ps) + " skipped: no reduction defined");
        }
        if (check.witnesses.empty()) check.pass = false;
        out.push_back(std::move(check));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Kernel theorems

std::vector<TheoremCheck> verify_kernel_theorems(const std::vector<Packed>& ops, std::uint32_t p, std::uint32_t lambda,
                                                 const std::vector<KernelTheorem>& theorems,
                                                 const std::vector<RBFamily>& families) {
    const FpContext ctx(p, lambda);
    const Field field = Field::prime(p);
    const Scalar weight = Scalar::residue(lambda, p);
    std::vector<TheoremCheck> out;
    for (const auto& th : theorems) {
        TheoremCheck check;
        check.theorem = th.id;
        check.header = th.header;
        const std::optional<Subspace> ker =
            th.kernel ? std::optional<Subspace>(representative(*th.kernel, field)) : std::nullopt;
        const std::optional<Subspace> img =
            th.image ? std::optional<Subspace>(representative(*th.image, field)) : std::nullopt;
        std::set<Packed> filtered;
        for (const auto& m : ops) {
            if (4 - ctx.rank(m) != th.kernel_dim) continue;
            const LinearOperator op = from_packed(m, p);
            if (ker && !(kernel(op) == *ker)) continue;
            if (img && !(image(op) == *img)) continue;
            filtered.insert(m);
        }
        std::set<Packed> produced;
        for (const auto& id : th.families) {
            auto it = std::find_if(families.begin(), families.end(), [&](const RBFamily& f) { return f.id == id; });
            if (it == families.end()) throw UnknownFamily("theorem " + th.id + " refers to missing family " + id);
            for (const auto& params : parameter_sweep(*it, weight)) {
                produced.insert(to_packed(instantiate(*it, weight, params).op));
            }
        }
        check.enumerated = filtered.size();
        check.instantiated = produced.size();
        std::set_difference(filtered.begin(), filtered.end(), produced.begin(), produced.end(),
                            std::back_inserter(check.missing));
        std::set_difference(produced.begin(), produced.end(), filtered.begin(), filtered.end(),
                            std::back_inserter(check.extra));
        out.push_back(std::move(check));
    }
    return out;
}

}  // namespace rbh4
