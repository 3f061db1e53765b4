#include "rbh4/catalog.hpp"

#include <algorithm>
#include <set>

namespace rbh4 {

namespace {

using Col = std::array<std::string, 4>;
using Images = std::array<Col, 4>;

const Col Z = {"0", "0", "0", "0"};

Constraint parse_constraint(const std::string& text) {
    Constraint c;
    c.text = text;
    auto pos = text.find("!=");
    if (pos != std::string::npos) {
        c.nonzero = true;
        c.expr = parse_poly(text.substr(0, pos)) - parse_poly(text.substr(pos + 2));
        return c;
    }
    pos = text.find('=');
    if (pos == std::string::npos) throw ParseError("constraint needs '=' or '!=': " + text);
    c.nonzero = false;
    c.expr = parse_poly(text.substr(0, pos)) - parse_poly(text.substr(pos + 1));
    return c;
}

SymbolicAutoParams shear(const std::string& a, const std::string& b, const std::string& eps = "1",
                         const std::string& p = "1", const std::string& q = "0") {
    return SymbolicAutoParams{parse_expr(eps), parse_expr(a), parse_expr(b), parse_expr(p), parse_expr(q)};
}

struct Registry {
    std::vector<RBFamily> families;
    std::vector<KernelTheorem> theorems;
    std::vector<CorollaryClaim> claims;
};

void add_reduction(RBFamily& f, std::map<std::string, std::string> reduced, SymbolicAutoParams map) {
    f.reduced_params = std::move(reduced);
    f.reducing_map = std::move(map);
}

Registry build_registry() {
    Registry reg;
    auto& fams = reg.families;
    auto add = [&](std::string id, Scope scope, std::string section, std::string item, std::vector<std::string> params,
                   const Images& images, std::vector<std::string> extra = {},
                   std::vector<std::string> valid = {}) -> RBFamily& {
        fams.push_back(make_family(std::move(id), scope, std::move(section), std::move(item), std::move(params), images,
                                   extra, valid));
        return fams.back();
    };

    // Ma's families (a)-(h).
    const std::string ma = "Ma's list";
    add("ma-a", Scope::Ma, ma, "(a)", {}, {Z, Z, Col{"0", "0", "-lambda", "0"}, Col{"0", "0", "0", "-lambda"}});
    add("ma-b", Scope::Ma, ma, "(b)", {}, {Col{"-lambda", "0", "0", "0"}, Col{"0", "-lambda", "0", "0"}, Z, Z});
    add("ma-c", Scope::Ma, ma, "(c)", {},
        {Col{"-lambda", "0", "0", "0"}, Col{"0", "-lambda", "0", "0"}, Col{"0", "0", "-lambda", "0"},
         Col{"0", "0", "0", "-lambda"}});
    add("ma-d", Scope::Ma, ma, "(d)", {"p1", "p2", "p3"},
        {Z,
         Col{"-p1", "p1", "-(lambda+p1)*(lambda+p1+p2)/p3", "(lambda+p1)*(lambda+p2)/p3"},
         Col{"-p3", "p3", "-(2*lambda+p1+p2)", "lambda+p2"},
         Col{"-p3", "p3", "-(lambda+p1+p2)", "p2"}});
    add("ma-e", Scope::Ma, ma, "(e)", {"p1", "p2", "p3"},
        {Col{"-lambda", "0", "0", "0"},
         Col{"lambda+p1", "p1", "-(lambda+p1)*(lambda+p1+p2)/p3", "(lambda+p1)*(lambda+p2)/p3"},
         Col{"p3", "p3", "-(2*lambda+p1+p2)", "lambda+p2"},
         Col{"p3", "p3", "-(lambda+p1+p2)", "p2"}});
    add("ma-f", Scope::Ma, ma, "(f)", {"p1", "p2"},
        {Col{"-lambda", "0", "0", "0"},
         Col{"lambda", "0", "p1", "p1*p2/(lambda+p2)"},
         Col{"0", "0", "-(lambda+p2)", "-p2"},
         Col{"0", "0", "lambda+p2", "p2"}})
        .notes.push_back(
            "R(x) has x-coefficient -(lambda+p2); with -(lambda+p1) the identity holds only when p1 = p2");
    add("ma-g", Scope::Ma, ma, "(g)", {"p1", "p2"},
        {Col{"-lambda", "0", "0", "0"},
         Col{"lambda", "0", "lambda*(lambda+p1)/p2", "lambda*(lambda+p1)/p2"},
         Col{"-p2", "-p2", "-(2*lambda+p1)", "-(lambda+p1)"},
         Col{"p2", "p2", "lambda+p1", "p1"}});
    add("ma-h", Scope::Ma, ma, "(h)", {"p1", "p2"},
        {Col{"lambda/2", "-lambda/2", "p1", "p2"},
         Col{"lambda/2", "-lambda/2", "-p2", "p1"},
         Col{"0", "0", "-lambda/2", "-lambda/2"},
         Col{"0", "0", "-lambda/2", "-lambda/2"}},
        {}, {"p1 = 0"});

    const std::string completed = "columns on the kernel completed from the kernel";

    // Kernel dimension 3.
    {
        const std::string sec = "ker R = <1-g, x, gx>";
        const Col c1{"-lambda", "0", "0", "0"};
        add("ker3-1g.1", Scope::Theorems, sec, "(1)", {}, {c1, c1, Z, Z}).notes.push_back(completed);
        const Col c2{"-lambda/2", "-lambda/2", "gamma_g", "delta_g"};
        auto& f2 = add("ker3-1g.2", Scope::Theorems, sec, "(2)", {"gamma_g", "delta_g"}, {c2, c2, Z, Z});
        f2.notes.push_back(completed);
        add_reduction(f2, {{"gamma_g", "0"}, {"delta_g", "0"}}, shear("-2*gamma_g/lambda", "-2*delta_g/lambda"));
        const Col c3{"lambda/2", "-lambda/2", "gamma_g", "delta_g"};
        auto& f3 = add("ker3-1g.3", Scope::Theorems, sec, "(3)", {"gamma_g", "delta_g"}, {c3, c3, Z, Z});
        f3.notes.push_back(completed);
        add_reduction(f3, {{"gamma_g", "0"}, {"delta_g", "0"}}, shear("-2*gamma_g/lambda", "-2*delta_g/lambda"));
        reg.theorems.push_back({"ker3-1g", sec, 3, SubalgebraClass::OneMinusG_X_Gx, std::nullopt,
                                {"ker3-1g.1", "ker3-1g.2", "ker3-1g.3"}});
    }
    {
        const std::string sec = "ker R = <1, x, gx>";
        auto& a = add("ker3-1xgx.1a", Scope::Theorems, sec, "(1a)", {"gamma_g", "delta_g"},
                      {Z, Col{"-lambda", "-lambda", "gamma_g", "delta_g"}, Z, Z});
        a.notes.push_back(completed);
        add_reduction(a, {{"gamma_g", "0"}, {"delta_g", "0"}}, shear("-gamma_g/lambda", "-delta_g/lambda"));
        add("ker3-1xgx.1b", Scope::Theorems, sec, "(1b)", {"gamma_g", "delta_g"},
            {Z, Col{"lambda", "-lambda", "gamma_g", "delta_g"}, Z, Z})
            .notes.push_back(completed);
        reg.theorems.push_back({"ker3-1xgx", sec, 3, SubalgebraClass::One_X_Gx, std::nullopt,
                                {"ker3-1xgx.1a", "ker3-1xgx.1b"}});
    }
    {
        const std::string sec = "ker R = <1, g, x-gx>";
        const Col a{"alpha_gx", "-alpha_gx", "gamma_gx", "-(lambda+gamma_gx)"};
        const Col b{"alpha_gx", "alpha_gx", "gamma_gx", "-(lambda+gamma_gx)"};
        add("ker3-1g-xgx.1a", Scope::Theorems, sec, "(1a)", {"alpha_gx", "gamma_gx"}, {Z, Z, a, a})
            .notes.push_back(completed);
        add("ker3-1g-xgx.1b", Scope::Theorems, sec, "(1b)", {"alpha_gx", "gamma_gx"}, {Z, Z, b, b})
            .notes.push_back(completed);
        reg.theorems.push_back({"ker3-1g-xgx", sec, 3, SubalgebraClass::One_G_XMinusGx, std::nullopt,
                                {"ker3-1g-xgx.1a", "ker3-1g-xgx.1b"}});
    }

    // Kernel dimension 2.
    {
        const std::string sec = "ker R = <1, g>";
        const struct {
            const char* item;
            Col rx, rgx;
        } rows[] = {
            {"1a", {"alpha_x", "alpha_x", "-lambda", "0"}, {"alpha_x", "alpha_x", "0", "-lambda"}},
            {"1b", {"alpha_x", "-alpha_x", "-lambda", "0"}, {"-alpha_x", "alpha_x", "0", "-lambda"}},
            {"1c", {"alpha_x", "-alpha_x", "-lambda", "0"}, {"alpha_x", "-alpha_x", "0", "-lambda"}},
            {"1d", {"alpha_x", "alpha_x", "-lambda", "0"}, {"-alpha_x", "-alpha_x", "0", "-lambda"}},
        };
        std::vector<std::string> ids;
        for (const auto& r : rows) {
            ids.push_back(std::string("ker2-1g.") + r.item);
            add(ids.back(), Scope::Theorems, sec, std::string("(") + r.item + ")", {"alpha_x"}, {Z, Z, r.rx, r.rgx})
                .notes.push_back(completed);
        }
        reg.theorems.push_back({"ker2-1g", sec, 2, SubalgebraClass::One_G, std::nullopt, ids});
    }
    {
        const std::string sec = "ker R = <1, x>";
        const struct {
            const char* item;
            Col rg, rgx;
        } rows[] = {
            {"1a", {"-lambda", "-lambda", "gamma_g", "0"}, {"0", "0", "lambda", "-lambda"}},
            {"1b", {"lambda", "-lambda", "gamma_g", "0"}, {"0", "0", "-lambda", "-lambda"}},
            {"1c", {"-lambda", "-lambda", "gamma_g", "0"}, {"0", "0", "-lambda", "-lambda"}},
            {"1d", {"lambda", "-lambda", "gamma_g", "0"}, {"0", "0", "lambda", "-lambda"}},
        };
        std::vector<std::string> ids;
        for (const auto& r : rows) {
            ids.push_back(std::string("ker2-1x.") + r.item);
            auto& f = add(ids.back(), Scope::Theorems, sec, std::string("(") + r.item + ")", {"gamma_g"},
                          {Z, r.rg, Z, r.rgx});
            f.notes.push_back(completed);
            if (std::string(r.item) == "1a") add_reduction(f, {{"gamma_g", "0"}}, shear("-gamma_g/lambda", "0"));
        }
        reg.theorems.push_back({"ker2-1x", sec, 2, SubalgebraClass::One_X, std::nullopt, ids});
    }
    {
        const std::string sec = "ker R = <1, x-gx>";
        const Col half{"0", "0", "-lambda/2", "-lambda/2"};
        auto& a = add("ker2-1xmgx.1a", Scope::Theorems, sec, "(1a)", {"gamma_g"},
                      {Z, Col{"-lambda", "-lambda", "gamma_g", "-gamma_g"}, half, half});
        a.notes.push_back(completed);
        add_reduction(a, {{"gamma_g", "0"}}, shear("-2*gamma_g/lambda", "0"));
        add("ker2-1xmgx.1b", Scope::Theorems, sec, "(1b)", {"gamma_g"},
            {Z, Col{"lambda", "-lambda", "gamma_g", "-gamma_g"}, half, half})
            .notes.push_back(completed);
        reg.theorems.push_back({"ker2-1xmgx", sec, 2, SubalgebraClass::One_XMinusGx, std::nullopt,
                                {"ker2-1xmgx.1a", "ker2-1xmgx.1b"}});
    }
    {
        const std::string sec = "ker R = <x, gx>";
        auto& f1 = add("ker2-xgx.1", Scope::Theorems, sec, "(1)", {"gamma_gx", "delta_gx"},
                       {Col{"-lambda", "0", "0", "0"}, Col{"0", "-lambda", "gamma_gx", "delta_gx"}, Z, Z});
        f1.notes.push_back(completed);
        add_reduction(f1, {{"gamma_gx", "0"}, {"delta_gx", "0"}}, shear("-gamma_gx/lambda", "-delta_gx/lambda"));
        auto& f2 = add("ker2-xgx.2a", Scope::Theorems, sec, "(2a)", {"gamma_gx", "delta_gx"},
                       {Col{"-3*lambda/2", "-lambda/2", "gamma_gx", "delta_gx"},
                        Col{"lambda/2", "-lambda/2", "gamma_gx", "delta_gx"}, Z, Z});
        f2.notes.push_back(completed);
        add_reduction(f2, {{"gamma_gx", "0"}, {"delta_gx", "0"}},
                      shear("-2*gamma_gx/lambda", "-2*delta_gx/lambda"));
        add("ker2-xgx.2b", Scope::Theorems, sec, "(2b)", {"gamma_gx", "delta_gx"},
            {Col{"-3*lambda/2", "lambda/2", "-gamma_gx", "-delta_gx"},
             Col{"-lambda/2", "-lambda/2", "gamma_gx", "delta_gx"}, Z, Z})
            .notes.push_back(completed);
        reg.theorems.push_back({"ker2-xgx", sec, 2, SubalgebraClass::X_Gx, std::nullopt,
                                {"ker2-xgx.1", "ker2-xgx.2a", "ker2-xgx.2b"}});
    }
    {
        const std::string sec = "ker R = <1-g, x-gx>";
        const Col half{"0", "0", "-lambda/2", "-lambda/2"};
        const Col g1{"-lambda/2", "-lambda/2", "gamma_g", "-gamma_g"};
        const Col g2{"lambda/2", "-lambda/2", "gamma_g", "-gamma_g"};
        const Col g3{"-lambda", "0", "0", "0"};
        const Col gx3{"-beta_gx", "beta_gx", "gamma_gx", "-(lambda+gamma_gx)"};
        auto& f1 = add("ker2-1mg-xmgx.1", Scope::Theorems, sec, "(1)", {"gamma_g"}, {g1, g1, half, half});
        f1.notes.push_back(completed);
        add_reduction(f1, {{"gamma_g", "0"}}, shear("-2*gamma_g/lambda", "2*gamma_g/lambda"));
        auto& f2 = add("ker2-1mg-xmgx.2", Scope::Theorems, sec, "(2)", {"gamma_g"}, {g2, g2, half, half});
        f2.notes.push_back(completed);
        add_reduction(f2, {{"gamma_g", "0"}}, shear("-2*gamma_g/lambda", "2*gamma_g/lambda"));
        add("ker2-1mg-xmgx.3", Scope::Theorems, sec, "(3)", {"beta_gx", "gamma_gx"}, {g3, g3, gx3, gx3})
            .notes.push_back(completed);
        reg.theorems.push_back({"ker2-1mg-xmgx", sec, 2, SubalgebraClass::OneMinusG_XMinusGx, std::nullopt,
                                {"ker2-1mg-xmgx.1", "ker2-1mg-xmgx.2", "ker2-1mg-xmgx.3"}});
    }

    // Kernel dimension 1, organized by image.
    const Col mlx{"0", "0", "-lambda", "0"};
    const Col mlgx{"0", "0", "0", "-lambda"};
    {
        const std::string sec = "im R = <1-g, x, gx>";
        auto& f1 = add("ker1-im1mg.1", Scope::Theorems, sec, "(1)", {"gamma_g", "delta_g"},
                       {Col{"-lambda/2", "lambda/2", "gamma_g", "delta_g"},
                        Col{"lambda/2", "-lambda/2", "gamma_g", "delta_g"}, mlx, mlgx});
        add_reduction(f1, {{"gamma_g", "0"}, {"delta_g", "0"}}, shear("2*gamma_g/lambda", "2*delta_g/lambda"));
        auto& f2 = add("ker1-im1mg.2", Scope::Theorems, sec, "(2)", {"gamma_g", "delta_g"},
                       {Col{"lambda/2", "-lambda/2", "gamma_g", "delta_g"},
                        Col{"lambda/2", "-lambda/2", "-gamma_g", "-delta_g"}, mlx, mlgx});
        add_reduction(f2, {{"gamma_g", "0"}, {"delta_g", "0"}}, shear("-2*gamma_g/lambda", "-2*delta_g/lambda"));
        add("ker1-im1mg.3", Scope::Theorems, sec, "(3)", {}, {Z, Col{"lambda", "-lambda", "0", "0"}, mlx, mlgx});
        reg.theorems.push_back({"ker1-im1mg", sec, 1, std::nullopt, SubalgebraClass::OneMinusG_X_Gx,
                                {"ker1-im1mg.1", "ker1-im1mg.2", "ker1-im1mg.3"}});
    }
    {
        const std::string sec = "im R = <1, x, gx>";
        auto& a = add("ker1-im1xgx.1a", Scope::Theorems, sec, "(1a)", {"gamma_g", "delta_g"},
                      {Col{"-lambda", "0", "0", "0"}, Col{"-lambda", "0", "gamma_g", "delta_g"}, mlx, mlgx});
        add_reduction(a, {{"gamma_g", "0"}, {"delta_g", "0"}}, shear("gamma_g/lambda", "delta_g/lambda"));
        add("ker1-im1xgx.1b", Scope::Theorems, sec, "(1b)", {"gamma_g", "delta_g"},
            {Col{"-lambda", "0", "0", "0"}, Col{"lambda", "0", "gamma_g", "delta_g"}, mlx, mlgx});
        reg.theorems.push_back({"ker1-im1xgx", sec, 1, std::nullopt, SubalgebraClass::One_X_Gx,
                                {"ker1-im1xgx.1a", "ker1-im1xgx.1b"}});
    }
    {
        const std::string sec = "im R = <1, g, x-gx>";
        const Col r1{"-lambda", "0", "0", "0"};
        const Col rg{"0", "-lambda", "0", "0"};
        add("ker1-im1g.1a", Scope::Theorems, sec, "(1a)", {"beta_gx", "gamma_gx"},
            {r1, rg, Col{"-beta_gx", "beta_gx", "gamma_gx", "-gamma_gx"},
             Col{"-beta_gx", "beta_gx", "gamma_gx+lambda", "-(gamma_gx+lambda)"}});
        add("ker1-im1g.1b", Scope::Theorems, sec, "(1b)", {"beta_gx", "gamma_gx"},
            {r1, rg, Col{"beta_gx", "beta_gx", "gamma_gx", "-gamma_gx"},
             Col{"beta_gx", "beta_gx", "gamma_gx+lambda", "-(gamma_gx+lambda)"}});
        const Col hx{"0", "0", "-lambda/2", "lambda/2"};
        const Col hgx{"0", "0", "lambda/2", "-lambda/2"};
        auto& a2 = add("ker1-im1g.2a", Scope::Theorems, sec, "(2a)", {"gamma_g"},
                       {Col{"-3*lambda/2", "-lambda/2", "gamma_g", "-gamma_g"},
                        Col{"lambda/2", "-lambda/2", "-gamma_g", "gamma_g"}, hx, hgx});
        add_reduction(a2, {{"gamma_g", "0"}}, shear("-2*gamma_g/lambda", "2*gamma_g/lambda"));
        add("ker1-im1g.2b", Scope::Theorems, sec, "(2b)", {"gamma_g"},
            {Col{"-3*lambda/2", "lambda/2", "gamma_g", "-gamma_g"},
             Col{"-lambda/2", "-lambda/2", "gamma_g", "-gamma_g"}, hx, hgx});
        reg.theorems.push_back({"ker1-im1g", sec, 1, std::nullopt, SubalgebraClass::One_G_XMinusGx,
                                {"ker1-im1g.1a", "ker1-im1g.1b", "ker1-im1g.2a", "ker1-im1g.2b"}});
    }

    // Kernel dimension 0.
    {
        const std::string sec = "ker R = 0";
        add("ker0.1", Scope::Theorems, sec, "(1)", {},
            {Col{"-lambda", "0", "0", "0"}, Col{"0", "-lambda", "0", "0"}, mlx, mlgx});
        auto& a = add("ker0.2a", Scope::Theorems, sec, "(2a)", {"gamma_g", "delta_g"},
                      {Col{"-3*lambda/2", "-lambda/2", "gamma_g", "delta_g"},
                       Col{"lambda/2", "-lambda/2", "-gamma_g", "-delta_g"}, mlx, mlgx});
        add_reduction(a, {{"gamma_g", "0"}, {"delta_g", "0"}}, shear("-2*gamma_g/lambda", "-2*delta_g/lambda"));
        add("ker0.2b", Scope::Theorems, sec, "(2b)", {"gamma_g", "delta_g"},
            {Col{"-3*lambda/2", "lambda/2", "gamma_g", "delta_g"},
             Col{"-lambda/2", "-lambda/2", "gamma_g", "delta_g"}, mlx, mlgx});
        reg.theorems.push_back({"ker0", sec, 0, std::nullopt, std::nullopt, {"ker0.1", "ker0.2a", "ker0.2b"}});
    }

    // The final list, up to conjugation and dualization.
    {
        const std::string sec = "final list";
        const Col half{"0", "0", "-lambda/2", "-lambda/2"};
        const Col m1{"-lambda", "0", "0", "0"};
        const Col mg{"0", "-lambda", "0", "0"};
        const Col mm{"-lambda", "-lambda", "0", "0"};
        const Col hh{"-lambda/2", "-lambda/2", "0", "0"};
        const Col ph{"lambda/2", "-lambda/2", "0", "0"};
        add("final-1", Scope::Final, sec, "(1)", {"alpha_x"},
            {Z, Z, Col{"alpha_x", "alpha_x", "-lambda", "0"}, Col{"alpha_x", "alpha_x", "0", "-lambda"}},
            {"alpha_x != 0"});
        add("final-2", Scope::Final, sec, "(2)", {}, {Z, mm, Z, Col{"0", "0", "-lambda", "-lambda"}});
        add("final-3", Scope::Final, sec, "(3)", {}, {Z, mm, half, half});
        add("final-4", Scope::Final, sec, "(4)", {}, {m1, mg, Z, Z});
        add("final-5", Scope::Final, sec, "(5)", {}, {Col{"-3*lambda/2", "-lambda/2", "0", "0"}, ph, Z, Z});
        add("final-6", Scope::Final, sec, "(6)", {}, {hh, hh, half, half});
        add("final-7", Scope::Final, sec, "(7)", {}, {ph, ph, half, half});
        add("final-8", Scope::Final, sec, "(8)", {}, {m1, m1, Z, Z});
        add("final-9", Scope::Final, sec, "(9)", {}, {hh, hh, Z, Z});
        add("final-10", Scope::Final, sec, "(10)", {}, {ph, ph, Z, Z});
        add("final-11", Scope::Final, sec, "(11)", {}, {Z, mm, Z, Z});
        add("final-12", Scope::Final, sec, "(12)", {"alpha_gx"},
            {m1, m1, Col{"alpha_gx", "-alpha_gx", "-lambda", "0"}, Col{"alpha_gx", "-alpha_gx", "0", "-lambda"}},
            {"alpha_gx != 0"});
        add("final-13", Scope::Final, sec, "(13)", {}, {m1, mg, half, half});
        add("final-14", Scope::Final, sec, "(14)", {}, {m1, mg, Z, Col{"0", "0", "lambda", "-lambda"}});
    }

    using K = CorollaryClaim::Kind;
    reg.claims = {
        {"i", "ma-a", K::Dual, "ma-b", {}, "(a) and (b) are dual"},
        {"ii", "ma-c", K::Trivial, "", {}, "(c) is trivial"},
        {"iii", "ma-d", K::Conjugate, "final-1", {}, "(d) is conjugate to (1)"},
        {"iv", "ma-e", K::Conjugate, "final-12", {}, "(e) is conjugate to (12)"},
        {"v", "ma-f", K::ConjugateToDual, "final-3", {}, "(f) is conjugate to the dual of (3)"},
        {"vi", "ma-g", K::ConjugateToDual, "final-1", {}, "(g) is conjugate to the dual of (1)"},
        {"vii", "ma-h", K::Conjugate, "final-7", {{"p1", "0"}}, "(h) is conjugate to (7)"},
    };
    return reg;
}

const Registry& registry() {
    static const Registry reg = build_registry();
    return reg;
}

}  // namespace

std::string scope_name(Scope s) {
    switch (s) {
        case Scope::Ma: return "ma";
        case Scope::Theorems: return "theorems";
        case Scope::Final: return "final";
    }
    return "?";
}

Scope parse_scope(std::string_view s) {
    if (s == "ma") return Scope::Ma;
    if (s == "theorems") return Scope::Theorems;
    if (s == "final") return Scope::Final;
    throw ParseError("unknown family scope '" + std::string(s) + "'");
}

bool Constraint::holds(const Assignment& a) const {
    const bool zero = expr.evaluate(a).is_zero();
    return nonzero ? !zero : zero;
}

RBFamily make_family(std::string id, Scope scope, std::string section, std::string item,
                     std::vector<std::string> params, const std::array<std::array<std::string, 4>, 4>& images,
                     const std::vector<std::string>& extra_domain, const std::vector<std::string>& valid_when) {
    RBFamily f;
    f.id = std::move(id);
    f.scope = scope;
    f.section = std::move(section);
    f.item = std::move(item);
    f.params = std::move(params);
    for (const auto& p : f.params) symbol_index(p);
    for (const auto& text : extra_domain) f.domain.push_back(parse_constraint(text));
    std::set<std::string> seen;
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t i = 0; i < 4; ++i) {
            f.images[j][i] = parse_expr(images[j][i]);
            const RationalExpr& e = f.images[j][i];
            for (std::size_t s = 0; s < kSymbols.size(); ++s) {
                const bool known = s == 0 || std::find(f.params.begin(), f.params.end(), kSymbols[s]) != f.params.end();
                if (!known && (e.num.uses(s) || e.den.uses(s))) {
                    throw ParseError("family " + f.id + " uses undeclared symbol " + std::string(kSymbols[s]));
                }
            }
            if (e.has_symbolic_denominator()) {
                const std::string text = e.den.to_string() + " != 0";
                if (seen.insert(text).second) f.domain.push_back(Constraint{e.den, true, text});
            }
        }
    for (const auto& text : valid_when) f.valid_when.push_back(parse_constraint(text));
    return f;
}

const std::vector<RBFamily>& all_families() { return registry().families; }

std::vector<RBFamily> list_families(Scope scope) {
    std::vector<RBFamily> out;
    for (const auto& f : all_families()) {
        if (f.scope == scope) out.push_back(f);
    }
    return out;
}

const RBFamily& find_family(std::string_view id) {
    for (const auto& f : all_families()) {
        if (f.id == id) return f;
    }
    throw UnknownFamily("no family with id '" + std::string(id) + "'");
}

const std::vector<KernelTheorem>& kernel_theorems() { return registry().theorems; }
const std::vector<CorollaryClaim>& corollary_claims() { return registry().claims; }

Assignment make_assignment(const RBFamily& f, const Scalar& weight, const std::vector<Scalar>& params) {
    if (params.size() != f.params.size()) {
        throw InvalidParams("family " + f.id + " takes " + std::to_string(f.params.size()) + " parameters, got " +
                            std::to_string(params.size()));
    }
    Assignment a(weight.field());
    a.set("lambda", weight);
    for (std::size_t i = 0; i < params.size(); ++i) a.set(f.params[i], params[i]);
    return a;
}

std::optional<std::string> domain_violation(const RBFamily& f, const Assignment& a) {
    for (const auto& c : f.domain) {
        if (!c.holds(a)) return c.text;
    }
    return std::nullopt;
}

bool satisfies_valid_when(const RBFamily& f, const Assignment& a) {
    return std::all_of(f.valid_when.begin(), f.valid_when.end(), [&](const Constraint& c) { return c.holds(a); });
}

WeightedOperator instantiate(const RBFamily& f, const Scalar& weight, const std::vector<Scalar>& params) {
    if (weight.is_zero()) throw WeightMismatch("family " + f.id + " needs a nonzero weight");
    const Assignment a = make_assignment(f, weight, params);
    if (auto bad = domain_violation(f, a)) throw DomainViolation(f.id + ": " + *bad);
    const Field field = weight.field();
    LinearOperator op(field, 4);
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t i = 0; i < 4; ++i) op.at(i, j) = f.images[j][i].evaluate(a);
    return WeightedOperator{std::move(op), weight};
}

WeightedOperator reduce_mod_p(const WeightedOperator& w, std::uint64_t p) {
    const Field f = Field::prime(p);
    LinearOperator op(f, w.op.dim());
    for (std::size_t i = 0; i < w.op.dim(); ++i)
        for (std::size_t j = 0; j < w.op.dim(); ++j) {
            try {
                op.at(i, j) = reduce_mod(w.op.at(i, j), static_cast<std::uint32_t>(p));
            } catch (const BadReduction&) {
                throw BadReduction("entry (" + std::to_string(i) + ", " + std::to_string(j) + ") = " +
                                   w.op.at(i, j).to_string() + " cannot be reduced mod " + std::to_string(p));
            }
        }
    return WeightedOperator{std::move(op), reduce_mod(w.weight, static_cast<std::uint32_t>(p))};
}

std::vector<std::vector<Scalar>> parameter_sweep(const RBFamily& f, const Scalar& weight) {
    const Field field = weight.field();
    if (!field.is_prime()) throw InvalidModulus("parameter sweeps need a prime field");
    const auto elems = enumerate_field(field.modulus());
    std::vector<std::vector<Scalar>> out;
    std::vector<std::size_t> idx(f.params.size(), 0);
    while (true) {
        std::vector<Scalar> tuple;
        for (auto i : idx) tuple.push_back(elems[i]);
        if (!domain_violation(f, make_assignment(f, weight, tuple))) out.push_back(tuple);
        std::size_t pos = idx.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < elems.size()) break;
            idx[pos] = 0;
            if (pos == 0) return out;
        }
        if (idx.empty()) return out;
    }
}

AutoMap reducing_automorphism(const RBFamily& f, const Scalar& weight, const std::vector<Scalar>& params) {
    if (!f.reducing_map) throw InvalidParams("family " + f.id + " has no reducing automorphism");
    const Assignment a = make_assignment(f, weight, params);
    const auto& m = *f.reducing_map;
    return from_params(m.eps.evaluate(a), m.a.evaluate(a), m.b.evaluate(a), m.p.evaluate(a), m.q.evaluate(a), false);
}

std::vector<Scalar> reduced_parameters(const RBFamily& f, const std::vector<Scalar>& params) {
    std::vector<Scalar> out = params;
    for (std::size_t i = 0; i < f.params.size(); ++i) {
        auto it = f.reduced_params.find(f.params[i]);
        if (it != f.reduced_params.end()) out[i] = params[i].field().parse(it->second);
    }
    return out;
}

}  // namespace rbh4
