#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "rbh4/runs.hpp"

#ifndef RBH4_GOLDEN_DIR
#define RBH4_GOLDEN_DIR ""
#endif

namespace {

int emit(const rbh4::RunConfig& cfg, const rbh4::Json& doc) {
    const std::string text = doc.dump(2) + "\n";
    if (cfg.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream o(cfg.out, std::ios::binary);
    if (!o) {
        std::cerr << "error: cannot write " << cfg.out << "\n";
        return 2;
    }
    o << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rota-Baxter operators on the Sweedler algebra"};
    app.require_subcommand(1);

    rbh4::RunConfig cfg;
    if (const char* env = std::getenv("RBH4_GOLDEN_DIR")) {
        cfg.golden_dir = env;
    } else {
        cfg.golden_dir = RBH4_GOLDEN_DIR;
    }

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--p", cfg.p, "prime characteristic");
        sub->add_option("--weight", cfg.weight, "weight lambda (integer or fraction)");
        sub->add_option("--strategy", cfg.strategy, "auto, exhaustive or backtracking");
        sub->add_option("--scope", cfg.scope, "verify scope");
        sub->add_option("--out", cfg.out, "output file (default stdout)");
        sub->add_option("--shards", cfg.shards, "worker threads");
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--samples", cfg.samples, "samples per check");
        sub->add_option("--golden-dir", cfg.golden_dir, "golden file directory");
        sub->add_flag("--bless", cfg.bless, "write golden files instead of comparing");
    };
    for (const char* name : {"enumerate", "classify", "verify", "report"}) {
        static const std::map<std::string, std::string> help = {
            {"enumerate", "list every Rota-Baxter operator over F_p"},
            {"classify", "partition operators into orbits and match the catalog"},
            {"verify", "check families, corollary, kernel theorems or subalgebras"},
            {"report", "run every verification and a classification"},
        };
        auto* sub = app.add_subcommand(name, help.at(name));
        add_common(sub);
        sub->callback([&cfg, name] { cfg.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const rbh4::RunResult r = rbh4::run_command(cfg);
        const int written = emit(cfg, rbh4::envelope(cfg, r.results));
        return written != 0 ? written : r.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
