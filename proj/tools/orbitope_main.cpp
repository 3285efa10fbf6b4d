// Command-line front door: enumerations, cache management, and report
// emission. Progress goes to stderr; stdout carries only the report payload.
#include <filesystem>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "orbitope/chambers.hpp"
#include "orbitope/polytopes.hpp"
#include "orbitope/reports.hpp"

namespace {

using namespace orbitope;

struct Options {
    int n = 0;
    std::string mode = "paper";
    std::string output = "json";
    std::string cache_dir;
    bool no_cache = false;
    bool build = false;
    int parallelism = 1;
};

// Raised when a chamber-dependent command finds no cache and was not
// authorized to build one.
class MissingCacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string cache_file(const Options& opt) {
    const std::string dir = opt.cache_dir.empty() ? std::string(".orbitope-cache") : opt.cache_dir;
    return dir + "/chambers-n" + std::to_string(opt.n) + ".json";
}

// Loads the chamber set from the cache when permitted, otherwise enumerates.
// auto_build commands (chambers, verify) may always enumerate; the others
// need --build. Corrupted caches propagate CacheError instead of a silent
// rebuild.
chambers::ChamberSet acquire_chambers(const Options& opt, bool auto_build) {
    const auto polys = poly::enumerate_admissible_polytopes(opt.n);
    const std::string path = cache_file(opt);
    if (!opt.no_cache) {
        auto loaded = chambers::load_chambers(opt.n, path, polys);
        if (loaded) {
            std::cerr << "loaded chamber cache " << path << "\n";
            return std::move(*loaded);
        }
    }
    if (!auto_build && !opt.build)
        throw MissingCacheError("no chamber cache for n=" + std::to_string(opt.n) + " at " + path +
                                "; pass --build or run the chambers subcommand first");

    chambers::EnumerateOptions eopts;
    eopts.parallelism = opt.parallelism;
    eopts.progress = [](const std::string& line) { std::cerr << line << "\n"; };
    auto set = chambers::enumerate_full_chambers(opt.n, polys, eopts);
    if (!opt.no_cache) {
        const auto parent = std::filesystem::path(path).parent_path();
        if (!parent.empty()) std::filesystem::create_directories(parent);
        chambers::save_chambers(set, path);
        std::cerr << "wrote chamber cache " << path << "\n";
    }
    return set;
}

void emit(const reports::Report& report, const std::string& output) {
    if (output == "json" || output == "both") std::cout << report.json;
    if (output == "markdown" || output == "both") std::cout << report.markdown;
}

void add_common_flags(CLI::App* sub, Options& opt, int n_min) {
    sub->add_option("--n", opt.n, "Number of coordinates (rank of the ambient torus)")
        ->required()
        ->check(CLI::Range(n_min, 6));
    sub->add_option("--mode", opt.mode, "Relation-basis mode for homology tables")
        ->check(CLI::IsMember({"paper", "exhaustive"}));
    sub->add_option("--output", opt.output, "Payload format")
        ->check(CLI::IsMember({"json", "markdown", "both"}));
}

void add_cache_flags(CLI::App* sub, Options& opt) {
    sub->add_option("--cache-dir", opt.cache_dir, "Chamber cache directory")
        ->envname("ORBITOPE_CACHE_DIR");
    sub->add_flag("--no-cache", opt.no_cache, "Neither read nor write the chamber cache");
    sub->add_flag("--build", opt.build, "Enumerate chambers when the cache is missing");
    sub->add_option("--parallelism", opt.parallelism, "Worker count for enumeration")
        ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact chamber decompositions and mod-2 homology tables for "
                 "torus orbit spaces of the Grassmannian G(n,2)"};
    app.require_subcommand(1);
    Options opt;

    auto* admissible = app.add_subcommand("admissible", "Polytope inventory with count checks");
    add_common_flags(admissible, opt, 4);
    auto* chambers_cmd = app.add_subcommand("chambers", "Enumerate chambers and manage the cache");
    add_common_flags(chambers_cmd, opt, 4);
    add_cache_flags(chambers_cmd, opt);
    auto* keel = app.add_subcommand("keel", "Divisor relation system and quotient dimension");
    add_common_flags(keel, opt, 4);
    auto* dict = app.add_subcommand("dict", "Divisor dictionaries and partition verification");
    add_common_flags(dict, opt, 5);
    add_cache_flags(dict, opt);
    auto* betti = app.add_subcommand("betti", "Mod-2 Betti tables");
    add_common_flags(betti, opt, 5);
    add_cache_flags(betti, opt);
    auto* verify = app.add_subcommand("verify", "Full invariant suite");
    add_common_flags(verify, opt, 4);
    add_cache_flags(verify, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        reports::Report report;
        if (admissible->parsed()) {
            report = reports::admissible_report(opt.n, opt.mode);
        } else if (keel->parsed()) {
            report = reports::keel_report(opt.n, opt.mode);
        } else if (chambers_cmd->parsed()) {
            report = reports::chambers_report(acquire_chambers(opt, true), opt.mode);
        } else if (dict->parsed()) {
            report = reports::dict_report(acquire_chambers(opt, false), opt.mode);
        } else if (betti->parsed()) {
            report = reports::betti_report(acquire_chambers(opt, false), opt.mode);
        } else {
            report = reports::verify_report(acquire_chambers(opt, true), opt.mode);
        }
        emit(report, opt.output);
        return report.pass ? 0 : 1;
    } catch (const MissingCacheError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const chambers::CacheError& e) {
        std::cerr << "error: corrupted chamber cache: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    }
}
