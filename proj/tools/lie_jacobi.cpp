// lie-jacobi: exact verification runs with JSON or table reports.
//
// Exit status: 0 all checks pass, 1 some check failed, 2 usage error, 3 internal error.

#include "liejac/cache.hpp"
#include "liejac/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of the shifted Jacobian identity and its supporting results"};
    app.set_version_flag("--version", liejac::kVersion);

    std::string command, family, format = "table", cache_dir;
    unsigned rank = 1, jobs = 1;
    std::uint64_t seed = 1;
    bool timing = false, no_cache = false;
    if (const char* env = std::getenv("LIE_JACOBI_CACHE")) cache_dir = env;

    app.add_option("command", command, "verify-theorem | combinatorics | takiff | projector")
        ->required()
        ->check(CLI::IsMember({"verify-theorem", "combinatorics", "takiff", "projector"}));
    app.add_option("family", family, "A, B, C, D, G (G2), or all for combinatorics")->required();
    app.add_option("rank", rank, "rank (combinatorics sweeps every rank up to this one)")->required();
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--cache", cache_dir, "artifact cache directory (default: $LIE_JACOBI_CACHE)");
    app.add_flag("--no-cache", no_cache, "ignore the cache directory");
    app.add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--seed", seed, "seed for random property samples");
    app.add_flag("--timing", timing, "include wall-clock seconds in JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        std::unique_ptr<liejac::ArtifactCache> cache;
        if (!cache_dir.empty() && !no_cache) cache = std::make_unique<liejac::ArtifactCache>(cache_dir);

        liejac::RunConfig config;
        config.command = liejac::parse_command(command);
        config.family = family;
        config.rank = rank;
        config.jobs = jobs;
        config.seed = seed;
        config.timing = timing;
        config.cache = cache.get();

        const liejac::Report report = liejac::run(config);
        if (format == "json") {
            std::cout << report.to_json().dump(2) << '\n';
        } else {
            std::cout << report.to_table();
        }
        return report.all_ok() ? 0 : kExitFail;
    } catch (const liejac::InvalidArgument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
