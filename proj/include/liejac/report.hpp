#pragma once

#include "liejac/pbw.hpp"
#include "liejac/polyring.hpp"
#include "liejac/rootdata.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace liejac {

class ArtifactCache;

inline constexpr const char* kVersion = "lie-jacobi 1.0.0";

enum class Command { verify_theorem, combinatorics, takiff, projector };

std::string command_name(Command c);
Command parse_command(const std::string& name);

struct RunConfig {
    Command command = Command::verify_theorem;
    /// "A", "B", "C", "D", "G" (G2) or "all" (combinatorics only).
    std::string family;
    unsigned rank = 1;
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    /// Include wall-clock seconds in JSON.
    bool timing = false;
    ArtifactCache* cache = nullptr;
};

/// One named check. `data` holds exact values: rationals as "p/q" strings,
/// polynomials as canonical term lists.
struct ReportRow {
    std::string check;
    bool ok = false;
    std::string detail;
    nlohmann::ordered_json data = nlohmann::ordered_json::object();
};

struct Report {
    RunConfig config;
    std::vector<ReportRow> rows;
    double seconds = 0;

    bool all_ok() const;
    nlohmann::ordered_json to_json() const;
    std::string to_table() const;
};

/// Throws InvalidArgument for an unsupported family/rank selection.
Report run(const RunConfig& config);

Report cmd_verify_theorem(const RunConfig& config);
Report cmd_combinatorics(const RunConfig& config);
Report cmd_takiff(const RunConfig& config);
Report cmd_projector(const RunConfig& config);

/// {"terms": [["p/q", "class:index:t:u^e ..."], ...], "pretty": "..."}
nlohmann::ordered_json poly_json(const CommPoly& p);
nlohmann::ordered_json nc_json(const NCElement& e);
nlohmann::ordered_json unipoly_json(const UniPoly& p, const std::string& var);

/// A u-linear polynomial grouped by its u letter: "(2*h1 + 4)*(h1.u)".
std::string group_by_u_letter(const CommPoly& p);

} // namespace liejac
