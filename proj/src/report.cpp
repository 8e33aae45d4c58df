#include "liejac/report.hpp"

#include "liejac/cache.hpp"
#include "liejac/invariants.hpp"
#include "liejac/liealg.hpp"
#include "liejac/parallel.hpp"
#include "liejac/projector.hpp"

#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>

namespace liejac {

using nlohmann::ordered_json;

std::string command_name(Command c)
{
    switch (c) {
    case Command::verify_theorem: return "verify-theorem";
    case Command::combinatorics: return "combinatorics";
    case Command::takiff: return "takiff";
    case Command::projector: return "projector";
    }
    return "?";
}

Command parse_command(const std::string& name)
{
    for (auto c : {Command::verify_theorem, Command::combinatorics, Command::takiff, Command::projector}) {
        if (command_name(c) == name) return c;
    }
    throw InvalidArgument("unknown command '" + name + "'");
}

ordered_json poly_json(const CommPoly& p)
{
    ordered_json terms = ordered_json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back({to_string(c), m.token()});
    return {{"terms", terms}, {"pretty", p.pretty()}};
}

ordered_json nc_json(const NCElement& e)
{
    ordered_json terms = ordered_json::array();
    for (const auto& [w, c] : e.terms()) {
        ordered_json word = ordered_json::array();
        for (auto l : w) word.push_back(l.token());
        terms.push_back({to_string(c), word});
    }
    return {{"terms", terms}, {"pretty", e.pretty()}};
}

ordered_json unipoly_json(const UniPoly& p, const std::string& var)
{
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
    return {{"coefficients", coeffs}, {"pretty", p.pretty(var)}};
}

std::string group_by_u_letter(const CommPoly& p)
{
    std::map<Letter, CommPoly> groups;
    for (const auto& [m, c] : p.terms()) {
        Letter u_letter{};
        bool found = false;
        std::vector<std::pair<Letter, unsigned>> rest;
        for (const auto& [l, e] : m.factors()) {
            if (l.u_flag() == 1 && e == 1 && !found) {
                u_letter = l;
                found = true;
            } else {
                rest.emplace_back(l, e);
            }
        }
        if (!found) throw InvalidArgument("group_by_u_letter: term without a u letter");
        groups[u_letter].add_term(Monomial::from_factors(rest), c);
    }
    if (groups.empty()) return "0";
    std::string s;
    for (const auto& [l, q] : groups) {
        if (!s.empty()) s += " + ";
        s += "(" + q.pretty() + ")*(" + l.pretty() + ")";
    }
    return s;
}

bool Report::all_ok() const
{
    return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.ok; });
}

ordered_json Report::to_json() const
{
    ordered_json rows_json = ordered_json::array();
    for (const auto& r : rows) {
        rows_json.push_back({{"check", r.check}, {"ok", r.ok}, {"detail", r.detail}, {"data", r.data}});
    }
    ordered_json j;
    j["command"] = command_name(config.command);
    j["config"] = {{"family", config.family}, {"rank", config.rank}, {"jobs", config.jobs}, {"seed", config.seed}};
    j["rows"] = rows_json;
    j["all_ok"] = all_ok();
    j["version"] = kVersion;
    if (config.timing) j["seconds"] = seconds;
    return j;
}

std::string Report::to_table() const
{
    std::size_t width = 5;
    for (const auto& r : rows) width = std::max(width, r.check.size());
    std::ostringstream os;
    os << command_name(config.command) << ' ' << config.family << ' ' << config.rank << "  (seed " << config.seed
       << ")\n";
    for (const auto& r : rows) {
        os << (r.ok ? "PASS  " : "FAIL  ");
        if (r.detail.empty()) {
            os << r.check;
        } else {
            os << std::left << std::setw(static_cast<int>(width)) << r.check << "  " << r.detail;
        }
        os << '\n';
    }
    os << (all_ok() ? "all checks passed" : "SOME CHECKS FAILED") << "  [" << std::fixed << std::setprecision(3)
       << seconds << " s]\n";
    return os.str();
}

namespace {

ReportRow make_row(std::string check, bool ok, std::string detail = {})
{
    ReportRow r;
    r.check = std::move(check);
    r.ok = ok;
    r.detail = std::move(detail);
    return r;
}

SimpleType type_A(const RunConfig& config, unsigned max_rank)
{
    SimpleType t = SimpleType::parse(config.family, config.rank);
    if (t.family != Family::A || t.rank > max_rank) {
        throw InvalidArgument("this command supports A1..A" + std::to_string(max_rank) + ", got " + t.name());
    }
    return t;
}

InvariantFamily default_family(const SimpleType& t)
{
    auto s = std::make_shared<const LieStructure>(build_sl(t.rank));
    return t.rank == 1 ? casimir_sl2_family(s) : trace_invariants(s);
}

} // namespace

Report cmd_verify_theorem(const RunConfig& config)
{
    const SimpleType t = type_A(config, 4);
    VerifyOptions opts;
    opts.jobs = config.jobs;
    opts.cache = config.cache;
    const JacobianReport j = verify_theorem(t, opts);

    Report rep;
    rep.config = config;
    const std::string c = to_string(j.C);

    ReportRow gens = make_row("generators", true, j.generators);
    for (std::size_t i = 0; i < j.P1.size(); ++i) {
        gens.data["P1"].push_back(poly_json(j.P1[i]));
        gens.data["P"].push_back(poly_json(j.P[i]));
    }
    rep.rows.push_back(std::move(gens));

    ReportRow classical = make_row("J(P_i top) = C prod h_alpha", j.classical_ok, "C = " + c);
    classical.data = {{"C", c}, {"J", poly_json(j.J_classical_top)}};
    rep.rows.push_back(std::move(classical));

    ReportRow rho = make_row("J(P_i) = C prod (h_alpha + rho(h_alpha))", j.rho_shift_ok);
    rho.data = {{"J", poly_json(j.J_classical_rho)}};
    rep.rows.push_back(std::move(rho));

    rep.rows.push_back(make_row("highest component of J = C prod h_alpha", j.top_component_ok));
    const std::string j0 = to_string(j.J_shifted.constant_term());
    rep.rows.push_back(make_row("J(0) = C prod (rho(h_alpha) + 1)", j.zero_value_ok, "J(0) = " + j0));
    rep.rows.push_back(make_row("J(0) = |W| C prod rho(h_alpha)", j.zero_weyl_ok));
    rep.rows.push_back(make_row("J(0) = (d_1...d_n) J(P_i)(0)", j.zero_degree_ok));

    ReportRow theorem = make_row("J(P_i^[1]) = C prod (h_alpha + rho(h_alpha) + 1)", j.theorem_ok,
                                 "J = " + j.expected_factored);
    theorem.data = {{"C", c}, {"J", poly_json(j.J_shifted)}, {"expected", poly_json(j.expected)},
                    {"expected_factored", j.expected_factored}};
    rep.rows.push_back(std::move(theorem));
    return rep;
}

Report cmd_combinatorics(const RunConfig& config)
{
    std::vector<SimpleType> types;
    if (config.family == "all" || config.family == "ALL") {
        for (auto f : {Family::A, Family::B, Family::C, Family::D}) {
            for (unsigned r = 1; r <= config.rank; ++r) {
                SimpleType t{f, r};
                try {
                    t.validate();
                    types.push_back(t);
                } catch (const InvalidArgument&) {
                }
            }
        }
        if (config.rank >= 2) types.push_back({Family::G2, 2});
    } else {
        SimpleType top = SimpleType::parse(config.family, config.rank);
        if (top.family == Family::G2) {
            types.push_back(top);
        } else {
            for (unsigned r = 1; r <= config.rank; ++r) {
                SimpleType t{top.family, r};
                try {
                    t.validate();
                    types.push_back(t);
                } catch (const InvalidArgument&) {
                }
            }
        }
    }

    std::vector<std::vector<ReportRow>> per_type(types.size());
    parallel_for(types.size(), config.jobs, [&](std::size_t k) {
        const SimpleType& t = types[k];
        auto& out = per_type[k];
        const RootSystem rs = build_root_system(t);
        const KostantCheck kc = kostant_check(rs);
        ReportRow kr = make_row("Kostant " + t.name(), kc.equal, to_string(kc.lhs) + " = " + kc.rhs.get_str());
        kr.data = {{"type", t.name()}, {"rank", t.rank}, {"lhs", to_string(kc.lhs)}, {"rhs", kc.rhs.get_str()}};
        out.push_back(std::move(kr));
        try {
            const WeylEnumeration we = enumerate_weyl(rs);
            const bool ok = we.total == rs.weyl_order;
            ReportRow wr = make_row("Weyl enumeration " + t.name(), ok, "|W| = " + std::to_string(we.total));
            wr.data = {{"type", t.name()}, {"enumerated", we.total}, {"formula", rs.weyl_order}};
            out.push_back(std::move(wr));
            if (t.rank <= 4) {
                const PoincareCheck pc = poincare_check(rs);
                ReportRow pr = make_row("Poincare product " + t.name(), pc.equal,
                                        "W(1) = " + pc.value_at_one.get_str());
                pr.data = {{"type", t.name()}, {"sum_side", unipoly_json(pc.sum_side, "q")},
                           {"product_side", unipoly_json(pc.product_side, "q")}};
                out.push_back(std::move(pr));
            }
        } catch (const GuardExceeded& g) {
            out.push_back(make_row("Weyl enumeration " + t.name(), false, g.what()));
        }
    });

    Report rep;
    rep.config = config;
    for (auto& rows : per_type)
        for (auto& r : rows) rep.rows.push_back(std::move(r));
    return rep;
}

Report cmd_takiff(const RunConfig& config)
{
    const SimpleType t = type_A(config, 3);
    const InvariantFamily fam = default_family(t);
    const LieStructure& s = *fam.algebra;
    const unsigned n = s.rank();

    std::vector<std::vector<ReportRow>> per_gen(n);
    parallel_for(n, config.jobs, [&](std::size_t i) {
        const std::string tag = "R_" + std::to_string(i + 1);
        auto& out = per_gen[i];
        try {
            Straightener takiff(s, 0);
            std::optional<NCElement> r;
            const std::string stamp = cache_stamp(fam, i);
            const std::string key = cache_key(fam, i, "R");
            if (config.cache) r = config.cache->load_nc(key, stamp);
            if (!r) {
                r = build_R(fam, i, takiff);
                if (config.cache) config.cache->store_nc(key, stamp, *r);
            }

            bool central = true;
            std::string witness;
            for (auto x : s.basis()) {
                if (!takiff.commutator(*r, NCElement::letter(x)).is_zero()) {
                    central = false;
                    if (witness.empty()) witness = "fails for " + x.pretty();
                }
            }
            out.push_back(make_row("[" + tag + ", x] = 0 for x in g", central,
                                   central ? std::to_string(s.dimension()) + " basis elements" : witness));

            if (fam.degrees[i] == 2) {
                bool q_central = true;
                for (auto x : s.basis()) {
                    if (!takiff.commutator(*r, NCElement::letter(x.with_u(1))).is_zero()) {
                        q_central = false;
                        if (witness.empty()) witness = "fails for " + x.with_u(1).pretty();
                    }
                }
                out.push_back(make_row("[" + tag + ", x u] = 0 for x in g", q_central,
                                       q_central ? "quadratic generator is central in U(q)" : witness));
            }

            const RViaT via = check_R_via_T(fam, i);
            ReportRow vr = make_row(tag + " = script-T(P_" + std::to_string(i + 1) + "^[1]) at t = 1", via.equal && via.direct == *r,
                                    std::to_string(via.direct.size()) + " terms");
            vr.data = {{"R", nc_json(*r)}};
            out.push_back(std::move(vr));

            Straightener current(s, fam.working_degree());
            const CommPoly p1 = compute_P1(fam, i, current);
            const CommPoly cartan = takiff_cartan_part(*r);
            const CommPoly expected = expected_takiff_cartan_part(p1, n);
            ReportRow cr = make_row("Cartan part of " + tag, cartan == expected, group_by_u_letter(cartan));
            cr.data = {{"cartan_part", poly_json(cartan)}, {"expected", poly_json(expected)}};
            out.push_back(std::move(cr));
        } catch (const Error& e) {
            throw Error("generator " + std::to_string(i + 1) + ": " + e.what());
        }
    });

    Report rep;
    rep.config = config;
    for (auto& rows : per_gen)
        for (auto& r : rows) rep.rows.push_back(std::move(r));

    // psi does not descend to U(g): on e f - f e it gives twice [e,f] u.
    const ObstructionDemo d = psi_obstruction_demo(s, s.e(0), s.f(0));
    ReportRow orow = make_row("psi(e1 f1 - f1 e1) = 2 [e1,f1] u", d.doubled,
                              d.lhs.pretty() + " vs " + d.rhs.pretty());
    orow.data = {{"psi_of_commutator", nc_json(d.lhs)}, {"bracket_u", nc_json(d.rhs)}};
    rep.rows.push_back(std::move(orow));

    // T is a derivation of the bracket on t-decorated letters.
    const unsigned cap = 4;
    auto letters = extended_letters(s, 1, 2, 0);
    unsigned pairs = 0;
    bool derivation = true;
    std::string witness;
    for (auto a : letters) {
        for (auto b : letters) {
            auto [lhs, rhs] = script_T_bracket_witness(s, a, b, cap);
            ++pairs;
            if (lhs != rhs) {
                derivation = false;
                if (witness.empty()) witness = "fails for " + a.pretty() + ", " + b.pretty();
            }
        }
    }
    rep.rows.push_back(make_row("T([a,b]) = [T a, b] + [a, T b]", derivation,
                                derivation ? std::to_string(pairs) + " letter pairs" : witness));
    return rep;
}

Report cmd_projector(const RunConfig& config)
{
    const SimpleType t = type_A(config, 2);
    const ProjectorReport pr = projector_properties_check(t.rank, 3, 8, config.seed);
    Report rep;
    rep.config = config;
    for (const auto& r : pr.rows) rep.rows.push_back(make_row(r.name, r.ok, r.detail));
    return rep;
}

Report run(const RunConfig& config)
{
    const auto start = std::chrono::steady_clock::now();
    Report rep;
    switch (config.command) {
    case Command::verify_theorem: rep = cmd_verify_theorem(config); break;
    case Command::combinatorics: rep = cmd_combinatorics(config); break;
    case Command::takiff: rep = cmd_takiff(config); break;
    case Command::projector: rep = cmd_projector(config); break;
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

} // namespace liejac
