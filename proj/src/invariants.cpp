#include "liejac/invariants.hpp"

#include "liejac/cache.hpp"
#include "liejac/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

namespace liejac {

unsigned InvariantFamily::working_degree() const
{
    return degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
}

namespace {

using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix inverse(const IntMatrix& a)
{
    const std::size_t n = a.size();
    RatMatrix m(n, std::vector<Rational>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw Error("internal: singular Gram matrix");
        std::swap(m[c], m[p]);
        Rational piv = m[c][c];
        for (auto& v : m[c]) v /= piv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    RatMatrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

void require_plain(const CommPoly& h, const char* what)
{
    for (auto l : h.variables()) {
        if (!l.is_plain() || l.is_param()) {
            throw InvalidArgument(std::string(what) + ": decorated letter " + l.token());
        }
    }
}


} // namespace

std::string cache_stamp(const InvariantFamily& family, std::size_t i)
{
    return digest(std::to_string(kCacheSchemaVersion) + "|" + family.algebra->version_stamp() + "|" +
                  family.generators[i].text());
}

std::string cache_key(const InvariantFamily& family, std::size_t i, const std::string& what)
{
    return family.algebra->roots().type.name() + "-" + family.provenance + "-" + what + "-" + std::to_string(i + 1);
}

InvariantFamily trace_invariants(std::shared_ptr<const LieStructure> s)
{
    if (!s || s->roots().type.family != Family::A) {
        throw InvalidArgument("trace invariants need a type-A structure");
    }
    const unsigned n = s->rank();
    const unsigned m = s->matrix_size();
    const auto gram_inv = inverse(s->roots().cartan_matrix);  // tr(h_a h_b) is the A-type Cartan matrix

    // Dual letter of each basis element under the trace form.
    std::vector<std::vector<CommPoly>> x(m, std::vector<CommPoly>(m));
    for (auto b : s->basis()) {
        CommPoly dual;
        switch (b.cls()) {
        case LetterClass::neg: dual = CommPoly::variable(Letter::pos(b.index())); break;
        case LetterClass::pos: dual = CommPoly::variable(Letter::neg(b.index())); break;
        default:
            for (unsigned c = 0; c < n; ++c) {
                dual += CommPoly::variable(Letter::cartan(c)) * gram_inv[b.index()][c];
            }
            break;
        }
        for (const auto& e : s->matrix_of(b)) {
            x[e.row][e.col] += dual * e.value;
        }
    }

    InvariantFamily fam;
    fam.algebra = s;
    fam.provenance = "trace";
    auto power = x;
    for (unsigned k = 2; k <= n + 1; ++k) {
        std::vector<std::vector<CommPoly>> next(m, std::vector<CommPoly>(m));
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = 0; j < m; ++j)
                for (unsigned l = 0; l < m; ++l)
                    if (!power[i][l].is_zero() && !x[l][j].is_zero()) next[i][j] += power[i][l] * x[l][j];
        power = std::move(next);
        CommPoly tr;
        for (unsigned i = 0; i < m; ++i) tr += power[i][i];
        fam.generators.push_back(std::move(tr));
        fam.degrees.push_back(k);
    }
    return fam;
}

InvariantFamily casimir_sl2_family(std::shared_ptr<const LieStructure> s)
{
    if (!s || s->roots().type != SimpleType{Family::A, 1}) {
        throw InvalidArgument("the 4ef + h^2 generator is defined for sl2 only");
    }
    InvariantFamily fam;
    fam.algebra = s;
    fam.provenance = "casimir";
    fam.generators.push_back(CommPoly::variable(Letter::pos(0)) * CommPoly::variable(Letter::neg(0)) * Rational(4) +
                             pow(CommPoly::variable(Letter::cartan(0)), 2));
    fam.degrees.push_back(2);
    return fam;
}

InvariantFamily rescaled(const InvariantFamily& family, const std::vector<Rational>& scales)
{
    if (scales.size() != family.size()) {
        throw InvalidArgument("one scale per generator expected");
    }
    InvariantFamily out = family;
    std::string tag;
    for (std::size_t i = 0; i < scales.size(); ++i) {
        if (scales[i] == 0) throw InvalidArgument("generator scale must be nonzero");
        out.generators[i] *= scales[i];
        tag += "_" + to_string(scales[i]);
    }
    for (auto& c : tag) {
        if (c == '/') c = 'q';
        if (c == '-') c = 'm';
    }
    out.provenance += "x" + tag;
    return out;
}

CommPoly restrict_to_h(const CommPoly& h)
{
    CommPoly r;
    for (const auto& [m, c] : h.terms()) {
        bool cartan_only = std::all_of(m.factors().begin(), m.factors().end(),
                                       [](const auto& f) { return f.first.cls() == LetterClass::cartan; });
        if (cartan_only) r.add_term(m, c);
    }
    return r;
}

CommPoly shift_T(const CommPoly& h)
{
    require_plain(h, "shift_T");
    CommPoly r;
    for (const auto& [m, c] : h.terms()) {
        std::vector<Monomial::Factor> fs;
        for (const auto& [l, e] : m.factors()) fs.emplace_back(l.with_t(1), e);
        r.add_term(Monomial::from_factors(std::move(fs)), c);
    }
    return r;
}

CommPoly psi(const CommPoly& h)
{
    require_plain(h, "psi");
    CommPoly r;
    for (const auto& [m, c] : h.terms()) {
        for (const auto& [l, e] : m.factors()) {
            Monomial rest = *m.divide(Monomial::of(l));
            r.add_term(rest * Monomial::of(l.with_u(1)), c * e);
        }
    }
    return r;
}

NCElement psi_words(const NCElement& e)
{
    NCElement r;
    for (const auto& [w, c] : e.terms()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (!w[i].is_plain()) throw InvalidArgument("psi: decorated letter " + w[i].token());
            Word v = w;
            v[i] = w[i].with_u(1);
            r.add_term(v, c);
        }
    }
    return r;
}

NCElement script_T(const NCElement& e, Straightener& st)
{
    NCElement raw;
    for (const auto& [w, c] : e.terms()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            const Letter l = w[i];
            if (l.u_flag() != 0 || l.t_power() == 0 || l.is_param()) {
                throw InvalidArgument("script_T: letter outside t g[t]: " + l.token());
            }
            Word v = w;
            v[i] = Letter(l.cls(), l.index(), l.t_power() - 1, 1);
            raw.add_term(v, c * l.t_power());
        }
    }
    return st.normal_order(raw);
}

NCElement symmetrized_shift(const InvariantFamily& family, std::size_t i, Straightener& st)
{
    return symmetrize(shift_T(family.generators.at(i)), st);
}

CommPoly compute_P1(const InvariantFamily& family, std::size_t i, Straightener& st)
{
    return hc_project(symmetrized_shift(family, i, st), HCMode::t_shifted);
}

CommPoly compute_P(const InvariantFamily& family, std::size_t i, Straightener& st)
{
    return hc_project(symmetrize(family.generators.at(i), st), HCMode::plain);
}

CommPoly jacobian_shifted(const std::vector<CommPoly>& p1, unsigned rank)
{
    if (p1.size() != rank) throw InvalidArgument("jacobian_shifted: need one polynomial per Cartan variable");
    PolyMatrix m(rank, std::vector<CommPoly>(rank));
    for (unsigned i = 0; i < rank; ++i)
        for (unsigned j = 0; j < rank; ++j) m[i][j] = partial_shifted(p1[i], j);
    return at_t_equals_one(determinant(std::move(m)));
}

CommPoly jacobian_classical(const std::vector<CommPoly>& ps, unsigned rank)
{
    if (ps.size() != rank) throw InvalidArgument("jacobian_classical: need one polynomial per Cartan variable");
    PolyMatrix m(rank, std::vector<CommPoly>(rank));
    for (unsigned i = 0; i < rank; ++i) {
        for (auto l : ps[i].variables()) {
            if (l.cls() != LetterClass::cartan || !l.is_plain() || l.index() >= rank) {
                throw InvalidArgument("jacobian_classical: foreign variable " + l.token());
            }
        }
        for (unsigned j = 0; j < rank; ++j) m[i][j] = partial(ps[i], Letter::cartan(j));
    }
    return determinant(std::move(m));
}

CommPoly root_product(const RootSystem& rs, const std::function<Rational(std::size_t)>& shift)
{
    CommPoly p(1);
    for (std::size_t k = 0; k < rs.num_positive(); ++k) {
        p = p * (rs.coroot_form(k) + CommPoly(shift(k)));
    }
    return p;
}

std::string root_product_pretty(const RootSystem& rs, const Rational& c,
                                const std::function<Rational(std::size_t)>& shift)
{
    std::string s = to_string(c);
    for (std::size_t k = 0; k < rs.num_positive(); ++k) {
        s += "*(" + (rs.coroot_form(k) + CommPoly(shift(k))).pretty() + ")";
    }
    return s;
}

JacobianReport verify_family(const InvariantFamily& family, const VerifyOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    const LieStructure& s = *family.algebra;
    const RootSystem& rs = s.roots();
    const unsigned n = s.rank();
    if (family.size() != n) throw InvalidArgument("family must have one generator per Cartan variable");

    JacobianReport rep;
    rep.type = rs.type;
    rep.generators = family.provenance;
    rep.P1.resize(n);
    rep.P.resize(n);
    const unsigned cap = family.working_degree();

    parallel_for(n, options.jobs, [&](std::size_t i) {
        Straightener st(s, cap);
        const std::string stamp = cache_stamp(family, i);
        const std::string key = cache_key(family, i, "P1");
        std::optional<CommPoly> p1;
        if (options.cache) p1 = options.cache->load_poly(key, stamp);
        if (!p1) {
            p1 = compute_P1(family, i, st);
            if (options.cache) options.cache->store_poly(key, stamp, *p1);
        }
        rep.P1[i] = std::move(*p1);
        rep.P[i] = compute_P(family, i, st);
    });

    std::vector<CommPoly> top;
    for (const auto& h : family.generators) top.push_back(restrict_to_h(h));
    rep.J_classical_top = jacobian_classical(top, n);
    const CommPoly prod_h = root_product(rs, [](std::size_t) { return Rational(0); });
    const CommPoly prod_rho = root_product(rs, [&](std::size_t k) { return Rational(rs.rho_pairings[k]); });
    const CommPoly prod_rho1 = root_product(rs, [&](std::size_t k) { return Rational(rs.rho_pairings[k] + 1); });

    try {
        CommPoly c = exact_divide(rep.J_classical_top, prod_h);
        if (c.is_constant() && !c.is_zero()) rep.C = c.constant_term();
    } catch (const NonExactDivision&) {
        rep.C = 0;
    }
    rep.classical_ok = rep.C != 0 && rep.J_classical_top == prod_h * rep.C;

    rep.J_classical_rho = jacobian_classical(rep.P, n);
    rep.rho_shift_ok = rep.C != 0 && rep.J_classical_rho == prod_rho * rep.C;

    rep.J_shifted = jacobian_shifted(rep.P1, n);
    rep.expected = prod_rho1 * rep.C;
    rep.expected_factored = root_product_pretty(rs, rep.C, [&](std::size_t k) { return Rational(rs.rho_pairings[k] + 1); });
    rep.theorem_ok = rep.C != 0 && (rep.J_shifted - rep.expected).is_zero();

    rep.top_component_ok = rep.C != 0 && !rep.J_shifted.is_zero() && highest_component(rep.J_shifted) == prod_h * rep.C;

    const Rational j0 = rep.J_shifted.constant_term();
    Rational rho_plus_one = 1, rho_only = 1;
    for (int r : rs.rho_pairings) {
        rho_plus_one *= r + 1;
        rho_only *= r;
    }
    Rational degree_product = 1;
    for (auto d : family.degrees) degree_product *= d;
    rep.zero_value_ok = rep.C != 0 && j0 == rep.C * rho_plus_one;
    rep.zero_weyl_ok = rep.C != 0 && j0 == Rational(Integer(std::to_string(rs.weyl_order))) * rep.C * rho_only;
    rep.zero_degree_ok = rep.C != 0 && j0 == degree_product * rep.J_classical_rho.constant_term();

    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

JacobianReport verify_theorem(const SimpleType& type, const VerifyOptions& options)
{
    type.validate();
    if (type.family != Family::A) {
        throw InvalidArgument("the Jacobian pipeline supports type A only, got " + type.name());
    }
    if (type.rank > 4) {
        throw InvalidArgument("the Jacobian pipeline supports ranks 1..4, got " + type.name());
    }
    auto s = std::make_shared<const LieStructure>(build_sl(type.rank));
    GeneratorChoice choice = options.generators;
    if (choice == GeneratorChoice::automatic) {
        choice = type.rank == 1 ? GeneratorChoice::casimir : GeneratorChoice::trace;
    }
    InvariantFamily fam = choice == GeneratorChoice::casimir ? casimir_sl2_family(s) : trace_invariants(s);
    if (!options.scales.empty()) fam = rescaled(fam, options.scales);
    return verify_family(fam, options);
}

NCElement build_R(const InvariantFamily& family, std::size_t i, Straightener& takiff)
{
    return symmetrize(psi(family.generators.at(i)), takiff);
}

RViaT check_R_via_T(const InvariantFamily& family, std::size_t i)
{
    Straightener st(*family.algebra, family.working_degree());
    RViaT out;
    out.direct = build_R(family, i, st);
    out.via_T = at_t_equals_one(script_T(symmetrized_shift(family, i, st), st), st);
    out.equal = out.direct == out.via_T;
    return out;
}

ObstructionDemo psi_obstruction_demo(const LieStructure& s, Letter x, Letter y)
{
    if (!x.is_plain() || !y.is_plain()) throw InvalidArgument("psi obstruction: letters must be undecorated");
    Straightener st(s, 0);
    ObstructionDemo d;
    NCElement raw = NCElement::word({x, y}) - NCElement::word({y, x});
    d.lhs = st.normal_order(psi_words(raw));
    for (const auto& [z, c] : s.bracket(x, y)) d.rhs.add_term({z.with_u(1)}, c);
    d.doubled = d.lhs == d.rhs * Rational(2);
    return d;
}

std::pair<NCElement, NCElement> script_T_bracket_witness(const LieStructure& s, Letter a, Letter b, unsigned t_cap)
{
    Straightener st(s, t_cap);
    NCElement br;
    for (const auto& [z, c] : extended_bracket(s, a, b, t_cap)) br.add_term({z}, c);
    NCElement lhs = script_T(br, st);
    NCElement ea = NCElement::letter(a), eb = NCElement::letter(b);
    NCElement rhs = st.commutator(script_T(ea, st), eb) + st.commutator(ea, script_T(eb, st));
    return {lhs, rhs};
}

CommPoly expected_takiff_cartan_part(const CommPoly& p1, unsigned rank)
{
    CommPoly r;
    for (unsigned j = 0; j < rank; ++j) {
        r += at_t_equals_one(partial_shifted(p1, j)) * CommPoly::variable(Letter::cartan(j, 0, 1));
    }
    return r;
}

} // namespace liejac
