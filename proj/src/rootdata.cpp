#include "liejac/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace liejac {

std::string family_name(Family f)
{
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G";
    }
    return "?";
}

void SimpleType::validate() const
{
    switch (family) {
    case Family::A:
        if (rank < 1) throw InvalidArgument("type A requires rank >= 1");
        break;
    case Family::B:
        if (rank < 2) throw InvalidArgument("type B requires rank >= 2");
        break;
    case Family::C:
        if (rank < 2) throw InvalidArgument("type C requires rank >= 2");
        break;
    case Family::D:
        if (rank < 3) throw InvalidArgument("type D requires rank >= 3");
        break;
    case Family::G2:
        if (rank != 2) throw InvalidArgument("type G2 requires rank == 2");
        break;
    }
    if (rank > Letter::kMaxIndex / 64) {
        throw InvalidArgument("rank too large: " + std::to_string(rank));
    }
}

std::string SimpleType::name() const
{
    return family_name(family) + std::to_string(rank);
}

SimpleType SimpleType::parse(const std::string& family, unsigned rank)
{
    SimpleType t;
    t.rank = rank;
    if (family == "A" || family == "a") {
        t.family = Family::A;
    } else if (family == "B" || family == "b") {
        t.family = Family::B;
    } else if (family == "C" || family == "c") {
        t.family = Family::C;
    } else if (family == "D" || family == "d") {
        t.family = Family::D;
    } else if (family == "G" || family == "g" || family == "G2") {
        t.family = Family::G2;
    } else {
        throw InvalidArgument("unsupported family '" + family + "' (expected A, B, C, D or G)");
    }
    t.validate();
    return t;
}

namespace {

IntMatrix make_cartan(const SimpleType& t)
{
    const unsigned n = t.rank;
    IntMatrix a(n, IntVector(n, 0));
    for (unsigned i = 0; i < n; ++i) {
        a[i][i] = 2;
    }
    auto link = [&](unsigned i, unsigned j) {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    switch (t.family) {
    case Family::A:
        for (unsigned i = 0; i + 1 < n; ++i) link(i, i + 1);
        break;
    case Family::B:
        for (unsigned i = 0; i + 1 < n; ++i) link(i, i + 1);
        a[n - 2][n - 1] = -2;  // alpha_n short
        break;
    case Family::C:
        for (unsigned i = 0; i + 1 < n; ++i) link(i, i + 1);
        a[n - 1][n - 2] = -2;  // alpha_n long
        break;
    case Family::D:
        for (unsigned i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(n - 3, n - 1);
        break;
    case Family::G2:
        a[0][1] = -1;
        a[1][0] = -3;
        break;
    }
    return a;
}

std::vector<unsigned> exponent_table(const SimpleType& t)
{
    const unsigned n = t.rank;
    std::vector<unsigned> d;
    switch (t.family) {
    case Family::A:
        for (unsigned i = 2; i <= n + 1; ++i) d.push_back(i);
        break;
    case Family::B:
    case Family::C:
        for (unsigned i = 1; i <= n; ++i) d.push_back(2 * i);
        break;
    case Family::D:
        for (unsigned i = 1; i < n; ++i) d.push_back(2 * i);
        d.push_back(n);
        break;
    case Family::G2:
        d = {2, 6};
        break;
    }
    std::sort(d.begin(), d.end());
    return d;
}

std::uint64_t weyl_order_formula(const SimpleType& t)
{
    const unsigned n = t.rank;
    auto fact = [](unsigned k) {
        std::uint64_t r = 1;
        for (unsigned i = 2; i <= k; ++i) r *= i;
        return r;
    };
    switch (t.family) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * fact(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * fact(n);
    case Family::G2: return 12;
    }
    return 0;
}

unsigned dimension_formula(const SimpleType& t)
{
    const unsigned n = t.rank;
    switch (t.family) {
    case Family::A: return n * (n + 2);
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::G2: return 14;
    }
    return 0;
}

/// Squared lengths (alpha_i, alpha_i), normalized so that DA is symmetric.
std::vector<Rational> simple_root_lengths(const IntMatrix& a)
{
    const std::size_t n = a.size();
    std::vector<Rational> len(n, 0);
    len[0] = 2;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        auto i = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || a[i][j] == 0 || len[j] != 0) {
                continue;
            }
            // a_ij len_j = a_ji len_i
            len[j] = Rational(a[j][i]) * len[i] / a[i][j];
            queue.push_back(j);
        }
    }
    return len;
}

int pairing(const IntVector& root, const IntMatrix& a, std::size_t i)
{
    int s = 0;
    for (std::size_t j = 0; j < root.size(); ++j) {
        s += root[j] * a[j][i];
    }
    return s;
}

} // namespace

int RootSystem::root_index(const IntVector& coords) const
{
    auto it = std::find(positive_roots.begin(), positive_roots.end(), coords);
    return it == positive_roots.end() ? -1 : static_cast<int>(it - positive_roots.begin());
}

CommPoly RootSystem::coroot_form(std::size_t k) const
{
    CommPoly p;
    for (unsigned j = 0; j < rank(); ++j) {
        p += CommPoly::variable(Letter::cartan(j)) * Rational(coroots[k][j]);
    }
    return p;
}

RootSystem build_root_system(const SimpleType& type)
{
    type.validate();
    RootSystem rs;
    rs.type = type;
    const unsigned n = type.rank;
    rs.cartan_matrix = make_cartan(type);
    const auto& a = rs.cartan_matrix;

    // Closure by root strings, height by height.
    std::set<IntVector> known;
    std::vector<IntVector> layer;
    for (unsigned i = 0; i < n; ++i) {
        IntVector e(n, 0);
        e[i] = 1;
        layer.push_back(e);
        known.insert(e);
    }
    std::vector<IntVector> all;
    while (!layer.empty()) {
        all.insert(all.end(), layer.begin(), layer.end());
        std::set<IntVector> next;
        for (const auto& beta : layer) {
            for (unsigned i = 0; i < n; ++i) {
                int p = 0;
                IntVector down = beta;
                while (true) {
                    down[i] -= 1;
                    if (!known.count(down)) break;
                    ++p;
                }
                int q = p - pairing(beta, a, i);
                if (q > 0) {
                    IntVector up = beta;
                    up[i] += 1;
                    if (!known.count(up)) next.insert(up);
                }
            }
        }
        layer.assign(next.begin(), next.end());
        known.insert(layer.begin(), layer.end());
    }
    auto height = [](const IntVector& v) { return std::accumulate(v.begin(), v.end(), 0); };
    std::sort(all.begin(), all.end(), [&](const IntVector& x, const IntVector& y) {
        int hx = height(x), hy = height(y);
        return hx != hy ? hx < hy : x > y;
    });
    rs.positive_roots = all;

    // Coroots via the invariant form, rho pairings two ways.
    auto len = simple_root_lengths(a);
    auto form = [&](const IntVector& x, const IntVector& y) {
        Rational s = 0;
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = 0; j < n; ++j) {
                if (x[i] != 0 && y[j] != 0) {
                    s += Rational(x[i] * y[j]) * a[i][j] * len[j] / 2;
                }
            }
        }
        return s;
    };
    IntVector two_rho(n, 0);
    for (const auto& r : all) {
        for (unsigned i = 0; i < n; ++i) two_rho[i] += r[i];
    }
    for (const auto& r : all) {
        Rational rr = form(r, r);
        IntVector co(n, 0);
        int via_coroot = 0;
        for (unsigned i = 0; i < n; ++i) {
            Rational k = Rational(r[i]) * len[i] / rr;
            if (k.get_den() != 1) {
                throw Error("internal: non-integral coroot coefficient in " + type.name());
            }
            co[i] = static_cast<int>(k.get_num().get_si());
            via_coroot += co[i];  // rho(h_i) = 1
        }
        Rational via_form = form(two_rho, r) / rr;  // 2(rho, alpha)/(alpha, alpha)
        if (via_form != via_coroot) {
            throw Error("internal: rho pairing mismatch in " + type.name());
        }
        rs.coroots.push_back(co);
        rs.rho_pairings.push_back(via_coroot);
    }

    rs.exponents_plus_one = exponent_table(type);
    rs.weyl_order = weyl_order_formula(type);
    rs.dimension = dimension_formula(type);

    std::uint64_t prod = 1;
    for (auto d : rs.exponents_plus_one) prod *= d;
    if (prod != rs.weyl_order) {
        throw Error("internal: product of degrees differs from |W| for " + type.name());
    }
    if (n + 2 * rs.positive_roots.size() != rs.dimension) {
        throw Error("internal: n + 2N differs from dim g for " + type.name());
    }
    if (rs.exponents_plus_one.size() != n) {
        throw Error("internal: wrong number of degrees for " + type.name());
    }
    return rs;
}

WeylEnumeration enumerate_weyl(const RootSystem& rs, std::uint64_t guard)
{
    if (rs.weyl_order > guard) {
        throw GuardExceeded("Weyl group of " + rs.type.name() + " has " + std::to_string(rs.weyl_order) +
                            " elements, above the enumeration bound " + std::to_string(guard));
    }
    const unsigned n = rs.rank();
    IntVector start(n, 0);
    for (const auto& r : rs.positive_roots) {
        for (unsigned i = 0; i < n; ++i) start[i] += r[i];
    }
    std::set<IntVector> seen{start};
    std::vector<IntVector> frontier{start};
    WeylEnumeration out;
    unsigned length = 0;
    while (!frontier.empty()) {
        out.length_counts.emplace_back(length, frontier.size());
        out.total += frontier.size();
        if (out.total > guard) {
            throw GuardExceeded("Weyl enumeration exceeded the bound " + std::to_string(guard));
        }
        std::vector<IntVector> next;
        for (const auto& v : frontier) {
            for (unsigned i = 0; i < n; ++i) {
                int c = pairing(v, rs.cartan_matrix, i);
                IntVector w = v;
                w[i] -= c;
                if (seen.insert(w).second) {
                    next.push_back(std::move(w));
                }
            }
        }
        frontier = std::move(next);
        ++length;
    }
    return out;
}

KostantCheck kostant_check(const RootSystem& rs)
{
    KostantCheck k;
    k.lhs = 1;
    for (int r : rs.rho_pairings) {
        k.lhs *= fraction(r + 1, r);
    }
    k.lhs.canonicalize();
    k.rhs = Integer(std::to_string(rs.weyl_order));
    k.equal = (k.lhs == Rational(k.rhs));
    return k;
}

PoincareCheck poincare_check(const RootSystem& rs)
{
    auto weyl = enumerate_weyl(rs);
    PoincareCheck pc;
    std::vector<Rational> sum;
    for (const auto& [len, count] : weyl.length_counts) {
        if (sum.size() <= len) sum.resize(len + 1, 0);
        sum[len] += Rational(Integer(std::to_string(count)));
    }
    pc.sum_side = UniPoly(std::move(sum));

    auto t_pow_minus_one = [](int m) {
        std::vector<Rational> c(m + 1, 0);
        c[0] = -1;
        c[m] = 1;
        return UniPoly(std::move(c));
    };
    UniPoly num(1), den(1);
    for (int r : rs.rho_pairings) {
        num = num * t_pow_minus_one(r + 1);
        den = den * t_pow_minus_one(r);
    }
    auto [q, rem] = num.divmod(den);
    if (!rem.is_zero()) {
        throw NonExactDivision("Poincare product for " + rs.type.name() + " is not a polynomial");
    }
    pc.product_side = q;
    pc.equal = (pc.sum_side == pc.product_side);
    Rational v = pc.sum_side(1);
    pc.value_at_one = v.get_num();
    return pc;
}

CommPoly simple_reflection_action(const RootSystem& rs, unsigned i, const CommPoly& p)
{
    const unsigned n = rs.rank();
    if (i >= n) {
        throw InvalidArgument("simple reflection index out of range");
    }
    for (auto l : p.variables()) {
        if (l.cls() != LetterClass::cartan || !l.is_plain() || l.index() >= n) {
            throw InvalidArgument("simple_reflection_action: foreign variable " + l.token());
        }
    }
    std::map<Letter, CommPoly> assignment;
    const CommPoly hi = CommPoly::variable(Letter::cartan(i));
    for (unsigned j = 0; j < n; ++j) {
        assignment[Letter::cartan(j)] =
            CommPoly::variable(Letter::cartan(j)) - hi * Rational(rs.cartan_matrix[i][j]);
    }
    return substitute(p, assignment);
}

} // namespace liejac
