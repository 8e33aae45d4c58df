#include "doctest_support.hpp"

#include "liejac/rootdata.hpp"

#include <doctest.h>

#include <deque>
#include <map>
#include <set>

using namespace liejac;
using testing::var;

namespace {

std::vector<SimpleType> all_types(unsigned max_rank)
{
    std::vector<SimpleType> out;
    for (auto f : {Family::A, Family::B, Family::C, Family::D}) {
        for (unsigned r = 1; r <= max_rank; ++r) {
            SimpleType t{f, r};
            try {
                t.validate();
                out.push_back(t);
            } catch (const InvalidArgument&) {
            }
        }
    }
    out.push_back({Family::G2, 2});
    return out;
}

// A root together with its coroot in simple-coroot coordinates.
struct RootPair {
    IntVector root;
    IntVector coroot;
    bool operator<(const RootPair& o) const { return root < o.root; }
};

// Orbit of the simple (root, coroot) pairs under the simple reflections.
std::set<RootPair> weyl_orbit_oracle(const IntMatrix& a)
{
    const std::size_t n = a.size();
    std::set<RootPair> seen;
    std::deque<RootPair> queue;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector unit(n, 0);
        unit[i] = 1;
        queue.push_back({unit, unit});
        seen.insert({unit, unit});
    }
    while (!queue.empty()) {
        RootPair p = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < n; ++i) {
            int beta_hi = 0, alpha_i_of_coroot = 0;
            for (std::size_t j = 0; j < n; ++j) {
                beta_hi += p.root[j] * a[j][i];
                alpha_i_of_coroot += a[i][j] * p.coroot[j];
            }
            RootPair q = p;
            q.root[i] -= beta_hi;
            q.coroot[i] -= alpha_i_of_coroot;
            if (seen.insert(q).second) queue.push_back(q);
        }
    }
    return seen;
}

// BFS over the group of reflection matrices acting on simple-root coordinates.
std::map<unsigned, std::uint64_t> weyl_length_oracle(const IntMatrix& a)
{
    const std::size_t n = a.size();
    std::vector<IntMatrix> gens(n, IntMatrix(n, IntVector(n, 0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) gens[i][k][k] = 1;
        for (std::size_t j = 0; j < n; ++j) gens[i][i][j] -= a[j][i];  // column j is s_i(alpha_j)
    }
    auto mul = [n](const IntMatrix& x, const IntMatrix& y) {
        IntMatrix z(n, IntVector(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
        return z;
    };
    IntMatrix id(n, IntVector(n, 0));
    for (std::size_t k = 0; k < n; ++k) id[k][k] = 1;
    std::map<IntMatrix, unsigned> length{{id, 0}};
    std::deque<IntMatrix> queue{id};
    std::map<unsigned, std::uint64_t> counts;
    while (!queue.empty()) {
        IntMatrix w = queue.front();
        queue.pop_front();
        const unsigned l = length[w];
        ++counts[l];
        for (const auto& s : gens) {
            IntMatrix ws = mul(w, s);
            if (length.emplace(ws, l + 1).second) queue.push_back(ws);
        }
    }
    return counts;
}

} // namespace

TEST_CASE("rank-1 and rank-2 data")
{
    const RootSystem a1 = build_root_system({Family::A, 1});
    CHECK(a1.num_positive() == 1);
    CHECK(a1.rho_pairings == std::vector<int>{1});
    CHECK(a1.exponents_plus_one == std::vector<unsigned>{2});
    CHECK(a1.weyl_order == 2);

    const RootSystem a2 = build_root_system({Family::A, 2});
    CHECK(a2.num_positive() == 3);
    CHECK(a2.rho_pairings == std::vector<int>{1, 1, 2});
    CHECK(a2.exponents_plus_one == std::vector<unsigned>{2, 3});
    CHECK(a2.weyl_order == 6);
    CHECK(a2.positive_roots[2] == IntVector{1, 1});
    CHECK(a2.root_index({1, 1}) == 2);
    CHECK(a2.root_index({2, 1}) == -1);

    const RootSystem g2 = build_root_system({Family::G2, 2});
    CHECK(g2.num_positive() == 6);
    CHECK(g2.weyl_order == 12);
    CHECK(g2.cartan_matrix == IntMatrix{{2, -1}, {-3, 2}});
}

TEST_CASE("invalid selections name the violated constraint")
{
    CHECK_THROWS_WITH_AS(build_root_system({Family::B, 1}), "type B requires rank >= 2", InvalidArgument);
    CHECK_THROWS_WITH_AS(build_root_system({Family::G2, 3}), "type G2 requires rank == 2", InvalidArgument);
    CHECK_THROWS_WITH_AS(build_root_system({Family::A, 0}), "type A requires rank >= 1", InvalidArgument);
    CHECK_THROWS_AS(SimpleType::parse("E", 8), InvalidArgument);
    CHECK(SimpleType::parse("G", 2).name() == "G2");
}

TEST_CASE("positive roots, coroots and rho agree with the Weyl-orbit oracle")
{
    for (const auto& t : all_types(6)) {
        CAPTURE(t.name());
        const RootSystem rs = build_root_system(t);
        const auto orbit = weyl_orbit_oracle(rs.cartan_matrix);
        std::map<IntVector, IntVector> positive;
        for (const auto& p : orbit) {
            bool pos = std::all_of(p.root.begin(), p.root.end(), [](int c) { return c >= 0; });
            bool neg = std::all_of(p.root.begin(), p.root.end(), [](int c) { return c <= 0; });
            REQUIRE((pos || neg));
            if (pos) positive[p.root] = p.coroot;
        }
        REQUIRE(positive.size() == rs.num_positive());
        for (std::size_t k = 0; k < rs.num_positive(); ++k) {
            auto it = positive.find(rs.positive_roots[k]);
            REQUIRE(it != positive.end());
            CHECK(rs.coroots[k] == it->second);
            int rho = 0;
            for (int c : it->second) rho += c;
            CHECK(rs.rho_pairings[k] == rho);
        }
        unsigned heights_ok = 1;
        for (std::size_t k = 1; k < rs.num_positive(); ++k) {
            int h0 = 0, h1 = 0;
            for (int c : rs.positive_roots[k - 1]) h0 += c;
            for (int c : rs.positive_roots[k]) h1 += c;
            heights_ok &= h0 <= h1;
        }
        CHECK(heights_ok);
        CHECK(rs.dimension == t.rank + 2 * rs.num_positive());
    }
}

TEST_CASE("Weyl enumeration agrees with the reflection-matrix oracle")
{
    const WeylEnumeration a1 = enumerate_weyl(build_root_system({Family::A, 1}));
    CHECK(a1.length_counts == std::vector<std::pair<unsigned, std::uint64_t>>{{0, 1}, {1, 1}});
    const WeylEnumeration a2 = enumerate_weyl(build_root_system({Family::A, 2}));
    CHECK(a2.length_counts == std::vector<std::pair<unsigned, std::uint64_t>>{{0, 1}, {1, 2}, {2, 2}, {3, 1}});
    CHECK(a2.total == 6);
    CHECK(enumerate_weyl(build_root_system({Family::B, 2})).total == 8);

    for (const auto& t : all_types(4)) {
        CAPTURE(t.name());
        const RootSystem rs = build_root_system(t);
        const auto oracle = weyl_length_oracle(rs.cartan_matrix);
        const WeylEnumeration we = enumerate_weyl(rs);
        CHECK(we.length_counts == std::vector<std::pair<unsigned, std::uint64_t>>(oracle.begin(), oracle.end()));
        CHECK(we.total == rs.weyl_order);
        // The longest element has length N.
        CHECK(we.length_counts.back() == std::pair<unsigned, std::uint64_t>{rs.num_positive(), 1});
    }
}

TEST_CASE("Weyl enumeration guard")
{
    const RootSystem b6 = build_root_system({Family::B, 6});
    CHECK_THROWS_WITH_AS(enumerate_weyl(b6, 1000), doctest::Contains("1000"), GuardExceeded);
    CHECK(enumerate_weyl(b6).total == 46080);
}

TEST_CASE("Kostant's formula")
{
    const KostantCheck a1 = kostant_check(build_root_system({Family::A, 1}));
    CHECK(a1.lhs == 2);
    CHECK(a1.rhs == 2);
    CHECK(a1.equal);
    const KostantCheck a2 = kostant_check(build_root_system({Family::A, 2}));
    CHECK(a2.lhs == 6);
    const KostantCheck b6 = kostant_check(build_root_system({Family::B, 6}));
    CHECK(b6.equal);
    CHECK(b6.rhs == 46080);
    for (const auto& t : all_types(6)) {
        CAPTURE(t.name());
        const RootSystem rs = build_root_system(t);
        const KostantCheck k = kostant_check(rs);
        CHECK(k.equal);
        std::uint64_t product = 1;
        for (auto d : rs.exponents_plus_one) product *= d;
        CHECK(product == rs.weyl_order);
        unsigned exponent_sum = 0;
        for (auto d : rs.exponents_plus_one) exponent_sum += d - 1;
        CHECK(exponent_sum == rs.num_positive());
    }
    // Frozen orders from the matrix oracle.
    CHECK(build_root_system({Family::C, 4}).weyl_order == 384);
    CHECK(build_root_system({Family::D, 5}).weyl_order == 1920);
    CHECK(build_root_system({Family::A, 6}).weyl_order == 5040);
}

TEST_CASE("Poincare product identity")
{
    const PoincareCheck a1 = poincare_check(build_root_system({Family::A, 1}));
    CHECK(a1.sum_side == UniPoly(std::vector<Rational>{1, 1}));
    CHECK(a1.equal);
    const PoincareCheck a2 = poincare_check(build_root_system({Family::A, 2}));
    CHECK(a2.sum_side == UniPoly(std::vector<Rational>{1, 2, 2, 1}));
    CHECK(a2.product_side == a2.sum_side);
    const PoincareCheck a3 = poincare_check(build_root_system({Family::A, 3}));
    CHECK(a3.equal);
    CHECK(a3.value_at_one == 24);
    for (const auto& t : all_types(4)) {
        CAPTURE(t.name());
        const RootSystem rs = build_root_system(t);
        const PoincareCheck p = poincare_check(rs);
        CHECK(p.equal);
        const auto oracle = weyl_length_oracle(rs.cartan_matrix);
        std::vector<Rational> coeffs(rs.num_positive() + 1, 0);
        for (auto [l, c] : oracle) coeffs[l] = Rational(Integer(std::to_string(c)));
        CHECK(p.product_side == UniPoly(coeffs));
    }
}

TEST_CASE("simple reflections on Cartan polynomials")
{
    const RootSystem a1 = build_root_system({Family::A, 1});
    const Letter h = Letter::cartan(0), h2 = Letter::cartan(1);
    CHECK(simple_reflection_action(a1, 0, pow(var(h), 2)) == pow(var(h), 2));
    CHECK(simple_reflection_action(a1, 0, var(h)) == -var(h));
    const RootSystem a2 = build_root_system({Family::A, 2});
    CHECK(simple_reflection_action(a2, 0, var(h)) == -var(h));
    CHECK(simple_reflection_action(a2, 0, var(h2)) == var(h2) + var(h));
    CHECK_THROWS_AS(simple_reflection_action(a2, 0, var(Letter::pos(0))), InvalidArgument);
    // Involution on random inputs.
    std::mt19937_64 rng(8);
    const RootSystem g2 = build_root_system({Family::G2, 2});
    for (int trial = 0; trial < 20; ++trial) {
        CommPoly p = testing::random_poly(rng, {h, h2}, 3, 4);
        for (unsigned i = 0; i < 2; ++i) {
            CHECK(simple_reflection_action(g2, i, simple_reflection_action(g2, i, p)) == p);
        }
    }
    // The product of coroots is anti-invariant.
    const RootSystem b3 = build_root_system({Family::B, 3});
    CommPoly prod(1);
    for (std::size_t k = 0; k < b3.num_positive(); ++k) prod = prod * b3.coroot_form(k);
    for (unsigned i = 0; i < 3; ++i) CHECK(simple_reflection_action(b3, i, prod) == -prod);
}
