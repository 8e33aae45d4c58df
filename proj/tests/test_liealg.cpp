#include "doctest_support.hpp"

#include <doctest.h>

#include <map>

using namespace liejac;
using testing::var;

namespace {

using Dense = std::vector<std::vector<Rational>>;
using Combo = std::map<Letter, Rational>;

Dense dense(const LieStructure& s, Letter x)
{
    const unsigned m = s.matrix_size();
    Dense d(m, std::vector<Rational>(m, 0));
    for (const auto& entry : s.matrix_of(x)) d[entry.row][entry.col] += entry.value;
    return d;
}

Dense commutator(const Dense& a, const Dense& b)
{
    const std::size_t m = a.size();
    Dense c(m, std::vector<Rational>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) c[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
    return c;
}

Combo to_combo(const LinComb& l)
{
    Combo c;
    for (const auto& [x, v] : l) c[x] += v;
    return c;
}

void prune(Combo& c)
{
    for (auto it = c.begin(); it != c.end();) it = it->second == 0 ? c.erase(it) : std::next(it);
}

Combo bracket_combo(const LieStructure& s, const Combo& a, Letter y, unsigned cap)
{
    Combo out;
    for (const auto& [x, v] : a)
        for (const auto& [z, w] : extended_bracket(s, x, y, cap)) out[z] += v * w;
    prune(out);
    return out;
}

Combo jacobi_sum(const LieStructure& s, Letter x, Letter y, Letter z, unsigned cap)
{
    Combo total;
    for (auto [a, b, c] : {std::tuple{x, y, z}, std::tuple{y, z, x}, std::tuple{z, x, y}}) {
        for (const auto& [k, v] : bracket_combo(s, to_combo(extended_bracket(s, b, c, cap)), a, cap)) {
            total[k] -= v;  // [a,[b,c]] = -[[b,c],a]
        }
    }
    prune(total);
    return total;
}

} // namespace

TEST_CASE("sl2 brackets")
{
    const LieStructure s = build_sl(1);
    CHECK(s.dimension() == 3);
    CHECK(s.bracket(s.e(0), s.f(0)) == LinComb{{s.h(0), 1}});
    CHECK(s.bracket(s.h(0), s.e(0)) == LinComb{{s.e(0), 2}});
    CHECK(s.bracket(s.h(0), s.f(0)) == LinComb{{s.f(0), -2}});
    CHECK(s.bracket(s.e(0), s.e(0)).empty());
    CHECK(s.basis() == std::vector<Letter>{s.f(0), s.h(0), s.e(0)});
}

TEST_CASE("sl3 brackets")
{
    const LieStructure s = build_sl(2);
    CHECK(s.dimension() == 8);
    const LinComb top = s.bracket(s.e(0), s.e(1));
    REQUIRE(top.size() == 1);
    CHECK(top[0].first == s.e(2));
    CHECK(abs(top[0].second) == 1);
    CHECK(build_sl(3).dimension() == 15);
}

TEST_CASE("brackets match matrix-unit commutators")
{
    for (unsigned rank = 1; rank <= 4; ++rank) {
        const LieStructure s = build_sl(rank);
        for (auto x : s.basis()) {
            for (auto y : s.basis()) {
                Dense expected = commutator(dense(s, x), dense(s, y));
                const unsigned m = s.matrix_size();
                Dense got(m, std::vector<Rational>(m, 0));
                for (const auto& [z, c] : s.bracket(x, y)) {
                    Dense dz = dense(s, z);
                    for (unsigned i = 0; i < m; ++i)
                        for (unsigned j = 0; j < m; ++j) got[i][j] += c * dz[i][j];
                }
                CHECK(got == expected);
            }
        }
    }
}

TEST_CASE("antisymmetry, Cartan relations and the exhaustive Jacobi identity")
{
    for (unsigned rank = 1; rank <= 3; ++rank) {
        CAPTURE(rank);
        const LieStructure s = build_sl(rank);
        const auto& a = s.roots().cartan_matrix;
        for (unsigned i = 0; i < rank; ++i) {
            for (unsigned j = 0; j < rank; ++j) {
                CHECK(s.bracket(s.h(i), s.e(j)) == (a[j][i] ? LinComb{{s.e(j), a[j][i]}} : LinComb{}));
            }
        }
        unsigned failures = 0;
        for (auto x : s.basis()) {
            for (auto y : s.basis()) {
                Combo xy = to_combo(s.bracket(x, y)), yx = to_combo(s.bracket(y, x));
                for (auto& [k, v] : yx) xy[k] += v;
                prune(xy);
                failures += !xy.empty();
                for (auto z : s.basis()) failures += !jacobi_sum(s, x, y, z, 0).empty();
            }
        }
        CHECK(failures == 0);
    }
}

TEST_CASE("extended brackets")
{
    const LieStructure s = build_sl(1);
    const Letter e = s.e(0), f = s.f(0), h = s.h(0);
    CHECK(extended_bracket(s, e.with_t(1), f.with_t(2)) == LinComb{{h.with_t(3), 1}});
    CHECK(extended_bracket(s, e.with_u(1), f.with_u(1)).empty());
    CHECK(extended_bracket(s, e, f.with_u(1)) == LinComb{{h.with_u(1), 1}});
    CHECK(extended_bracket(s, e.with_u(1), f) == LinComb{{h.with_u(1), 1}});
    CHECK_THROWS_AS(extended_bracket(s, e.with_t(2), f.with_t(2), 3), TPowerOverflow);
    // A vanishing bracket never overflows.
    CHECK(extended_bracket(s, e.with_t(2), e.with_t(2), 3).empty());
    CHECK_THROWS_AS(extended_bracket(s, Letter::param(), e), InvalidArgument);
}

TEST_CASE("Jacobi identity on random extended triples")
{
    std::mt19937_64 rng(2024);
    for (unsigned rank = 1; rank <= 3; ++rank) {
        const LieStructure s = build_sl(rank);
        const auto letters = extended_letters(s, 0, 2, 1);
        std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
        unsigned failures = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            failures += !jacobi_sum(s, letters[pick(rng)], letters[pick(rng)], letters[pick(rng)], 16).empty();
        }
        CHECK(failures == 0);
    }
}

TEST_CASE("adjoint action on the symmetric algebra")
{
    const LieStructure s = build_sl(1);
    const Letter e = s.e(0), f = s.f(0), h = s.h(0);
    const CommPoly casimir = var(e) * var(f) * Rational(4) + var(h) * var(h);
    CHECK(ad_action(s, e, casimir).is_zero());
    CHECK(ad_action(s, f, casimir).is_zero());
    CHECK(ad_action(s, h, var(e)) == var(e) * Rational(2));
    CHECK(ad_action(s, e, var(h)) == var(e) * Rational(-2));

    std::mt19937_64 rng(17);
    const LieStructure s3 = build_sl(2);
    const auto letters = extended_letters(s3, 0, 1, 0);
    for (int trial = 0; trial < 30; ++trial) {
        CommPoly p = testing::random_poly(rng, letters, 2, 3);
        CommPoly q = testing::random_poly(rng, letters, 2, 3);
        for (auto x : s3.basis()) {
            CHECK(ad_action(s3, x, p * q) == ad_action(s3, x, p) * q + p * ad_action(s3, x, q));
        }
    }
}

TEST_CASE("structure tables are stable")
{
    const LieStructure a = build_sl(2), b = build_sl(2), c = build_sl(3);
    CHECK(a.table_text() == b.table_text());
    CHECK(a.version_stamp() == b.version_stamp());
    CHECK(a.version_stamp() != c.version_stamp());
    CHECK(a.version_stamp().size() == 16);
    CHECK(extended_letters(a, 0, 0, 1).size() == 16);
}
