#include "doctest_support.hpp"

#include "liejac/projector.hpp"

#include <doctest.h>

#include <set>

using namespace liejac;

namespace {

std::shared_ptr<const LieStructure> sl(unsigned rank)
{
    return std::make_shared<const LieStructure>(build_sl(rank));
}

const UniPoly s = UniPoly::x();

RatFunc rf(const UniPoly& p) { return RatFunc(p); }

} // namespace

TEST_CASE("Verma module action on sl2")
{
    const VermaModule m(sl(1), {s});
    const Letter e = Letter::pos(0), f = Letter::neg(0), h = Letter::cartan(0);
    const VermaVector v = m.highest_weight_vector();
    CHECK(m.apply(e, v).is_zero());
    CHECK(m.apply(h, v) == v * rf(s));
    CHECK(m.apply(f, v) == m.monomial({1}));
    CHECK(m.apply(e, m.monomial({1})) == v * rf(s));
    CHECK(m.apply(h, m.monomial({1})) == m.monomial({1}) * rf(s - UniPoly(2)));
    // e f^n v = n (s - n + 1) f^(n-1) v and h f^n v = (s - 2n) f^n v.
    for (unsigned n = 1; n <= 6; ++n) {
        const Rational r(n);
        CHECK(m.apply(e, m.monomial({n})) == m.monomial({n - 1}) * rf((s - UniPoly(r - 1)) * UniPoly(r)));
        CHECK(m.apply(h, m.monomial({n})) == m.monomial({n}) * rf(s - UniPoly(2 * r)));
        CHECK(m.apply(f, m.monomial({n})) == m.monomial({n + 1}));
    }
    CHECK(m.monomial({2}).pretty() == "f1^2*v");
    CHECK(m.homogeneous_depth(m.monomial({3})) == IntVector{3});
    CHECK_THROWS(m.homogeneous_depth(m.monomial({1}) + v));
}

TEST_CASE("Verma module action on sl3")
{
    const VermaModule m(sl(2), {s, UniPoly(fraction(7, 3))});
    const VermaVector v = m.highest_weight_vector();
    const Letter e1 = Letter::pos(0), e2 = Letter::pos(1), f1 = Letter::neg(0), f2 = Letter::neg(1);
    CHECK(m.apply(e1, m.apply(f1, v)) == v * rf(s));
    CHECK(m.apply(e2, m.apply(f2, v)) == v * rf(UniPoly(fraction(7, 3))));
    CHECK(m.apply(e1, m.apply(f2, v)).is_zero());
    // [e1, f2] = 0 so e1 and f2 commute on every vector.
    const VermaVector w = m.apply(f1, m.apply(f2, m.apply(f1, v)));
    CHECK(m.apply(e1, m.apply(f2, w)) == m.apply(f2, m.apply(e1, w)));
    CHECK(m.depth_vector({1, 0, 1}) == IntVector{2, 1});
    CHECK(m.weight_on_coroot({1, 0}, 0) == s - UniPoly(2));
    CHECK(m.weight_on_coroot({1, 0}, 1) == UniPoly(fraction(7, 3) + 1));
}

TEST_CASE("normal orders")
{
    CHECK(enumerate_normal_orders(build_root_system({Family::A, 1})).size() == 1);
    const RootSystem a2 = build_root_system({Family::A, 2});
    const auto orders = enumerate_normal_orders(a2);
    CHECK(std::set<NormalOrder>(orders.begin(), orders.end()) == std::set<NormalOrder>{{0, 2, 1}, {1, 2, 0}});
    CHECK_FALSE(is_normal_order(a2, {0, 1, 2}));
    CHECK(enumerate_normal_orders(build_root_system({Family::B, 2})).size() == 2);
    CHECK(enumerate_normal_orders(build_root_system({Family::G2, 2})).size() == 2);
    CHECK_THROWS_AS(enumerate_normal_orders(build_root_system({Family::A, 3})), GuardExceeded);
}

TEST_CASE("the sl2 projector")
{
    const VermaModule m(sl(1), {s});
    const NormalOrder order{0};
    const VermaVector v = m.highest_weight_vector();
    CHECK(apply_projector(m, order, v) == v);
    for (unsigned n = 1; n <= 5; ++n) {
        ProjectorStats stats;
        CHECK(apply_projector(m, order, m.monomial({n}), &stats).is_zero());
        CHECK(stats.max_terms <= n + 1);
    }
}

TEST_CASE("sl2 pole set matches the denominators")
{
    // On f^k v the denominators are lambda - 2k + 1 + j for j = 1..k.
    for (int lambda = -6; lambda <= 6; ++lambda) {
        const VermaModule m(sl(1), {UniPoly(lambda)});
        for (unsigned k = 0; k <= 4; ++k) {
            CAPTURE(lambda);
            CAPTURE(k);
            const bool expect_pole = k >= 1 && lambda >= static_cast<int>(k) - 1 && lambda <= 2 * static_cast<int>(k) - 2;
            bool raised = false;
            try {
                apply_root_factor(m, 0, m.monomial({k}));
            } catch (const PoleError& err) {
                raised = true;
                CHECK(err.root == 0);
                CHECK(static_cast<int>(err.j) == 2 * static_cast<int>(k) - 1 - lambda);
            }
            CHECK(raised == expect_pole);
        }
    }
    const VermaModule zero(sl(1), {UniPoly(0)});
    try {
        apply_root_factor(zero, 0, zero.monomial({1}));
        FAIL("expected a pole");
    } catch (const PoleError& err) {
        CHECK(std::string(err.what()).find("pole: h_alpha + rho(h_alpha) + 1 vanishes for root 1") == 0);
    }
}

TEST_CASE("sl3 projector on low-depth vectors")
{
    const VermaModule m(sl(2), {s, UniPoly(fraction(7, 3))});
    const VermaVector v = m.highest_weight_vector();
    for (const auto& order : enumerate_normal_orders(m.roots())) {
        CHECK(apply_projector(m, order, v) == v);
        for (LoweringExponents e : {LoweringExponents{1, 0, 0}, LoweringExponents{0, 1, 0}, LoweringExponents{0, 0, 1},
                                    LoweringExponents{1, 1, 0}, LoweringExponents{2, 0, 1}}) {
            const VermaVector pv = apply_projector(m, order, m.monomial(e));
            CHECK(pv.is_zero());
        }
    }
}

TEST_CASE("projector property suites")
{
    for (unsigned rank = 1; rank <= 2; ++rank) {
        for (std::uint64_t seed : {1u, 7u, 99u}) {
            CAPTURE(rank);
            CAPTURE(seed);
            const ProjectorReport rep = projector_properties_check(rank, 3, 6, seed);
            for (const auto& row : rep.rows) {
                CAPTURE(row.name);
                CAPTURE(row.detail);
                CHECK(row.ok);
            }
            CHECK(rep.all_ok());
            CHECK(rep.rows.size() >= 8);
        }
    }
    CHECK_THROWS_AS(projector_properties_check(3, 2, 2, 1), InvalidArgument);
}
