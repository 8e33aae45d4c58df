#pragma once

#include "liejac/polyring.hpp"
#include "liejac/rational.hpp"
#include "liejac/univariate.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace liejac {

enum class Family { A, B, C, D, G2 };

struct SimpleType {
    Family family = Family::A;
    unsigned rank = 1;

    /// Throws InvalidArgument naming the violated rank constraint.
    void validate() const;
    std::string name() const;  // "A2", "G2"
    static SimpleType parse(const std::string& family, unsigned rank);
    bool operator==(const SimpleType&) const = default;
};

std::string family_name(Family f);

using IntVector = std::vector<int>;
using IntMatrix = std::vector<IntVector>;

/// Root-system combinatorics for one simple type.
///
/// Conventions: cartan_matrix[i][j] = alpha_i(h_j), where h_j is the j-th
/// simple coroot. Positive roots are stored in simple-root coordinates,
/// ordered by height and then lexicographically; the first `rank` entries
/// are the simple roots. coroots[k] expresses h_alpha in simple coroots.
struct RootSystem {
    SimpleType type;
    IntMatrix cartan_matrix;
    std::vector<IntVector> positive_roots;
    std::vector<IntVector> coroots;
    std::vector<int> rho_pairings;
    std::vector<unsigned> exponents_plus_one;
    std::uint64_t weyl_order = 0;
    unsigned dimension = 0;

    unsigned rank() const { return type.rank; }
    std::size_t num_positive() const { return positive_roots.size(); }
    /// Index of a positive root given in simple-root coordinates, or -1.
    int root_index(const IntVector& coords) const;
    /// h_alpha as a linear form in the simple coroot letters h_1..h_n.
    CommPoly coroot_form(std::size_t k) const;
};

RootSystem build_root_system(const SimpleType& type);

struct WeylEnumeration {
    /// (word length, number of elements of that length), ascending lengths.
    std::vector<std::pair<unsigned, std::uint64_t>> length_counts;
    std::uint64_t total = 0;
};

constexpr std::uint64_t kWeylEnumerationGuard = 1'000'000;

/// BFS over the Weyl group acting on 2*rho; throws GuardExceeded above the bound.
WeylEnumeration enumerate_weyl(const RootSystem& rs, std::uint64_t guard = kWeylEnumerationGuard);

struct KostantCheck {
    Rational lhs;
    Integer rhs;
    bool equal = false;
};

KostantCheck kostant_check(const RootSystem& rs);

struct PoincareCheck {
    UniPoly sum_side;
    UniPoly product_side;
    bool equal = false;
    Integer value_at_one;
};

/// Throws NonExactDivision when the product side is not a polynomial.
PoincareCheck poincare_check(const RootSystem& rs);

/// Applies the simple reflection s_i to a polynomial in h_1..h_n:
/// h_j -> h_j - a_ij h_i.
CommPoly simple_reflection_action(const RootSystem& rs, unsigned i, const CommPoly& p);

} // namespace liejac
