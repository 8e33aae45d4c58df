#pragma once

#include "liejac/liealg.hpp"
#include "liejac/pbw.hpp"
#include "liejac/rootdata.hpp"
#include "liejac/univariate.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace liejac {

/// Exponents of f_{alpha_1} ... f_{alpha_N} in the fixed PBW order.
using LoweringExponents = std::vector<unsigned>;

/// Finite combination of PBW monomials applied to the highest-weight
/// vector. Coefficients are rational functions of the weight parameter s.
class VermaVector {
public:
    using TermMap = std::map<LoweringExponents, RatFunc>;

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const LoweringExponents& e, const RatFunc& c);

    VermaVector& operator+=(const VermaVector& o);
    VermaVector& operator-=(const VermaVector& o);
    VermaVector& operator*=(const RatFunc& c);
    friend VermaVector operator+(VermaVector a, const VermaVector& b) { return a += b; }
    friend VermaVector operator-(VermaVector a, const VermaVector& b) { return a -= b; }
    friend VermaVector operator*(VermaVector a, const RatFunc& c) { return a *= c; }
    bool operator==(const VermaVector& o) const { return terms_ == o.terms_; }

    std::string pretty(const std::string& var = "s") const;

private:
    TermMap terms_;
};

/// Verma module of sl2 or sl3 whose highest weight takes the value
/// lambda[i] (a polynomial in s) on the simple coroot h_i.
class VermaModule {
public:
    VermaModule(std::shared_ptr<const LieStructure> s, std::vector<UniPoly> lambda);

    const LieStructure& structure() const { return *s_; }
    const RootSystem& roots() const { return s_->roots(); }
    const std::vector<UniPoly>& highest_weight() const { return lambda_; }

    VermaVector highest_weight_vector() const;
    VermaVector monomial(const LoweringExponents& e) const;

    /// Plain generator x acting on v.
    VermaVector apply(Letter x, const VermaVector& v) const;

    /// Sum of exponent-weighted positive roots (simple-root coordinates):
    /// the monomial has weight lambda minus this vector.
    IntVector depth_vector(const LoweringExponents& e) const;
    /// Common depth vector of a nonzero weight-homogeneous vector; throws otherwise.
    IntVector homogeneous_depth(const VermaVector& v) const;
    /// gamma(h_alpha) for gamma = lambda - depth.
    UniPoly weight_on_coroot(const IntVector& depth, std::size_t root) const;
    std::string weight_text(const IntVector& depth) const;

private:
    std::shared_ptr<const LieStructure> s_;
    std::vector<UniPoly> lambda_;
    mutable Straightener st_;
};

/// Denominator h_alpha + rho(h_alpha) + j vanished at the vector's weight.
class PoleError : public Error {
public:
    PoleError(std::size_t root, unsigned j, std::string weight);
    std::size_t root;
    unsigned j;
    std::string weight;
};

/// A permutation of the positive-root indices.
using NormalOrder = std::vector<std::size_t>;

bool is_normal_order(const RootSystem& rs, const NormalOrder& order);

/// All normal orders of the positive roots; rank <= 2.
std::vector<NormalOrder> enumerate_normal_orders(const RootSystem& rs);

struct ProjectorStats {
    /// Largest number of nonzero series terms used by a single factor p_alpha.
    unsigned max_terms = 0;
};

/// p_alpha applied to a weight-homogeneous vector.
VermaVector apply_root_factor(const VermaModule& m, std::size_t root, const VermaVector& v,
                              ProjectorStats* stats = nullptr);

/// p = p_{a_1} ... p_{a_N} along `order` applied to a weight-homogeneous vector.
VermaVector apply_projector(const VermaModule& m, const NormalOrder& order, const VermaVector& v,
                            ProjectorStats* stats = nullptr);

struct ProjectorCheckRow {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct ProjectorReport {
    std::vector<ProjectorCheckRow> rows;
    bool all_ok() const;
};

/// Checks e_alpha p = p f_alpha = 0, idempotence, weight preservation,
/// truncation bound and order independence on monomial samples up to
/// `max_depth` lowering letters plus `random_samples` seeded combinations.
/// Also runs the highest-weight fixture and pole demonstrations.
ProjectorReport projector_properties_check(unsigned rank, unsigned max_depth, unsigned random_samples,
                                           std::uint64_t seed);

} // namespace liejac
