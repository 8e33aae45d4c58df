#pragma once

#include "liejac/liealg.hpp"
#include "liejac/pbw.hpp"
#include "liejac/polyring.hpp"
#include "liejac/rootdata.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace liejac {

class ArtifactCache;

/// Generators H_1..H_n of S(g)^g with their degrees.
struct InvariantFamily {
    std::shared_ptr<const LieStructure> algebra;
    std::vector<CommPoly> generators;
    std::vector<unsigned> degrees;
    /// "trace" or "casimir"; part of every cache key.
    std::string provenance;

    std::size_t size() const { return generators.size(); }
    /// Largest degree; the t-power cap of every current-algebra computation.
    unsigned working_degree() const;
};

/// H_k = tr(X^k), k = 2..n+1, for the generic element X = sum_b M(b) b*,
/// where b* runs over the trace-form dual basis.
InvariantFamily trace_invariants(std::shared_ptr<const LieStructure> s);

/// sl2 only: the single generator 4ef + h^2.
InvariantFamily casimir_sl2_family(std::shared_ptr<const LieStructure> s);

/// Multiplies H_i by scales[i]; provenance gains a suffix so caches stay apart.
InvariantFamily rescaled(const InvariantFamily& family, const std::vector<Rational>& scales);

/// P_i° = H_i restricted to h: every non-Cartan letter set to zero.
CommPoly restrict_to_h(const CommPoly& h);

/// x -> x t on every letter; rejects decorated letters.
CommPoly shift_T(const CommPoly& h);

/// xi_1...xi_d -> sum_i xi_1...(xi_i u)...xi_d; rejects decorated letters.
CommPoly psi(const CommPoly& h);

/// The same derivation on raw words of the tensor algebra.
NCElement psi_words(const NCElement& e);

/// The derivation xi t^k -> k (xi u) t^(k-1) applied to words, then
/// normal-ordered by `st`. Rejects u-decorated or t^0 letters.
NCElement script_T(const NCElement& e, Straightener& st);

/// 𝒫_i^[1]: the symmetrization of T(H_i), normal-ordered in U(t g[t]).
NCElement symmetrized_shift(const InvariantFamily& family, std::size_t i, Straightener& st);

/// P_i^[1]: t-shifted Harish-Chandra image of 𝒫_i^[1].
CommPoly compute_P1(const InvariantFamily& family, std::size_t i, Straightener& st);

/// P_i: plain Harish-Chandra image of the symmetrization of H_i.
CommPoly compute_P(const InvariantFamily& family, std::size_t i, Straightener& st);

/// det(partial_shifted(P1_i, j)) at t = 1.
CommPoly jacobian_shifted(const std::vector<CommPoly>& p1, unsigned rank);

/// det(d P_i / d h_j).
CommPoly jacobian_classical(const std::vector<CommPoly>& ps, unsigned rank);

/// prod over positive roots of (h_alpha + shift(alpha)).
CommPoly root_product(const RootSystem& rs, const std::function<Rational(std::size_t)>& shift);

/// Factored rendering such as "2*(h1+2)".
std::string root_product_pretty(const RootSystem& rs, const Rational& c,
                                const std::function<Rational(std::size_t)>& shift);

/// Cache validity stamp for artifacts derived from generator i.
std::string cache_stamp(const InvariantFamily& family, std::size_t i);
/// Cache file key such as "A2-trace-P1-1".
std::string cache_key(const InvariantFamily& family, std::size_t i, const std::string& what);

enum class GeneratorChoice { automatic, trace, casimir };

struct VerifyOptions {
    GeneratorChoice generators = GeneratorChoice::automatic;
    std::vector<Rational> scales;  // empty: no rescaling
    unsigned jobs = 1;
    ArtifactCache* cache = nullptr;
};

struct JacobianReport {
    SimpleType type;
    std::string generators;
    Rational C;
    std::vector<CommPoly> P1;
    std::vector<CommPoly> P;
    CommPoly J_shifted;
    CommPoly expected;
    std::string expected_factored;
    CommPoly J_classical_top;  // J({P_i°})
    CommPoly J_classical_rho;  // J({P_i})
    bool classical_ok = false;  // J({P_i°}) = C prod h_alpha
    bool rho_shift_ok = false;  // J({P_i}) = C prod (h_alpha + rho(h_alpha))
    bool top_component_ok = false;
    bool zero_value_ok = false;
    bool zero_weyl_ok = false;    // J(0) = |W| C prod rho(h_alpha)
    bool zero_degree_ok = false;  // J(0) = (d_1...d_n) J({P_i})(0)
    bool theorem_ok = false;
    double seconds = 0;

    bool all_ok() const
    {
        return classical_ok && rho_shift_ok && top_component_ok && zero_value_ok && zero_weyl_ok && zero_degree_ok &&
               theorem_ok;
    }
};

/// Full Jacobian pipeline for a type-A algebra.
JacobianReport verify_theorem(const SimpleType& type, const VerifyOptions& options = {});

/// Same pipeline on a caller-supplied family.
JacobianReport verify_family(const InvariantFamily& family, const VerifyOptions& options = {});

/// R_i = symmetrization of psi(H_i), normal-ordered in U(q).
NCElement build_R(const InvariantFamily& family, std::size_t i, Straightener& takiff);

struct RViaT {
    NCElement direct;   // build_R
    NCElement via_T;    // script_T(𝒫_i^[1]) at t = 1
    bool equal = false;
};

RViaT check_R_via_T(const InvariantFamily& family, std::size_t i);

struct ObstructionDemo {
    NCElement lhs;  // psi applied to x y - y x, normal-ordered
    NCElement rhs;  // [x, y] u
    bool doubled = false;  // lhs == 2 rhs
};

ObstructionDemo psi_obstruction_demo(const LieStructure& s, Letter x, Letter y);

/// Both sides of T([a, b]) = [T a, b] + [a, T b] for t-decorated letters.
std::pair<NCElement, NCElement> script_T_bracket_witness(const LieStructure& s, Letter a, Letter b, unsigned t_cap);

/// sum_j (d_j P1)|_{t=1} (h_j u), the expected Cartan part of R_i.
CommPoly expected_takiff_cartan_part(const CommPoly& p1, unsigned rank);

} // namespace liejac
