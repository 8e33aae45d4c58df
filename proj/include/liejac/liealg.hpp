#pragma once

#include "liejac/letter.hpp"
#include "liejac/polyring.hpp"
#include "liejac/rootdata.hpp"

#include <string>
#include <utility>
#include <vector>

namespace liejac {

/// Rational linear combination of letters, sorted by letter, no zero entries.
using LinComb = std::vector<std::pair<Letter, Rational>>;

/// One nonzero entry of a matrix realization.
struct MatrixEntry {
    unsigned row;
    unsigned col;
    Rational value;
};

/// Structure constants of sl_{n+1} in the basis {f_alpha, h_i, e_alpha}.
///
/// Root letters are indexed by the positive-root numbering of `roots`;
/// e_alpha = E_ij and f_alpha = E_ji for alpha = alpha_i + ... + alpha_{j-1},
/// h_i = E_ii - E_{i+1,i+1}. Every (e_alpha, h_alpha, f_alpha) is an
/// sl2-triple with h_alpha the coroot.
class LieStructure {
public:
    const RootSystem& roots() const { return roots_; }
    unsigned rank() const { return roots_.rank(); }
    std::size_t num_positive() const { return roots_.num_positive(); }
    std::size_t dimension() const { return basis_.size(); }
    /// Matrix size of the defining representation.
    unsigned matrix_size() const { return rank() + 1; }

    /// Plain letters ordered f..., h..., e... (the PBW letter order).
    const std::vector<Letter>& basis() const { return basis_; }
    std::size_t dense_index(Letter plain) const;
    /// [x, y] for plain letters.
    const LinComb& bracket(Letter x, Letter y) const;
    const std::vector<MatrixEntry>& matrix_of(Letter plain) const;

    Letter e(std::size_t root) const { return Letter::pos(static_cast<unsigned>(root)); }
    Letter f(std::size_t root) const { return Letter::neg(static_cast<unsigned>(root)); }
    Letter h(unsigned i) const { return Letter::cartan(i); }

    /// Canonical text of the full bracket table.
    std::string table_text() const;
    /// Short hex digest of table_text(); keys cache files.
    std::string version_stamp() const;

private:
    friend LieStructure build_sl(unsigned rank);

    RootSystem roots_;
    std::vector<Letter> basis_;
    std::vector<std::vector<MatrixEntry>> matrices_;
    std::vector<std::vector<LinComb>> table_;
};

LieStructure build_sl(unsigned rank);

/// [x t^k u^a, y t^m u^b] = [x, y] t^(k+m) u^(a+b), zero once a+b >= 2.
/// Throws TPowerOverflow when k+m exceeds `t_cap`.
LinComb extended_bracket(const LieStructure& s, Letter x, Letter y, unsigned t_cap = Letter::kMaxTPower);

/// The derivation of the symmetric algebra extending ad x.
CommPoly ad_action(const LieStructure& s, Letter x, const CommPoly& p, unsigned t_cap = Letter::kMaxTPower);

/// All letters of the extended universe with t-power <= max_t and u-flag <= max_u.
std::vector<Letter> extended_letters(const LieStructure& s, unsigned min_t, unsigned max_t, unsigned max_u);

} // namespace liejac
