#include "liejac/liealg.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <map>
#include <sstream>

namespace liejac {

namespace {

using Dense = std::map<std::pair<unsigned, unsigned>, Rational>;

Dense to_dense(const std::vector<MatrixEntry>& m)
{
    Dense d;
    for (const auto& e : m) {
        d[{e.row, e.col}] += e.value;
    }
    return d;
}

Dense commutator(const Dense& a, const Dense& b)
{
    Dense r;
    for (const auto& [ka, va] : a) {
        for (const auto& [kb, vb] : b) {
            if (ka.second == kb.first) r[{ka.first, kb.second}] += va * vb;
            if (kb.second == ka.first) r[{kb.first, ka.second}] -= va * vb;
        }
    }
    for (auto it = r.begin(); it != r.end();) {
        it = it->second == 0 ? r.erase(it) : std::next(it);
    }
    return r;
}

} // namespace

std::size_t LieStructure::dense_index(Letter plain) const
{
    const std::size_t n_pos = num_positive();
    switch (plain.cls()) {
    case LetterClass::neg: return plain.index();
    case LetterClass::cartan: return n_pos + plain.index();
    case LetterClass::pos: return n_pos + rank() + plain.index();
    default: throw InvalidArgument("no basis element for " + plain.token());
    }
}

const LinComb& LieStructure::bracket(Letter x, Letter y) const
{
    return table_.at(dense_index(x)).at(dense_index(y));
}

const std::vector<MatrixEntry>& LieStructure::matrix_of(Letter plain) const
{
    return matrices_.at(dense_index(plain));
}

std::string LieStructure::table_text() const
{
    std::ostringstream os;
    os << "sl " << matrix_size() << '\n';
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        for (std::size_t j = 0; j < basis_.size(); ++j) {
            const auto& lc = table_[i][j];
            if (lc.empty()) continue;
            os << basis_[i].token() << ' ' << basis_[j].token() << " =";
            for (const auto& [l, c] : lc) {
                os << ' ' << to_string(c) << ' ' << l.token();
            }
            os << '\n';
        }
    }
    return os.str();
}

std::string LieStructure::version_stamp() const
{
    // FNV-1a over the table text.
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : table_text()) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

LieStructure build_sl(unsigned rank)
{
    if (rank < 1) {
        throw InvalidArgument("sl(n+1) requires rank >= 1");
    }
    LieStructure s;
    s.roots_ = build_root_system({Family::A, rank});
    const unsigned size = rank + 1;
    const std::size_t n_pos = s.roots_.num_positive();

    // Root alpha_i + ... + alpha_{j-1} <-> matrix unit position (i, j).
    std::vector<std::pair<unsigned, unsigned>> unit_of(n_pos);
    std::map<std::pair<unsigned, unsigned>, std::size_t> root_of;
    for (unsigned i = 0; i < size; ++i) {
        for (unsigned j = i + 1; j < size; ++j) {
            IntVector coords(rank, 0);
            for (unsigned k = i; k < j; ++k) coords[k] = 1;
            int idx = s.roots_.root_index(coords);
            if (idx < 0) throw Error("internal: missing type A root");
            unit_of[idx] = {i, j};
            root_of[{i, j}] = static_cast<std::size_t>(idx);
        }
    }

    for (std::size_t a = 0; a < n_pos; ++a) s.basis_.push_back(Letter::neg(static_cast<unsigned>(a)));
    for (unsigned i = 0; i < rank; ++i) s.basis_.push_back(Letter::cartan(i));
    for (std::size_t a = 0; a < n_pos; ++a) s.basis_.push_back(Letter::pos(static_cast<unsigned>(a)));

    for (auto l : s.basis_) {
        std::vector<MatrixEntry> m;
        switch (l.cls()) {
        case LetterClass::neg: {
            auto [i, j] = unit_of[l.index()];
            m.push_back({j, i, 1});
            break;
        }
        case LetterClass::pos: {
            auto [i, j] = unit_of[l.index()];
            m.push_back({i, j, 1});
            break;
        }
        default:
            m.push_back({l.index(), l.index(), 1});
            m.push_back({l.index() + 1, l.index() + 1, -1});
            break;
        }
        s.matrices_.push_back(std::move(m));
    }

    // Decompose a traceless matrix in the basis.
    auto decompose = [&](const Dense& d) {
        LinComb lc;
        std::vector<Rational> diag(size, 0);
        for (const auto& [k, v] : d) {
            auto [i, j] = k;
            if (i == j) {
                diag[i] = v;
            } else if (i < j) {
                lc.emplace_back(Letter::pos(static_cast<unsigned>(root_of.at({i, j}))), v);
            } else {
                lc.emplace_back(Letter::neg(static_cast<unsigned>(root_of.at({j, i}))), v);
            }
        }
        Rational partial = 0;
        for (unsigned k = 0; k < rank; ++k) {
            partial += diag[k];
            if (partial != 0) lc.emplace_back(Letter::cartan(k), partial);
        }
        std::sort(lc.begin(), lc.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        return lc;
    };

    const std::size_t dim = s.basis_.size();
    s.table_.assign(dim, std::vector<LinComb>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            s.table_[i][j] = decompose(commutator(to_dense(s.matrices_[i]), to_dense(s.matrices_[j])));
        }
    }
    return s;
}

LinComb extended_bracket(const LieStructure& s, Letter x, Letter y, unsigned t_cap)
{
    if (x.is_param() || y.is_param()) {
        throw InvalidArgument("bracket with the formal scalar t");
    }
    unsigned u = x.u_flag() + y.u_flag();
    if (u >= 2) {
        return {};
    }
    unsigned t = x.t_power() + y.t_power();
    const LinComb& base = s.bracket(x.base(), y.base());
    if (base.empty()) {
        return {};
    }
    if (t > t_cap) {
        throw TPowerOverflow("bracket t-power " + std::to_string(t) + " exceeds the cap " + std::to_string(t_cap));
    }
    LinComb out;
    out.reserve(base.size());
    for (const auto& [l, c] : base) {
        out.emplace_back(Letter(l.cls(), l.index(), t, u), c);
    }
    return out;
}

CommPoly ad_action(const LieStructure& s, Letter x, const CommPoly& p, unsigned t_cap)
{
    CommPoly r;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [v, e] : m.factors()) {
            if (v.is_param()) continue;
            LinComb br = extended_bracket(s, x, v, t_cap);
            if (br.empty()) continue;
            Monomial rest = *m.divide(Monomial::of(v));
            for (const auto& [w, b] : br) {
                r.add_term(rest * Monomial::of(w), c * e * b);
            }
        }
    }
    return r;
}

std::vector<Letter> extended_letters(const LieStructure& s, unsigned min_t, unsigned max_t, unsigned max_u)
{
    std::vector<Letter> out;
    for (auto b : s.basis()) {
        for (unsigned t = min_t; t <= max_t; ++t) {
            for (unsigned u = 0; u <= max_u; ++u) {
                out.push_back(Letter(b.cls(), b.index(), t, u));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace liejac
