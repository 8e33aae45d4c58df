#include "liejac/projector.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace liejac {

// ---------------------------------------------------------------- VermaVector

void VermaVector::add_term(const LoweringExponents& e, const RatFunc& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

VermaVector& VermaVector::operator+=(const VermaVector& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

VermaVector& VermaVector::operator-=(const VermaVector& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

VermaVector& VermaVector::operator*=(const RatFunc& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

std::string VermaVector::pretty(const std::string& var) const
{
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        if (c != RatFunc(1)) s += "[" + c.pretty(var) + "]*";
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            s += "f" + std::to_string(k + 1);
            if (e[k] > 1) s += "^" + std::to_string(e[k]);
            s += "*";
        }
        s += "v";
    }
    return s;
}

// ---------------------------------------------------------------- VermaModule

VermaModule::VermaModule(std::shared_ptr<const LieStructure> s, std::vector<UniPoly> lambda)
    : s_(std::move(s)), lambda_(std::move(lambda)), st_(*s_, 0)
{
    if (lambda_.size() != s_->rank()) {
        throw InvalidArgument("highest weight needs one value per simple coroot");
    }
}

VermaVector VermaModule::highest_weight_vector() const
{
    return monomial(LoweringExponents(s_->num_positive(), 0));
}

VermaVector VermaModule::monomial(const LoweringExponents& e) const
{
    if (e.size() != s_->num_positive()) throw InvalidArgument("exponent vector has the wrong length");
    VermaVector v;
    v.add_term(e, RatFunc(1));
    return v;
}

VermaVector VermaModule::apply(Letter x, const VermaVector& v) const
{
    if (!x.is_plain() || x.is_param()) {
        throw InvalidArgument("Verma action needs an undecorated generator, got " + x.token());
    }
    const std::size_t n_pos = s_->num_positive();
    VermaVector out;
    for (const auto& [exps, coef] : v.terms()) {
        Word w{x};
        for (std::size_t k = 0; k < n_pos; ++k) w.insert(w.end(), exps[k], Letter::neg(static_cast<unsigned>(k)));
        const NCElement ordered = st_.normal_order_word(w);
        for (const auto& [word, c] : ordered.terms()) {
            if (!word.empty() && word.back().cls() == LetterClass::pos) continue;  // kills v_lambda
            LoweringExponents e(n_pos, 0);
            UniPoly scalar(c);
            for (auto l : word) {
                if (l.cls() == LetterClass::neg) {
                    ++e[l.index()];
                } else {
                    scalar = scalar * lambda_[l.index()];
                }
            }
            out.add_term(e, coef * RatFunc(scalar));
        }
    }
    return out;
}

IntVector VermaModule::depth_vector(const LoweringExponents& e) const
{
    const auto& rs = roots();
    IntVector d(rs.rank(), 0);
    for (std::size_t k = 0; k < e.size(); ++k)
        for (unsigned i = 0; i < rs.rank(); ++i) d[i] += static_cast<int>(e[k]) * rs.positive_roots[k][i];
    return d;
}

IntVector VermaModule::homogeneous_depth(const VermaVector& v) const
{
    if (v.is_zero()) throw InvalidArgument("zero vector has no weight");
    IntVector d = depth_vector(v.terms().begin()->first);
    for (const auto& [e, c] : v.terms()) {
        if (depth_vector(e) != d) throw InvalidArgument("vector is not weight-homogeneous");
    }
    return d;
}

UniPoly VermaModule::weight_on_coroot(const IntVector& depth, std::size_t root) const
{
    const auto& rs = roots();
    UniPoly r;
    for (unsigned i = 0; i < rs.rank(); ++i) {
        // gamma(h_i) = lambda(h_i) - sum_j depth_j alpha_j(h_i)
        UniPoly gi = lambda_[i];
        int shift = 0;
        for (unsigned j = 0; j < rs.rank(); ++j) shift += depth[j] * rs.cartan_matrix[j][i];
        gi -= UniPoly(shift);
        r += gi * UniPoly(rs.coroots[root][i]);
    }
    return r;
}

std::string VermaModule::weight_text(const IntVector& depth) const
{
    std::ostringstream os;
    os << "lambda";
    for (unsigned i = 0; i < depth.size(); ++i) {
        if (depth[i] != 0) os << " - " << depth[i] << "*a" << (i + 1);
    }
    os << " (values on h:";
    const auto& rs = roots();
    for (unsigned i = 0; i < rs.rank(); ++i) {
        UniPoly gi = lambda_[i];
        int shift = 0;
        for (unsigned j = 0; j < rs.rank(); ++j) shift += depth[j] * rs.cartan_matrix[j][i];
        gi -= UniPoly(shift);
        os << ' ' << gi.pretty("s");
    }
    os << ")";
    return os.str();
}

PoleError::PoleError(std::size_t root_, unsigned j_, std::string weight_)
    : Error("pole: h_alpha + rho(h_alpha) + " + std::to_string(j_) + " vanishes for root " +
            std::to_string(root_ + 1) + " at weight " + weight_),
      root(root_), j(j_), weight(std::move(weight_))
{
}

// ---------------------------------------------------------------- normal orders

bool is_normal_order(const RootSystem& rs, const NormalOrder& order)
{
    const std::size_t n_pos = rs.num_positive();
    if (order.size() != n_pos) return false;
    std::vector<std::size_t> pos(n_pos, n_pos);
    for (std::size_t p = 0; p < order.size(); ++p) {
        if (order[p] >= n_pos || pos[order[p]] != n_pos) return false;
        pos[order[p]] = p;
    }
    for (std::size_t a = 0; a < n_pos; ++a) {
        for (std::size_t b = a + 1; b < n_pos; ++b) {
            IntVector sum = rs.positive_roots[a];
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += rs.positive_roots[b][i];
            int c = rs.root_index(sum);
            if (c < 0) continue;
            auto pa = pos[a], pb = pos[b], pc = pos[static_cast<std::size_t>(c)];
            if (!((pa < pc && pc < pb) || (pb < pc && pc < pa))) return false;
        }
    }
    return true;
}

std::vector<NormalOrder> enumerate_normal_orders(const RootSystem& rs)
{
    if (rs.rank() > 2) {
        throw GuardExceeded("normal-order enumeration is limited to rank <= 2, got " + rs.type.name());
    }
    NormalOrder perm(rs.num_positive());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<NormalOrder> out;
    do {
        if (is_normal_order(rs, perm)) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// ---------------------------------------------------------------- projector

VermaVector apply_root_factor(const VermaModule& m, std::size_t root, const VermaVector& v, ProjectorStats* stats)
{
    if (v.is_zero()) return v;
    const auto& rs = m.roots();
    const IntVector depth = m.homogeneous_depth(v);
    const IntVector& alpha = rs.positive_roots[root];

    // Largest k with depth - k*alpha still a weight of the Verma module.
    unsigned bound = 0;
    for (;; ++bound) {
        bool fits = true;
        for (std::size_t i = 0; i < depth.size(); ++i) {
            if (depth[i] - static_cast<int>(bound + 1) * alpha[i] < 0) fits = false;
        }
        if (!fits) break;
    }

    // Every denominator is checked before anything is divided.
    const UniPoly base = m.weight_on_coroot(depth, root) + UniPoly(rs.rho_pairings[root]);
    for (unsigned j = 1; j <= bound; ++j) {
        if ((base + UniPoly(j)).is_zero()) {
            throw PoleError(root, j, m.weight_text(depth));
        }
    }

    const Letter e = m.structure().e(root);
    const Letter f = m.structure().f(root);
    VermaVector out = v;
    VermaVector raised = v;
    RatFunc denom(1);
    unsigned used = 0;
    for (unsigned k = 1; k <= bound; ++k) {
        raised = m.apply(e, raised);
        if (raised.is_zero()) break;
        denom *= RatFunc(UniPoly(k) * (base + UniPoly(k)));  // k! prod (base + j)
        VermaVector lowered = raised;
        for (unsigned r = 0; r < k; ++r) lowered = m.apply(f, lowered);
        RatFunc sign(k % 2 ? -1 : 1);
        out += lowered * (sign / denom);
        ++used;
    }
    if (stats) stats->max_terms = std::max(stats->max_terms, used);
    return out;
}

VermaVector apply_projector(const VermaModule& m, const NormalOrder& order, const VermaVector& v, ProjectorStats* stats)
{
    if (!is_normal_order(m.roots(), order)) {
        throw InvalidArgument("apply_projector: not a normal order");
    }
    VermaVector out = v;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        out = apply_root_factor(m, *it, out, stats);
    }
    return out;
}

bool ProjectorReport::all_ok() const
{
    return std::all_of(rows.begin(), rows.end(), [](const ProjectorCheckRow& r) { return r.ok; });
}

namespace {

std::vector<LoweringExponents> monomials_up_to(std::size_t n_pos, unsigned max_depth)
{
    std::vector<LoweringExponents> out;
    LoweringExponents e(n_pos, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t k, unsigned left) {
        if (k == n_pos) {
            out.push_back(e);
            return;
        }
        for (unsigned a = 0; a <= left; ++a) {
            e[k] = a;
            rec(k + 1, left - a);
        }
        e[k] = 0;
    };
    rec(0, max_depth);
    std::sort(out.begin(), out.end(), [](const LoweringExponents& a, const LoweringExponents& b) {
        unsigned da = std::accumulate(a.begin(), a.end(), 0u), db = std::accumulate(b.begin(), b.end(), 0u);
        return da != db ? da < db : a < b;
    });
    return out;
}

std::string exps_text(const LoweringExponents& e)
{
    std::string s;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        s += "f" + std::to_string(k + 1);
        if (e[k] > 1) s += "^" + std::to_string(e[k]);
        s += " ";
    }
    return s + "v";
}

} // namespace

ProjectorReport projector_properties_check(unsigned rank, unsigned max_depth, unsigned random_samples,
                                           std::uint64_t seed)
{
    if (rank < 1 || rank > 2) {
        throw InvalidArgument("projector checks cover sl2 and sl3 only");
    }
    auto s = std::make_shared<const LieStructure>(build_sl(rank));
    const auto& rs = s->roots();
    const std::size_t n_pos = rs.num_positive();

    // One symbolic direction; the remaining coordinate is a fixed generic rational.
    std::vector<UniPoly> lambda{UniPoly::x()};
    if (rank == 2) lambda.push_back(UniPoly(fraction(7, 3)));
    VermaModule mod(s, lambda);
    const auto orders = enumerate_normal_orders(rs);
    const NormalOrder& order = orders.front();

    // Samples: PBW monomials, then seeded combinations inside weight spaces.
    std::vector<std::pair<std::string, VermaVector>> samples;
    auto monos = monomials_up_to(n_pos, max_depth);
    for (const auto& e : monos) samples.emplace_back(exps_text(e), mod.monomial(e));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (unsigned r = 0; r < random_samples && monos.size() > 1; ++r) {
        const auto& pivot = monos[rng() % monos.size()];
        IntVector depth = mod.depth_vector(pivot);
        VermaVector v;
        for (const auto& e : monos) {
            if (mod.depth_vector(e) != depth) continue;
            int c = coef(rng);
            v.add_term(e, RatFunc(fraction(c == 0 ? 1 : c, 1 + static_cast<long>(rng() % 3))));
        }
        samples.emplace_back("random#" + std::to_string(r), v);
    }

    ProjectorReport rep;
    auto row = [&](std::string name, bool ok, std::string detail = {}) {
        rep.rows.push_back({std::move(name), ok, std::move(detail)});
    };

    bool annihilated = true, kills_lowering = true, idempotent = true, same_weight = true, truncated = true,
         order_free = true;
    std::string first_failure;
    auto fail = [&](bool& flag, const std::string& what) {
        if (flag && first_failure.empty()) first_failure = what;
        flag = false;
    };
    for (const auto& [name, v] : samples) {
        ProjectorStats stats;
        VermaVector pv = apply_projector(mod, order, v, &stats);
        const IntVector depth = mod.homogeneous_depth(v);
        const unsigned height = static_cast<unsigned>(std::accumulate(depth.begin(), depth.end(), 0));
        if (stats.max_terms > height) fail(truncated, name);
        if (!pv.is_zero() && mod.homogeneous_depth(pv) != depth) fail(same_weight, name);
        for (std::size_t a = 0; a < n_pos; ++a) {
            if (!mod.apply(s->e(a), pv).is_zero()) fail(annihilated, name + " e" + std::to_string(a + 1));
            VermaVector fv = mod.apply(s->f(a), v);
            if (!apply_projector(mod, order, fv).is_zero()) fail(kills_lowering, name + " f" + std::to_string(a + 1));
        }
        if (apply_projector(mod, order, pv) != pv) fail(idempotent, name);
        for (std::size_t o = 1; o < orders.size(); ++o) {
            if (apply_projector(mod, orders[o], v) != pv) fail(order_free, name);
        }
    }
    const std::string count = std::to_string(samples.size()) + " samples";
    row("e_alpha p = 0", annihilated, annihilated ? count : first_failure);
    row("p f_alpha = 0", kills_lowering, kills_lowering ? count : first_failure);
    row("p idempotent", idempotent, idempotent ? count : first_failure);
    row("weight preserved", same_weight, same_weight ? count : first_failure);
    row("series truncation <= depth", truncated, truncated ? count : first_failure);
    row("normal orders", orders.size() == (rank == 1 ? 1u : 2u), std::to_string(orders.size()) + " found");
    if (orders.size() > 1) {
        row("normal-order independence", order_free, order_free ? count : first_failure);
    }

    // Highest-weight fixture.
    {
        VermaVector hw = mod.highest_weight_vector();
        VermaVector p_hw = apply_projector(mod, order, hw);
        bool ok = p_hw == hw;
        for (std::size_t a = 0; a < n_pos; ++a) ok = ok && mod.apply(s->e(a), p_hw).is_zero();
        row("p v_lambda = v_lambda", ok);
    }
    // sl2 symbolic witness p(f v) = 0.
    if (rank == 1) {
        VermaVector fv = mod.apply(s->f(0), mod.highest_weight_vector());
        VermaVector pfv = apply_projector(mod, order, fv);
        row("p(f v_lambda) = 0", pfv.is_zero(), "f v_lambda - (1/s) f e f v_lambda = " + pfv.pretty());
    }

    // Expected poles: the first lowering vector at a weight where h_alpha + rho(h_alpha) + 1 = 0.
    {
        std::vector<UniPoly> special(rank, UniPoly(0));
        if (rank == 2) special[1] = UniPoly(fraction(7, 3));
        VermaModule at_zero(s, special);
        VermaVector fv = at_zero.apply(s->f(0), at_zero.highest_weight_vector());
        bool fired = false;
        std::string detail = "no pole";
        try {
            apply_projector(at_zero, order, fv);
        } catch (const PoleError& p) {
            fired = p.root == 0 && p.j == 1;
            detail = p.what();
        }
        row("pole at lambda(h1) = 0 for f1 v (expected error)", fired, detail);
    }
    if (rank == 1) {
        // On f^k v the denominators are lambda - 2k + 1 + j, j = 1..k.
        bool exact = true;
        std::string mismatch;
        for (int lam = -6; lam <= 6; ++lam) {
            VermaModule numeric(s, {UniPoly(lam)});
            for (unsigned k = 1; k <= 4; ++k) {
                const bool expected = lam >= static_cast<int>(k) - 1 && lam <= 2 * static_cast<int>(k) - 2;
                bool fired = false;
                try {
                    apply_projector(numeric, order, numeric.monomial({k}));
                } catch (const PoleError&) {
                    fired = true;
                }
                if (fired != expected && mismatch.empty()) {
                    mismatch = "lambda=" + std::to_string(lam) + " k=" + std::to_string(k);
                }
                exact = exact && fired == expected;
            }
        }
        row("pole set on f^k v, lambda in [-6,6], k <= 4", exact, exact ? "matches k-1 <= lambda <= 2k-2" : mismatch);
    } else {
        // f_{a1+a2} v: only the alpha1+alpha2 denominator vanishes, at lambda(h1) = -10/3.
        const std::size_t top = static_cast<std::size_t>(rs.root_index({1, 1}));
        VermaModule special(s, {UniPoly(fraction(-10, 3)), UniPoly(fraction(7, 3))});
        LoweringExponents e(n_pos, 0);
        e[top] = 1;
        bool fired = false;
        std::string detail = "no pole";
        try {
            apply_projector(special, order, special.monomial(e));
        } catch (const PoleError& p) {
            fired = p.root == top && p.j == 1;
            detail = p.what();
        }
        row("pole on alpha1+alpha2 at lambda(h1) = -10/3 (expected error)", fired, detail);
        VermaModule generic(s, {UniPoly(fraction(1, 2)), UniPoly(fraction(7, 3))});
        bool clean = true;
        try {
            apply_projector(generic, order, generic.monomial(e));
        } catch (const PoleError&) {
            clean = false;
        }
        row("no pole at lambda(h1) = 1/2", clean);
    }
    return rep;
}

} // namespace liejac
