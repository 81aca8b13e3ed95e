#include "latres/oracle.hpp"
#include "latres/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace latres::oracle
{

Poset::Poset(const std::vector<std::vector<bool>>& leq) : m_n(static_cast<int>(leq.size()))
{
    m_leq.assign(static_cast<std::size_t>(m_n) * m_n, 0);
    for (int a = 0; a < m_n; ++a)
    {
        if (static_cast<int>(leq[a].size()) != m_n)
            throw PreconditionError("poset: relation table is not square");
        for (int b = 0; b < m_n; ++b)
            m_leq[a * m_n + b] = leq[a][b] ? 1 : 0;
    }
    for (int a = 0; a < m_n; ++a)
    {
        if (!this->leq(a, a))
            throw PreconditionError("poset: relation is not reflexive");
        for (int b = 0; b < m_n; ++b)
        {
            if (a != b && this->leq(a, b) && this->leq(b, a))
                throw PreconditionError("poset: relation is not antisymmetric");
            for (int c = 0; c < m_n; ++c)
                if (this->leq(a, b) && this->leq(b, c) && !this->leq(a, c))
                    throw PreconditionError("poset: relation is not transitive");
        }
    }
}

Poset Poset::from_relations(int n, const std::vector<std::pair<int, int>>& less)
{
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
        leq[a][a] = true;
    for (auto [a, b] : less)
        leq[a][b] = true;
    // Floyd–Warshall style closure.
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a)
            if (leq[a][k])
                for (int b = 0; b < n; ++b)
                    if (leq[k][b])
                        leq[a][b] = true;
    return Poset(leq);
}

std::vector<std::vector<int>> Poset::upper_covers() const
{
    std::vector<std::vector<int>> out(m_n);
    for (int a = 0; a < m_n; ++a)
        for (int b = 0; b < m_n; ++b)
        {
            if (!less(a, b))
                continue;
            bool cover = true;
            for (int c = 0; c < m_n && cover; ++c)
                if (less(a, c) && less(c, b))
                    cover = false;
            if (cover)
                out[a].push_back(b);
        }
    return out;
}

std::vector<std::vector<int>> Poset::lower_covers() const
{
    std::vector<std::vector<int>> out(m_n);
    const auto up = upper_covers();
    for (int a = 0; a < m_n; ++a)
        for (int b : up[a])
            out[b].push_back(a);
    return out;
}

Poset poset_of(const Diagram& d)
{
    const int n = d.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
    {
        std::vector<int> stack{a};
        leq[a][a] = true;
        while (!stack.empty())
        {
            const int x = stack.back();
            stack.pop_back();
            for (ElementId y : d.upper(x))
            {
                if (y < 0 || y >= n)
                    throw PreconditionError("poset_of: cover id out of range");
                if (!leq[a][y])
                {
                    leq[a][y] = true;
                    stack.push_back(y);
                }
            }
        }
    }
    return Poset(leq);
}

namespace
{

struct Operations
{
    int n = 0;
    std::vector<int> meet;
    std::vector<int> join;

    int m(int a, int b) const { return meet[a * n + b]; }
    int j(int a, int b) const { return join[a * n + b]; }
};

std::optional<int> extremum(const Poset& p, int a, int b, bool upper)
{
    const int n = p.size();
    std::optional<int> best;
    for (int c = 0; c < n; ++c)
    {
        const bool bound = upper ? (p.leq(a, c) && p.leq(b, c)) : (p.leq(c, a) && p.leq(c, b));
        if (!bound)
            continue;
        if (!best || (upper ? p.leq(c, *best) : p.leq(*best, c)))
            best = c;
    }
    if (!best)
        return std::nullopt;
    // The candidate must be comparable to, and on the right side of, every bound.
    for (int c = 0; c < n; ++c)
    {
        const bool bound = upper ? (p.leq(a, c) && p.leq(b, c)) : (p.leq(c, a) && p.leq(c, b));
        if (bound && !(upper ? p.leq(*best, c) : p.leq(c, *best)))
            return std::nullopt;
    }
    return best;
}

std::optional<Operations> operations(const Poset& p)
{
    const int n = p.size();
    if (n == 0)
        return std::nullopt;
    Operations ops;
    ops.n = n;
    ops.meet.resize(n * n);
    ops.join.resize(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
        {
            const auto m = extremum(p, a, b, false);
            const auto j = extremum(p, a, b, true);
            if (!m || !j)
                return std::nullopt;
            ops.meet[a * n + b] = ops.meet[b * n + a] = *m;
            ops.join[a * n + b] = ops.join[b * n + a] = *j;
        }
    return ops;
}

bool covers(const Poset& p, int lo, int hi)
{
    if (!p.less(lo, hi))
        return false;
    for (int c = 0; c < p.size(); ++c)
        if (p.less(lo, c) && p.less(c, hi))
            return false;
    return true;
}

} // namespace

bool is_lattice(const Poset& p)
{
    return operations(p).has_value();
}

bool is_semimodular(const Poset& p)
{
    const auto ops = operations(p);
    if (!ops)
        return false;
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (covers(p, ops->m(a, b), a) && !covers(p, b, ops->j(a, b)))
                return false;
    return true;
}

bool is_slim(const Poset& p)
{
    if (!is_lattice(p))
        return false;
    const auto lower = p.lower_covers();
    std::vector<int> ji;
    for (int x = 0; x < p.size(); ++x)
        if (lower[x].size() == 1)
            ji.push_back(x);
    auto incomparable = [&](int a, int b) { return !p.leq(a, b) && !p.leq(b, a); };
    for (std::size_t i = 0; i < ji.size(); ++i)
        for (std::size_t j = i + 1; j < ji.size(); ++j)
        {
            if (!incomparable(ji[i], ji[j]))
                continue;
            for (std::size_t k = j + 1; k < ji.size(); ++k)
                if (incomparable(ji[i], ji[k]) && incomparable(ji[j], ji[k]))
                    return false;
        }
    return true;
}

bool is_distributive(const Poset& p)
{
    const auto ops = operations(p);
    if (!ops)
        return false;
    const int n = p.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (ops->m(x, ops->j(y, z)) != ops->j(ops->m(x, y), ops->m(x, z)))
                    return false;
    return true;
}

// ---------------------------------------------------------------------------
// Canonical form: colour refinement plus exhaustive individualization.

namespace
{

using Mask = std::uint32_t;
constexpr int kMaxMaskElements = 32;

// Reflexive down-set masks; the working representation of small posets.
struct SmallPoset
{
    std::vector<Mask> down;

    int size() const { return static_cast<int>(down.size()); }
    bool leq(int a, int b) const { return (down[b] >> a) & 1U; }
};

SmallPoset to_small(const Poset& p)
{
    if (p.size() > kMaxMaskElements)
        throw ResourceLimitError("canonical form supports at most 32 elements");
    SmallPoset s;
    s.down.assign(p.size(), 0);
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.leq(a, b))
                s.down[b] |= Mask{1} << a;
    return s;
}

Poset from_small(const SmallPoset& s)
{
    const int n = s.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            leq[a][b] = s.leq(a, b);
    return Poset(leq);
}

std::vector<int> rerank(const std::vector<std::vector<int>>& signature)
{
    std::vector<int> order(signature.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return signature[a] < signature[b]; });
    std::vector<int> colour(signature.size());
    int c = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
    {
        if (i > 0 && signature[order[i]] != signature[order[i - 1]])
            ++c;
        colour[order[i]] = c;
    }
    return colour;
}

int count_colours(const std::vector<int>& colour)
{
    return colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
}

std::vector<int> refine(const SmallPoset& s, std::vector<int> colour)
{
    const int n = s.size();
    for (;;)
    {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v)
        {
            std::vector<int> below, above;
            for (int w = 0; w < n; ++w)
            {
                if (w == v)
                    continue;
                if (s.leq(w, v))
                    below.push_back(colour[w]);
                else if (s.leq(v, w))
                    above.push_back(colour[w]);
            }
            std::sort(below.begin(), below.end());
            std::sort(above.begin(), above.end());
            sig[v].push_back(colour[v]);
            sig[v].push_back(static_cast<int>(below.size()));
            sig[v].insert(sig[v].end(), below.begin(), below.end());
            sig[v].push_back(-1);
            sig[v].insert(sig[v].end(), above.begin(), above.end());
        }
        auto next = rerank(sig);
        if (count_colours(next) == count_colours(colour))
            return next;
        colour = std::move(next);
    }
}

std::string encode(const SmallPoset& s, const std::vector<int>& colour)
{
    const int n = s.size();
    std::vector<int> at(n);
    for (int v = 0; v < n; ++v)
        at[colour[v]] = v;
    std::string out;
    out.reserve(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.push_back(s.leq(at[i], at[j]) ? '1' : '0');
    return out;
}

void search(const SmallPoset& s, std::vector<int> colour, std::string& best,
            std::vector<int>& best_colour)
{
    colour = refine(s, std::move(colour));
    const int n = s.size();
    const int k = count_colours(colour);
    if (k == n)
    {
        std::string cand = encode(s, colour);
        if (best.empty() || cand < best)
        {
            best = std::move(cand);
            best_colour = colour;
        }
        return;
    }
    // First smallest non-singleton cell.
    std::vector<int> cell_size(k, 0);
    for (int c : colour)
        ++cell_size[c];
    int target = -1;
    for (int c = 0; c < k; ++c)
        if (cell_size[c] > 1 && (target < 0 || cell_size[c] < cell_size[target]))
            target = c;
    for (int v = 0; v < n; ++v)
    {
        if (colour[v] != target)
            continue;
        std::vector<int> split(n);
        for (int w = 0; w < n; ++w)
            split[w] = 2 * colour[w] + (colour[w] == target && w != v ? 1 : 0);
        std::vector<std::vector<int>> sig(n);
        for (int w = 0; w < n; ++w)
            sig[w] = {split[w]};
        search(s, rerank(sig), best, best_colour);
    }
}

std::string canonical_small(const SmallPoset& s)
{
    if (s.size() == 0)
        return {};
    std::string best;
    std::vector<int> best_colour;
    search(s, std::vector<int>(s.size(), 0), best, best_colour);
    return best;
}

} // namespace

std::string canonical_form(const Poset& p)
{
    return std::to_string(p.size()) + ":" + canonical_small(to_small(p));
}

bool is_isomorphic(const Poset& a, const Poset& b)
{
    return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------------------
// Enumeration: grow down-set closed posets by adding a maximal element whose
// strict down-set is generated by an antichain of current elements, in
// nondecreasing height. Every prefix of a lattice along such an order is a
// meet-semilattice with a bottom.

namespace
{

struct Growth
{
    bool prune_slim_semimodular = false;
};

std::vector<int> heights(const SmallPoset& s)
{
    std::vector<int> h(s.size(), 0);
    for (int v = 0; v < s.size(); ++v)
        for (int w = 0; w < v; ++w)
            if (s.leq(w, v))
                h[v] = std::max(h[v], h[w] + 1);
    return h;
}

bool is_meet_semilattice(const SmallPoset& s)
{
    const int n = s.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
        {
            const Mask common = s.down[a] & s.down[b];
            if (!common)
                return false;
            // The meet is the common lower bound whose down-set is `common`.
            bool found = false;
            for (int c = 0; c < n && !found; ++c)
                if (s.down[c] == common)
                    found = true;
            if (!found)
                return false;
        }
    return true;
}

std::vector<std::vector<int>> small_upper_covers(const SmallPoset& s)
{
    const int n = s.size();
    std::vector<std::vector<int>> up(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
        {
            if (a == b || !s.leq(a, b))
                continue;
            bool cover = true;
            for (int c = 0; c < n && cover; ++c)
                if (c != a && c != b && s.leq(a, c) && s.leq(c, b))
                    cover = false;
            if (cover)
                up[a].push_back(b);
        }
    return up;
}

bool passes_pruning(const SmallPoset& s)
{
    const int n = s.size();
    const auto up = small_upper_covers(s);
    std::vector<int> lower_count(n, 0);
    for (int a = 0; a < n; ++a)
    {
        if (up[a].size() > 2)
            return false;
        for (int b : up[a])
            ++lower_count[b];
    }
    // Graded: all lower covers of an element have one height.
    const auto h = heights(s);
    for (int a = 0; a < n; ++a)
        for (int c : up[a])
            if (h[a] + 1 != h[c])
                return false;
    std::vector<int> ji;
    for (int x = 0; x < n; ++x)
        if (lower_count[x] == 1)
            ji.push_back(x);
    for (std::size_t i = 0; i < ji.size(); ++i)
        for (std::size_t j = i + 1; j < ji.size(); ++j)
            for (std::size_t k = j + 1; k < ji.size(); ++k)
            {
                auto inc = [&](int a, int b) { return !s.leq(a, b) && !s.leq(b, a); };
                if (inc(ji[i], ji[j]) && inc(ji[i], ji[k]) && inc(ji[j], ji[k]))
                    return false;
            }
    return true;
}

bool has_unique_maximal(const SmallPoset& s)
{
    int maximal = 0;
    for (int a = 0; a < s.size(); ++a)
    {
        bool is_max = true;
        for (int b = 0; b < s.size() && is_max; ++b)
            if (b != a && s.leq(a, b))
                is_max = false;
        maximal += is_max ? 1 : 0;
    }
    return maximal == 1;
}

// All children of `s` (one new maximal element), deduplicated by the caller.
template <typename Visit>
void extensions(const SmallPoset& s, const Growth& g, Visit&& visit)
{
    const int n = s.size();
    const auto h = heights(s);
    const int top_height = n ? *std::max_element(h.begin(), h.end()) : 0;
    // Antichains via subset enumeration; n stays small under the guard.
    for (Mask a = 1; a < (Mask{1} << n); ++a)
    {
        bool antichain = true;
        int level = -1;
        bool equal_levels = true;
        for (int x = 0; x < n && antichain; ++x)
        {
            if (!((a >> x) & 1U))
                continue;
            if (level < 0)
                level = h[x];
            else if (level != h[x])
                equal_levels = false;
            if ((s.down[x] & a) != (Mask{1} << x))
                antichain = false;
        }
        if (!antichain || (g.prune_slim_semimodular && !equal_levels))
            continue;
        Mask down = 0;
        int height = 0;
        for (int x = 0; x < n; ++x)
            if ((a >> x) & 1U)
            {
                down |= s.down[x];
                height = std::max(height, h[x] + 1);
            }
        if (height < top_height)
            continue;
        SmallPoset child = s;
        child.down.push_back(down | (Mask{1} << n));
        if (!is_meet_semilattice(child))
            continue;
        if (g.prune_slim_semimodular && !passes_pruning(child))
            continue;
        visit(std::move(child));
    }
}

std::size_t enumeration_guard()
{
    return resource_guard(10);
}

// Breadth-first growth up to max_n elements; calls emit on every level.
template <typename Emit>
void grow(int max_n, const Growth& g, Emit&& emit)
{
    if (max_n < 1)
        return;
    if (static_cast<std::size_t>(max_n) > enumeration_guard() || max_n > kMaxMaskElements - 1)
        throw ResourceLimitError("enumeration size " + std::to_string(max_n) +
                                 " exceeds the resource guard");
    std::map<std::string, SmallPoset> level;
    SmallPoset one;
    one.down = {1};
    level.emplace(canonical_small(one), one);
    for (int n = 1;; ++n)
    {
        emit(n, level);
        if (n == max_n)
            break;
        std::map<std::string, SmallPoset> next;
        for (const auto& [key, s] : level)
            extensions(s, g, [&](SmallPoset child) {
                auto k = canonical_small(child);
                next.try_emplace(std::move(k), std::move(child));
            });
        level = std::move(next);
    }
}

} // namespace

std::vector<Poset> enumerate_slim_semimodular_lattices(int max_n)
{
    std::vector<Poset> out;
    grow(max_n, Growth{true}, [&](int, const std::map<std::string, SmallPoset>& level) {
        for (const auto& [key, s] : level)
        {
            if (!has_unique_maximal(s))
                continue;
            Poset p = from_small(s);
            if (is_lattice(p) && is_semimodular(p) && is_slim(p))
                out.push_back(std::move(p));
        }
    });
    return out;
}

std::vector<Poset> enumerate_lattices(int n)
{
    std::vector<Poset> out;
    grow(n, Growth{false}, [&](int size, const std::map<std::string, SmallPoset>& level) {
        if (size != n)
            return;
        for (const auto& [key, s] : level)
            if (has_unique_maximal(s))
                out.push_back(from_small(s));
    });
    return out;
}

// ---------------------------------------------------------------------------

Diagram embed_slim_lattice(const Poset& p)
{
    if (!is_lattice(p))
        throw PreconditionError("embed_slim_lattice: not a lattice");
    const int n = p.size();
    const auto lower = p.lower_covers();
    const auto upper = p.upper_covers();
    std::vector<int> ji;
    for (int x = 0; x < n; ++x)
        if (lower[x].size() == 1)
            ji.push_back(x);

    // Lexicographically least 2-colouring of the incomparability graph.
    std::vector<int> colour(n, -1);
    for (int start : ji)
    {
        if (colour[start] >= 0)
            continue;
        colour[start] = 0;
        std::vector<int> queue{start};
        for (std::size_t i = 0; i < queue.size(); ++i)
        {
            const int a = queue[i];
            for (int b : ji)
            {
                if (b == a || p.leq(a, b) || p.leq(b, a))
                    continue;
                if (colour[b] < 0)
                {
                    colour[b] = 1 - colour[a];
                    queue.push_back(b);
                }
                else if (colour[b] == colour[a])
                    throw PreconditionError("embed_slim_lattice: lattice is not slim");
            }
        }
    }

    // phi(x) = (#left join-irreducibles below x, #right join-irreducibles below x).
    std::vector<std::pair<long, long>> phi(n);
    for (int x = 0; x < n; ++x)
        for (int j : ji)
            if (p.leq(j, x))
                (colour[j] == 0 ? phi[x].first : phi[x].second) += 1;

    CoverLists up(n), lo(n);
    for (int x = 0; x < n; ++x)
    {
        auto u = upper[x];
        auto delta_up = [&](int y) {
            return std::pair{phi[y].first - phi[x].first, phi[y].second - phi[x].second};
        };
        // Left first: a steeper step towards the left chain.
        auto up_less = [&](int y, int z) {
            const auto [a, b] = delta_up(y);
            const auto [c, d] = delta_up(z);
            return b * c < a * d;
        };
        std::sort(u.begin(), u.end(), up_less);
        for (std::size_t i = 0; i + 1 < u.size(); ++i)
            if (!up_less(u[i], u[i + 1]))
                throw LatresError("embed_slim_lattice: upper covers share a direction");
        up[x].assign(u.begin(), u.end());

        auto l = lower[x];
        auto delta_down = [&](int y) {
            return std::pair{phi[x].first - phi[y].first, phi[x].second - phi[y].second};
        };
        auto down_less = [&](int y, int z) {
            const auto [a, b] = delta_down(y);
            const auto [c, d] = delta_down(z);
            return a * d < b * c;
        };
        std::sort(l.begin(), l.end(), down_less);
        for (std::size_t i = 0; i + 1 < l.size(); ++i)
            if (!down_less(l[i], l[i + 1]))
                throw LatresError("embed_slim_lattice: lower covers share a direction");
        lo[x].assign(l.begin(), l.end());
    }
    return Diagram(std::move(up), std::move(lo));
}

} // namespace latres::oracle
