#include "latres/pipeline.hpp"
#include "latres/error.hpp"
#include "latres/io.hpp"
#include "latres/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace latres
{

namespace
{

struct Choice
{
    ElementId anchor;
    Rank rank;
};

// Minimal rank, ties broken by the smallest canonical id.
template <typename RankOf>
Choice choose_anchor(const Diagram& d, const std::vector<ElementId>& candidates, RankOf&& rank_of)
{
    const auto ids = canonical_ids(d);
    std::optional<Choice> best;
    for (ElementId u : candidates)
    {
        const Rank r = rank_of(u);
        if (!best || r < best->rank || (r == best->rank && ids[u] < ids[best->anchor]))
            best = Choice{u, r};
    }
    return *best;
}

std::size_t step_limit(const Diagram& d)
{
    const std::size_t n = static_cast<std::size_t>(d.size());
    return 10 * n * n;
}

} // namespace

NormalizationTrace normalize(const Diagram& d)
{
    {
        const Embedding e(d);
        if (!check_gk_criterion(e))
            throw PreconditionError("normalize: diagram is not slim semimodular");
    }
    NormalizationTrace trace;
    trace.initial = d;
    const std::size_t limit = step_limit(d);
    Diagram cur = d;
    for (;;)
    {
        const Embedding e(cur);
        const auto an = anchors(e, TrajectoryKind::C2);
        if (an.empty())
            break;
        if (trace.steps.size() >= limit)
            throw NonTerminationError("normalize: non-termination suspected after " +
                                      std::to_string(limit) + " insertions");
        const Choice c = choose_anchor(cur, an, [&](ElementId u) { return rank(e, u); });
        NormalizationStep step;
        step.key_hash = key_hash(canonical_key(cur));
        step.anchor = c.anchor;
        step.rank = c.rank;
        auto r = insert(e, c.anchor);
        step.record = r.record;
        trace.steps.push_back(std::move(step));
        cur = std::move(r.diagram);
    }
    trace.final = std::move(cur);
    return trace;
}

Diagram unwind(const NormalizationTrace& trace)
{
    Diagram cur = trace.final;
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it)
        cur = resect(cur, it->anchor).diagram;
    return cur;
}

bool is_slim_semimodular_via_sequence(const Diagram& d)
{
    if (!validate_well_formed(d).ok())
        return false;
    const std::size_t limit = step_limit(d);
    Diagram cur = d;
    try
    {
        for (std::size_t step = 0;; ++step)
        {
            const Embedding e(cur);
            const auto an = covering_n7_centers(e);
            if (an.empty())
                return oracle::is_distributive(oracle::poset_of(cur));
            if (step >= limit)
                return false;
            const Choice c = choose_anchor(cur, an, [&](ElementId u) {
                return Rank{static_cast<int>(tower_walk(e, u).size()) - 1};
            });
            cur = insert_unchecked(e, c.anchor).diagram;
            if (!validate_well_formed(cur).ok())
                return false;
        }
    }
    catch (const LatresError&)
    {
        return false;
    }
}

InsertionEffect verify_insertion_effect(const Diagram& d, ElementId u)
{
    const Embedding e(d);
    InsertionEffect out;
    out.anchor = u;
    out.anchors_before = anchors(e, TrajectoryKind::C2);
    if (!std::binary_search(out.anchors_before.begin(), out.anchors_before.end(), u))
        throw PreconditionError("verify_insertion_effect: element " + std::to_string(u) +
                                " is not a C2-anchor");
    out.anchor_cover = d.upper(u)[0];
    out.rank_before = rank(e, u);

    const auto inserted = insert(e, u);
    const Embedding e2(inserted.diagram);
    if (!check_gk_criterion(e2))
        out.violations.push_back("insertion result fails the cell criterion");
    out.anchors_after = anchors(e2, TrajectoryKind::C2);

    std::vector<ElementId> allowed;
    for (ElementId a : out.anchors_before)
        if (a != u)
            allowed.push_back(a);
    if (out.rank_before.value > 0)
        allowed.push_back(out.anchor_cover);
    std::sort(allowed.begin(), allowed.end());
    for (ElementId a : out.anchors_after)
        if (!std::binary_search(allowed.begin(), allowed.end(), a))
            out.violations.push_back("element " + std::to_string(a) +
                                     " is a new anchor after insertion at " + std::to_string(u));
    out.inclusion_is_equality = out.anchors_after == allowed;

    if (std::binary_search(out.anchors_after.begin(), out.anchors_after.end(), out.anchor_cover))
        out.cover_rank_after = rank(e2, out.anchor_cover);
    if (out.rank_before.value > 0)
    {
        if (!out.cover_rank_after)
            out.violations.push_back("u* is not an anchor after insertion at a positive-rank anchor");
        else if (out.cover_rank_after->value != out.rank_before.value - 1)
            out.violations.push_back("rank of u* after insertion is " +
                                     std::to_string(out.cover_rank_after->value) + ", expected " +
                                     std::to_string(out.rank_before.value - 1));
    }
    return out;
}

// ---------------------------------------------------------------------------

bool CensusStore::add(CensusRecord record)
{
    auto key = canonical_key(record.diagram);
    return m_records.try_emplace(std::move(key), std::move(record)).second;
}

const CensusRecord* CensusStore::find(const Diagram& d) const
{
    const auto it = m_records.find(canonical_key(d));
    return it == m_records.end() ? nullptr : &it->second;
}

const CensusRecord* CensusStore::find_hash(const std::string& hash) const
{
    for (const auto& [key, r] : m_records)
        if (r.hash == hash)
            return &r;
    return nullptr;
}

std::vector<const CensusRecord*> CensusStore::ordered() const
{
    std::vector<std::pair<int, const std::pair<const CanonicalKey, CensusRecord>*>> tmp;
    for (const auto& entry : m_records)
        tmp.push_back({entry.second.size, &entry});
    std::sort(tmp.begin(), tmp.end(), [](const auto& a, const auto& b) {
        return std::tie(a.first, a.second->first) < std::tie(b.first, b.second->first);
    });
    std::vector<const CensusRecord*> out;
    for (const auto& [size, entry] : tmp)
        out.push_back(&entry->second);
    return out;
}

namespace
{

std::string trace_text(const CensusRecord& r)
{
    std::ostringstream os;
    os << "seed " << r.seed_hash << "\n";
    for (const auto& s : r.provenance)
        os << s.to_line() << "\n";
    return os.str();
}

} // namespace

void CensusStore::save(const std::filesystem::path& dir) const
{
    std::filesystem::create_directories(dir);
    std::ofstream index(dir / "index.tsv");
    if (!index)
        throw LatresError("cannot write " + (dir / "index.tsv").string());
    index << "key-hash\tsize\trectangular\tprovenance-file\n";
    std::set<std::string> hashes;
    for (const CensusRecord* r : ordered())
    {
        if (!hashes.insert(r->hash).second)
            throw LatresError("census: key hash collision on " + r->hash);
        save_diagram(dir / (r->hash + ".latdiag"), r->diagram);
        const std::string trace_file = r->hash + ".trace";
        std::ofstream trace(dir / trace_file);
        trace << trace_text(*r);
        index << r->hash << '\t' << r->size << '\t' << (r->rectangular ? 1 : 0) << '\t'
              << trace_file << '\n';
    }
}

CensusStore CensusStore::load(const std::filesystem::path& dir)
{
    std::ifstream index(dir / "index.tsv");
    if (!index)
        throw LatresError("cannot open " + (dir / "index.tsv").string());
    CensusStore store;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(index, line))
    {
        ++lineno;
        if (lineno == 1 || line.empty())
            continue;
        std::istringstream is(line);
        CensusRecord r;
        int rect = 0;
        std::string trace_file;
        if (!(is >> r.hash >> r.size >> rect >> trace_file))
            throw ParseError(lineno, "malformed index.tsv row");
        r.rectangular = rect != 0;
        r.diagram = read_diagram(dir / (r.hash + ".latdiag"));
        std::ifstream trace(dir / trace_file);
        std::string first;
        if (!std::getline(trace, first) || first.rfind("seed ", 0) != 0)
            throw ParseError(1, trace_file + ": expected 'seed <hash>'");
        r.seed_hash = first.substr(5);
        for (std::string t; std::getline(trace, t);)
            if (!t.empty())
                r.provenance.push_back(SurgeryRecord::parse(t));
        store.add(std::move(r));
    }
    return store;
}

Diagram replay_provenance(const CensusStore& store, const CensusRecord& r)
{
    const CensusRecord* seed = store.find_hash(r.seed_hash);
    if (!seed)
        throw LatresError("census: seed " + r.seed_hash + " is missing");
    Diagram cur = seed->diagram;
    for (const auto& step : r.provenance)
        cur = canonical_form(replay(cur, step).diagram);
    return cur;
}

// ---------------------------------------------------------------------------

namespace
{

std::size_t census_guard()
{
    return resource_guard(14);
}

bool is_slim_distributive(const Diagram& d)
{
    const Embedding e(d);
    return check_gk_criterion(e) && oracle::is_distributive(oracle::poset_of(d));
}

// One-element-larger diagrams obtained by adding a boundary doubly irreducible
// element, canonical, deduplicated and in canonical-key order, keeping those
// that pass `keep`. Candidates are deduplicated before `keep` runs.
template <typename Keep>
std::vector<Diagram> grow_boundary(const std::vector<Diagram>& level, Execution ex, Keep&& keep)
{
    auto children = map_indexed(
        level.size(),
        [&](std::size_t i) {
            const Diagram& d = level[i];
            const Embedding e(d);
            std::vector<std::pair<CanonicalKey, Diagram>> out;
            for (Side side : {Side::Left, Side::Right})
            {
                const auto& chain = side == Side::Left ? e.left_chain() : e.right_chain();
                for (std::size_t a = 0; a < chain.size(); ++a)
                    for (std::size_t b = a + 1; b < chain.size(); ++b)
                    {
                        Diagram c = add_boundary_di(d, chain[a], chain[b], side);
                        if (!validate_well_formed(c).ok())
                            continue;
                        Diagram cf = canonical_form(c);
                        auto key = canonical_key(cf);
                        out.emplace_back(std::move(key), std::move(cf));
                    }
            }
            return out;
        },
        ex);
    std::map<CanonicalKey, Diagram> merged;
    for (auto& list : children)
        for (auto& [key, c] : list)
            merged.try_emplace(std::move(key), std::move(c));
    std::vector<Diagram> candidates;
    for (auto& [key, d] : merged)
        candidates.push_back(std::move(d));
    const auto kept =
        map_indexed(
        candidates.size(), [&](std::size_t i) { return static_cast<char>(keep(candidates[i])); }, ex);
    std::vector<Diagram> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (kept[i])
            out.push_back(std::move(candidates[i]));
    return out;
}

std::vector<Diagram> grow_seeds(const std::vector<Diagram>& level, Execution ex)
{
    return grow_boundary(level, ex, is_slim_distributive);
}

CensusRecord make_record(const Diagram& canonical)
{
    CensusRecord r;
    r.diagram = canonical;
    r.hash = key_hash(canonical_key(canonical));
    r.size = canonical.size();
    r.rectangular = canonical.size() >= 4 && is_rectangular(canonical);
    return r;
}

} // namespace

std::vector<Diagram> slim_distributive_seeds(int max_size, Execution ex)
{
    std::vector<Diagram> all;
    if (max_size < 2)
        return all;
    std::vector<Diagram> level{canonical_form(chain(2))};
    all = level;
    for (int size = 3; size <= max_size; ++size)
    {
        level = grow_seeds(level, ex);
        all.insert(all.end(), level.begin(), level.end());
    }
    return all;
}

CensusBuilder::CensusBuilder(Execution ex) : m_ex(ex) {}

std::vector<const CensusRecord*> CensusBuilder::extend_to(int max_size)
{
    if (static_cast<std::size_t>(max_size) > census_guard())
        throw ResourceLimitError("census size " + std::to_string(max_size) +
                                 " exceeds the resource guard (set LATRES_MAX_ELEMENTS)");
    std::vector<CanonicalKey> fresh;
    while (m_max < max_size)
    {
        ++m_max;
        if (m_max < 2)
            continue;
        m_seed_frontier = m_max == 2 ? std::vector<Diagram>{canonical_form(chain(2))}
                                     : grow_seeds(m_seed_frontier, m_ex);
        std::vector<CanonicalKey> frontier;
        for (const Diagram& s : m_seed_frontier)
        {
            CensusRecord r = make_record(s);
            r.seed_hash = r.hash;
            auto key = canonical_key(s);
            if (m_store.add(std::move(r)))
            {
                frontier.push_back(key);
                fresh.push_back(key);
            }
        }
        // Resection closure, breadth first; each round's results are merged
        // in frontier order so the store does not depend on scheduling.
        while (!frontier.empty())
        {
            std::vector<const CensusRecord*> parents;
            for (const auto& k : frontier)
                parents.push_back(&m_store.records().at(k));
            auto results = map_indexed(
                parents.size(),
                [&](std::size_t i) {
                    const CensusRecord& p = *parents[i];
                    const Embedding e(p.diagram);
                    std::vector<CensusRecord> out;
                    for (ElementId u : anchors(e, TrajectoryKind::C3))
                    {
                        auto cut = resect(e, u);
                        CensusRecord r = make_record(canonical_form(cut.diagram));
                        r.seed_hash = p.seed_hash;
                        r.provenance = p.provenance;
                        r.provenance.push_back(cut.record);
                        out.push_back(std::move(r));
                    }
                    return out;
                },
                m_ex);
            frontier.clear();
            for (auto& list : results)
                for (auto& r : list)
                {
                    auto key = canonical_key(r.diagram);
                    if (m_store.add(std::move(r)))
                    {
                        frontier.push_back(key);
                        fresh.push_back(std::move(key));
                    }
                }
        }
    }
    std::vector<const CensusRecord*> out;
    for (const auto& k : fresh)
        out.push_back(&m_store.records().at(k));
    return out;
}

CensusStore census(int max_size, Execution ex)
{
    CensusBuilder b(ex);
    b.extend_to(max_size);
    return b.store();
}

ClosureEnumerator::ClosureEnumerator(Execution ex) : m_ex(ex) {}

std::vector<Diagram> ClosureEnumerator::extend_to(int max_size)
{
    if (static_cast<std::size_t>(max_size) > resource_guard(20))
        throw ResourceLimitError("closure size " + std::to_string(max_size) +
                                 " exceeds the resource guard (set LATRES_MAX_ELEMENTS)");
    std::vector<Diagram> fresh;
    while (m_max < max_size)
    {
        ++m_max;
        if (m_max < 2)
            continue;
        m_frontier = m_max == 2 ? std::vector<Diagram>{canonical_form(chain(2))}
                                : grow_boundary(m_frontier, m_ex, is_slim_semimodular_via_sequence);
        fresh.insert(fresh.end(), m_frontier.begin(), m_frontier.end());
    }
    return fresh;
}

std::vector<Diagram> bounded_closure(int max_size, Execution ex)
{
    return ClosureEnumerator(ex).extend_to(max_size);
}

// ---------------------------------------------------------------------------

namespace
{

bool extend_witness(NondiminishingWitness& w, int steps)
{
    const Diagram& cur = w.diagrams.back();
    const Embedding e(cur);
    const auto an = anchors(e, TrajectoryKind::C2);
    if (static_cast<int>(w.anchors.size()) == steps)
        return steps > 0 || !an.empty();
    for (ElementId u : an)
    {
        auto next = insert(e, u);
        const std::size_t count = covering_n7_centers(Embedding(next.diagram)).size();
        if (count < w.n7_counts.back())
            continue;
        w.anchors.push_back(u);
        w.ranks.push_back(rank(e, u));
        w.diagrams.push_back(std::move(next.diagram));
        w.n7_counts.push_back(count);
        if (extend_witness(w, steps))
            return true;
        w.anchors.pop_back();
        w.ranks.pop_back();
        w.diagrams.pop_back();
        w.n7_counts.pop_back();
    }
    return false;
}

} // namespace

std::optional<NondiminishingWitness> find_nondiminishing_sequence(int max_size, int steps)
{
    if (steps < 0)
        return std::nullopt;
    ClosureEnumerator classes;
    for (int k = 2; k <= max_size; ++k)
    {
        for (const Diagram& d : classes.extend_to(k))
        {
            NondiminishingWitness w;
            w.start = d;
            w.start_hash = key_hash(canonical_key(d));
            w.diagrams = {d};
            w.n7_counts = {covering_n7_centers(Embedding(d)).size()};
            if (w.n7_counts[0] == 0)
                continue;
            if (extend_witness(w, steps))
                return w;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace
{

std::optional<Diagram> delete_edge(const Diagram& d, std::mt19937& rng)
{
    std::vector<PrimeInterval> edges;
    for (ElementId x = 0; x < d.size(); ++x)
        for (ElementId y : d.upper(x))
            edges.push_back({x, y});
    if (edges.empty())
        return std::nullopt;
    const auto [x, y] = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    CoverLists up = d.upper_lists(), lo = d.lower_lists();
    std::erase(up[x], y);
    std::erase(lo[y], x);
    return Diagram(std::move(up), std::move(lo));
}

std::optional<Diagram> subdivide_edge(const Diagram& d, std::mt19937& rng)
{
    std::vector<PrimeInterval> edges;
    for (ElementId x = 0; x < d.size(); ++x)
        for (ElementId y : d.upper(x))
            edges.push_back({x, y});
    if (edges.empty())
        return std::nullopt;
    const auto [x, y] = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    CoverLists up = d.upper_lists(), lo = d.lower_lists();
    const ElementId m = d.size();
    *std::find(up[x].begin(), up[x].end(), y) = m;
    *std::find(lo[y].begin(), lo[y].end(), x) = m;
    up.push_back({y});
    lo.push_back({x});
    return Diagram(std::move(up), std::move(lo));
}

// New cover between a vertex on a cell's left side and one on its right
// side, drawn inside the cell.
std::optional<Diagram> add_chord(const Diagram& d, std::mt19937& rng)
{
    const Embedding e(d);
    if (e.cells().empty())
        return std::nullopt;
    const Cell& c =
        e.cells()[std::uniform_int_distribution<std::size_t>(0, e.cells().size() - 1)(rng)];
    const auto& l = c.left_side;
    const auto& r = c.right_side;
    if (l.size() < 3 || r.size() < 3)
        return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick_l(1, l.size() - 2), pick_r(1, r.size() - 2);
    const std::size_t i = pick_l(rng), j = pick_r(rng);
    CoverLists up = d.upper_lists(), lo = d.lower_lists();
    auto insert_after = [](std::vector<ElementId>& list, ElementId anchor, ElementId v) {
        list.insert(std::find(list.begin(), list.end(), anchor) + 1, v);
    };
    auto insert_before = [](std::vector<ElementId>& list, ElementId anchor, ElementId v) {
        list.insert(std::find(list.begin(), list.end(), anchor), v);
    };
    if (rng() % 2 == 0)
    {
        // l[i] ≺ r[j]: right of l[i+1] above l[i], left of r[j-1] below r[j].
        insert_after(up[l[i]], l[i + 1], r[j]);
        insert_before(lo[r[j]], r[j - 1], l[i]);
    }
    else
    {
        // r[j] ≺ l[i]: left of r[j+1] above r[j], right of l[i-1] below l[i].
        insert_before(up[r[j]], r[j + 1], l[i]);
        insert_after(lo[l[i]], l[i - 1], r[j]);
    }
    return Diagram(std::move(up), std::move(lo));
}

} // namespace

std::vector<Diagram> corrupted_battery(const std::vector<Diagram>& corpus, std::size_t count,
                                       unsigned seed)
{
    std::vector<Diagram> out;
    if (corpus.empty())
        return out;
    std::mt19937 rng(seed);
    std::set<CanonicalKey> seen;
    std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
    for (std::size_t attempt = 0; out.size() < count && attempt < 200 * count; ++attempt)
    {
        const Diagram& base = corpus[pick(rng)];
        std::optional<Diagram> c;
        switch (rng() % 3)
        {
        case 0: c = delete_edge(base, rng); break;
        case 1: c = subdivide_edge(base, rng); break;
        default: c = add_chord(base, rng); break;
        }
        if (!c || !validate_well_formed(*c).ok())
            continue;
        if (seen.insert(canonical_key(*c)).second)
            out.push_back(std::move(*c));
    }
    return out;
}

} // namespace latres
