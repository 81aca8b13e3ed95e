#include "support.hpp"

#include "latres/error.hpp"
#include "latres/oracle.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <map>
#include <set>

using namespace latres;
using namespace latres::test;

namespace
{

std::set<CanonicalKey> keys_of(const std::vector<Diagram>& ds)
{
    std::set<CanonicalKey> out;
    for (const Diagram& d : ds)
        out.insert(canonical_key(d));
    return out;
}

std::set<CanonicalKey> keys_of(const CensusStore& s)
{
    std::set<CanonicalKey> out;
    for (const auto& [key, r] : s.records())
        out.insert(key);
    return out;
}

} // namespace

TEST(Normalize, S7BecomesTheGrid)
{
    const NormalizationTrace t = normalize(s7());
    ASSERT_EQ(t.steps.size(), 1U);
    EXPECT_EQ(t.steps[0].rank.value, 0);
    EXPECT_EQ(t.steps[0].record.op, SurgeryOp::Insert);
    EXPECT_TRUE(is_similar(t.final, grid(3, 3)));
    EXPECT_TRUE(is_similar(unwind(t), s7()));
}

TEST(Normalize, DistributiveIsAFixedPoint)
{
    const NormalizationTrace t = normalize(grid(3, 4));
    EXPECT_TRUE(t.steps.empty());
    EXPECT_TRUE(is_similar(t.final, grid(3, 4)));
}

TEST(Normalize, StackedN7TakesOneStepPerLevel)
{
    for (int m = 0; m <= 3; ++m)
    {
        const NormalizationTrace t = normalize(stacked_n7(m));
        EXPECT_GE(t.steps.size(), static_cast<std::size_t>(m + 1));
        EXPECT_TRUE(oracle::is_distributive(oracle::poset_of(t.final)));
        EXPECT_TRUE(is_similar(unwind(t), stacked_n7(m)));
    }
}

TEST(Normalize, ChoosesMinimalRank)
{
    for (const Diagram& d : closure_corpus())
    {
        const NormalizationTrace t = normalize(d);
        Diagram cur = t.initial;
        for (const NormalizationStep& s : t.steps)
        {
            const Embedding e(cur);
            ASSERT_EQ(s.key_hash, key_hash(canonical_key(cur)));
            for (ElementId u : anchors(e, TrajectoryKind::C2))
                EXPECT_LE(s.rank, rank(e, u));
            cur = replay(cur, s.record).diagram;
        }
        EXPECT_EQ(cur, t.final);
    }
}

TEST(Normalize, RejectsNonSemimodular)
{
    EXPECT_THROW(normalize(n5()), PreconditionError);
}

TEST(Unwind, RestoresEveryClosureDiagram)
{
    for (const Diagram& d : closure_corpus())
    {
        const NormalizationTrace t = normalize(d);
        EXPECT_TRUE(oracle::is_distributive(oracle::poset_of(t.final)));
        EXPECT_TRUE(is_similar(unwind(t), d));
    }
}

TEST(Decide, Examples)
{
    EXPECT_TRUE(is_slim_semimodular_via_sequence(s7()));
    EXPECT_TRUE(is_slim_semimodular_via_sequence(grid(3, 3)));
    EXPECT_FALSE(is_slim_semimodular_via_sequence(n5()));
    EXPECT_FALSE(is_slim_semimodular_via_sequence(m3()));
    EXPECT_FALSE(is_slim_semimodular_via_sequence(make({{1}, {2}, {1}}, {{}, {0, 2}, {1}})));
}

TEST(Decide, AgreesWithCellCriterion)
{
    for (const auto* set : {&corpus(), &closure_corpus()})
        for (const Diagram& d : *set)
            EXPECT_EQ(is_slim_semimodular_via_sequence(d), check_gk_criterion(d));
    for (const Diagram& d : corrupted_battery(corpus(), 40, 7))
        EXPECT_EQ(is_slim_semimodular_via_sequence(d), check_gk_criterion(d));
}

TEST(CorruptedBattery, DistinctWellFormedAndDeterministic)
{
    const auto a = corrupted_battery(corpus(), 30, 5);
    const auto b = corrupted_battery(corpus(), 30, 5);
    ASSERT_EQ(a.size(), 30U);
    EXPECT_EQ(a, b);
    EXPECT_EQ(keys_of(a).size(), a.size());
    // A corruption may land on another corpus class; it only has to be well formed.
    for (const Diagram& d : a)
        EXPECT_TRUE(validate_well_formed(d).ok());
}

TEST(InsertionEffect, StackedN7)
{
    const StackedN7Ids ids{1};
    const InsertionEffect fx = verify_insertion_effect(stacked_n7(1), ids.tower(0));
    EXPECT_TRUE(fx.ok());
    EXPECT_EQ(fx.rank_before.value, 1);
    ASSERT_TRUE(fx.cover_rank_after.has_value());
    EXPECT_EQ(fx.cover_rank_after->value, 0);
    EXPECT_EQ(fx.anchor_cover, ids.tower(1));
}

TEST(InsertionEffect, HoldsOnClosure)
{
    for (const Diagram& d : closure_corpus())
    {
        const Embedding e(d);
        for (ElementId u : anchors(e, TrajectoryKind::C2))
        {
            const InsertionEffect fx = verify_insertion_effect(d, u);
            EXPECT_TRUE(fx.ok()) << fx.violations.front();
            if (fx.rank_before.value > 0)
            {
                ASSERT_TRUE(fx.cover_rank_after.has_value());
                EXPECT_EQ(fx.cover_rank_after->value, fx.rank_before.value - 1);
            }
        }
    }
}

TEST(Seeds, SmallSizes)
{
    const auto seeds = slim_distributive_seeds(4);
    const std::set<CanonicalKey> want{canonical_key(chain(2)), canonical_key(chain(3)),
                                      canonical_key(chain(4)), canonical_key(grid(2, 2))};
    EXPECT_TRUE(keys_of(seeds) == want);
    for (const Diagram& d : slim_distributive_seeds(9))
        EXPECT_TRUE(oracle::is_distributive(oracle::poset_of(d)));
}

TEST(Census, SmallSizesAndMembers)
{
    const CensusStore c4 = census(4);
    EXPECT_EQ(c4.size(), 4U);
    const CensusStore c9 = census(9);
    EXPECT_NE(c9.find(s7()), nullptr);
    EXPECT_NE(c9.find(s7().relabeled(std::vector<ElementId>{6, 5, 4, 3, 2, 1, 0})), nullptr);
    EXPECT_NE(c9.find(grid(3, 3)), nullptr);
    EXPECT_EQ(c9.find(n5()), nullptr);
}

TEST(Census, KnownCounts)
{
    // Classes per size for the resection closure of the bounded seeds.
    const std::vector<std::size_t> expected{1, 1, 2, 3, 6, 11, 21, 41, 75, 115, 213};
    std::map<int, std::size_t> per_size;
    const CensusStore store = census(12);
    for (const auto& [key, r] : store.records())
        ++per_size[r.size];
    for (int n = 2; n <= 12; ++n)
        EXPECT_EQ(per_size[n], expected[n - 2]) << "size " << n;
}

TEST(Census, SerialMatchesParallel)
{
    EXPECT_TRUE(keys_of(census(10, Execution::Serial)) == keys_of(census(10, Execution::Parallel)));
    EXPECT_TRUE(keys_of(slim_distributive_seeds(10, Execution::Serial)) ==
                keys_of(slim_distributive_seeds(10, Execution::Parallel)));
    EXPECT_TRUE(keys_of(bounded_closure(9, Execution::Serial)) ==
                keys_of(bounded_closure(9, Execution::Parallel)));
}

TEST(Census, IncrementalBuilderMatchesOneShot)
{
    CensusBuilder b;
    std::size_t total = 0;
    for (int k = 2; k <= 10; ++k)
        total += b.extend_to(k).size();
    EXPECT_EQ(total, b.store().size());
    EXPECT_TRUE(keys_of(b.store()) == keys_of(census(10)));
}

TEST(Census, ProvenanceReplays)
{
    const CensusStore c = census(10);
    for (const auto* r : c.ordered())
    {
        EXPECT_EQ(replay_provenance(c, *r), r->diagram);
        EXPECT_EQ(r->rectangular, is_rectangular(r->diagram));
        EXPECT_EQ(r->size, r->diagram.size());
    }
}

TEST(Census, SaveLoadRoundTrip)
{
    const CensusStore c = census(8);
    const auto dir = std::filesystem::temp_directory_path() / "latres_census_roundtrip";
    std::filesystem::remove_all(dir);
    c.save(dir);
    const CensusStore back = CensusStore::load(dir);
    ASSERT_EQ(back.size(), c.size());
    for (const auto& [key, r] : c.records())
    {
        const CensusRecord* q = back.find(r.diagram);
        ASSERT_NE(q, nullptr);
        EXPECT_EQ(q->hash, r.hash);
        EXPECT_EQ(q->seed_hash, r.seed_hash);
        EXPECT_EQ(q->provenance, r.provenance);
        EXPECT_EQ(replay_provenance(back, *q), r.diagram);
    }
    std::filesystem::remove_all(dir);
}

TEST(Census, Guard)
{
    EXPECT_THROW(census(40), ResourceLimitError);
    EXPECT_THROW(bounded_closure(40), ResourceLimitError);
}

// Slim semimodular diagrams up to 9 elements, counted through the oracle:
// one diagram per isomorphism class, plus its mirror image when the two
// are not similar.
TEST(BoundedClosure, MatchesOracleWithMirrors)
{
    std::set<CanonicalKey> want;
    for (const auto& p : oracle::enumerate_slim_semimodular_lattices(9))
    {
        if (p.size() < 2)
            continue;
        const Diagram d = oracle::embed_slim_lattice(p);
        want.insert(canonical_key(d));
        want.insert(canonical_key(d.mirrored()));
    }
    const auto closure = bounded_closure(9);
    EXPECT_TRUE(keys_of(closure) == want);
    const std::vector<std::size_t> per_size{1, 1, 2, 3, 6, 11, 21, 41};
    std::map<int, std::size_t> got;
    for (const Diagram& d : closure)
        ++got[d.size()];
    for (int n = 2; n <= 9; ++n)
        EXPECT_EQ(got[n], per_size[n - 2]);
}

TEST(BoundedClosure, ContainsTheCensus)
{
    const auto closure = keys_of(bounded_closure(10));
    for (const auto& key : keys_of(census(10)))
        EXPECT_EQ(closure.count(key), 1U);
}

TEST(BoundedClosure, IncrementalEnumerator)
{
    ClosureEnumerator en;
    std::vector<Diagram> all;
    for (int k = 2; k <= 9; ++k)
    {
        const auto fresh = en.extend_to(k);
        for (const Diagram& d : fresh)
            EXPECT_EQ(d.size(), k);
        all.insert(all.end(), fresh.begin(), fresh.end());
    }
    EXPECT_TRUE(keys_of(all) == keys_of(bounded_closure(9)));
    EXPECT_TRUE(en.extend_to(9).empty());
}

TEST(Nondiminishing, ZeroAndOneStep)
{
    const auto w0 = find_nondiminishing_sequence(8, 0);
    ASSERT_TRUE(w0.has_value());
    EXPECT_EQ(w0->diagrams.size(), 1U);

    const auto w1 = find_nondiminishing_sequence(12, 1);
    ASSERT_TRUE(w1.has_value());
    ASSERT_EQ(w1->diagrams.size(), 2U);
    ASSERT_EQ(w1->anchors.size(), 1U);
    EXPECT_LE(w1->n7_counts[0], w1->n7_counts[1]);
    EXPECT_EQ(w1->start_hash, key_hash(canonical_key(w1->start)));
    const auto next = insert(w1->diagrams[0], w1->anchors[0]).diagram;
    EXPECT_TRUE(is_similar(next, w1->diagrams[1]));
}

TEST(Nondiminishing, NoneBelowTheSmallestWitness)
{
    EXPECT_FALSE(find_nondiminishing_sequence(9, 1).has_value());
}
