#include "support.hpp"

#include "latres/error.hpp"
#include "latres/geometry.hpp"
#include "latres/oracle.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace latres;
using namespace latres::test;
namespace o = latres::oracle;

namespace
{

o::Poset crown()
{
    return o::Poset::from_relations(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

o::Poset boolean_cube()
{
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            if (a != b && (a & b) == a)
                rel.emplace_back(a, b);
    return o::Poset::from_relations(8, rel);
}

o::Poset chain_poset(int n)
{
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i + 1 < n; ++i)
        rel.emplace_back(i, i + 1);
    return o::Poset::from_relations(n, rel);
}

bool ssl(const o::Poset& p)
{
    return o::is_lattice(p) && o::is_semimodular(p) && o::is_slim(p);
}

} // namespace

TEST(Poset, RejectsNonOrders)
{
    EXPECT_THROW(o::Poset({{true, true}, {true, true}}), PreconditionError);
    EXPECT_THROW(o::Poset(std::vector<std::vector<bool>>{{false}}), PreconditionError);
    EXPECT_THROW(o::Poset({{true, true, false}, {false, true, true}, {false, false, true}}),
                 PreconditionError);
}

TEST(Poset, CoversOfPosetOfDiagramMatchTheDiagram)
{
    for (const Diagram& d : {grid(3, 3), s7(), n5()})
    {
        const auto up = o::poset_of(d).upper_covers();
        for (ElementId x = 0; x < d.size(); ++x)
        {
            std::set<int> want(d.upper(x).begin(), d.upper(x).end());
            EXPECT_EQ(std::set<int>(up[x].begin(), up[x].end()), want);
        }
    }
}

TEST(IsLattice, Examples)
{
    for (int n = 1; n <= 5; ++n)
        EXPECT_TRUE(o::is_lattice(chain_poset(n)));
    EXPECT_FALSE(o::is_lattice(crown()));
    EXPECT_TRUE(o::is_lattice(o::poset_of(s7())));
}

TEST(IsSemimodular, Examples)
{
    EXPECT_TRUE(o::is_semimodular(o::poset_of(s7())));
    EXPECT_FALSE(o::is_semimodular(o::poset_of(n5())));
    EXPECT_TRUE(o::is_semimodular(o::poset_of(m3())));
    for (const Diagram& d : corpus())
    {
        const auto p = o::poset_of(d);
        if (o::is_distributive(p))
            EXPECT_TRUE(o::is_semimodular(p));
    }
}

TEST(IsSlim, Examples)
{
    for (int m = 2; m <= 4; ++m)
        for (int n = 2; n <= 4; ++n)
            EXPECT_TRUE(o::is_slim(o::poset_of(grid(m, n))));
    EXPECT_FALSE(o::is_slim(boolean_cube()));
    EXPECT_FALSE(o::is_slim(o::poset_of(m3())));
    EXPECT_TRUE(o::is_slim(o::poset_of(s7())));
}

TEST(IsDistributive, Examples)
{
    EXPECT_TRUE(o::is_distributive(o::poset_of(grid(3, 3))));
    EXPECT_FALSE(o::is_distributive(o::poset_of(s7())));
    EXPECT_FALSE(o::is_distributive(o::poset_of(m3())));
    EXPECT_FALSE(o::is_distributive(o::poset_of(n5())));
    EXPECT_TRUE(o::is_distributive(boolean_cube()));
}

TEST(PredicatesOnNonLattices, AreFalse)
{
    EXPECT_FALSE(o::is_semimodular(crown()));
    EXPECT_FALSE(o::is_slim(crown()));
    EXPECT_FALSE(o::is_distributive(crown()));
}

TEST(CanonicalForm, InvariantUnderRelabeling)
{
    std::mt19937 rng(3);
    const auto p = o::poset_of(stacked_n7(1));
    const auto key = o::canonical_form(p);
    for (int t = 0; t < 10; ++t)
    {
        const auto perm = random_permutation(p.size(), rng);
        std::vector<std::vector<bool>> leq(p.size(), std::vector<bool>(p.size()));
        for (int a = 0; a < p.size(); ++a)
            for (int b = 0; b < p.size(); ++b)
                leq[perm[a]][perm[b]] = p.leq(a, b);
        EXPECT_EQ(o::canonical_form(o::Poset(leq)), key);
    }
    EXPECT_NE(o::canonical_form(o::poset_of(n5())), o::canonical_form(o::poset_of(m3())));
    // Mirror images are isomorphic as posets.
    EXPECT_TRUE(o::is_isomorphic(o::poset_of(grid(2, 3)), o::poset_of(grid(3, 2))));
}

// Unlabelled lattice counts for n = 1..7 (a classical sequence).
TEST(EnumerateLattices, KnownCounts)
{
    const std::vector<std::size_t> expected{1, 1, 1, 2, 5, 15, 53};
    for (int n = 1; n <= 7; ++n)
        EXPECT_EQ(o::enumerate_lattices(n).size(), expected[n - 1]) << "n = " << n;
}

TEST(EnumerateSlimSemimodular, SmallCases)
{
    const auto one = o::enumerate_slim_semimodular_lattices(1);
    ASSERT_EQ(one.size(), 1U);
    EXPECT_EQ(one[0].size(), 1);

    const auto four = o::enumerate_slim_semimodular_lattices(4);
    std::multiset<int> sizes;
    for (const auto& p : four)
        sizes.insert(p.size());
    EXPECT_EQ(sizes, (std::multiset<int>{1, 2, 3, 4, 4}));
    bool has_square = false;
    for (const auto& p : four)
        has_square |= o::is_isomorphic(p, o::poset_of(grid(2, 2)));
    EXPECT_TRUE(has_square);

    bool has_s7 = false;
    for (const auto& p : o::enumerate_slim_semimodular_lattices(7))
        has_s7 |= o::is_isomorphic(p, o::poset_of(s7()));
    EXPECT_TRUE(has_s7);
}

TEST(EnumerateSlimSemimodular, PrunedSearchMatchesFilteredLattices)
{
    std::map<int, std::set<std::string>> pruned;
    for (const auto& p : o::enumerate_slim_semimodular_lattices(8))
        pruned[p.size()].insert(o::canonical_form(p));
    for (int n = 1; n <= 8; ++n)
    {
        std::set<std::string> filtered;
        for (const auto& p : o::enumerate_lattices(n))
            if (ssl(p))
                filtered.insert(o::canonical_form(p));
        EXPECT_EQ(pruned[n], filtered) << "n = " << n;
    }
}

TEST(EnumerateSlimSemimodular, EveryOutputSatisfiesThePredicates)
{
    for (const auto& p : o::enumerate_slim_semimodular_lattices(9))
        EXPECT_TRUE(ssl(p));
}

TEST(EnumerateSlimSemimodular, Guard)
{
    EXPECT_THROW(o::enumerate_slim_semimodular_lattices(40), ResourceLimitError);
}

TEST(EmbedSlimLattice, Examples)
{
    EXPECT_TRUE(is_similar(o::embed_slim_lattice(chain_poset(5)), chain(5)));
    const Diagram s = o::embed_slim_lattice(o::poset_of(s7()));
    EXPECT_TRUE(is_similar(s, s7()) || is_similar(s.mirrored(), s7()));
    EXPECT_TRUE(is_similar(o::embed_slim_lattice(o::poset_of(grid(3, 3))), grid(3, 3)));
    EXPECT_THROW(o::embed_slim_lattice(boolean_cube()), PreconditionError);
    EXPECT_THROW(o::embed_slim_lattice(crown()), PreconditionError);
}

TEST(EmbedSlimLattice, OutputIsWellFormedAndIsomorphic)
{
    for (const auto& p : o::enumerate_slim_semimodular_lattices(9))
    {
        if (p.size() < 2)
            continue;
        const Diagram d = o::embed_slim_lattice(p);
        ASSERT_TRUE(validate_well_formed(d).ok()) << validate_well_formed(d).summary();
        EXPECT_TRUE(check_gk_criterion(d));
        EXPECT_TRUE(o::is_isomorphic(o::poset_of(d), p));
    }
}

TEST(ValidateAgreesWithOracle, LatticeCheckOnCorpusAndCorruptions)
{
    for (const Diagram& d : corrupted_battery(corpus(), 60, 99))
    {
        const bool consistent = !validate_well_formed(d).has(Violation::InconsistentLists);
        if (consistent && validate_well_formed(d).ok())
            EXPECT_TRUE(o::is_lattice(o::poset_of(d)));
    }
    for (const Diagram& d : corpus())
        EXPECT_TRUE(o::is_lattice(o::poset_of(d)));
}
