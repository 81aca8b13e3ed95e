#include "support.hpp"

#include "latres/error.hpp"
#include "latres/oracle.hpp"
#include "latres/surgery.hpp"

#include <gtest/gtest.h>

using namespace latres;
using namespace latres::test;

namespace
{

void expect_size_accounting(const Diagram& before, const SurgeryResult& r)
{
    EXPECT_EQ(r.diagram.size(),
              before.size() - static_cast<int>(r.record.removed.size()) + r.record.added);
    ASSERT_EQ(r.id_map.size(), static_cast<std::size_t>(before.size()));
    int survivors = 0;
    ElementId last = -1;
    for (ElementId x = 0; x < before.size(); ++x)
    {
        const bool removed = std::find(r.record.removed.begin(), r.record.removed.end(), x) !=
                             r.record.removed.end();
        EXPECT_EQ(r.id_map[x] == kNoElement, removed);
        if (!removed)
        {
            // Survivors keep their relative order.
            EXPECT_GT(r.id_map[x], last);
            last = r.id_map[x];
            ++survivors;
        }
    }
    EXPECT_EQ(survivors + r.record.added, r.diagram.size());
}

} // namespace

TEST(Resect, GridCentreGivesS7)
{
    const Diagram g = grid(3, 3);
    const SurgeryResult r = resect(g, 4);
    EXPECT_TRUE(is_similar(r.diagram, s7()));
    EXPECT_EQ(r.record.op, SurgeryOp::Resect);
    EXPECT_EQ(r.record.anchor, 4);
    EXPECT_EQ(r.record.removed, (std::vector<ElementId>{5, 7}));
    EXPECT_EQ(r.record.added, 0);
    expect_size_accounting(g, r);
}

TEST(Insert, S7GivesGrid)
{
    const SurgeryResult r = insert(s7(), 5);
    EXPECT_TRUE(is_similar(r.diagram, grid(3, 3)));
    EXPECT_EQ(r.record.op, SurgeryOp::Insert);
    EXPECT_TRUE(r.record.removed.empty());
    EXPECT_EQ(r.record.added, 2);
    expect_size_accounting(s7(), r);
}

TEST(Insert, RejectsNonAnchors)
{
    EXPECT_THROW(insert(grid(3, 3), 4), PreconditionError);
    EXPECT_THROW(resect(s7(), 5), PreconditionError);
    EXPECT_THROW(insert(n5(), 1), PreconditionError);
}

TEST(Insert, ResectionUndoesInsertion)
{
    for (const Diagram& d : closure_corpus())
    {
        const Embedding e(d);
        for (ElementId u : anchors(e, TrajectoryKind::C2))
        {
            const SurgeryResult in = insert(e, u);
            ASSERT_TRUE(validate_well_formed(in.diagram).ok());
            EXPECT_TRUE(check_gk_criterion(in.diagram));
            expect_size_accounting(d, in);
            const SurgeryResult back = resect(in.diagram, in.id_map[u]);
            EXPECT_TRUE(is_similar(back.diagram, d));
        }
    }
}

TEST(Resect, OutputStaysSlimSemimodular)
{
    for (const Diagram& d : closure_corpus())
    {
        const Embedding e(d);
        for (ElementId u : anchors(e, TrajectoryKind::C3))
        {
            const SurgeryResult r = resect(e, u);
            ASSERT_TRUE(validate_well_formed(r.diagram).ok());
            const auto p = oracle::poset_of(r.diagram);
            EXPECT_TRUE(oracle::is_semimodular(p) && oracle::is_slim(p));
            expect_size_accounting(d, r);
            EXPECT_FALSE(anchors(Embedding(r.diagram), TrajectoryKind::C2).empty());
        }
    }
}

TEST(Replay, ReproducesEveryOperation)
{
    const Diagram g = grid(3, 3);
    for (const SurgeryResult& r : {resect(g, 4), insert(s7(), 5), remove_corner(g, 6),
                                   remove_boundary_di(grid(2, 3), 3)})
    {
        const Diagram& source = r.record.op == SurgeryOp::Insert     ? s7()
                                : r.record.op == SurgeryOp::RemoveDi ? grid(2, 3)
                                                                     : g;
        const SurgeryResult again = replay(source, r.record);
        EXPECT_EQ(again.diagram, r.diagram);
        EXPECT_EQ(again.record, r.record);
    }
}

TEST(Replay, MismatchedRecordIsRejected)
{
    SurgeryRecord r = resect(grid(3, 3), 4).record;
    r.removed = {1, 2};
    EXPECT_ANY_THROW(replay(grid(3, 3), r));
}

TEST(SurgeryRecord, LineRoundTrip)
{
    for (const SurgeryRecord& r : {resect(grid(3, 3), 4).record, insert(s7(), 5).record})
        EXPECT_EQ(SurgeryRecord::parse(r.to_line()), r);
    EXPECT_EQ(insert(s7(), 5).record.to_line(), "insert 5 removed=[] added=2");
    EXPECT_EQ(resect(grid(3, 3), 4).record.to_line(), "resect 4 removed=[5,7] added=0");
    EXPECT_ANY_THROW(SurgeryRecord::parse("rotate 3 removed=[] added=0"));
    EXPECT_ANY_THROW(SurgeryRecord::parse("insert x removed=[] added=0"));
}

TEST(BoundaryDi, RemoveAndAddAreInverse)
{
    const Diagram d = grid(2, 3);
    const SurgeryResult r = remove_boundary_di(d, 3);
    EXPECT_EQ(r.diagram.size(), 5);
    EXPECT_EQ(r.record.removed, (std::vector<ElementId>{3}));
    expect_size_accounting(d, r);

    // Put it back between its old neighbours on the left chain.
    const Diagram back = add_boundary_di(r.diagram, r.id_map[0], r.id_map[4], Side::Left);
    EXPECT_TRUE(is_similar(back, d));
}

TEST(BoundaryDi, AddToChainGivesSquare)
{
    EXPECT_TRUE(is_similar(add_boundary_di(chain(3), 0, 2, Side::Left), grid(2, 2)));
    EXPECT_TRUE(is_similar(add_boundary_di(chain(3), 0, 2, Side::Right), grid(2, 2)));
}

TEST(BoundaryDi, Preconditions)
{
    EXPECT_THROW(remove_boundary_di(grid(3, 3), 4), PreconditionError); // interior
    EXPECT_THROW(remove_boundary_di(s7(), 2), PreconditionError);       // not distributive
}

TEST(Corners, Examples)
{
    EXPECT_EQ(corners(grid(3, 3)), (std::vector<ElementId>{2, 6}));
    EXPECT_EQ(weak_corners(grid(3, 3)), (std::vector<ElementId>{2, 6}));
    EXPECT_TRUE(corners(s7()).empty());
    EXPECT_EQ(weak_corners(s7()), (std::vector<ElementId>{2, 4}));
    EXPECT_TRUE(corners(chain(3)).empty());
}

TEST(Corners, Rectangularity)
{
    EXPECT_TRUE(is_rectangular(grid(3, 3)));
    EXPECT_TRUE(is_rectangular(grid(2, 3)));
    EXPECT_TRUE(is_rectangular(s7()));
    EXPECT_TRUE(is_rectangular(stacked_n7(2)));
    EXPECT_FALSE(is_rectangular(chain(3)));
    const Diagram cut = remove_corner(grid(3, 3), 6).diagram;
    EXPECT_FALSE(is_rectangular(cut));
}

TEST(Corners, RemovalKeepsTheCellCriterion)
{
    for (const Diagram& d : closure_corpus())
        for (ElementId x : corners(d))
        {
            const SurgeryResult r = remove_corner(d, x);
            EXPECT_EQ(r.record.op, SurgeryOp::RemoveCorner);
            EXPECT_EQ(r.diagram.size(), d.size() - 1);
            ASSERT_TRUE(validate_well_formed(r.diagram).ok());
            EXPECT_TRUE(check_gk_criterion(r.diagram));
        }
}

TEST(Corners, WeakCornersAreDoublyIrreducibleBoundaryElements)
{
    for (const Diagram& d : closure_corpus())
    {
        const Embedding e(d);
        for (ElementId x : weak_corners(d))
        {
            EXPECT_TRUE(e.on_boundary(x));
            EXPECT_TRUE(e.is_join_irreducible(x) && e.is_meet_irreducible(x));
        }
        const auto c = corners(d);
        const auto w = weak_corners(d);
        EXPECT_TRUE(std::includes(w.begin(), w.end(), c.begin(), c.end()));
    }
}
