#include "support.hpp"

#include "latres/error.hpp"
#include "latres/render.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace latres;
using namespace latres::test;

TEST(ParseOverlay, AcceptedForms)
{
    EXPECT_EQ(parse_overlay("cells").kind, Overlay::Kind::Cells);
    EXPECT_EQ(parse_overlay("trajectories").kind, Overlay::Kind::Trajectories);
    EXPECT_EQ(parse_overlay("anchors").kind, Overlay::Kind::Anchors);

    const Overlay st = parse_overlay("stacked(9)");
    EXPECT_EQ(st.kind, Overlay::Kind::Stacked);
    EXPECT_EQ(st.anchor, 9);

    const Overlay sc = parse_overlay("scheme(4,3)");
    EXPECT_EQ(sc.kind, Overlay::Kind::Scheme);
    EXPECT_EQ(sc.anchor, 4);
    EXPECT_EQ(sc.scheme_kind, TrajectoryKind::C3);
    EXPECT_FALSE(parse_overlay("scheme(4)").scheme_kind.has_value());
    EXPECT_EQ(parse_overlay("scheme:5,2").scheme_kind, TrajectoryKind::C2);
    EXPECT_EQ(parse_overlay("stacked:9").anchor, 9);
}

TEST(ParseOverlay, Rejections)
{
    for (const char* bad : {"", "cell", "scheme()", "scheme(4,5)", "scheme(x)", "stacked",
                            "stacked(1,2)", "anchors(3)", "scheme(4"})
        EXPECT_THROW(parse_overlay(bad), PreconditionError) << bad;
}

TEST(Layout, HeightsAndDistinctPositions)
{
    for (const Diagram& d : corpus())
    {
        const auto pos = layered_layout(d);
        ASSERT_EQ(pos.size(), static_cast<std::size_t>(d.size()));
        EXPECT_EQ(pos[d.bottom()].y, 0);
        std::set<std::pair<int, int>> seen;
        for (ElementId x = 0; x < d.size(); ++x)
        {
            EXPECT_TRUE(seen.insert({pos[x].x, pos[x].y}).second) << "two elements share a point";
            for (ElementId y : d.upper(x))
                EXPECT_EQ(pos[y].y, pos[x].y + 1);
        }
    }
}

TEST(Layout, UpperCoversAreLeftToRight)
{
    for (const Diagram& d : corpus())
    {
        const auto pos = layered_layout(d);
        for (ElementId x = 0; x < d.size(); ++x)
        {
            const auto up = d.upper(x);
            for (std::size_t i = 0; i + 1 < up.size(); ++i)
                EXPECT_LT(pos[up[i]].x, pos[up[i + 1]].x);
        }
    }
}

TEST(Render, DotIsStableUnderRelabeling)
{
    std::mt19937 rng(5);
    for (const Diagram& d : {grid(3, 3), stacked_n7(1), s7()})
    {
        RenderSpec spec;
        spec.overlays = {parse_overlay("cells"), parse_overlay("trajectories")};
        const std::string dot = render(d, spec);
        for (int t = 0; t < 5; ++t)
            EXPECT_EQ(render(d.relabeled(random_permutation(d.size(), rng)), spec), dot);
    }
}

TEST(Render, DotAndSvgShape)
{
    RenderSpec spec;
    spec.overlays = {parse_overlay("scheme(4)"), parse_overlay("anchors")};
    const std::string dot = render(grid(3, 3), spec);
    EXPECT_EQ(dot.rfind("digraph", 0), 0U);
    EXPECT_NE(dot.find("doublecircle"), std::string::npos);
    EXPECT_NE(dot.find("pos="), std::string::npos);

    spec.format = RenderFormat::Svg;
    const std::string svg = render(grid(3, 3), spec);
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Render, StackedOverlay)
{
    RenderSpec spec;
    spec.overlays = {parse_overlay("stacked(9)")};
    const std::string dot = render(stacked_n7(2), spec);
    EXPECT_NE(dot.find("lightblue"), std::string::npos);
}

TEST(Render, BadOverlayAnchorsAreRejected)
{
    RenderSpec spec;
    spec.overlays = {parse_overlay("scheme(5)")};
    EXPECT_THROW(render(grid(3, 3), spec), PreconditionError);
    spec.overlays = {parse_overlay("stacked(99)")};
    EXPECT_THROW(render(s7(), spec), PreconditionError);
}

TEST(Render, RejectsIllFormedDiagrams)
{
    EXPECT_THROW(render(make({{1}, {}}, {{}, {}}), RenderSpec{}), PreconditionError);
}
