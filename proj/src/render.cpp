#include "latres/render.hpp"
#include "latres/core.hpp"
#include "latres/embedding.hpp"
#include "latres/error.hpp"
#include "latres/schemes.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace latres
{

namespace
{

ElementId parse_id(std::string_view s)
{
    int v = -1;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0)
        throw PreconditionError("overlay: bad element id '" + std::string(s) + "'");
    return v;
}

constexpr int kColumn = 24; // pixels per layout unit
constexpr int kRow = 56;
constexpr int kMargin = 32;
constexpr int kRadius = 9;

// Eight distinguishable edge colours, cycled over trajectories.
constexpr const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

struct NodeStyle
{
    bool base = false;
    bool interior = false;
    bool anchor = false;
    bool stacked = false;
};

struct EdgeStyle
{
    int trajectory = -1;
    bool wing = false;
};

struct Scene
{
    Diagram d; // canonical
    std::vector<Point> pos;
    std::vector<NodeStyle> nodes;
    std::map<PrimeInterval, EdgeStyle> edges;
    std::vector<std::vector<ElementId>> cells; // boundary walks
};

TrajectoryKind scheme_kind_for(const Embedding& e, const Overlay& o)
{
    if (o.scheme_kind)
        return *o.scheme_kind;
    const auto c3 = anchors(e, TrajectoryKind::C3);
    return std::find(c3.begin(), c3.end(), o.anchor) != c3.end() ? TrajectoryKind::C3
                                                                   : TrajectoryKind::C2;
}

void apply(Scene& s, const Embedding& e, const Overlay& o)
{
    switch (o.kind)
    {
    case Overlay::Kind::Cells:
        for (const Cell& c : e.cells())
        {
            std::vector<ElementId> walk = c.left_side;
            walk.insert(walk.end(), c.right_side.rbegin() + 1, c.right_side.rend() - 1);
            s.cells.push_back(std::move(walk));
        }
        break;
    case Overlay::Kind::Trajectories:
    {
        if (!check_gk_criterion(e))
            throw PreconditionError("trajectories overlay needs a slim semimodular diagram");
        int next = 0;
        for (const PrimeInterval& p : e.edges())
        {
            auto& style = s.edges[p];
            if (style.trajectory >= 0)
                continue;
            for (const PrimeInterval& q : trajectory(e, p).intervals)
                s.edges[q].trajectory = next;
            ++next;
        }
        break;
    }
    case Overlay::Kind::Scheme:
    {
        const Scheme sc = scheme(e, o.anchor, scheme_kind_for(e, o));
        for (ElementId x : sc.base)
            s.nodes[x].base = true;
        for (ElementId x : sc.interior)
            if (x != sc.anchor)
                s.nodes[x].interior = true;
        s.nodes[sc.anchor].anchor = true;
        for (const auto* wing : {&sc.left_intervals, &sc.right_intervals})
            for (const PrimeInterval& p : *wing)
                s.edges[p].wing = true;
        for (const auto* wing : {&sc.left_chains, &sc.right_chains})
            for (const C3Chain& c : *wing)
            {
                s.edges[PrimeInterval{c.bottom, c.middle}].wing = true;
                s.edges[PrimeInterval{c.middle, c.top}].wing = true;
            }
        break;
    }
    case Overlay::Kind::Stacked:
    {
        const auto tower = stacked_tower(e, o.anchor);
        const StackedN7Region& r = tower.back();
        for (ElementId x : r.elements)
            s.nodes[x].stacked = true;
        for (std::size_t i = 0; i + 1 < r.interior_tower.size(); ++i)
            s.edges[PrimeInterval{r.interior_tower[i], r.interior_tower[i + 1]}].wing = true;
        s.nodes[o.anchor].anchor = true;
        break;
    }
    case Overlay::Kind::Anchors:
        for (TrajectoryKind k : {TrajectoryKind::C2, TrajectoryKind::C3})
            for (ElementId x : anchors(e, k))
                s.nodes[x].anchor = true;
        break;
    }
}

Scene build_scene(const Diagram& input, const RenderSpec& spec)
{
    const auto ids = canonical_ids(input);
    Scene s;
    s.d = input.relabeled(ids);
    const Embedding e(s.d);
    s.pos = layered_layout(s.d);
    s.nodes.assign(s.d.size(), {});
    for (PrimeInterval p : e.edges())
        s.edges[p] = {};
    for (Overlay o : spec.overlays)
    {
        if (o.kind == Overlay::Kind::Scheme || o.kind == Overlay::Kind::Stacked)
        {
            if (o.anchor < 0 || o.anchor >= input.size())
                throw PreconditionError("overlay element " + std::to_string(o.anchor) +
                                        " does not exist");
            o.anchor = ids[o.anchor];
        }
        apply(s, e, o);
    }
    return s;
}

Point to_pixels(const Scene& s, Point p)
{
    int min_x = 0, max_y = 0;
    for (const Point& q : s.pos)
    {
        min_x = std::min(min_x, q.x);
        max_y = std::max(max_y, q.y);
    }
    return {kMargin + (p.x - min_x) * kColumn / 2, kMargin + (max_y - p.y) * kRow};
}

std::string emit_dot(const Scene& s)
{
    std::ostringstream os;
    os << "digraph lattice {\n"
       << "  graph [rankdir=BT, splines=line, notranslate=true];\n"
       << "  node [shape=circle, width=0.3, fixedsize=true, fontsize=9];\n"
       << "  edge [dir=none];\n";
    for (ElementId x = 0; x < s.d.size(); ++x)
    {
        const NodeStyle& n = s.nodes[x];
        os << "  n" << x << " [label=\"" << x << "\", pos=\"" << s.pos[x].x * kColumn / 2 << ","
           << s.pos[x].y * kRow << "!\"";
        if (n.anchor)
            os << ", shape=doublecircle";
        if (n.interior)
            os << ", style=filled, fillcolor=black, fontcolor=white";
        else if (n.base)
            os << ", style=filled, fillcolor=gray80";
        else if (n.stacked)
            os << ", style=filled, fillcolor=lightblue";
        os << "];\n";
    }
    for (const auto& [edge, style] : s.edges)
    {
        os << "  n" << edge.bottom << " -> n" << edge.top;
        std::vector<std::string> attrs;
        if (style.trajectory >= 0)
            attrs.push_back(std::string("color=\"") + kPalette[style.trajectory % 8] +
                            "\", tooltip=\"t" + std::to_string(style.trajectory) + "\"");
        if (style.wing)
            attrs.push_back("penwidth=3");
        if (!attrs.empty())
        {
            os << " [";
            for (std::size_t i = 0; i < attrs.size(); ++i)
                os << (i ? ", " : "") << attrs[i];
            os << "]";
        }
        os << ";\n";
    }
    for (std::size_t i = 0; i < s.cells.size(); ++i)
    {
        long cx = 0, cy = 0;
        for (ElementId x : s.cells[i])
        {
            cx += s.pos[x].x * kColumn / 2;
            cy += s.pos[x].y * kRow;
        }
        const long k = static_cast<long>(s.cells[i].size());
        os << "  cell" << i << " [shape=plaintext, fontcolor=gray40, label=\"c" << i << "\", pos=\""
           << cx / k << "," << cy / k << "!\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string emit_svg(const Scene& s)
{
    int width = 0, height = 0;
    for (const Point& p : s.pos)
    {
        const Point q = to_pixels(s, p);
        width = std::max(width, q.x + kMargin);
        height = std::max(height, q.y + kMargin);
    }
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& walk : s.cells)
    {
        os << "<polygon class=\"cell\" fill=\"#f2efe6\" stroke=\"none\" points=\"";
        for (std::size_t i = 0; i < walk.size(); ++i)
        {
            const Point q = to_pixels(s, s.pos[walk[i]]);
            os << (i ? " " : "") << q.x << "," << q.y;
        }
        os << "\"/>\n";
    }
    for (const auto& [edge, style] : s.edges)
    {
        const Point a = to_pixels(s, s.pos[edge.bottom]);
        const Point b = to_pixels(s, s.pos[edge.top]);
        const char* colour = style.trajectory >= 0 ? kPalette[style.trajectory % 8] : "black";
        os << "<line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\"" << b.y
           << "\" stroke=\"" << colour << "\" stroke-width=\"" << (style.wing ? 4 : 1.5)
           << "\"/>\n";
    }
    for (ElementId x = 0; x < s.d.size(); ++x)
    {
        const NodeStyle& n = s.nodes[x];
        const Point q = to_pixels(s, s.pos[x]);
        const char* fill = n.interior  ? "black"
                           : n.base    ? "#bbbbbb"
                           : n.stacked ? "#add8e6"
                                       : "white";
        if (n.anchor)
            os << "<circle cx=\"" << q.x << "\" cy=\"" << q.y << "\" r=\"" << kRadius + 5
               << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        os << "<circle cx=\"" << q.x << "\" cy=\"" << q.y << "\" r=\"" << kRadius << "\" fill=\""
           << fill << "\" stroke=\"black\"/>\n"
           << "<text x=\"" << q.x + kRadius + 2 << "\" y=\"" << q.y - kRadius + 2
           << "\" font-family=\"sans-serif\" font-size=\"10\">" << x << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace

Overlay parse_overlay(std::string_view text)
{
    std::string_view name = text, args;
    if (const auto open = text.find('('); open != std::string_view::npos)
    {
        if (text.back() != ')')
            throw PreconditionError("overlay: missing ')' in '" + std::string(text) + "'");
        name = text.substr(0, open);
        args = text.substr(open + 1, text.size() - open - 2);
    }
    else if (const auto colon = text.find(':'); colon != std::string_view::npos)
    {
        name = text.substr(0, colon);
        args = text.substr(colon + 1);
    }
    Overlay o;
    auto no_args = [&] {
        if (!args.empty())
            throw PreconditionError("overlay '" + std::string(name) + "' takes no arguments");
    };
    if (name == "cells")
    {
        no_args();
        o.kind = Overlay::Kind::Cells;
    }
    else if (name == "trajectories")
    {
        no_args();
        o.kind = Overlay::Kind::Trajectories;
    }
    else if (name == "anchors")
    {
        no_args();
        o.kind = Overlay::Kind::Anchors;
    }
    else if (name == "stacked")
    {
        o.kind = Overlay::Kind::Stacked;
        o.anchor = parse_id(args);
    }
    else if (name == "scheme")
    {
        o.kind = Overlay::Kind::Scheme;
        const auto comma = args.find(',');
        o.anchor = parse_id(args.substr(0, comma));
        if (comma != std::string_view::npos)
        {
            const auto k = args.substr(comma + 1);
            if (k == "2")
                o.scheme_kind = TrajectoryKind::C2;
            else if (k == "3")
                o.scheme_kind = TrajectoryKind::C3;
            else
                throw PreconditionError("overlay: scheme kind must be 2 or 3");
        }
    }
    else
        throw PreconditionError("unknown overlay '" + std::string(text) + "'");
    return o;
}

std::vector<Point> layered_layout(const Diagram& d)
{
    const Embedding e(d);
    const int n = d.size();
    auto count_below = [&](const std::vector<ElementId>& chain) {
        std::vector<int> count(n, 0);
        for (ElementId j : chain)
            if (d.lower(j).size() == 1)
                for (ElementId x = 0; x < n; ++x)
                    if (e.order().leq(j, x))
                        ++count[x];
        return count;
    };
    const auto left = count_below(e.left_chain());
    const auto right = count_below(e.right_chain());
    // Within a layer, order by the boundary counts and break ties by the
    // canonical traversal; then keep neighbours at least one column apart.
    const auto tie = canonical_ids(d);
    std::map<int, std::vector<ElementId>> layers;
    for (ElementId x = 0; x < n; ++x)
        layers[e.order().height(x)].push_back(x);
    std::vector<Point> pos(n);
    for (auto& [h, xs] : layers)
    {
        std::sort(xs.begin(), xs.end(), [&](ElementId a, ElementId b) {
            return std::pair(right[a] - left[a], tie[a]) < std::pair(right[b] - left[b], tie[b]);
        });
        int prev = 0;
        for (std::size_t i = 0; i < xs.size(); ++i)
        {
            int x = right[xs[i]] - left[xs[i]];
            if (i > 0)
                x = std::max(x, prev + 2);
            pos[xs[i]] = {x, h};
            prev = x;
        }
    }
    return pos;
}

std::string render(const Diagram& d, const RenderSpec& spec)
{
    const Scene s = build_scene(d, spec);
    return spec.format == RenderFormat::Dot ? emit_dot(s) : emit_svg(s);
}

} // namespace latres
