#include "latres/constructions.hpp"
#include "latres/error.hpp"

namespace latres
{

Diagram grid(int m, int n)
{
    if (m < 2 || n < 2)
        throw PreconditionError("grid: both chain lengths must be at least 2");
    CoverLists upper(m * n), lower(m * n);
    for (int i = 0; i < m; ++i)
    {
        for (int j = 0; j < n; ++j)
        {
            const ElementId x = i * n + j;
            if (i + 1 < m)
                upper[x].push_back((i + 1) * n + j);
            if (j + 1 < n)
                upper[x].push_back(i * n + j + 1);
            if (j > 0)
                lower[x].push_back(i * n + j - 1);
            if (i > 0)
                lower[x].push_back((i - 1) * n + j);
        }
    }
    return Diagram(std::move(upper), std::move(lower));
}

Diagram stacked_n7(int m)
{
    if (m < 0)
        throw PreconditionError("stacked_n7: negative stack height");
    const StackedN7Ids id{m};
    CoverLists upper(id.size()), lower(id.size());
    auto link = [&](ElementId lo, ElementId hi) {
        upper[lo].push_back(hi);
        lower[hi].push_back(lo);
    };
    // Insertion order below fixes the left-to-right order of every list.
    link(id.bottom(), id.left(0));
    link(id.bottom(), id.right(0));
    for (int i = 0; i <= m; ++i)
    {
        link(id.left(i), id.left(i + 1));
        link(id.left(i), id.tower(i));
        if (i > 0)
            link(id.tower(i - 1), id.tower(i));
        link(id.right(i), id.tower(i));
        link(id.right(i), id.right(i + 1));
    }
    link(id.left(m + 1), id.top());
    link(id.tower(m), id.top());
    link(id.right(m + 1), id.top());
    return Diagram(std::move(upper), std::move(lower));
}

Diagram chain(int n)
{
    if (n < 1)
        throw PreconditionError("chain: length must be positive");
    CoverLists upper(n), lower(n);
    for (int i = 0; i + 1 < n; ++i)
    {
        upper[i].push_back(i + 1);
        lower[i + 1].push_back(i);
    }
    return Diagram(std::move(upper), std::move(lower));
}

} // namespace latres
