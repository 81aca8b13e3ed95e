#pragma once

#include "latres/diagram.hpp"

namespace latres
{

/// Grid C_m x C_n. Element (i, j) has id i*n + j; increasing i goes up-left.
Diagram grid(int m, int n);

/// Ids of the standalone m-stacked N7 built by stacked_n7().
struct StackedN7Ids
{
    int m = 0;

    ElementId bottom() const { return 0; }
    ElementId left(int i) const { return 1 + i; }          // i in [0, m+1]
    ElementId right(int i) const { return m + 3 + i; }     // i in [0, m+1]
    ElementId tower(int i) const { return 2 * m + 5 + i; } // i in [0, m]
    ElementId top() const { return 3 * m + 6; }
    int size() const { return 3 * m + 7; }
};

/// Two chains of length m+2 above a common bottom, with a tower x(0..m)
/// between them; x(0) covers the two atoms and x(i) covers left(i),
/// x(i-1), right(i). stacked_n7(0) is S7.
Diagram stacked_n7(int m);

Diagram chain(int n);

} // namespace latres
