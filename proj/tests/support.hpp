#pragma once

#include "latres/constructions.hpp"
#include "latres/core.hpp"
#include "latres/diagram.hpp"
#include "latres/embedding.hpp"
#include "latres/io.hpp"
#include "latres/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <vector>

namespace latres
{

// Readable gtest failure output.
inline void PrintTo(const Diagram& d, std::ostream* os)
{
    *os << "\n" << format_diagram(d);
}

inline void PrintTo(const PrimeInterval& p, std::ostream* os)
{
    *os << to_string(p);
}

inline void PrintTo(const C3Chain& c, std::ostream* os)
{
    *os << to_string(c);
}

} // namespace latres

namespace latres::test
{

// Grid element (i, j) of grid(m, n).
inline ElementId g(int n, int i, int j)
{
    return i * n + j;
}

inline Diagram make(CoverLists upper, CoverLists lower)
{
    return Diagram(std::move(upper), std::move(lower));
}

inline Diagram s7()
{
    return stacked_n7(0);
}

// Pentagon: 0 < 1 < 3 < 4 on the left, 0 < 2 < 4 on the right.
inline Diagram n5()
{
    return make({{1, 2}, {3}, {4}, {4}, {}}, {{}, {0}, {0}, {1}, {3, 2}});
}

// Diamond M3 with atoms 1, 2, 3 left to right.
inline Diagram m3()
{
    return make({{1, 2, 3}, {4}, {4}, {4}, {}}, {{}, {0}, {0}, {0}, {1, 2, 3}});
}

inline std::vector<ElementId> random_permutation(int n, std::mt19937& rng)
{
    std::vector<ElementId> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// Census corpus shared by the property tests (kept small for test speed;
/// the acceptance run sweeps the full size).
inline const std::vector<Diagram>& corpus()
{
    static const std::vector<Diagram> diagrams = [] {
        std::vector<Diagram> out;
        const CensusStore store = census(10);
        for (const auto& [key, r] : store.records())
            out.push_back(r.diagram);
        return out;
    }();
    return diagrams;
}

/// Every slim semimodular class up to 11 elements.
inline const std::vector<Diagram>& closure_corpus()
{
    static const std::vector<Diagram> diagrams = bounded_closure(11);
    return diagrams;
}

} // namespace latres::test
