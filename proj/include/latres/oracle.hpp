#pragma once

#include "latres/diagram.hpp"

#include <cstdint>
#include <string>
#include <vector>

// Brute-force order theory on explicit relation tables. Nothing here looks
// at cover-list order or any planar structure.
namespace latres::oracle
{

class Poset
{
public:
    Poset() = default;

    /// leq[a][b] means a ≤ b. Throws PreconditionError unless the relation
    /// is reflexive, antisymmetric and transitive.
    explicit Poset(const std::vector<std::vector<bool>>& leq);

    /// Order generated by the given (lower, upper) pairs.
    static Poset from_relations(int n, const std::vector<std::pair<int, int>>& less);

    int size() const noexcept { return m_n; }
    bool leq(int a, int b) const { return m_leq[a * m_n + b] != 0; }
    bool less(int a, int b) const { return a != b && leq(a, b); }

    std::vector<std::vector<int>> upper_covers() const;
    std::vector<std::vector<int>> lower_covers() const;

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    int m_n = 0;
    std::vector<std::uint8_t> m_leq;
};

/// Underlying poset of a diagram (reflexive-transitive closure of the covers).
Poset poset_of(const Diagram& d);

bool is_lattice(const Poset& p);
/// a ≻ a∧b implies a∨b ≻ b. False for non-lattices.
bool is_semimodular(const Poset& p);
/// Join-irreducibles contain no three-element antichain. False for non-lattices.
bool is_slim(const Poset& p);
/// x∧(y∨z) = (x∧y)∨(x∧z) for all triples. False for non-lattices.
bool is_distributive(const Poset& p);

/// Isomorphism-invariant serialization of the order relation.
std::string canonical_form(const Poset& p);
bool is_isomorphic(const Poset& a, const Poset& b);

/// One representative per isomorphism class of slim semimodular lattices
/// with at most max_n elements, ordered by size then canonical form.
/// Throws ResourceLimitError if max_n exceeds the guard (10 by default).
std::vector<Poset> enumerate_slim_semimodular_lattices(int max_n);

/// One representative per isomorphism class of lattices with exactly n
/// elements, with no structural pruning. Reference for the pruned search.
std::vector<Poset> enumerate_lattices(int n);

/// Planar diagram of a slim lattice: Ji is split into a left and a right
/// chain and each element is placed by how many of each lie below it.
/// Throws PreconditionError if p is not a slim lattice.
Diagram embed_slim_lattice(const Poset& p);

} // namespace latres::oracle
