#pragma once

#include "latres/core.hpp"
#include "latres/diagram.hpp"
#include "latres/parallel.hpp"
#include "latres/schemes.hpp"
#include "latres/surgery.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace latres
{

struct NormalizationStep
{
    std::string key_hash; // of the diagram the step was applied to
    ElementId anchor = kNoElement;
    Rank rank;
    SurgeryRecord record;
};

struct NormalizationTrace
{
    Diagram initial;
    std::vector<NormalizationStep> steps;
    Diagram final;
};

/// Inserts at a minimal-rank C2-anchor (ties: smallest canonical id) until
/// none is left. Throws PreconditionError unless the cell criterion holds,
/// and NonTerminationError after 10·|D|² steps.
NormalizationTrace normalize(const Diagram& d);

/// Replays the trace's insertions backwards as resections.
Diagram unwind(const NormalizationTrace& trace);

/// The sequence test: runs the normalization loop re-checking every step's
/// preconditions, and accepts iff it ends in a distributive lattice.
/// Never throws on bad structure; returns false instead.
bool is_slim_semimodular_via_sequence(const Diagram& d);

struct InsertionEffect
{
    ElementId anchor = kNoElement;
    ElementId anchor_cover = kNoElement; // u*
    Rank rank_before;
    std::optional<Rank> cover_rank_after; // rank(D', u*) when u* is an anchor of D'
    std::vector<ElementId> anchors_before;
    std::vector<ElementId> anchors_after;
    /// anchors(D') equals the permitted superset (rather than a proper subset).
    bool inclusion_is_equality = false;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Precondition: u is a C2-anchor.
InsertionEffect verify_insertion_effect(const Diagram& d, ElementId u);

struct CensusRecord
{
    Diagram diagram; // canonical form
    std::string hash;
    int size = 0;
    bool rectangular = false;
    /// Seed hash, then resections applied to successive canonical forms.
    std::string seed_hash;
    std::vector<SurgeryRecord> provenance;
};

/// Similarity classes keyed by canonical key.
class CensusStore
{
public:
    /// Returns false if the key was already present (the record is identical).
    bool add(CensusRecord record);

    const std::map<CanonicalKey, CensusRecord>& records() const noexcept { return m_records; }
    std::size_t size() const noexcept { return m_records.size(); }
    const CensusRecord* find(const Diagram& d) const;
    const CensusRecord* find_hash(const std::string& hash) const;

    /// Records in deterministic order (size, then key).
    std::vector<const CensusRecord*> ordered() const;

    void save(const std::filesystem::path& dir) const;
    static CensusStore load(const std::filesystem::path& dir);

private:
    std::map<CanonicalKey, CensusRecord> m_records;
};

/// Rebuilds the diagram from the record's provenance, in canonical form.
Diagram replay_provenance(const CensusStore& store, const CensusRecord& r);

/// Similarity classes of slim distributive diagrams with 2..max_size
/// elements, grown from C2 by adding boundary doubly irreducible elements.
std::vector<Diagram> slim_distributive_seeds(int max_size, Execution ex = Execution::Parallel);

/// Seeds closed under resection at every C3-anchor. Guard: 14 elements
/// unless LATRES_MAX_ELEMENTS says otherwise.
CensusStore census(int max_size, Execution ex = Execution::Parallel);

/// Incremental census: extend_to(k) adds the seeds with k elements and their
/// resection closure, returning the records new at this size.
class CensusBuilder
{
public:
    explicit CensusBuilder(Execution ex = Execution::Parallel);

    std::vector<const CensusRecord*> extend_to(int max_size);
    const CensusStore& store() const noexcept { return m_store; }
    int max_size() const noexcept { return m_max; }

private:
    Execution m_ex;
    CensusStore m_store;
    std::vector<Diagram> m_seed_frontier; // seeds of size m_max
    int m_max = 0;
};

/// Similarity classes with at most max_size elements that some slim
/// distributive diagram of any size reaches by resections. Unlike census(),
/// the seeds are not bounded, so this is every slim semimodular class of that
/// size. Grown from C2 by adding boundary doubly irreducible elements; each
/// class is kept only if normalization certifies it. Guard: 20 elements.
class ClosureEnumerator
{
public:
    explicit ClosureEnumerator(Execution ex = Execution::Parallel);

    /// Returns the classes new since the last call, by size then key.
    std::vector<Diagram> extend_to(int max_size);
    int max_size() const noexcept { return m_max; }

private:
    Execution m_ex;
    std::vector<Diagram> m_frontier; // classes of size m_max
    int m_max = 0;
};

std::vector<Diagram> bounded_closure(int max_size, Execution ex = Execution::Parallel);

struct NondiminishingWitness
{
    Diagram start;
    std::string start_hash;
    std::vector<ElementId> anchors;     // anchors[i] is applied to diagrams[i]
    std::vector<Rank> ranks;
    std::vector<Diagram> diagrams;      // diagrams[0] = start
    std::vector<std::size_t> n7_counts; // per diagram
};

/// Searches the bounded closure by growing size for a start diagram and a run
/// of `steps` insertions at freely chosen anchors along which the covering-N7
/// count never drops.
std::optional<NondiminishingWitness> find_nondiminishing_sequence(int max_size, int steps);

/// Corrupts corpus diagrams (edge deletion, edge subdivision, chord across a
/// face) and keeps `count` distinct results that are still well formed.
std::vector<Diagram> corrupted_battery(const std::vector<Diagram>& corpus, std::size_t count,
                                       unsigned seed = 12345U);

} // namespace latres
