#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rolekit/actors.hpp"

namespace rolekit {

/// Renumber arbitrary block ids so blocks are numbered 0..m-1 in order of
/// first occurrence.
std::vector<std::size_t> canonical_block_numbering(const std::vector<std::size_t>& ids);

/// An equivalence relation on an actor set, held as a block index per actor.
/// Block indices are always in first-occurrence canonical form, so equality is
/// plain vector equality.
class Partition {
public:
    Partition(ActorSetPtr actors, std::vector<std::size_t> block_of);

    static Partition discrete(ActorSetPtr actors);
    static Partition universal(ActorSetPtr actors);

    /// Blocks given as lists of actor indices; must be disjoint and cover every
    /// actor. Empty blocks are rejected.
    static Partition from_blocks(ActorSetPtr actors,
                                 const std::vector<std::vector<std::size_t>>& blocks);

    const ActorSetPtr& actors() const noexcept { return actors_; }
    std::size_t size() const noexcept { return block_of_.size(); }
    std::size_t block_count() const noexcept { return block_count_; }

    std::size_t block_of(std::size_t actor) const { return block_of_.at(actor); }
    const std::vector<std::size_t>& assignment() const noexcept { return block_of_; }

    bool same_block(std::size_t a, std::size_t b) const {
        return block_of_.at(a) == block_of_.at(b);
    }

    /// Members of every block, ascending, blocks in canonical order.
    std::vector<std::vector<std::size_t>> blocks() const;

    /// True when every block of *this lies inside a block of `coarser`.
    bool refines(const Partition& coarser) const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.block_of_ == b.block_of_ && same_actors(a.actors_, b.actors_);
    }

private:
    ActorSetPtr actors_;
    std::vector<std::size_t> block_of_;
    std::size_t block_count_ = 0;
};

/// Largest actor count accepted by enumerate_partitions (Bell(10) = 115975).
inline constexpr std::size_t kMaxEnumerationActors = 10;

/// Largest actor count accepted by the brute-force coarsest-partition oracles.
inline constexpr std::size_t kMaxBruteForceActors = 8;

/// Yields every partition of an actor set exactly once, in restricted-growth
/// (canonical) order. Throws ResourceError for more than
/// kMaxEnumerationActors actors.
class PartitionStream {
public:
    explicit PartitionStream(ActorSetPtr actors);

    std::optional<Partition> next();

private:
    bool advance();

    ActorSetPtr actors_;
    std::vector<std::size_t> growth_;
    std::vector<std::size_t> prefix_max_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Partition> enumerate_partitions(const ActorSetPtr& actors);

/// Actor set of the blocks of `e`, one label per block in canonical order.
/// Each label is the brace-joined, lexicographically sorted member labels,
/// e.g. "{b,c}".
ActorSetPtr quotient_actors(const Partition& e);

}  // namespace rolekit
