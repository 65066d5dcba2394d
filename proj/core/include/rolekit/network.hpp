#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rolekit/actors.hpp"
#include "rolekit/partition.hpp"
#include "rolekit/relation.hpp"

namespace rolekit {

/// A k-relational graph: one actor set carrying named relations in
/// declaration order. Names are distinct and "0" is reserved.
class MultiNetwork {
public:
    using Entry = std::pair<std::string, Relation>;

    explicit MultiNetwork(ActorSetPtr actors, std::vector<Entry> relations = {});

    const ActorSetPtr& actors() const noexcept { return actors_; }
    std::size_t relation_count() const noexcept { return relations_.size(); }
    const std::vector<Entry>& relations() const noexcept { return relations_; }

    const std::string& name(std::size_t i) const { return relations_.at(i).first; }
    const Relation& relation(std::size_t i) const { return relations_.at(i).second; }

    /// Throws InputError for an unknown name.
    const Relation& relation(std::string_view name) const;

    friend bool operator==(const MultiNetwork& a, const MultiNetwork& b) {
        return same_actors(a.actors_, b.actors_) && a.relations_ == b.relations_;
    }

private:
    ActorSetPtr actors_;
    std::vector<Entry> relations_;
};

/// Validates a relation name: non-empty, not the reserved "0".
void check_relation_name(const std::string& name);

enum class RegularityMode { outward, inward, both };

struct BlockmodelGraph {
    ActorSetPtr actors;
    Relation relation;
};

/// R/E on the quotient actors: (X,Y) present iff some (x,y) in R has x in X,
/// y in Y.
BlockmodelGraph blockmodel_graph(const Relation& r, const Partition& e);

/// Every relation quotiented by `e`, sharing one quotient actor set.
MultiNetwork blockmodel_network(const MultiNetwork& net, const Partition& e);

bool is_outward_regular(const Relation& r, const Partition& e);
bool is_inward_regular(const Relation& r, const Partition& e);
bool is_regular(const Relation& r, const Partition& e);

bool is_regular(const Relation& r, const Partition& e, RegularityMode mode);

/// True when `e` passes the selected check for every relation of `net`.
bool is_regular(const MultiNetwork& net, const Partition& e, RegularityMode mode);

/// Coarsest partition refining `seed` (default universal) that is regular in
/// `mode` for every relation of `net`. Computed by signature refinement.
Partition max_regular_partition(const MultiNetwork& net, RegularityMode mode,
                                const std::optional<Partition>& seed = std::nullopt);

/// Exhaustive scan over every partition; returns the first one with the fewest
/// blocks that is regular in `mode`. ResourceError above kMaxBruteForceActors.
Partition coarsest_regular_bruteforce(const MultiNetwork& net, RegularityMode mode);

}  // namespace rolekit
