#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rolekit/actors.hpp"
#include "rolekit/partition.hpp"
#include "rolekit/relation.hpp"

namespace rolekit {

/// Sorted, duplicate-free list of actor indices.
using TargetSet = std::vector<std::size_t>;

using Hyperedge = std::pair<std::size_t, TargetSet>;

/// An F-hypergraph structure: for each actor a, the set N(a) of target sets U
/// with (a,U) a hyperedge. Target sets per actor are kept sorted and distinct,
/// so equality is structural. (a, {}) is a legal hyperedge and differs from
/// "a has no hyperedges".
class FHyperStructure {
public:
    explicit FHyperStructure(ActorSetPtr actors);
    FHyperStructure(ActorSetPtr actors, const std::vector<Hyperedge>& hyperedges);

    const ActorSetPtr& actors() const noexcept { return actors_; }
    std::size_t order() const noexcept { return targets_.size(); }

    /// Adds (source, targets). Targets may be unsorted or repeat; they are
    /// normalized. InputError on an index out of range.
    void add(std::size_t source, TargetSet targets);

    const std::vector<TargetSet>& neighbourhood(std::size_t actor) const;
    const std::vector<TargetSet>& neighbourhood(std::string_view label) const;

    /// All hyperedges, by source index then target list.
    std::vector<Hyperedge> hyperedges() const;
    std::size_t hyperedge_count() const noexcept;
    bool empty() const noexcept { return hyperedge_count() == 0; }

    std::size_t hash() const noexcept;

    friend bool operator==(const FHyperStructure& a, const FHyperStructure& b) {
        return a.targets_ == b.targets_ && same_actors(a.actors_, b.actors_);
    }

private:
    void check_index(std::size_t i) const;

    ActorSetPtr actors_;
    std::vector<std::vector<TargetSet>> targets_;
};

/// An undirected hypergraph: a set of distinct vertex subsets.
class UndirectedHypergraph {
public:
    explicit UndirectedHypergraph(ActorSetPtr actors);

    const ActorSetPtr& actors() const noexcept { return actors_; }

    /// Adds a hyperedge; repeats are ignored.
    void add(TargetSet members);
    const std::vector<TargetSet>& hyperedges() const noexcept { return hyperedges_; }

private:
    ActorSetPtr actors_;
    std::vector<TargetSet> hyperedges_;
};

/// k named F-hypergraph structures on one actor set, in declaration order.
class MultiHypergraph {
public:
    using Entry = std::pair<std::string, FHyperStructure>;

    explicit MultiHypergraph(ActorSetPtr actors, std::vector<Entry> relations = {});

    const ActorSetPtr& actors() const noexcept { return actors_; }
    std::size_t relation_count() const noexcept { return relations_.size(); }
    const std::vector<Entry>& relations() const noexcept { return relations_; }
    const std::string& name(std::size_t i) const { return relations_.at(i).first; }
    const FHyperStructure& relation(std::size_t i) const { return relations_.at(i).second; }
    const FHyperStructure& relation(std::string_view name) const;

    friend bool operator==(const MultiHypergraph& a, const MultiHypergraph& b) {
        return same_actors(a.actors_, b.actors_) && a.relations_ == b.relations_;
    }

private:
    ActorSetPtr actors_;
    std::vector<Entry> relations_;
};

/// (a, W \ {a}) for every hyperedge W and every a in W.
FHyperStructure from_undirected(const UndirectedHypergraph& u);

/// K tight-after H: {(a,U) | (a,V) in H, b in V, (b,U) in K}.
FHyperStructure tight_compose(const FHyperStructure& k, const FHyperStructure& h);

/// K loose-after H: {(a,W) | (a,V) in H, W = union of every U with (b,U) in K,
/// b in V}. W is empty when no b in V has hyperedges in K; with
/// `prune_empty` such hyperedges are dropped.
FHyperStructure loose_compose(const FHyperStructure& k, const FHyperStructure& h,
                              bool prune_empty = false);

/// Drops every (a, {}) hyperedge.
FHyperStructure prune_empty_targets(const FHyperStructure& h);

struct BlockmodelHypergraph {
    ActorSetPtr actors;
    FHyperStructure structure;
};

/// ([a], {[u] | u in U}) for every (a,U) in h.
BlockmodelHypergraph blockmodel_hypergraph(const FHyperStructure& h, const Partition& e);
MultiHypergraph blockmodel_multi_hypergraph(const MultiHypergraph& mh, const Partition& e);

/// For all a ~ a' and (a,U) in h there is (a',U') in h whose targets match U
/// block-for-block in both directions.
bool is_regular_hyper(const FHyperStructure& h, const Partition& e);
bool is_regular_hyper(const MultiHypergraph& mh, const Partition& e);

/// Coarsest partition refining `seed` (default universal) that is regular for
/// every structure of `mh`.
Partition max_regular_hyper_partition(const MultiHypergraph& mh,
                                      const std::optional<Partition>& seed = std::nullopt);

/// Exhaustive counterpart of max_regular_hyper_partition; ResourceError above
/// kMaxBruteForceActors actors.
Partition coarsest_regular_hyper_bruteforce(const MultiHypergraph& mh);

/// True when every target set is a singleton.
bool is_graph_like(const FHyperStructure& h);

/// Inverse of embed_relation. StructuralError unless is_graph_like(h).
Relation to_relation(const FHyperStructure& h);

/// {(a,{b}) | (a,b) in r}.
FHyperStructure embed_relation(const Relation& r);

}  // namespace rolekit

template <>
struct std::hash<rolekit::FHyperStructure> {
    std::size_t operator()(const rolekit::FHyperStructure& h) const noexcept { return h.hash(); }
};
