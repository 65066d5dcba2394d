#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rolekit/hypergraph.hpp"
#include "rolekit/network.hpp"
#include "rolekit/partition.hpp"
#include "rolekit/semigroup.hpp"

namespace rolekit {

/// A function f: source -> target between actor sets.
class ActorMap {
public:
    ActorMap(ActorSetPtr source, ActorSetPtr target, std::vector<std::size_t> map);

    static ActorMap identity(const ActorSetPtr& actors);

    /// Sends every actor to the block of `e`, labelled as in quotient_actors.
    static ActorMap quotient(const Partition& e);

    const ActorSetPtr& source() const noexcept { return source_; }
    const ActorSetPtr& target() const noexcept { return target_; }
    std::size_t operator()(std::size_t a) const { return map_.at(a); }
    const std::vector<std::size_t>& images() const noexcept { return map_; }

    bool surjective() const;

private:
    ActorSetPtr source_;
    ActorSetPtr target_;
    std::vector<std::size_t> map_;
};

Partition kernel_partition(const ActorMap& f);

/// p after q. StructuralError unless q's target is p's source.
ActorMap compose_reductions(const ActorMap& p, const ActorMap& q);

/// f applied to every pair or hyperedge: {(f a, f b)} or {(f a, f[U])}.
Relation pushforward(const Relation& r, const ActorMap& f);
FHyperStructure pushforward(const FHyperStructure& h, const ActorMap& f);
RoleElement pushforward(const RoleElement& e, const ActorMap& f);

struct ReductionReport {
    bool surjective = false;
    bool preserving = false;
    bool reflecting = false;
    /// dst equals the blockmodel of src by the kernel of f, relabelled by f.
    bool matches_blockmodel = false;
    /// First violation found, empty when everything holds.
    std::string detail;

    bool ok() const noexcept { return surjective && preserving && reflecting && matches_blockmodel; }
};

enum class ReductionDirection { outward, inward };

/// Checks f: src -> dst as a positional reduction. Relation names of dst must
/// match those of src in order. Inward direction transposes every relation
/// first. StructuralError on actor-set or relation-name mismatch.
ReductionReport validate_positional_reduction_graph(const ActorMap& f, const MultiNetwork& src,
                                                    const MultiNetwork& dst,
                                                    ReductionDirection dir = ReductionDirection::outward);

ReductionReport validate_positional_reduction_hyper(const ActorMap& f, const MultiHypergraph& src,
                                                    const MultiHypergraph& dst);

std::vector<Generator> generators_of(const MultiNetwork& net);
std::vector<Generator> generators_of(const MultiHypergraph& mh);

struct RoleReduction {
    RoleSemigroup source;
    RoleSemigroup target;
    SemigroupHom hom;
};

/// Role semigroups of src and dst and the surjective hom induced by f.
/// PreconditionError when f fails validation; InvariantViolation when the hom
/// is not well defined, not surjective, or disagrees with the pushforward of
/// some element.
RoleReduction induced_role_reduction(const ActorMap& f, const MultiNetwork& src, const MultiNetwork& dst,
                                     ReductionDirection dir = ReductionDirection::outward,
                                     std::size_t cap = kDefaultClosureCap);
RoleReduction induced_role_reduction(const ActorMap& f, const MultiHypergraph& src,
                                     const MultiHypergraph& dst, const Composition& c,
                                     std::size_t cap = kDefaultClosureCap);

/// One link of a reduction chain: a network and the map into it from the
/// previous stage's network (absent for the first stage).
template <class Network>
struct ReductionStage {
    Network network;
    std::optional<ActorMap> map;
};

using GraphStage = ReductionStage<MultiNetwork>;
using HyperStage = ReductionStage<MultiHypergraph>;

struct FunctorialityReport {
    bool holds = false;
    bool identity_law = false;
    bool composition_law = false;
    bool images_are_pushforwards = false;
    std::vector<std::size_t> semigroup_sizes;
    /// Counterexample element and word when something fails.
    std::string witness;
};

/// Builds the role semigroup of every stage and the induced hom of every step
/// and of every composite of consecutive steps, then checks Role(Id) = Id,
/// Role(p after q) = Role(p) after Role(q) elementwise, and that each image
/// is the pushforward of its element. PreconditionError when a stage is not
/// a positional reduction.
FunctorialityReport check_functoriality(const std::vector<GraphStage>& chain,
                                        ReductionDirection dir = ReductionDirection::outward,
                                        std::size_t cap = kDefaultClosureCap);
FunctorialityReport check_functoriality(const std::vector<HyperStage>& chain, const Composition& c,
                                        std::size_t cap = kDefaultClosureCap);

}  // namespace rolekit
