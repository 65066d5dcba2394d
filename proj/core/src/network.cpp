#include "rolekit/network.hpp"

#include <bit>
#include <unordered_set>

#include "refine.hpp"
#include "rolekit/errors.hpp"

namespace rolekit {

void check_relation_name(const std::string& name) {
    if (name.empty()) throw InputError("relation name is empty");
    if (name == "0") throw InputError("relation name \"0\" is reserved for the zero element");
}

MultiNetwork::MultiNetwork(ActorSetPtr actors, std::vector<Entry> relations)
    : actors_(std::move(actors)), relations_(std::move(relations)) {
    if (!actors_) throw InputError("network requires an actor set");
    std::unordered_set<std::string> seen;
    for (const auto& [name, rel] : relations_) {
        check_relation_name(name);
        if (!seen.insert(name).second) throw InputError("duplicate relation name \"" + name + "\"");
        require_same_actors(actors_, rel.actors(), "network relation \"" + name + "\"");
    }
}

const Relation& MultiNetwork::relation(std::string_view name) const {
    for (const auto& [n, rel] : relations_) {
        if (n == name) return rel;
    }
    throw InputError("unknown relation \"" + std::string(name) + "\"");
}

namespace {

void require_partition_on(const Relation& r, const Partition& e, std::string_view context) {
    require_same_actors(r.actors(), e.actors(), context);
}

template <class Fn>
void for_each_bit(std::span<const std::uint64_t> row, Fn&& fn) {
    for (std::size_t k = 0; k < row.size(); ++k) {
        std::uint64_t w = row[k];
        while (w) {
            fn(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
}

// Per actor, the mask of blocks containing its out-neighbours in `r`.
std::vector<detail::Signature> out_block_masks(const Relation& r,
                                               const std::vector<std::size_t>& block_of,
                                               std::size_t blocks) {
    const std::size_t words = (blocks + 63) / 64;
    std::vector<detail::Signature> masks(r.order(), detail::Signature(words, 0));
    for (std::size_t a = 0; a < r.order(); ++a) {
        for_each_bit(r.row(a), [&](std::size_t b) { detail::set_bit(masks[a], 0, block_of[b]); });
    }
    return masks;
}

bool masks_constant_on_blocks(const std::vector<detail::Signature>& masks, const Partition& e) {
    std::vector<const detail::Signature*> rep(e.block_count(), nullptr);
    for (std::size_t a = 0; a < masks.size(); ++a) {
        auto& r = rep[e.block_of(a)];
        if (!r) {
            r = &masks[a];
        } else if (*r != masks[a]) {
            return false;
        }
    }
    return true;
}

}  // namespace

BlockmodelGraph blockmodel_graph(const Relation& r, const Partition& e) {
    require_partition_on(r, e, "blockmodel_graph");
    auto qa = quotient_actors(e);
    Relation q(qa);
    for (auto [x, y] : r.edges()) q.insert(e.block_of(x), e.block_of(y));
    return {std::move(qa), std::move(q)};
}

MultiNetwork blockmodel_network(const MultiNetwork& net, const Partition& e) {
    require_same_actors(net.actors(), e.actors(), "blockmodel_network");
    auto qa = quotient_actors(e);
    std::vector<MultiNetwork::Entry> rels;
    rels.reserve(net.relation_count());
    for (const auto& [name, r] : net.relations()) {
        Relation q(qa);
        for (auto [x, y] : r.edges()) q.insert(e.block_of(x), e.block_of(y));
        rels.emplace_back(name, std::move(q));
    }
    return MultiNetwork(std::move(qa), std::move(rels));
}

bool is_outward_regular(const Relation& r, const Partition& e) {
    require_partition_on(r, e, "is_outward_regular");
    return masks_constant_on_blocks(out_block_masks(r, e.assignment(), e.block_count()), e);
}

bool is_inward_regular(const Relation& r, const Partition& e) {
    require_partition_on(r, e, "is_inward_regular");
    return is_outward_regular(r.transposed(), e);
}

bool is_regular(const Relation& r, const Partition& e) {
    return is_outward_regular(r, e) && is_inward_regular(r, e);
}

bool is_regular(const Relation& r, const Partition& e, RegularityMode mode) {
    switch (mode) {
        case RegularityMode::outward: return is_outward_regular(r, e);
        case RegularityMode::inward: return is_inward_regular(r, e);
        case RegularityMode::both: return is_regular(r, e);
    }
    return false;
}

bool is_regular(const MultiNetwork& net, const Partition& e, RegularityMode mode) {
    require_same_actors(net.actors(), e.actors(), "is_regular");
    for (const auto& [name, r] : net.relations()) {
        if (!is_regular(r, e, mode)) return false;
    }
    return true;
}

Partition max_regular_partition(const MultiNetwork& net, RegularityMode mode,
                                const std::optional<Partition>& seed) {
    Partition start = seed ? *seed : Partition::universal(net.actors());
    require_same_actors(net.actors(), start.actors(), "max_regular_partition");

    std::vector<Relation> directed;
    for (const auto& [name, r] : net.relations()) {
        if (mode != RegularityMode::inward) directed.push_back(r);
        if (mode != RegularityMode::outward) directed.push_back(r.transposed());
    }

    // Signature: current block, then one block mask per directed relation.
    return detail::refine_to_fixpoint(start, [&](std::size_t a, const std::vector<std::size_t>& block_of,
                                                    std::size_t blocks) {
        const std::size_t words = (blocks + 63) / 64;
        detail::Signature sig(1 + words * directed.size(), 0);
        sig[0] = block_of[a];
        for (std::size_t k = 0; k < directed.size(); ++k) {
            for_each_bit(directed[k].row(a),
                         [&](std::size_t b) { detail::set_bit(sig, 1 + k * words, block_of[b]); });
        }
        return sig;
    });
}

Partition coarsest_regular_bruteforce(const MultiNetwork& net, RegularityMode mode) {
    if (net.actors()->size() > kMaxBruteForceActors) {
        throw ResourceError("brute-force search limited to " + std::to_string(kMaxBruteForceActors) +
                                " actors, got " + std::to_string(net.actors()->size()),
                            net.actors()->size());
    }
    PartitionStream stream(net.actors());
    std::optional<Partition> best;
    while (auto p = stream.next()) {
        if (best && p->block_count() >= best->block_count()) continue;
        if (is_regular(net, *p, mode)) best = std::move(p);
    }
    return *best;  // the discrete partition is always regular
}

}  // namespace rolekit
