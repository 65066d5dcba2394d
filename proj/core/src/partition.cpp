#include "rolekit/partition.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "rolekit/errors.hpp"

namespace rolekit {

std::vector<std::size_t> canonical_block_numbering(const std::vector<std::size_t>& ids) {
    std::unordered_map<std::size_t, std::size_t> renumber;
    std::vector<std::size_t> out;
    out.reserve(ids.size());
    for (auto id : ids) {
        auto [it, inserted] = renumber.emplace(id, renumber.size());
        out.push_back(it->second);
    }
    return out;
}

Partition::Partition(ActorSetPtr actors, std::vector<std::size_t> block_of)
    : actors_(std::move(actors)) {
    if (!actors_) throw InputError("partition requires an actor set");
    if (block_of.size() != actors_->size()) {
        throw InputError("partition assigns " + std::to_string(block_of.size()) +
                         " actors but the actor set has " + std::to_string(actors_->size()));
    }
    block_of_ = canonical_block_numbering(block_of);
    block_count_ = block_of_.empty() ? 0 : *std::max_element(block_of_.begin(), block_of_.end()) + 1;
}

Partition Partition::discrete(ActorSetPtr actors) {
    std::vector<std::size_t> ids(actors ? actors->size() : 0);
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    return Partition(std::move(actors), std::move(ids));
}

Partition Partition::universal(ActorSetPtr actors) {
    std::vector<std::size_t> ids(actors ? actors->size() : 0, 0);
    return Partition(std::move(actors), std::move(ids));
}

Partition Partition::from_blocks(ActorSetPtr actors,
                                 const std::vector<std::vector<std::size_t>>& blocks) {
    if (!actors) throw InputError("partition requires an actor set");
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> ids(actors->size(), unset);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw InputError("partition block " + std::to_string(b) + " is empty");
        for (auto a : blocks[b]) {
            if (a >= ids.size()) throw InputError("partition names actor index " + std::to_string(a) + " out of range");
            if (ids[a] != unset) {
                throw InputError("actor \"" + actors->label(a) + "\" appears in more than one block");
            }
            ids[a] = b;
        }
    }
    for (std::size_t a = 0; a < ids.size(); ++a) {
        if (ids[a] == unset) throw InputError("actor \"" + actors->label(a) + "\" is in no block");
    }
    return Partition(std::move(actors), std::move(ids));
}

std::vector<std::vector<std::size_t>> Partition::blocks() const {
    std::vector<std::vector<std::size_t>> out(block_count_);
    for (std::size_t a = 0; a < block_of_.size(); ++a) out[block_of_[a]].push_back(a);
    return out;
}

bool Partition::refines(const Partition& coarser) const {
    if (coarser.size() != size()) return false;
    // Each of our blocks must map to a single coarser block.
    std::vector<std::size_t> target(block_count_, static_cast<std::size_t>(-1));
    for (std::size_t a = 0; a < block_of_.size(); ++a) {
        auto& t = target[block_of_[a]];
        if (t == static_cast<std::size_t>(-1)) {
            t = coarser.block_of_[a];
        } else if (t != coarser.block_of_[a]) {
            return false;
        }
    }
    return true;
}

PartitionStream::PartitionStream(ActorSetPtr actors) : actors_(std::move(actors)) {
    if (!actors_) throw InputError("partition stream requires an actor set");
    if (actors_->size() > kMaxEnumerationActors) {
        throw ResourceError("partition enumeration limited to " +
                                std::to_string(kMaxEnumerationActors) + " actors, got " +
                                std::to_string(actors_->size()),
                            actors_->size());
    }
    growth_.assign(actors_->size(), 0);
    prefix_max_.assign(actors_->size(), 0);
}

// Restricted-growth strings: growth_[0] = 0 and growth_[i] <= 1 + max(growth_[0..i-1]).
// prefix_max_[i] caches max(growth_[0..i]).
bool PartitionStream::advance() {
    const std::size_t n = growth_.size();
    for (std::size_t i = n; i-- > 1;) {
        if (growth_[i] <= prefix_max_[i - 1]) {
            ++growth_[i];
            prefix_max_[i] = std::max(prefix_max_[i - 1], growth_[i]);
            for (std::size_t j = i + 1; j < n; ++j) {
                growth_[j] = 0;
                prefix_max_[j] = prefix_max_[i];
            }
            return true;
        }
    }
    return false;
}

std::optional<Partition> PartitionStream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
    } else if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    return Partition(actors_, growth_);
}

std::vector<Partition> enumerate_partitions(const ActorSetPtr& actors) {
    std::vector<Partition> out;
    PartitionStream stream(actors);
    while (auto p = stream.next()) out.push_back(std::move(*p));
    return out;
}

ActorSetPtr quotient_actors(const Partition& e) {
    std::vector<std::string> labels;
    labels.reserve(e.block_count());
    for (const auto& block : e.blocks()) {
        std::vector<std::string> members;
        members.reserve(block.size());
        for (auto a : block) members.push_back(e.actors()->label(a));
        std::sort(members.begin(), members.end());
        std::string label = "{";
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i) label += ',';
            label += members[i];
        }
        label += '}';
        labels.push_back(std::move(label));
    }
    return make_actors(std::move(labels));
}

}  // namespace rolekit
