#include "rolekit/hypergraph.hpp"

#include <algorithm>
#include <unordered_set>

#include "refine.hpp"
#include "rolekit/errors.hpp"
#include "rolekit/network.hpp"

namespace rolekit {

namespace {

void normalize(TargetSet& t) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
}

// Inserts into a sorted, distinct list of target sets.
void insert_sorted(std::vector<TargetSet>& list, TargetSet t) {
    auto it = std::lower_bound(list.begin(), list.end(), t);
    if (it == list.end() || *it != t) list.insert(it, std::move(t));
}

TargetSet image_of(const TargetSet& u, const std::vector<std::size_t>& block_of) {
    TargetSet out;
    out.reserve(u.size());
    for (auto x : u) out.push_back(block_of[x]);
    normalize(out);
    return out;
}

}  // namespace

FHyperStructure::FHyperStructure(ActorSetPtr actors) : actors_(std::move(actors)) {
    if (!actors_) throw InputError("hypergraph requires an actor set");
    targets_.resize(actors_->size());
}

FHyperStructure::FHyperStructure(ActorSetPtr actors, const std::vector<Hyperedge>& hyperedges)
    : FHyperStructure(std::move(actors)) {
    for (const auto& [src, tgt] : hyperedges) add(src, tgt);
}

void FHyperStructure::check_index(std::size_t i) const {
    if (i >= targets_.size()) {
        throw InputError("actor index " + std::to_string(i) + " out of range for " +
                         std::to_string(targets_.size()) + " actors");
    }
}

void FHyperStructure::add(std::size_t source, TargetSet targets) {
    check_index(source);
    for (auto t : targets) check_index(t);
    normalize(targets);
    insert_sorted(targets_[source], std::move(targets));
}

const std::vector<TargetSet>& FHyperStructure::neighbourhood(std::size_t actor) const {
    check_index(actor);
    return targets_[actor];
}

const std::vector<TargetSet>& FHyperStructure::neighbourhood(std::string_view label) const {
    return targets_[actors_->index_of(label)];
}

std::vector<Hyperedge> FHyperStructure::hyperedges() const {
    std::vector<Hyperedge> out;
    for (std::size_t a = 0; a < targets_.size(); ++a) {
        for (const auto& t : targets_[a]) out.emplace_back(a, t);
    }
    return out;
}

std::size_t FHyperStructure::hyperedge_count() const noexcept {
    std::size_t total = 0;
    for (const auto& list : targets_) total += list.size();
    return total;
}

std::size_t FHyperStructure::hash() const noexcept {
    std::uint64_t h = 1469598103934665603ull ^ targets_.size();
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
        h ^= h >> 29;
    };
    for (std::size_t a = 0; a < targets_.size(); ++a) {
        mix(targets_[a].size());
        for (const auto& t : targets_[a]) {
            mix(t.size() + 0x9e3779b97f4a7c15ull);
            for (auto x : t) mix(x);
        }
    }
    return static_cast<std::size_t>(h);
}

UndirectedHypergraph::UndirectedHypergraph(ActorSetPtr actors) : actors_(std::move(actors)) {
    if (!actors_) throw InputError("hypergraph requires an actor set");
}

void UndirectedHypergraph::add(TargetSet members) {
    for (auto m : members) {
        if (m >= actors_->size()) throw InputError("actor index " + std::to_string(m) + " out of range");
    }
    normalize(members);
    insert_sorted(hyperedges_, std::move(members));
}

MultiHypergraph::MultiHypergraph(ActorSetPtr actors, std::vector<Entry> relations)
    : actors_(std::move(actors)), relations_(std::move(relations)) {
    if (!actors_) throw InputError("hypergraph requires an actor set");
    std::unordered_set<std::string> seen;
    for (const auto& [name, h] : relations_) {
        check_relation_name(name);
        if (!seen.insert(name).second) throw InputError("duplicate relation name \"" + name + "\"");
        require_same_actors(actors_, h.actors(), "hypergraph relation \"" + name + "\"");
    }
}

const FHyperStructure& MultiHypergraph::relation(std::string_view name) const {
    for (const auto& [n, h] : relations_) {
        if (n == name) return h;
    }
    throw InputError("unknown relation \"" + std::string(name) + "\"");
}

FHyperStructure from_undirected(const UndirectedHypergraph& u) {
    FHyperStructure out(u.actors());
    for (const auto& w : u.hyperedges()) {
        for (auto a : w) {
            TargetSet rest;
            rest.reserve(w.size() - 1);
            for (auto x : w) {
                if (x != a) rest.push_back(x);
            }
            out.add(a, std::move(rest));
        }
    }
    return out;
}

FHyperStructure tight_compose(const FHyperStructure& k, const FHyperStructure& h) {
    require_same_actors(k.actors(), h.actors(), "tight_compose");
    FHyperStructure out(h.actors());
    for (std::size_t a = 0; a < h.order(); ++a) {
        for (const auto& v : h.neighbourhood(a)) {
            for (auto b : v) {
                for (const auto& u : k.neighbourhood(b)) out.add(a, u);
            }
        }
    }
    return out;
}

FHyperStructure loose_compose(const FHyperStructure& k, const FHyperStructure& h, bool prune_empty) {
    require_same_actors(k.actors(), h.actors(), "loose_compose");
    FHyperStructure out(h.actors());
    std::vector<char> member(h.order());
    for (std::size_t a = 0; a < h.order(); ++a) {
        for (const auto& v : h.neighbourhood(a)) {
            std::fill(member.begin(), member.end(), 0);
            for (auto b : v) {
                for (const auto& u : k.neighbourhood(b)) {
                    for (auto x : u) member[x] = 1;
                }
            }
            TargetSet w;
            for (std::size_t x = 0; x < member.size(); ++x) {
                if (member[x]) w.push_back(x);
            }
            if (prune_empty && w.empty()) continue;
            out.add(a, std::move(w));
        }
    }
    return out;
}

FHyperStructure prune_empty_targets(const FHyperStructure& h) {
    FHyperStructure out(h.actors());
    for (auto& [a, t] : h.hyperedges()) {
        if (!t.empty()) out.add(a, t);
    }
    return out;
}

BlockmodelHypergraph blockmodel_hypergraph(const FHyperStructure& h, const Partition& e) {
    require_same_actors(h.actors(), e.actors(), "blockmodel_hypergraph");
    auto qa = quotient_actors(e);
    FHyperStructure q(qa);
    for (const auto& [a, u] : h.hyperedges()) q.add(e.block_of(a), image_of(u, e.assignment()));
    return {std::move(qa), std::move(q)};
}

MultiHypergraph blockmodel_multi_hypergraph(const MultiHypergraph& mh, const Partition& e) {
    require_same_actors(mh.actors(), e.actors(), "blockmodel_multi_hypergraph");
    auto qa = quotient_actors(e);
    std::vector<MultiHypergraph::Entry> rels;
    for (const auto& [name, h] : mh.relations()) {
        FHyperStructure q(qa);
        for (const auto& [a, u] : h.hyperedges()) q.add(e.block_of(a), image_of(u, e.assignment()));
        rels.emplace_back(name, std::move(q));
    }
    return MultiHypergraph(std::move(qa), std::move(rels));
}

namespace {

// The set {[U] | (a,U) in h}, sorted and distinct. Equal images for a ~ a' is
// exactly the two-clause matching condition.
std::vector<TargetSet> image_family(const FHyperStructure& h, std::size_t a,
                                    const std::vector<std::size_t>& block_of) {
    std::vector<TargetSet> out;
    for (const auto& u : h.neighbourhood(a)) out.push_back(image_of(u, block_of));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

bool is_regular_hyper(const FHyperStructure& h, const Partition& e) {
    require_same_actors(h.actors(), e.actors(), "is_regular_hyper");
    std::vector<std::optional<std::vector<TargetSet>>> rep(e.block_count());
    for (std::size_t a = 0; a < h.order(); ++a) {
        auto fam = image_family(h, a, e.assignment());
        auto& r = rep[e.block_of(a)];
        if (!r) {
            r = std::move(fam);
        } else if (*r != fam) {
            return false;
        }
    }
    return true;
}

bool is_regular_hyper(const MultiHypergraph& mh, const Partition& e) {
    require_same_actors(mh.actors(), e.actors(), "is_regular_hyper");
    for (const auto& [name, h] : mh.relations()) {
        if (!is_regular_hyper(h, e)) return false;
    }
    return true;
}

Partition max_regular_hyper_partition(const MultiHypergraph& mh, const std::optional<Partition>& seed) {
    Partition start = seed ? *seed : Partition::universal(mh.actors());
    require_same_actors(mh.actors(), start.actors(), "max_regular_hyper_partition");

    // Signature: current block, then per structure the family size followed by
    // each image as a length-prefixed index list.
    return detail::refine_to_fixpoint(
        start, [&](std::size_t a, const std::vector<std::size_t>& block_of, std::size_t) {
            detail::Signature sig{block_of[a]};
            for (const auto& [name, h] : mh.relations()) {
                auto fam = image_family(h, a, block_of);
                sig.push_back(fam.size());
                for (const auto& img : fam) {
                    sig.push_back(img.size());
                    sig.insert(sig.end(), img.begin(), img.end());
                }
            }
            return sig;
        });
}

Partition coarsest_regular_hyper_bruteforce(const MultiHypergraph& mh) {
    if (mh.actors()->size() > kMaxBruteForceActors) {
        throw ResourceError("brute-force search limited to " + std::to_string(kMaxBruteForceActors) +
                                " actors, got " + std::to_string(mh.actors()->size()),
                            mh.actors()->size());
    }
    PartitionStream stream(mh.actors());
    std::optional<Partition> best;
    while (auto p = stream.next()) {
        if (best && p->block_count() >= best->block_count()) continue;
        if (is_regular_hyper(mh, *p)) best = std::move(p);
    }
    return *best;
}

bool is_graph_like(const FHyperStructure& h) {
    for (std::size_t a = 0; a < h.order(); ++a) {
        for (const auto& t : h.neighbourhood(a)) {
            if (t.size() != 1) return false;
        }
    }
    return true;
}

Relation to_relation(const FHyperStructure& h) {
    Relation r(h.actors());
    for (const auto& [a, t] : h.hyperedges()) {
        if (t.size() != 1) {
            throw StructuralError("to_relation: hyperedge from \"" + h.actors()->label(a) + "\" has " +
                                  std::to_string(t.size()) + " targets, expected exactly one");
        }
        r.insert(a, t.front());
    }
    return r;
}

FHyperStructure embed_relation(const Relation& r) {
    FHyperStructure h(r.actors());
    for (auto [a, b] : r.edges()) h.add(a, TargetSet{b});
    return h;
}

}  // namespace rolekit
