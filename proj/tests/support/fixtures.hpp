#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rolekit/hypergraph.hpp"
#include "rolekit/network.hpp"

namespace rolekit::testing {

using LabelPairs = std::vector<std::pair<std::string, std::string>>;
using LabelHyperedges = std::vector<std::pair<std::string, std::vector<std::string>>>;

inline Relation rel(const ActorSetPtr& actors, const LabelPairs& pairs) {
    Relation r(actors);
    for (const auto& [a, b] : pairs) r.insert(actors->index_of(a), actors->index_of(b));
    return r;
}

inline FHyperStructure hyper(const ActorSetPtr& actors, const LabelHyperedges& edges) {
    FHyperStructure h(actors);
    for (const auto& [a, targets] : edges) {
        TargetSet t;
        for (const auto& x : targets) t.push_back(actors->index_of(x));
        h.add(actors->index_of(a), std::move(t));
    }
    return h;
}

inline Partition blocks(const ActorSetPtr& actors, const std::vector<std::vector<std::string>>& labels) {
    std::vector<std::vector<std::size_t>> ids;
    for (const auto& b : labels) {
        auto& out = ids.emplace_back();
        for (const auto& l : b) out.push_back(actors->index_of(l));
    }
    return Partition::from_blocks(actors, ids);
}

// Three actors: siblings a, b and their parent d.
inline MultiNetwork family() {
    auto A = make_actors({"a", "b", "d"});
    return MultiNetwork(A, {{"S", rel(A, {{"a", "b"}})},
                            {"B", rel(A, {{"b", "a"}})},
                            {"P", rel(A, {{"a", "d"}, {"b", "d"}})}});
}

// Sibling relation made symmetric.
inline MultiNetwork family_sym() {
    auto A = make_actors({"a", "b", "d"});
    return MultiNetwork(A, {{"S", rel(A, {{"a", "b"}, {"b", "a"}})}, {"P", rel(A, {{"a", "d"}, {"b", "d"}})}});
}

inline Partition generations(const ActorSetPtr& A) { return blocks(A, {{"a", "b"}, {"d"}}); }

// b and c both point at a.
inline MultiNetwork inflow() {
    auto A = make_actors({"a", "b", "c"});
    return MultiNetwork(A, {{"R", rel(A, {{"b", "a"}, {"c", "a"}})}});
}

// b -> a and a' -> b'; merging a with a' and b with b' is not regular.
inline MultiNetwork crossed() {
    auto A = make_actors({"a", "a'", "b", "b'"});
    return MultiNetwork(A, {{"R", rel(A, {{"b", "a"}, {"a'", "b'"}})}});
}

inline ActorSetPtr tree_actors() { return make_actors({"r", "a", "b", "a1", "a2", "b1", "b2"}); }

inline FHyperStructure tree(const ActorSetPtr& A) {
    return hyper(A, {{"r", {"a", "b"}}, {"a", {"a1", "a2"}}, {"b", {"b1", "b2"}}});
}

inline FHyperStructure tree_flat(const ActorSetPtr& A) { return hyper(A, {{"r", {"a1", "a2", "b1", "b2"}}}); }

inline std::pair<FHyperStructure, FHyperStructure> branching(const ActorSetPtr& A) {
    return {hyper(A, {{"r", {"a", "b"}}}), hyper(A, {{"a", {"a1", "a2"}}, {"b", {"a2", "b1", "b2"}}})};
}

inline Partition tree_generations(const ActorSetPtr& A) {
    return blocks(A, {{"r"}, {"a", "b"}, {"a1", "a2", "b1", "b2"}});
}

inline Partition tree_e1(const ActorSetPtr& A) {
    return blocks(A, {{"r"}, {"a"}, {"b"}, {"a1", "b1"}, {"a2", "b2"}});
}

}  // namespace rolekit::testing
