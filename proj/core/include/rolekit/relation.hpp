#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rolekit/actors.hpp"

namespace rolekit {

using Edge = std::pair<std::size_t, std::size_t>;

/// A binary relation R on an actor set, stored as a dense n x n bit matrix in
/// row-major order (row v holds the out-neighbours of v). Two relations on
/// the same actors are equal iff their matrices are bit-identical.
class Relation {
public:
    explicit Relation(ActorSetPtr actors);
    Relation(ActorSetPtr actors, std::span<const Edge> edges);

    const ActorSetPtr& actors() const noexcept { return actors_; }
    std::size_t order() const noexcept { return n_; }

    bool contains(std::size_t from, std::size_t to) const;
    void insert(std::size_t from, std::size_t to);

    bool empty() const noexcept;
    std::size_t edge_count() const noexcept;

    /// Edges in row-major order.
    std::vector<Edge> edges() const;

    /// Out-neighbour bits of `from`; words_per_row() words.
    std::span<const std::uint64_t> row(std::size_t from) const {
        return {bits_.data() + from * words_, words_};
    }
    std::size_t words_per_row() const noexcept { return words_; }

    Relation transposed() const;

    std::size_t hash() const noexcept;

    friend bool operator==(const Relation& a, const Relation& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_ && same_actors(a.actors_, b.actors_);
    }

private:
    friend Relation compose_relations(const Relation& r2, const Relation& r1);

    void check_index(std::size_t i) const;

    ActorSetPtr actors_;
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// R2 * R1 = {(v,w) | exists u: (v,u) in R1 and (u,w) in R2}. R1 is applied
/// first, matching the juxtaposition R2R1.
Relation compose_relations(const Relation& r2, const Relation& r1);

/// delta_A = {(x,x)}.
Relation identity_relation(ActorSetPtr actors);
Relation empty_relation(ActorSetPtr actors);

}  // namespace rolekit

template <>
struct std::hash<rolekit::Relation> {
    std::size_t operator()(const rolekit::Relation& r) const noexcept { return r.hash(); }
};
