#include "rolekit/relation.hpp"

#include <bit>
#include <string>

#include "rolekit/errors.hpp"

namespace rolekit {

Relation::Relation(ActorSetPtr actors) : actors_(std::move(actors)) {
    if (!actors_) throw InputError("relation requires an actor set");
    n_ = actors_->size();
    words_ = (n_ + 63) / 64;
    bits_.assign(n_ * words_, 0);
}

Relation::Relation(ActorSetPtr actors, std::span<const Edge> edges)
    : Relation(std::move(actors)) {
    for (auto [from, to] : edges) insert(from, to);
}

void Relation::check_index(std::size_t i) const {
    if (i >= n_) {
        throw InputError("actor index " + std::to_string(i) + " out of range for " +
                         std::to_string(n_) + " actors");
    }
}

bool Relation::contains(std::size_t from, std::size_t to) const {
    check_index(from);
    check_index(to);
    return (bits_[from * words_ + to / 64] >> (to % 64)) & 1u;
}

void Relation::insert(std::size_t from, std::size_t to) {
    check_index(from);
    check_index(to);
    bits_[from * words_ + to / 64] |= std::uint64_t{1} << (to % 64);
}

bool Relation::empty() const noexcept {
    for (auto w : bits_) {
        if (w) return false;
    }
    return true;
}

std::size_t Relation::edge_count() const noexcept {
    std::size_t total = 0;
    for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::vector<Edge> Relation::edges() const {
    std::vector<Edge> out;
    for (std::size_t v = 0; v < n_; ++v) {
        for (std::size_t k = 0; k < words_; ++k) {
            std::uint64_t w = bits_[v * words_ + k];
            while (w) {
                auto bit = static_cast<std::size_t>(std::countr_zero(w));
                out.emplace_back(v, k * 64 + bit);
                w &= w - 1;
            }
        }
    }
    return out;
}

Relation Relation::transposed() const {
    Relation t(actors_);
    for (auto [from, to] : edges()) t.insert(to, from);
    return t;
}

std::size_t Relation::hash() const noexcept {
    // FNV-1a over the matrix words.
    std::uint64_t h = 1469598103934665603ull ^ n_;
    for (auto w : bits_) {
        h ^= w;
        h *= 1099511628211ull;
        h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
}

Relation compose_relations(const Relation& r2, const Relation& r1) {
    require_same_actors(r2.actors(), r1.actors(), "compose_relations");
    Relation out(r1.actors());
    const std::size_t n = r1.order();
    const std::size_t words = r1.words_per_row();
    for (std::size_t v = 0; v < n; ++v) {
        std::uint64_t* acc = out.bits_.data() + v * words;
        auto first = r1.row(v);
        for (std::size_t k = 0; k < words; ++k) {
            std::uint64_t w = first[k];
            while (w) {
                std::size_t u = k * 64 + static_cast<std::size_t>(std::countr_zero(w));
                auto second = r2.row(u);
                for (std::size_t j = 0; j < words; ++j) acc[j] |= second[j];
                w &= w - 1;
            }
        }
    }
    return out;
}

Relation identity_relation(ActorSetPtr actors) {
    Relation r(std::move(actors));
    for (std::size_t i = 0; i < r.order(); ++i) r.insert(i, i);
    return r;
}

Relation empty_relation(ActorSetPtr actors) { return Relation(std::move(actors)); }

}  // namespace rolekit
