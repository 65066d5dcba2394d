#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rolekit/partition.hpp"

namespace rolekit::detail {

using Signature = std::vector<std::uint64_t>;

// Splits blocks of `start` until every actor's signature is a function of its
// block. `signature(actor, block_of, block_count)` must begin with the actor's
// current block so that refinement never merges blocks.
template <class SignatureFn>
Partition refine_to_fixpoint(const Partition& start, SignatureFn&& signature) {
    std::vector<std::size_t> block_of = start.assignment();
    std::size_t blocks = start.block_count();
    const std::size_t n = block_of.size();
    while (true) {
        std::map<Signature, std::size_t> ids;
        std::vector<std::size_t> next(n);
        for (std::size_t a = 0; a < n; ++a) {
            auto [it, inserted] = ids.emplace(signature(a, block_of, blocks), ids.size());
            next[a] = it->second;
        }
        block_of = std::move(next);
        if (ids.size() == blocks) break;
        blocks = ids.size();
    }
    return Partition(start.actors(), std::move(block_of));
}

// Sets bit `b` of a block mask.
inline void set_bit(Signature& mask, std::size_t offset, std::size_t b) {
    mask[offset + b / 64] |= std::uint64_t{1} << (b % 64);
}

}  // namespace rolekit::detail
