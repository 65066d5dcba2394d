#pragma once

// Slow, definition-level reimplementations used to cross-check the library.
// They share no code with it beyond reading inputs.

#include <algorithm>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "rolekit/hypergraph.hpp"
#include "rolekit/network.hpp"
#include "rolekit/semigroup.hpp"

namespace rolekit::oracle {

using PairSet = std::set<std::pair<std::size_t, std::size_t>>;
using HyperSet = std::set<std::pair<std::size_t, std::set<std::size_t>>>;

inline PairSet pairs(const Relation& r) {
    PairSet out;
    for (std::size_t i = 0; i < r.order(); ++i) {
        for (std::size_t j = 0; j < r.order(); ++j) {
            if (r.contains(i, j)) out.emplace(i, j);
        }
    }
    return out;
}

inline HyperSet hyperedges(const FHyperStructure& h) {
    HyperSet out;
    for (std::size_t a = 0; a < h.order(); ++a) {
        for (const auto& t : h.neighbourhood(a)) out.emplace(a, std::set<std::size_t>(t.begin(), t.end()));
    }
    return out;
}

// {(v,w) | exists u: (v,u) in r1 and (u,w) in r2}, by triple loop.
inline PairSet compose(const PairSet& r2, const PairSet& r1, std::size_t n) {
    PairSet out;
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t w = 0; w < n; ++w) {
                if (r1.count({v, u}) && r2.count({u, w})) out.emplace(v, w);
            }
        }
    }
    return out;
}

inline bool same(const std::vector<std::size_t>& block_of, std::size_t a, std::size_t b) {
    return block_of[a] == block_of[b];
}

// For every (a,a') in E and (a,b) in R there is (a',b') in R with (b,b') in E.
inline bool outward_regular(const PairSet& r, const std::vector<std::size_t>& block_of) {
    const std::size_t n = block_of.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t a2 = 0; a2 < n; ++a2) {
            if (!same(block_of, a, a2)) continue;
            for (auto [x, b] : r) {
                if (x != a) continue;
                bool found = false;
                for (auto [y, b2] : r) found = found || (y == a2 && same(block_of, b, b2));
                if (!found) return false;
            }
        }
    }
    return true;
}

inline PairSet transpose(const PairSet& r) {
    PairSet out;
    for (auto [a, b] : r) out.emplace(b, a);
    return out;
}

inline bool regular(const PairSet& r, const std::vector<std::size_t>& block_of, RegularityMode mode) {
    bool ow = outward_regular(r, block_of);
    bool iw = outward_regular(transpose(r), block_of);
    switch (mode) {
        case RegularityMode::outward: return ow;
        case RegularityMode::inward: return iw;
        case RegularityMode::both: return ow && iw;
    }
    return false;
}

// Every restricted-growth string of length n, by recursion.
inline void for_each_partition(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> cur(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t max_so_far) {
        if (i == n) {
            fn(cur);
            return;
        }
        for (std::size_t b = 0; b <= max_so_far + 1; ++b) {
            cur[i] = b;
            rec(i + 1, std::max(max_so_far, b));
        }
    };
    if (n == 0) {
        fn(cur);
        return;
    }
    cur[0] = 0;
    rec(1, 0);
}

inline std::size_t block_count(const std::vector<std::size_t>& block_of) {
    std::size_t m = 0;
    for (auto b : block_of) m = std::max(m, b + 1);
    return m;
}

// Fewest-block partition regular for every relation; first found on ties.
inline std::vector<std::size_t> coarsest_regular(const std::vector<PairSet>& rels, std::size_t n, RegularityMode mode) {
    std::vector<std::size_t> best;
    std::size_t best_blocks = n + 1;
    for_each_partition(n, [&](const std::vector<std::size_t>& p) {
        std::size_t m = block_count(p);
        if (m >= best_blocks) return;
        for (const auto& r : rels) {
            if (!regular(r, p, mode)) return;
        }
        best = p;
        best_blocks = m;
    });
    return best;
}

// U and U' match blockwise: every u has an E-related u', and vice versa.
inline bool lifted(const std::set<std::size_t>& u, const std::set<std::size_t>& u2,
                   const std::vector<std::size_t>& block_of) {
    for (auto x : u) {
        bool f = false;
        for (auto y : u2) f = f || same(block_of, x, y);
        if (!f) return false;
    }
    for (auto y : u2) {
        bool f = false;
        for (auto x : u) f = f || same(block_of, x, y);
        if (!f) return false;
    }
    return true;
}

// The two clauses of the power-of-power-set relation lifting, checked
// separately: for (a,a') in E, (1) each (a,U) is matched by some (a',U'),
// (2) each (a',U') is matched by some (a,U).
struct LiftingClauses {
    bool forth = true;
    bool back = true;
};

inline LiftingClauses lifting_clauses(const HyperSet& h, const std::vector<std::size_t>& block_of) {
    LiftingClauses out;
    const std::size_t n = block_of.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t a2 = 0; a2 < n; ++a2) {
            if (!same(block_of, a, a2)) continue;
            for (const auto& [x, u] : h) {
                if (x != a) continue;
                bool found = false;
                for (const auto& [y, u2] : h) found = found || (y == a2 && lifted(u, u2, block_of));
                out.forth = out.forth && found;
            }
            for (const auto& [y, u2] : h) {
                if (y != a2) continue;
                bool found = false;
                for (const auto& [x, u] : h) found = found || (x == a && lifted(u, u2, block_of));
                out.back = out.back && found;
            }
        }
    }
    return out;
}

inline HyperSet tight(const HyperSet& k, const HyperSet& h) {
    HyperSet out;
    for (const auto& [a, v] : h) {
        for (auto b : v) {
            for (const auto& [c, u] : k) {
                if (c == b) out.emplace(a, u);
            }
        }
    }
    return out;
}

inline HyperSet loose(const HyperSet& k, const HyperSet& h, bool prune) {
    HyperSet out;
    for (const auto& [a, v] : h) {
        std::set<std::size_t> w;
        for (auto b : v) {
            for (const auto& [c, u] : k) {
                if (c == b) w.insert(u.begin(), u.end());
            }
        }
        if (prune && w.empty()) continue;
        out.emplace(a, w);
    }
    return out;
}

inline std::vector<std::size_t> coarsest_regular_hyper(const std::vector<HyperSet>& rels, std::size_t n) {
    std::vector<std::size_t> best;
    std::size_t best_blocks = n + 1;
    for_each_partition(n, [&](const std::vector<std::size_t>& p) {
        std::size_t m = block_count(p);
        if (m >= best_blocks) return;
        for (const auto& h : rels) {
            auto c = lifting_clauses(h, p);
            if (!c.forth || !c.back) return;
        }
        best = p;
        best_blocks = m;
    });
    return best;
}

// Size of the closure of `gens` under `mul`, by repeated all-pairs products
// until nothing new appears.
template <class T, class Mul>
std::set<T> closure(const std::vector<T>& gens, Mul&& mul) {
    std::set<T> all(gens.begin(), gens.end());
    while (true) {
        std::set<T> next = all;
        for (const auto& x : all) {
            for (const auto& y : all) next.insert(mul(x, y));
        }
        if (next.size() == all.size()) return all;
        all = std::move(next);
    }
}

}  // namespace rolekit::oracle
