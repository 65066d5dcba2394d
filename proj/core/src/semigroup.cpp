#include "rolekit/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "rolekit/errors.hpp"
#include "rolekit/network.hpp"

namespace rolekit {

std::string to_string(const Composition& c) {
    switch (c.kind) {
        case ComposeKind::graph: return "graph";
        case ComposeKind::tight: return "tight";
        case ComposeKind::loose: return c.prune_empty ? "loose+prune" : "loose";
    }
    return "?";
}

ComposeKind parse_compose_kind(std::string_view text) {
    if (text == "graph") return ComposeKind::graph;
    if (text == "tight") return ComposeKind::tight;
    if (text == "loose") return ComposeKind::loose;
    throw InputError("unknown composition \"" + std::string(text) + "\" (expected graph, tight or loose)");
}

RoleElement compose(const Composition& c, const RoleElement& left, const RoleElement& right) {
    if (c.kind == ComposeKind::graph) {
        const auto* l = std::get_if<Relation>(&left);
        const auto* r = std::get_if<Relation>(&right);
        if (!l || !r) throw StructuralError("graph composition needs relations");
        return compose_relations(*l, *r);
    }
    const auto* l = std::get_if<FHyperStructure>(&left);
    const auto* r = std::get_if<FHyperStructure>(&right);
    if (!l || !r) throw StructuralError(to_string(c) + " composition needs hypergraph structures");
    if (c.kind == ComposeKind::tight) return tight_compose(*l, *r);
    return loose_compose(*l, *r, c.prune_empty);
}

bool is_zero(const RoleElement& e) {
    return std::visit([](const auto& v) { return v.empty(); }, e);
}

const ActorSetPtr& actors_of(const RoleElement& e) {
    return std::visit([](const auto& v) -> const ActorSetPtr& { return v.actors(); }, e);
}

std::string RoleSemigroup::word_text(const Word& w) const {
    std::string out;
    for (auto g : w) out += names_.at(g);
    return out;
}

std::string RoleSemigroup::word_label(std::size_t i) const {
    if (is_zero(i)) return "0";
    return word_text(words_.at(i));
}

std::size_t RoleSemigroup::product(std::size_t i, std::size_t j) const {
    const std::size_t m = elements_.size();
    if (i >= m || j >= m) throw InputError("element index out of range");
    if (!table_.empty()) return table_[i * m + j];
    std::size_t r = i;
    for (auto g : words_[j]) r = right(r, g);
    return r;
}

std::size_t RoleSemigroup::evaluate(const Word& w) const {
    if (w.empty()) throw InputError("cannot evaluate the empty word");
    std::size_t r = generator_element(w.front());
    for (std::size_t k = 1; k < w.size(); ++k) r = right(r, w[k]);
    return r;
}

std::optional<std::size_t> RoleSemigroup::find(const RoleElement& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

RoleSemigroup generate_closure(const std::vector<Generator>& generators, const Composition& c,
                               std::size_t cap) {
    if (generators.empty()) throw InputError("role semigroup needs at least one generator");
    RoleSemigroup s;
    s.composition_ = c;
    s.actors_ = actors_of(generators.front().value);

    const bool want_relation = c.kind == ComposeKind::graph;
    std::unordered_set<std::string> seen;
    for (const auto& g : generators) {
        check_relation_name(g.name);
        if (!seen.insert(g.name).second) throw InputError("duplicate generator name \"" + g.name + "\"");
        if (std::holds_alternative<Relation>(g.value) != want_relation) {
            throw StructuralError("generator \"" + g.name + "\" does not fit " + to_string(c) + " composition");
        }
        require_same_actors(s.actors_, actors_of(g.value), "generator \"" + g.name + "\"");
        s.names_.push_back(g.name);
    }

    auto intern = [&](RoleElement e, Word w) {
        auto [it, inserted] = s.index_.emplace(e, s.elements_.size());
        if (inserted) {
            if (s.elements_.size() >= cap) {
                throw ResourceError("role semigroup closure exceeded the cap of " + std::to_string(cap) +
                                        " elements",
                                    s.elements_.size() + 1);
            }
            if (is_zero(e)) s.zero_ = s.elements_.size();
            s.elements_.push_back(std::move(e));
            s.words_.push_back(std::move(w));
        }
        return it->second;
    };

    for (std::size_t g = 0; g < generators.size(); ++g) {
        s.generator_element_.push_back(intern(generators[g].value, Word{g}));
    }
    for (std::size_t i = 0; i < s.elements_.size(); ++i) {
        for (std::size_t g = 0; g < generators.size(); ++g) {
            RoleElement p = compose(c, s.elements_[i], generators[g].value);
            Word w = s.words_[i];
            w.push_back(g);
            s.right_.push_back(intern(std::move(p), std::move(w)));
        }
    }

    const std::size_t m = s.elements_.size();
    if (m <= kMaxMaterializedTable) {
        std::vector<std::uint32_t> table(m * m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) table[i * m + j] = static_cast<std::uint32_t>(s.product(i, j));
        }
        s.table_ = std::move(table);
    }
    return s;
}

CayleyTable multiplication_table(const RoleSemigroup& s, bool omit_zero) {
    CayleyTable t;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (omit_zero && s.is_zero(i)) continue;
        t.order.push_back(i);
        t.labels.push_back(s.word_label(i));
    }
    for (auto i : t.order) {
        auto& row = t.cells.emplace_back();
        for (auto j : t.order) row.push_back(s.word_label(s.product(i, j)));
    }
    return t;
}

namespace {

std::string csv_field(const std::string& f) {
    if (f.find_first_of(",\"\n\r") == std::string::npos) return f;
    std::string out = "\"";
    for (char ch : f) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_csv(const CayleyTable& t) {
    std::string out;
    for (const auto& l : t.labels) out += "," + csv_field(l);
    out += '\n';
    for (std::size_t r = 0; r < t.cells.size(); ++r) {
        out += csv_field(t.labels[r]);
        for (const auto& cell : t.cells[r]) out += "," + csv_field(cell);
        out += '\n';
    }
    return out;
}

std::optional<std::size_t> find_absorbing(const RoleSemigroup& s) {
    for (std::size_t z = 0; z < s.size(); ++z) {
        bool ok = true;
        for (std::size_t x = 0; x < s.size() && ok; ++x) ok = s.product(z, x) == z && s.product(x, z) == z;
        if (ok) return z;
    }
    return std::nullopt;
}

std::optional<std::size_t> find_identity(const RoleSemigroup& s) {
    for (std::size_t e = 0; e < s.size(); ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < s.size() && ok; ++x) ok = s.product(e, x) == x && s.product(x, e) == x;
        if (ok) return e;
    }
    return std::nullopt;
}

namespace {

ActorSetPtr element_actors(std::size_t m) {
    std::vector<std::string> labels;
    labels.reserve(m);
    for (std::size_t i = 0; i < m; ++i) labels.push_back("#" + std::to_string(i));
    return make_actors(std::move(labels));
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

}  // namespace

ElementCongruence congruence_closure(const RoleSemigroup& s,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    const std::size_t m = s.size();
    const std::size_t gens = s.generator_count();
    std::vector<std::size_t> left(m * gens);
    for (std::size_t g = 0; g < gens; ++g) {
        for (std::size_t x = 0; x < m; ++x) left[x * gens + g] = s.product(s.generator_element(g), x);
    }

    UnionFind uf(m);
    std::vector<std::pair<std::size_t, std::size_t>> work;
    for (auto [a, b] : pairs) {
        if (a >= m || b >= m) throw InputError("congruence pair names an element out of range");
        if (uf.unite(a, b)) work.emplace_back(a, b);
    }
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        for (std::size_t g = 0; g < gens; ++g) {
            std::size_t ra = s.right(a, g), rb = s.right(b, g);
            if (uf.unite(ra, rb)) work.emplace_back(ra, rb);
            std::size_t la = left[a * gens + g], lb = left[b * gens + g];
            if (uf.unite(la, lb)) work.emplace_back(la, lb);
        }
    }

    std::vector<std::size_t> roots(m);
    for (std::size_t i = 0; i < m; ++i) roots[i] = uf.find(i);
    return ElementCongruence{m, Partition(element_actors(m), std::move(roots))};
}

bool is_congruence(const RoleSemigroup& s, const ElementCongruence& c) {
    if (c.base_size != s.size() || c.classes.size() != s.size()) return false;
    std::vector<std::size_t> rep(c.class_count(), 0);
    for (std::size_t i = s.size(); i-- > 0;) rep[c.class_of(i)] = i;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
            auto expected = c.class_of(s.product(rep[c.class_of(i)], rep[c.class_of(j)]));
            if (c.class_of(s.product(i, j)) != expected) return false;
        }
    }
    return true;
}

QuotientSemigroup quotient_semigroup(const RoleSemigroup& s, const ElementCongruence& c) {
    if (!is_congruence(s, c)) throw InvariantViolation("quotient_semigroup: classes are not a congruence");
    const std::size_t k = c.class_count();
    std::vector<std::size_t> rep(k, 0);
    for (std::size_t i = s.size(); i-- > 0;) rep[c.class_of(i)] = i;

    QuotientSemigroup q;
    q.table.assign(k, std::vector<std::size_t>(k));
    for (std::size_t x = 0; x < k; ++x) {
        q.labels.push_back(s.word_label(rep[x]));
        for (std::size_t y = 0; y < k; ++y) q.table[x][y] = c.class_of(s.product(rep[x], rep[y]));
    }
    q.projection.image = c.classes.assignment();
    q.projection.target_size = k;
    q.projection.surjective = true;
    return q;
}

std::string describe(const WellDefinednessFailure& f, const RoleSemigroup& src, const RoleSemigroup& dst) {
    return "words \"" + src.word_text(f.first) + "\" and \"" + src.word_text(f.second) +
           "\" both give " + src.word_label(f.source_element) + " in the source, but give " +
           dst.word_label(f.target_first) + " and " + dst.word_label(f.target_second) + " in the target";
}

HomResult generator_induced_hom(const RoleSemigroup& src, const RoleSemigroup& dst) {
    if (src.generator_names() != dst.generator_names()) {
        throw PreconditionError("generator_induced_hom: generator names differ between source and target");
    }
    if (!(src.composition() == dst.composition())) {
        throw PreconditionError("generator_induced_hom: compositions differ (" + to_string(src.composition()) +
                                " vs " + to_string(dst.composition()) + ")");
    }

    SemigroupHom hom;
    hom.target_size = dst.size();
    hom.image.resize(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) hom.image[i] = dst.evaluate(src.word(i));

    const std::size_t gens = src.generator_count();
    for (std::size_t g = 0; g < gens; ++g) {
        std::size_t e = src.generator_element(g);
        if (hom.image[e] != dst.generator_element(g)) {
            return WellDefinednessFailure{src.word(e), Word{g}, e, hom.image[e], dst.generator_element(g)};
        }
    }
    for (std::size_t i = 0; i < src.size(); ++i) {
        for (std::size_t g = 0; g < gens; ++g) {
            std::size_t k = src.right(i, g);
            std::size_t via = dst.right(hom.image[i], g);
            if (hom.image[k] != via) {
                Word longer = src.word(i);
                longer.push_back(g);
                return WellDefinednessFailure{src.word(k), std::move(longer), k, hom.image[k], via};
            }
        }
    }
    if (src.has_table()) {
        for (std::size_t i = 0; i < src.size(); ++i) {
            for (std::size_t j = 0; j < src.size(); ++j) {
                std::size_t k = src.product(i, j);
                std::size_t via = dst.product(hom.image[i], hom.image[j]);
                if (hom.image[k] != via) {
                    Word joined = src.word(i);
                    joined.insert(joined.end(), src.word(j).begin(), src.word(j).end());
                    return WellDefinednessFailure{src.word(k), std::move(joined), k, hom.image[k], via};
                }
            }
        }
    }

    std::vector<char> hit(dst.size(), 0);
    for (auto t : hom.image) hit[t] = 1;
    hom.surjective = std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
    return hom;
}

}  // namespace rolekit
