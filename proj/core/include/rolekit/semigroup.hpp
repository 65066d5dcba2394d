#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "rolekit/hypergraph.hpp"
#include "rolekit/partition.hpp"
#include "rolekit/relation.hpp"

namespace rolekit {

enum class ComposeKind { graph, tight, loose };

struct Composition {
    ComposeKind kind = ComposeKind::graph;
    /// Only meaningful for loose composition.
    bool prune_empty = false;

    friend bool operator==(const Composition&, const Composition&) = default;
};

/// "graph", "tight", "loose" or "loose+prune".
std::string to_string(const Composition& c);

/// Parses "graph", "tight" or "loose"; InputError otherwise.
ComposeKind parse_compose_kind(std::string_view text);

using RoleElement = std::variant<Relation, FHyperStructure>;

/// left after right: compose_relations(left, right), tight_compose(left, right)
/// or loose_compose(left, right). StructuralError when the element kind does
/// not fit the composition.
RoleElement compose(const Composition& c, const RoleElement& left, const RoleElement& right);

/// The empty relation or the structure without hyperedges.
bool is_zero(const RoleElement& e);

const ActorSetPtr& actors_of(const RoleElement& e);

struct Generator {
    std::string name;
    RoleElement value;
};

/// Generator indices; {g0, g1, g2} denotes g0 * g1 * g2, so the last index is
/// applied first and the label reads like the usual juxtaposition.
using Word = std::vector<std::size_t>;

/// The closure of a generator list under a composition, with a shortest word
/// per element and the right Cayley graph x -> x * g.
class RoleSemigroup {
public:
    std::size_t size() const noexcept { return elements_.size(); }
    const Composition& composition() const noexcept { return composition_; }
    const ActorSetPtr& actors() const noexcept { return actors_; }

    std::size_t generator_count() const noexcept { return names_.size(); }
    const std::string& generator_name(std::size_t g) const { return names_.at(g); }
    const std::vector<std::string>& generator_names() const noexcept { return names_; }
    std::size_t generator_element(std::size_t g) const { return generator_element_.at(g); }

    const RoleElement& element(std::size_t i) const { return elements_.at(i); }
    const Word& word(std::size_t i) const { return words_.at(i); }

    /// Juxtaposed generator names, or "0" for the zero element.
    std::string word_label(std::size_t i) const;
    std::string word_text(const Word& w) const;

    bool is_zero(std::size_t i) const { return rolekit::is_zero(elements_.at(i)); }
    std::optional<std::size_t> zero_index() const noexcept { return zero_; }
    std::size_t nonzero_count() const noexcept { return size() - (zero_ ? 1 : 0); }

    /// element(i) * generator g.
    std::size_t right(std::size_t i, std::size_t g) const { return right_.at(i * names_.size() + g); }

    /// element(i) * element(j).
    std::size_t product(std::size_t i, std::size_t j) const;

    /// Index of the product of a non-empty word.
    std::size_t evaluate(const Word& w) const;

    std::optional<std::size_t> find(const RoleElement& e) const;

    /// True when the full m x m table is held in memory.
    bool has_table() const noexcept { return !table_.empty(); }

private:
    friend RoleSemigroup generate_closure(const std::vector<Generator>&, const Composition&, std::size_t);

    struct ElementHash {
        std::size_t operator()(const RoleElement& e) const noexcept {
            return std::visit([](const auto& v) { return v.hash(); }, e);
        }
    };

    Composition composition_;
    ActorSetPtr actors_;
    std::vector<std::string> names_;
    std::vector<std::size_t> generator_element_;
    std::vector<RoleElement> elements_;
    std::vector<Word> words_;
    std::vector<std::size_t> right_;
    std::vector<std::uint32_t> table_;
    std::optional<std::size_t> zero_;
    std::unordered_map<RoleElement, std::size_t, ElementHash> index_;
};

inline constexpr std::size_t kDefaultClosureCap = 10000;

/// Full m x m table is kept when m is at most this.
inline constexpr std::size_t kMaxMaterializedTable = 2048;

/// Breadth-first closure: for each element in discovery order and each
/// generator in list order, element * generator is added if new. Words are
/// therefore shortlex-minimal. InputError for no generators or bad names,
/// StructuralError for mixed actor sets or element kinds, ResourceError when
/// more than `cap` elements appear.
RoleSemigroup generate_closure(const std::vector<Generator>& generators, const Composition& c,
                               std::size_t cap = kDefaultClosureCap);

struct CayleyTable {
    /// Element indices in row/column order.
    std::vector<std::size_t> order;
    std::vector<std::string> labels;
    /// cells[r][c] is the label of labels[r] * labels[c].
    std::vector<std::vector<std::string>> cells;
};

/// Word-labelled table in closure order; `omit_zero` drops the zero row and
/// column.
CayleyTable multiplication_table(const RoleSemigroup& s, bool omit_zero = false);

/// Top-left cell empty, then one header row and one row per element.
std::string to_csv(const CayleyTable& t);

std::optional<std::size_t> find_absorbing(const RoleSemigroup& s);
std::optional<std::size_t> find_identity(const RoleSemigroup& s);

/// A congruence on the elements of a semigroup. `classes` is a partition of
/// an index-labelled actor set ("#0", "#1", ...) with one actor per element.
struct ElementCongruence {
    std::size_t base_size = 0;
    Partition classes;

    std::size_t class_of(std::size_t element) const { return classes.block_of(element); }
    std::size_t class_count() const noexcept { return classes.block_count(); }
};

/// Least congruence containing `pairs`.
ElementCongruence congruence_closure(const RoleSemigroup& s,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

/// True when i ~ i' and j ~ j' always give i*j ~ i'*j'.
bool is_congruence(const RoleSemigroup& s, const ElementCongruence& c);

struct SemigroupHom {
    std::vector<std::size_t> image;
    std::size_t target_size = 0;
    bool surjective = false;
};

struct QuotientSemigroup {
    /// Label of each class: the word label of its first member.
    std::vector<std::string> labels;
    /// table[x][y] is the class of any member product.
    std::vector<std::vector<std::size_t>> table;
    SemigroupHom projection;
};

/// Quotient table and the canonical surjection. InvariantViolation when `c`
/// is not compatible with the multiplication.
QuotientSemigroup quotient_semigroup(const RoleSemigroup& s, const ElementCongruence& c);

/// Two words that name one source element but whose target images differ.
struct WellDefinednessFailure {
    Word first;
    Word second;
    std::size_t source_element = 0;
    std::size_t target_first = 0;
    std::size_t target_second = 0;
};

std::string describe(const WellDefinednessFailure& f, const RoleSemigroup& src, const RoleSemigroup& dst);

using HomResult = std::variant<SemigroupHom, WellDefinednessFailure>;

/// Sends each source element, through its word, to the target element of the
/// same word, then checks that the choice of word never matters.
/// PreconditionError unless both sides have the same generator names and
/// composition.
HomResult generator_induced_hom(const RoleSemigroup& src, const RoleSemigroup& dst);

}  // namespace rolekit
