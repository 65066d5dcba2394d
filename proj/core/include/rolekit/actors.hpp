#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rolekit {

/// Ordered roster of distinct, non-empty actor labels. Index i refers to
/// labels()[i]. Every structure in the library is defined over one of these.
class ActorSet {
public:
    ActorSet() = default;
    explicit ActorSet(std::vector<std::string> labels);

    std::size_t size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }

    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    std::optional<std::size_t> find(std::string_view label) const;

    /// Like find(), but throws InputError naming the unknown label.
    std::size_t index_of(std::string_view label) const;

    friend bool operator==(const ActorSet& a, const ActorSet& b) {
        return a.labels_ == b.labels_;
    }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
};

using ActorSetPtr = std::shared_ptr<const ActorSet>;

ActorSetPtr make_actors(std::vector<std::string> labels);

/// Throws StructuralError unless both sets carry the same labels in the same
/// order. `context` names the operation for the message.
void require_same_actors(const ActorSetPtr& a, const ActorSetPtr& b,
                         std::string_view context);

bool same_actors(const ActorSetPtr& a, const ActorSetPtr& b);

}  // namespace rolekit
