#include "rolekit/actors.hpp"

#include "rolekit/errors.hpp"

namespace rolekit {

ActorSet::ActorSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty()) {
            throw InputError("actor label at position " + std::to_string(i) + " is empty");
        }
        if (!index_.emplace(labels_[i], i).second) {
            throw InputError("duplicate actor label \"" + labels_[i] + "\"");
        }
    }
}

std::optional<std::size_t> ActorSet::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t ActorSet::index_of(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw InputError("unknown actor \"" + std::string(label) + "\"");
}

ActorSetPtr make_actors(std::vector<std::string> labels) {
    return std::make_shared<const ActorSet>(std::move(labels));
}

bool same_actors(const ActorSetPtr& a, const ActorSetPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void require_same_actors(const ActorSetPtr& a, const ActorSetPtr& b,
                         std::string_view context) {
    if (!same_actors(a, b)) {
        throw StructuralError(std::string(context) + ": operands are defined on different actor sets");
    }
}

}  // namespace rolekit
