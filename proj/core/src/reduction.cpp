#include "rolekit/reduction.hpp"

#include <algorithm>
#include <functional>

#include "rolekit/errors.hpp"

namespace rolekit {

ActorMap::ActorMap(ActorSetPtr source, ActorSetPtr target, std::vector<std::size_t> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (!source_ || !target_) throw InputError("actor map requires source and target actor sets");
    if (map_.size() != source_->size()) {
        throw InputError("actor map covers " + std::to_string(map_.size()) + " of " +
                         std::to_string(source_->size()) + " source actors");
    }
    for (std::size_t a = 0; a < map_.size(); ++a) {
        if (map_[a] >= target_->size()) {
            throw InputError("actor map sends \"" + source_->label(a) + "\" outside the target actor set");
        }
    }
}

ActorMap ActorMap::identity(const ActorSetPtr& actors) {
    std::vector<std::size_t> ids(actors->size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    return ActorMap(actors, actors, std::move(ids));
}

ActorMap ActorMap::quotient(const Partition& e) {
    return ActorMap(e.actors(), quotient_actors(e), e.assignment());
}

bool ActorMap::surjective() const {
    std::vector<char> hit(target_->size(), 0);
    for (auto t : map_) hit[t] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

Partition kernel_partition(const ActorMap& f) { return Partition(f.source(), f.images()); }

ActorMap compose_reductions(const ActorMap& p, const ActorMap& q) {
    require_same_actors(q.target(), p.source(), "compose_reductions");
    std::vector<std::size_t> out(q.images().size());
    for (std::size_t a = 0; a < out.size(); ++a) out[a] = p(q(a));
    return ActorMap(q.source(), p.target(), std::move(out));
}

Relation pushforward(const Relation& r, const ActorMap& f) {
    require_same_actors(r.actors(), f.source(), "pushforward");
    Relation out(f.target());
    for (auto [a, b] : r.edges()) out.insert(f(a), f(b));
    return out;
}

FHyperStructure pushforward(const FHyperStructure& h, const ActorMap& f) {
    require_same_actors(h.actors(), f.source(), "pushforward");
    FHyperStructure out(f.target());
    for (const auto& [a, u] : h.hyperedges()) {
        TargetSet img;
        img.reserve(u.size());
        for (auto x : u) img.push_back(f(x));
        out.add(f(a), std::move(img));
    }
    return out;
}

RoleElement pushforward(const RoleElement& e, const ActorMap& f) {
    return std::visit([&](const auto& v) -> RoleElement { return pushforward(v, f); }, e);
}

namespace {

template <class Net>
void require_matching_shapes(const ActorMap& f, const Net& src, const Net& dst, const char* context) {
    require_same_actors(f.source(), src.actors(), std::string(context) + " (map source)");
    require_same_actors(f.target(), dst.actors(), std::string(context) + " (map target)");
    if (src.relation_count() != dst.relation_count()) {
        throw StructuralError(std::string(context) + ": source has " + std::to_string(src.relation_count()) +
                              " relations, target has " + std::to_string(dst.relation_count()));
    }
    for (std::size_t i = 0; i < src.relation_count(); ++i) {
        if (src.name(i) != dst.name(i)) {
            throw StructuralError(std::string(context) + ": relation " + std::to_string(i) + " is \"" +
                                  src.name(i) + "\" in the source but \"" + dst.name(i) + "\" in the target");
        }
    }
}

void note(ReductionReport& r, const std::string& text) {
    if (r.detail.empty()) r.detail = text;
}

// Block k of the kernel of f -> f(any member of k), when f is surjective.
std::optional<std::vector<std::size_t>> kernel_relabelling(const ActorMap& f, const Partition& ker) {
    if (!f.surjective()) return std::nullopt;
    std::vector<std::size_t> lab(ker.block_count());
    for (std::size_t a = 0; a < ker.size(); ++a) lab[ker.block_of(a)] = f(a);
    return lab;
}

}  // namespace

ReductionReport validate_positional_reduction_graph(const ActorMap& f, const MultiNetwork& src,
                                                    const MultiNetwork& dst, ReductionDirection dir) {
    require_matching_shapes(f, src, dst, "validate_positional_reduction_graph");
    ReductionReport rep;
    rep.surjective = f.surjective();
    if (!rep.surjective) note(rep, "map is not surjective");
    rep.preserving = true;
    rep.reflecting = true;
    rep.matches_blockmodel = true;

    const Partition ker = kernel_partition(f);
    const auto lab = kernel_relabelling(f, ker);
    if (!lab) rep.matches_blockmodel = false;
    const auto& S = *src.actors();
    const auto& T = *dst.actors();

    for (std::size_t k = 0; k < src.relation_count(); ++k) {
        const bool inward = dir == ReductionDirection::inward;
        const Relation r = inward ? src.relation(k).transposed() : src.relation(k);
        const Relation q = inward ? dst.relation(k).transposed() : dst.relation(k);
        const std::string& name = src.name(k);

        for (auto [a, b] : r.edges()) {
            if (!q.contains(f(a), f(b))) {
                rep.preserving = false;
                note(rep, name + ": edge (" + S.label(a) + "," + S.label(b) + ") has no image edge");
            }
        }
        for (std::size_t a = 0; a < r.order(); ++a) {
            std::vector<char> reached(q.order(), 0);
            for (auto b = std::size_t{0}; b < r.order(); ++b) {
                if (r.contains(a, b)) reached[f(b)] = 1;
            }
            for (std::size_t y = 0; y < q.order(); ++y) {
                if (q.contains(f(a), y) && !reached[y]) {
                    rep.reflecting = false;
                    note(rep, name + ": edge (" + T.label(f(a)) + "," + T.label(y) + ") is not reflected at " +
                                  S.label(a));
                }
            }
        }
        if (lab) {
            Relation expect(dst.actors());
            for (auto [x, y] : blockmodel_graph(src.relation(k), ker).relation.edges()) {
                expect.insert((*lab)[x], (*lab)[y]);
            }
            if (!(expect == dst.relation(k))) {
                rep.matches_blockmodel = false;
                note(rep, name + ": target differs from the blockmodel by the kernel of the map");
            }
        }
    }
    return rep;
}

ReductionReport validate_positional_reduction_hyper(const ActorMap& f, const MultiHypergraph& src,
                                                    const MultiHypergraph& dst) {
    require_matching_shapes(f, src, dst, "validate_positional_reduction_hyper");
    ReductionReport rep;
    rep.surjective = f.surjective();
    if (!rep.surjective) note(rep, "map is not surjective");
    rep.preserving = true;
    rep.reflecting = true;
    rep.matches_blockmodel = true;

    const Partition ker = kernel_partition(f);
    const auto lab = kernel_relabelling(f, ker);
    if (!lab) rep.matches_blockmodel = false;
    const auto& S = *src.actors();
    const auto& T = *dst.actors();

    auto image = [&](const TargetSet& u) {
        TargetSet out;
        for (auto x : u) out.push_back(f(x));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };

    for (std::size_t k = 0; k < src.relation_count(); ++k) {
        const auto& h = src.relation(k);
        const auto& q = dst.relation(k);
        const std::string& name = src.name(k);
        for (std::size_t a = 0; a < h.order(); ++a) {
            std::vector<TargetSet> images;
            for (const auto& u : h.neighbourhood(a)) images.push_back(image(u));
            std::sort(images.begin(), images.end());
            const auto& targets = q.neighbourhood(f(a));
            for (const auto& img : images) {
                if (!std::binary_search(targets.begin(), targets.end(), img)) {
                    rep.preserving = false;
                    note(rep, name + ": a hyperedge from " + S.label(a) + " has no image hyperedge");
                }
            }
            for (const auto& w : targets) {
                if (!std::binary_search(images.begin(), images.end(), w)) {
                    rep.reflecting = false;
                    note(rep, name + ": a hyperedge from " + T.label(f(a)) + " is not reflected at " + S.label(a));
                }
            }
        }
        if (lab) {
            FHyperStructure expect(dst.actors());
            for (const auto& [x, u] : blockmodel_hypergraph(h, ker).structure.hyperedges()) {
                TargetSet t;
                for (auto y : u) t.push_back((*lab)[y]);
                expect.add((*lab)[x], std::move(t));
            }
            if (!(expect == q)) {
                rep.matches_blockmodel = false;
                note(rep, name + ": target differs from the blockmodel by the kernel of the map");
            }
        }
    }
    return rep;
}

std::vector<Generator> generators_of(const MultiNetwork& net) {
    std::vector<Generator> out;
    for (const auto& [name, r] : net.relations()) out.push_back({name, r});
    return out;
}

std::vector<Generator> generators_of(const MultiHypergraph& mh) {
    std::vector<Generator> out;
    for (const auto& [name, h] : mh.relations()) out.push_back({name, h});
    return out;
}

namespace {

RoleReduction finish_reduction(const ActorMap& f, RoleSemigroup src, RoleSemigroup dst) {
    auto result = generator_induced_hom(src, dst);
    if (auto* fail = std::get_if<WellDefinednessFailure>(&result)) {
        throw InvariantViolation("induced role reduction is not well defined: " + describe(*fail, src, dst));
    }
    auto hom = std::get<SemigroupHom>(std::move(result));
    if (!hom.surjective) throw InvariantViolation("induced role reduction is not surjective");
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (!(pushforward(src.element(i), f) == dst.element(hom.image[i]))) {
            throw InvariantViolation("image of \"" + src.word_label(i) + "\" is not its blockmodel");
        }
    }
    return RoleReduction{std::move(src), std::move(dst), std::move(hom)};
}

}  // namespace

RoleReduction induced_role_reduction(const ActorMap& f, const MultiNetwork& src, const MultiNetwork& dst,
                                     ReductionDirection dir, std::size_t cap) {
    auto rep = validate_positional_reduction_graph(f, src, dst, dir);
    if (!rep.ok()) throw PreconditionError("map is not a positional reduction: " + rep.detail);
    const Composition c{ComposeKind::graph, false};
    return finish_reduction(f, generate_closure(generators_of(src), c, cap),
                            generate_closure(generators_of(dst), c, cap));
}

RoleReduction induced_role_reduction(const ActorMap& f, const MultiHypergraph& src, const MultiHypergraph& dst,
                                     const Composition& c, std::size_t cap) {
    if (c.kind == ComposeKind::graph) throw InputError("hypergraph role reduction needs tight or loose composition");
    auto rep = validate_positional_reduction_hyper(f, src, dst);
    if (!rep.ok()) throw PreconditionError("map is not a positional reduction: " + rep.detail);
    return finish_reduction(f, generate_closure(generators_of(src), c, cap),
                            generate_closure(generators_of(dst), c, cap));
}

namespace {

template <class Net, class Validate>
FunctorialityReport run_functoriality(const std::vector<ReductionStage<Net>>& chain, const Composition& c,
                                      std::size_t cap, Validate&& validate) {
    if (chain.empty()) throw InputError("functoriality check needs at least one stage");
    if (chain.front().map) throw InputError("the first stage must not carry a map");
    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (!chain[i].map) throw InputError("stage " + std::to_string(i) + " has no map from the previous stage");
        auto rep = validate(*chain[i].map, chain[i - 1].network, chain[i].network);
        if (!rep.ok()) {
            throw PreconditionError("stage " + std::to_string(i) + " is not a positional reduction: " + rep.detail);
        }
    }

    FunctorialityReport report;
    report.identity_law = true;
    report.composition_law = true;
    report.images_are_pushforwards = true;
    auto fail = [&](bool& flag, const std::string& text) {
        flag = false;
        if (report.witness.empty()) report.witness = text;
    };

    std::vector<RoleSemigroup> roles;
    for (const auto& stage : chain) {
        roles.push_back(generate_closure(generators_of(stage.network), c, cap));
        report.semigroup_sizes.push_back(roles.back().size());
    }

    for (std::size_t i = 0; i < roles.size(); ++i) {
        auto id = generator_induced_hom(roles[i], roles[i]);
        const auto* hom = std::get_if<SemigroupHom>(&id);
        for (std::size_t x = 0; x < roles[i].size(); ++x) {
            if (!hom || hom->image[x] != x) {
                fail(report.identity_law,
                     "stage " + std::to_string(i) + ": Role(Id) moves \"" + roles[i].word_label(x) + "\"");
                break;
            }
        }
    }

    auto induced = [&](std::size_t i, std::size_t j) -> std::optional<SemigroupHom> {
        auto r = generator_induced_hom(roles[i], roles[j]);
        if (auto* f = std::get_if<WellDefinednessFailure>(&r)) {
            fail(report.composition_law, "stages " + std::to_string(i) + "->" + std::to_string(j) +
                                             ": induced hom not well defined: " + describe(*f, roles[i], roles[j]));
            return std::nullopt;
        }
        return std::get<SemigroupHom>(std::move(r));
    };

    std::vector<std::optional<SemigroupHom>> steps;
    for (std::size_t i = 0; i + 1 < roles.size(); ++i) steps.push_back(induced(i, i + 1));

    for (std::size_t i = 0; i < roles.size(); ++i) {
        std::optional<ActorMap> f;
        for (std::size_t j = i + 1; j < roles.size(); ++j) {
            f = f ? compose_reductions(*chain[j].map, *f) : *chain[j].map;
            auto whole = induced(i, j);
            if (!whole) continue;
            bool steps_ok = true;
            for (std::size_t k = i; k < j; ++k) steps_ok = steps_ok && steps[k].has_value();
            for (std::size_t x = 0; x < roles[i].size(); ++x) {
                const std::string where = "stage " + std::to_string(i) + " element \"" + roles[i].word_label(x) + "\"";
                if (steps_ok) {
                    std::size_t y = x;
                    for (std::size_t k = i; k < j; ++k) y = steps[k]->image[y];
                    if (y != whole->image[x]) {
                        fail(report.composition_law, where + ": composite image \"" +
                                                         roles[j].word_label(whole->image[x]) + "\" but stepwise \"" +
                                                         roles[j].word_label(y) + "\" at stage " + std::to_string(j));
                    }
                }
                if (!(pushforward(roles[i].element(x), *f) == roles[j].element(whole->image[x]))) {
                    fail(report.images_are_pushforwards,
                         where + ": image at stage " + std::to_string(j) + " is not its blockmodel");
                }
            }
        }
    }

    report.holds = report.identity_law && report.composition_law && report.images_are_pushforwards;
    return report;
}

}  // namespace

FunctorialityReport check_functoriality(const std::vector<GraphStage>& chain, ReductionDirection dir,
                                        std::size_t cap) {
    return run_functoriality(chain, Composition{ComposeKind::graph, false}, cap,
                             [dir](const ActorMap& f, const MultiNetwork& s, const MultiNetwork& d) {
                                 return validate_positional_reduction_graph(f, s, d, dir);
                             });
}

FunctorialityReport check_functoriality(const std::vector<HyperStage>& chain, const Composition& c,
                                        std::size_t cap) {
    if (c.kind == ComposeKind::graph) throw InputError("hypergraph functoriality needs tight or loose composition");
    return run_functoriality(chain, c, cap, [](const ActorMap& f, const MultiHypergraph& s, const MultiHypergraph& d) {
        return validate_positional_reduction_hyper(f, s, d);
    });
}

}  // namespace rolekit
