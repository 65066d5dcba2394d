#include <gtest/gtest.h>

#include "rolekit/errors.hpp"
#include "rolekit/reduction.hpp"
#include "rolekit/semigroup.hpp"
#include "support/fixtures.hpp"
#include "support/fuzz.hpp"
#include "support/oracles.hpp"

using namespace rolekit;
using namespace rolekit::testing;

namespace {

const Composition kGraph{ComposeKind::graph, false};
const Composition kTight{ComposeKind::tight, false};
const Composition kLoose{ComposeKind::loose, false};
const Composition kLoosePruned{ComposeKind::loose, true};

std::vector<std::string> labels(const RoleSemigroup& s) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s.word_label(i));
    return out;
}

std::size_t index_of(const RoleSemigroup& s, const std::string& label) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.word_label(i) == label) return i;
    }
    throw std::out_of_range(label);
}

std::string product(const RoleSemigroup& s, const std::string& x, const std::string& y) {
    return s.word_label(s.product(index_of(s, x), index_of(s, y)));
}

}  // namespace

TEST(Closure, FamilyElementsAndWords) {
    auto s = generate_closure(generators_of(family()), kGraph);
    EXPECT_EQ(labels(s), (std::vector<std::string>{"S", "B", "P", "0", "SB", "BS", "PS", "PB"}));
    EXPECT_EQ(s.nonzero_count(), 7u);
    std::vector<oracle::PairSet> gens;
    for (const auto& g : generators_of(family())) gens.push_back(oracle::pairs(std::get<Relation>(g.value)));
    auto all = oracle::closure(gens, [](const auto& x, const auto& y) { return oracle::compose(x, y, 3); });
    EXPECT_EQ(all.size(), 8u);
}

TEST(Closure, FamilyTableAnchors) {
    auto s = generate_closure(generators_of(family()), kGraph);
    EXPECT_EQ(product(s, "S", "S"), "0");
    EXPECT_EQ(product(s, "S", "B"), "SB");
    EXPECT_EQ(product(s, "P", "B"), "PB");
    EXPECT_EQ(product(s, "P", "S"), "PS");
    EXPECT_EQ(product(s, "SB", "S"), "S");
    EXPECT_EQ(product(s, "PB", "S"), "PS");
}

TEST(Closure, WordsEvaluateToTheirElements) {
    fuzz::Rng rng(31);
    for (int t = 0; t < 50; ++t) {
        auto net = fuzz::network(rng, 4, 2);
        auto s = generate_closure(generators_of(net), kGraph);
        for (std::size_t i = 0; i < s.size(); ++i) {
            Relation v = std::get<Relation>(generators_of(net)[s.word(i).front()].value);
            for (std::size_t k = 1; k < s.word(i).size(); ++k) {
                v = compose_relations(v, std::get<Relation>(generators_of(net)[s.word(i)[k]].value));
            }
            EXPECT_EQ(RoleElement(v), s.element(i));
            EXPECT_EQ(s.evaluate(s.word(i)), i);
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = 0; j < s.size(); ++j) {
                auto p = compose(kGraph, s.element(i), s.element(j));
                ASSERT_TRUE(s.find(p).has_value());
                EXPECT_EQ(*s.find(p), s.product(i, j));
            }
        }
    }
}

TEST(Closure, Errors) {
    EXPECT_THROW(generate_closure({}, kGraph), InputError);
    auto A = make_actors({"a", "b"});
    EXPECT_THROW(generate_closure({{"0", Relation(A)}}, kGraph), InputError);
    EXPECT_THROW(generate_closure({{"R", Relation(A)}, {"R", Relation(A)}}, kGraph), InputError);
    EXPECT_THROW(generate_closure({{"R", Relation(A)}}, kTight), StructuralError);
    EXPECT_THROW(generate_closure({{"R", Relation(A)}, {"Q", Relation(make_actors({"x", "y"}))}}, kGraph),
                 StructuralError);
}

TEST(Closure, CapReportsReachedCount) {
    // Two relations on 4 actors generating well over five elements.
    auto A = make_actors({"a", "b", "c", "d"});
    Relation cycle = rel(A, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
    Relation swap = rel(A, {{"a", "b"}, {"b", "a"}, {"c", "c"}, {"d", "d"}});
    try {
        generate_closure({{"C", cycle}, {"W", swap}}, kGraph, 5);
        FAIL() << "expected ResourceError";
    } catch (const ResourceError& e) {
        EXPECT_EQ(e.reached(), 6u);
    }
    EXPECT_EQ(generate_closure({{"C", cycle}, {"W", swap}}, kGraph).size(), 24u);
}

TEST(Closure, TreeAndFlattenedCounts) {
    auto A = tree_actors();
    std::vector<Generator> gens{{"H1", tree(A)}, {"H2", tree_flat(A)}};
    auto tight = generate_closure(gens, kTight);
    EXPECT_EQ(tight.nonzero_count(), 3u);
    EXPECT_EQ(labels(tight), (std::vector<std::string>{"H1", "H2", "H1H1", "0"}));
    auto pruned = generate_closure(gens, kLoosePruned);
    EXPECT_EQ(pruned.nonzero_count(), 2u);
    EXPECT_EQ(pruned.element(pruned.product(0, 0)), RoleElement(tree_flat(A)));
    auto literal = generate_closure(gens, kLoose);
    EXPECT_EQ(literal.nonzero_count(), 5u);
    EXPECT_FALSE(literal.zero_index().has_value());

    std::vector<oracle::HyperSet> hs{oracle::hyperedges(tree(A)), oracle::hyperedges(tree_flat(A))};
    EXPECT_EQ(oracle::closure(hs, [](const auto& x, const auto& y) { return oracle::tight(x, y); }).size(), 4u);
    EXPECT_EQ(oracle::closure(hs, [](const auto& x, const auto& y) { return oracle::loose(x, y, true); }).size(), 3u);
    EXPECT_EQ(oracle::closure(hs, [](const auto& x, const auto& y) { return oracle::loose(x, y, false); }).size(), 5u);
}

TEST(Table, CsvHeaderFollowsClosureOrder) {
    auto s = generate_closure(generators_of(family()), kGraph);
    auto csv = to_csv(multiplication_table(s));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), ",S,B,P,0,SB,BS,PS,PB");
    auto t = multiplication_table(s, true);
    EXPECT_EQ(t.labels.size(), 7u);
}

TEST(Table, IdempotentSingleton) {
    auto A = make_actors({"a"});
    auto s = generate_closure({{"R", rel(A, {{"a", "a"}})}}, kGraph);
    auto t = multiplication_table(s);
    EXPECT_EQ(t.labels, (std::vector<std::string>{"R"}));
    EXPECT_EQ(t.cells, (std::vector<std::vector<std::string>>{{"R"}}));
}

TEST(Table, SymmetricFamilyBlockmodel) {
    auto F = family_sym();
    auto Q = blockmodel_network(F, generations(F.actors()));
    auto s = generate_closure(generators_of(Q), kGraph);
    EXPECT_EQ(labels(s), (std::vector<std::string>{"S", "P", "0"}));
    EXPECT_EQ(product(s, "S", "S"), "S");
    EXPECT_EQ(product(s, "P", "S"), "P");
    EXPECT_EQ(product(s, "S", "P"), "0");
    EXPECT_EQ(product(s, "P", "P"), "0");
}

TEST(Special, AbsorbingAndIdentity) {
    auto s = generate_closure(generators_of(family()), kGraph);
    ASSERT_TRUE(find_absorbing(s).has_value());
    EXPECT_TRUE(s.is_zero(*find_absorbing(s)));
    EXPECT_FALSE(find_identity(s).has_value());

    auto A = make_actors({"a", "b"});
    auto d = generate_closure({{"D", identity_relation(A)}}, kGraph);
    EXPECT_EQ(find_identity(d), std::optional<std::size_t>(0));

    // Left-zero band: x * y = x, so no absorbing element and no identity.
    auto band = generate_closure({{"L", rel(A, {{"a", "a"}, {"b", "a"}})}, {"M", rel(A, {{"a", "b"}, {"b", "b"}})}},
                                 kGraph);
    EXPECT_EQ(band.size(), 2u);
    EXPECT_FALSE(find_absorbing(band).has_value());
    EXPECT_FALSE(find_identity(band).has_value());
}

TEST(Congruence, FamilySiblingPair) {
    auto s = generate_closure(generators_of(family()), kGraph);
    auto c = congruence_closure(s, {{index_of(s, "S"), index_of(s, "B")}});
    EXPECT_TRUE(is_congruence(s, c));
    std::vector<std::vector<std::string>> classes(c.class_count());
    for (std::size_t i = 0; i < s.size(); ++i) classes[c.class_of(i)].push_back(s.word_label(i));
    // S ~ B gives 0 = S*S ~ B*S = BS, then B = BS*B ~ 0*B = 0, so only P
    // stays apart.
    EXPECT_EQ(classes, (std::vector<std::vector<std::string>>{{"S", "B", "0", "SB", "BS", "PS", "PB"}, {"P"}}));

    // Oracle: repeat closing under all products until stable.
    std::vector<std::size_t> cls(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) cls[i] = i;
    auto merge = [&](std::size_t a, std::size_t b) {
        auto from = cls[b], to = cls[a];
        if (from == to) return false;
        for (auto& x : cls) {
            if (x == from) x = to;
        }
        return true;
    };
    merge(index_of(s, "S"), index_of(s, "B"));
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = 0; j < s.size(); ++j) {
                if (cls[i] != cls[j]) continue;
                for (std::size_t k = 0; k < s.size(); ++k) {
                    changed = merge(s.product(i, k), s.product(j, k)) || changed;
                    changed = merge(s.product(k, i), s.product(k, j)) || changed;
                }
            }
        }
    }
    EXPECT_EQ(Partition(c.classes.actors(), cls), c.classes);

    auto q = quotient_semigroup(s, c);
    EXPECT_EQ(q.table.size(), 2u);
    EXPECT_TRUE(q.projection.surjective);
}

TEST(Congruence, TrivialCases) {
    auto s = generate_closure(generators_of(family()), kGraph);
    auto none = congruence_closure(s, {});
    EXPECT_EQ(none.class_count(), s.size());
    auto q = quotient_semigroup(s, none);
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) EXPECT_EQ(q.table[i][j], s.product(i, j));
    }
    std::vector<std::pair<std::size_t, std::size_t>> all;
    for (std::size_t i = 1; i < s.size(); ++i) all.emplace_back(0, i);
    auto u = congruence_closure(s, all);
    EXPECT_EQ(quotient_semigroup(s, u).table.size(), 1u);
}

TEST(Congruence, CollapsingIntoZeroTakesTheIdeal) {
    auto s = generate_closure(generators_of(family()), kGraph);
    auto z = *s.zero_index();
    auto c = congruence_closure(s, {{index_of(s, "P"), z}});
    // Ideal generated by P: P, PS, PB and 0.
    for (const auto* l : {"P", "PS", "PB"}) EXPECT_EQ(c.class_of(index_of(s, l)), c.class_of(z));
    for (const auto* l : {"S", "B", "SB", "BS"}) EXPECT_NE(c.class_of(index_of(s, l)), c.class_of(z));
}

TEST(Congruence, QuotientRejectsIncompatibleClasses) {
    auto s = generate_closure(generators_of(family()), kGraph);
    std::vector<std::size_t> ids(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) ids[i] = i;
    ids[index_of(s, "S")] = ids[index_of(s, "B")];
    auto c = congruence_closure(s, {});
    ElementCongruence bad{s.size(), Partition(c.classes.actors(), ids)};
    EXPECT_FALSE(is_congruence(s, bad));
    EXPECT_THROW(quotient_semigroup(s, bad), InvariantViolation);
}

TEST(Hom, FamilyOntoBlockmodel) {
    auto F = family_sym();
    auto Q = blockmodel_network(F, generations(F.actors()));
    auto src = generate_closure(generators_of(F), kGraph);
    auto dst = generate_closure(generators_of(Q), kGraph);
    auto r = generator_induced_hom(src, dst);
    ASSERT_TRUE(std::holds_alternative<SemigroupHom>(r));
    const auto& h = std::get<SemigroupHom>(r);
    EXPECT_TRUE(h.surjective);
    auto f = ActorMap::quotient(generations(F.actors()));
    for (std::size_t i = 0; i < src.size(); ++i) EXPECT_EQ(pushforward(src.element(i), f), dst.element(h.image[i]));
}

TEST(Hom, IdentityAndPreconditions) {
    auto s = generate_closure(generators_of(family()), kGraph);
    auto r = generator_induced_hom(s, s);
    ASSERT_TRUE(std::holds_alternative<SemigroupHom>(r));
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(std::get<SemigroupHom>(r).image[i], i);
    auto other = generate_closure(generators_of(family_sym()), kGraph);
    EXPECT_THROW(generator_induced_hom(s, other), PreconditionError);
}

TEST(Hom, CrossedPairIsNotWellDefined) {
    auto G = crossed();
    auto E = blocks(G.actors(), {{"a", "a'"}, {"b", "b'"}});
    auto src = generate_closure(generators_of(G), kGraph);
    auto dst = generate_closure(generators_of(blockmodel_network(G, E)), kGraph);
    EXPECT_EQ(labels(src), (std::vector<std::string>{"R", "0"}));
    EXPECT_EQ(dst.size(), 2u);
    EXPECT_EQ(dst.element(1), RoleElement(identity_relation(dst.actors())));
    auto r = generator_induced_hom(src, dst);
    ASSERT_TRUE(std::holds_alternative<WellDefinednessFailure>(r));
    const auto& f = std::get<WellDefinednessFailure>(r);
    EXPECT_TRUE(src.is_zero(f.source_element));
    EXPECT_EQ(src.evaluate(f.first), src.evaluate(f.second));
    EXPECT_NE(f.target_first, f.target_second);
    EXPECT_EQ(src.word_text(f.first), "RR");
    EXPECT_EQ(dst.element(f.target_first), RoleElement(identity_relation(dst.actors())));
}

TEST(CayleyTable, AssociativeOnRandomClosures) {
    fuzz::Rng rng(32);
    int checked = 0;
    for (int t = 0; t < 100; ++t) {
        auto net = fuzz::network(rng, 4, 2);
        auto s = generate_closure(generators_of(net), kGraph);
        if (s.size() > 60) continue;
        ++checked;
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = 0; j < s.size(); ++j) {
                for (std::size_t k = 0; k < s.size(); ++k) {
                    ASSERT_EQ(s.product(s.product(i, j), k), s.product(i, s.product(j, k)));
                }
            }
        }
    }
    EXPECT_GT(checked, 50);
}
