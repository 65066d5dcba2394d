#include "rolekit/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "rolekit/errors.hpp"

namespace rolekit::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw InputError(where.empty() ? what : where + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
    return *it;
}

std::string text(const Json& v, const std::string& where) {
    if (!v.is_string()) fail(where, "expected a string");
    return v.get<std::string>();
}

const Json& array(const Json& v, const std::string& where) {
    if (!v.is_array()) fail(where, "expected a list");
    return v;
}

std::size_t actor(const ActorSet& actors, const Json& v, const std::string& where) {
    auto label = text(v, where);
    auto i = actors.find(label);
    if (!i) fail(where, "unknown actor \"" + label + "\"");
    return *i;
}

TargetSet actor_list(const ActorSet& actors, const Json& v, const std::string& where) {
    TargetSet out;
    std::size_t k = 0;
    for (const auto& item : array(v, where)) {
        out.push_back(actor(actors, item, where + "[" + std::to_string(k++) + "]"));
    }
    return out;
}

void check_keys(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!obj.is_object()) fail(where, "expected an object");
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) fail(where, "unexpected field \"" + key + "\"");
    }
}

ActorSetPtr parse_actors(const Json& doc) {
    std::vector<std::string> labels;
    std::size_t k = 0;
    for (const auto& v : array(field(doc, "actors", ""), "actors")) {
        labels.push_back(text(v, "actors[" + std::to_string(k++) + "]"));
    }
    try {
        return make_actors(std::move(labels));
    } catch (const InputError& e) {
        fail("actors", e.what());
    }
}

Json actors_json(const ActorSet& actors) {
    Json out = Json::array();
    for (const auto& l : actors.labels()) out.push_back(l);
    return out;
}

Json labels_json(const ActorSet& actors, const TargetSet& ids) {
    Json out = Json::array();
    for (auto i : ids) out.push_back(actors.label(i));
    return out;
}

}  // namespace

Json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open \"" + path.string() + "\"");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError("\"" + path.string() + "\": " + e.what());
    }
}

NetworkDocument parse_network(const Json& doc) {
    if (!doc.is_object()) fail("", "network document must be a JSON object");
    const std::string kind = text(field(doc, "kind", ""), "kind");
    if (kind == "graph" || kind == "fhyper") {
        check_keys(doc, {"kind", "actors", "relations"}, "");
    } else if (kind == "undirected") {
        check_keys(doc, {"kind", "actors", "hyperedges", "name"}, "");
    } else {
        fail("kind", "expected \"graph\", \"fhyper\" or \"undirected\", got \"" + kind + "\"");
    }
    auto actors = parse_actors(doc);

    if (kind == "undirected") {
        std::string name = doc.contains("name") ? text(doc["name"], "name") : "H";
        try {
            check_relation_name(name);
        } catch (const InputError& e) {
            fail("name", e.what());
        }
        UndirectedHypergraph u(actors);
        std::size_t k = 0;
        for (const auto& w : array(field(doc, "hyperedges", ""), "hyperedges")) {
            u.add(actor_list(*actors, w, "hyperedges[" + std::to_string(k++) + "]"));
        }
        return UndirectedDocument{std::move(name), std::move(u)};
    }

    const Json& rels = field(doc, "relations", "");
    if (!rels.is_object()) fail("relations", "expected an object mapping names to edge lists");

    if (kind == "graph") {
        std::vector<MultiNetwork::Entry> entries;
        for (const auto& [name, edges] : rels.items()) {
            const std::string where = "relations." + name;
            Relation r(actors);
            std::size_t k = 0;
            for (const auto& e : array(edges, where)) {
                const std::string at = where + "[" + std::to_string(k++) + "]";
                if (!e.is_array() || e.size() != 2) fail(at, "expected a pair [from, to]");
                r.insert(actor(*actors, e[0], at + "[0]"), actor(*actors, e[1], at + "[1]"));
            }
            entries.emplace_back(name, std::move(r));
        }
        try {
            return MultiNetwork(actors, std::move(entries));
        } catch (const InputError& e) {
            fail("relations", e.what());
        }
    }

    std::vector<MultiHypergraph::Entry> entries;
    for (const auto& [name, edges] : rels.items()) {
        const std::string where = "relations." + name;
        FHyperStructure h(actors);
        std::size_t k = 0;
        for (const auto& e : array(edges, where)) {
            const std::string at = where + "[" + std::to_string(k++) + "]";
            check_keys(e, {"src", "tgt"}, at);
            h.add(actor(*actors, field(e, "src", at), at + ".src"), actor_list(*actors, field(e, "tgt", at), at + ".tgt"));
        }
        entries.emplace_back(name, std::move(h));
    }
    try {
        return MultiHypergraph(actors, std::move(entries));
    } catch (const InputError& e) {
        fail("relations", e.what());
    }
}

NetworkDocument load_network(const std::filesystem::path& path) {
    auto doc = read_json(path);
    try {
        return parse_network(doc);
    } catch (const InputError& e) {
        throw InputError("\"" + path.string() + "\": " + e.what());
    }
}

Json network_json(const MultiNetwork& net) {
    const auto& A = *net.actors();
    Json rels = Json::object();
    for (const auto& [name, r] : net.relations()) {
        Json edges = Json::array();
        for (auto [a, b] : r.edges()) edges.push_back(Json::array({A.label(a), A.label(b)}));
        rels[name] = std::move(edges);
    }
    Json out = Json::object();
    out["actors"] = actors_json(A);
    out["kind"] = "graph";
    out["relations"] = std::move(rels);
    return out;
}

Json network_json(const MultiHypergraph& mh) {
    const auto& A = *mh.actors();
    Json rels = Json::object();
    for (const auto& [name, h] : mh.relations()) {
        Json edges = Json::array();
        for (const auto& [a, u] : h.hyperedges()) {
            Json e = Json::object();
            e["src"] = A.label(a);
            e["tgt"] = labels_json(A, u);
            edges.push_back(std::move(e));
        }
        rels[name] = std::move(edges);
    }
    Json out = Json::object();
    out["actors"] = actors_json(A);
    out["kind"] = "fhyper";
    out["relations"] = std::move(rels);
    return out;
}

Json network_json(const UndirectedDocument& u) {
    const auto& A = *u.hypergraph.actors();
    Json edges = Json::array();
    for (const auto& w : u.hypergraph.hyperedges()) edges.push_back(labels_json(A, w));
    Json out = Json::object();
    out["actors"] = actors_json(A);
    out["hyperedges"] = std::move(edges);
    out["kind"] = "undirected";
    out["name"] = u.name;
    return out;
}

Json network_json(const NetworkDocument& doc) {
    return std::visit([](const auto& v) { return network_json(v); }, doc);
}

Partition parse_partition(const Json& doc, const ActorSetPtr& actors) {
    check_keys(doc, {"blocks"}, "");
    std::vector<std::vector<std::size_t>> blocks;
    std::size_t k = 0;
    for (const auto& b : array(field(doc, "blocks", ""), "blocks")) {
        blocks.push_back(actor_list(*actors, b, "blocks[" + std::to_string(k++) + "]"));
    }
    try {
        return Partition::from_blocks(actors, blocks);
    } catch (const InputError& e) {
        fail("blocks", e.what());
    }
}

Partition load_partition(const std::filesystem::path& path, const ActorSetPtr& actors) {
    auto doc = read_json(path);
    try {
        return parse_partition(doc, actors);
    } catch (const InputError& e) {
        throw InputError("\"" + path.string() + "\": " + e.what());
    }
}

Json partition_json(const Partition& e) {
    Json blocks = Json::array();
    for (const auto& b : e.blocks()) blocks.push_back(labels_json(*e.actors(), b));
    Json out = Json::object();
    out["blocks"] = std::move(blocks);
    return out;
}

ActorMap parse_map(const Json& doc, const ActorSetPtr& source, const ActorSetPtr& target) {
    check_keys(doc, {"map"}, "");
    const Json& m = field(doc, "map", "");
    if (!m.is_object()) fail("map", "expected an object mapping source labels to target labels");
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> images(source->size(), unset);
    for (const auto& [key, value] : m.items()) {
        const std::string where = "map." + key;
        auto a = source->find(key);
        if (!a) fail(where, "unknown source actor \"" + key + "\"");
        images[*a] = actor(*target, value, where);
    }
    for (std::size_t a = 0; a < images.size(); ++a) {
        if (images[a] == unset) fail("map", "source actor \"" + source->label(a) + "\" has no image");
    }
    return ActorMap(source, target, std::move(images));
}

ActorMap load_map(const std::filesystem::path& path, const ActorSetPtr& source, const ActorSetPtr& target) {
    auto doc = read_json(path);
    try {
        return parse_map(doc, source, target);
    } catch (const InputError& e) {
        throw InputError("\"" + path.string() + "\": " + e.what());
    }
}

Json map_json(const ActorMap& f) {
    Json m = Json::object();
    for (std::size_t a = 0; a < f.images().size(); ++a) m[f.source()->label(a)] = f.target()->label(f(a));
    Json out = Json::object();
    out["map"] = std::move(m);
    return out;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

void write_text(const std::string& path, const std::string& body, std::ostream& stdout_stream) {
    if (path == "-") {
        stdout_stream << body;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write \"" + path + "\"");
    out << body;
    if (!out) throw InputError("failed writing \"" + path + "\"");
}

const ActorSetPtr& actors_of(const NetworkDocument& doc) {
    return std::visit(
        [](const auto& v) -> const ActorSetPtr& {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, UndirectedDocument>) {
                return v.hypergraph.actors();
            } else {
                return v.actors();
            }
        },
        doc);
}

MultiHypergraph as_hypergraph(const NetworkDocument& doc) {
    if (const auto* net = std::get_if<MultiNetwork>(&doc)) {
        std::vector<MultiHypergraph::Entry> entries;
        for (const auto& [name, r] : net->relations()) entries.emplace_back(name, embed_relation(r));
        return MultiHypergraph(net->actors(), std::move(entries));
    }
    if (const auto* u = std::get_if<UndirectedDocument>(&doc)) {
        return MultiHypergraph(u->hypergraph.actors(), {{u->name, from_undirected(u->hypergraph)}});
    }
    return std::get<MultiHypergraph>(doc);
}

}  // namespace rolekit::io
