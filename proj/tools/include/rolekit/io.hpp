#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "rolekit/hypergraph.hpp"
#include "rolekit/network.hpp"
#include "rolekit/partition.hpp"
#include "rolekit/reduction.hpp"

namespace rolekit::io {

using Json = nlohmann::ordered_json;

struct UndirectedDocument {
    std::string name;
    UndirectedHypergraph hypergraph;
};

/// One of the three network document kinds.
using NetworkDocument = std::variant<MultiNetwork, MultiHypergraph, UndirectedDocument>;

/// Reads and parses a JSON file. InputError naming the file on failure.
Json read_json(const std::filesystem::path& path);

/// Builds a network from a parsed document. Relations keep their document
/// order. InputError with a field path on any problem.
NetworkDocument parse_network(const Json& doc);
NetworkDocument load_network(const std::filesystem::path& path);

Json network_json(const MultiNetwork& net);
Json network_json(const MultiHypergraph& mh);
Json network_json(const UndirectedDocument& u);
Json network_json(const NetworkDocument& doc);

Partition parse_partition(const Json& doc, const ActorSetPtr& actors);
Partition load_partition(const std::filesystem::path& path, const ActorSetPtr& actors);
Json partition_json(const Partition& e);

ActorMap parse_map(const Json& doc, const ActorSetPtr& source, const ActorSetPtr& target);
ActorMap load_map(const std::filesystem::path& path, const ActorSetPtr& source, const ActorSetPtr& target);
Json map_json(const ActorMap& f);

/// Pretty-printed text with a trailing newline; keys appear in the order
/// built by the *_json functions.
std::string dump(const Json& doc);

/// Writes `text` to `path`, or to standard output when path is "-".
void write_text(const std::string& path, const std::string& text, std::ostream& stdout_stream);

const ActorSetPtr& actors_of(const NetworkDocument& doc);

/// Hypergraph view of any document: graphs are embedded with singleton
/// targets, undirected hypergraphs go through from_undirected.
MultiHypergraph as_hypergraph(const NetworkDocument& doc);

}  // namespace rolekit::io
