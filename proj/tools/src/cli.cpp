#include "rolekit/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>

#include "rolekit/dot.hpp"
#include "rolekit/errors.hpp"
#include "rolekit/io.hpp"
#include "rolekit/reduction.hpp"
#include "rolekit/semigroup.hpp"

namespace rolekit::cli {

namespace {

struct PendingFile {
    std::string path;
    std::string body;
};

// Output destined for files; flushed only once the command has succeeded.
class Outputs {
public:
    explicit Outputs(std::ostream& out) : out_(out) {}
    void add(std::string path, std::string body) { files_.push_back({std::move(path), std::move(body)}); }
    void flush() {
        for (const auto& f : files_) io::write_text(f.path, f.body, out_);
    }

private:
    std::ostream& out_;
    std::vector<PendingFile> files_;
};

RegularityMode parse_mode(const std::string& m) {
    if (m == "out") return RegularityMode::outward;
    if (m == "in") return RegularityMode::inward;
    return RegularityMode::both;
}

ReductionDirection parse_direction(const std::string& d) {
    return d == "in" ? ReductionDirection::inward : ReductionDirection::outward;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string blocks_line(const Partition& e) {
    std::string line;
    for (const auto& b : e.blocks()) {
        if (!line.empty()) line += ' ';
        line += '{';
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) line += ',';
            line += e.actors()->label(b[i]);
        }
        line += '}';
    }
    return line;
}

std::string element_text(const RoleElement& e) {
    std::string s = "{";
    bool first = true;
    if (const auto* r = std::get_if<Relation>(&e)) {
        const auto& A = *r->actors();
        for (auto [a, b] : r->edges()) {
            if (!first) s += ',';
            first = false;
            s += "(" + A.label(a) + "," + A.label(b) + ")";
        }
    } else {
        const auto& h = std::get<FHyperStructure>(e);
        const auto& A = *h.actors();
        for (const auto& [a, u] : h.hyperedges()) {
            if (!first) s += ',';
            first = false;
            s += "(" + A.label(a) + ",{";
            for (std::size_t i = 0; i < u.size(); ++i) {
                if (i) s += ',';
                s += A.label(u[i]);
            }
            s += "})";
        }
    }
    return s + "}";
}

Composition make_composition(const std::string& kind, bool prune) {
    Composition c{parse_compose_kind(kind), prune};
    if (prune && c.kind != ComposeKind::loose) throw InputError("--prune-empty applies to loose composition only");
    return c;
}

std::vector<Generator> generators_for(const io::NetworkDocument& doc, const Composition& c) {
    if (c.kind == ComposeKind::graph) {
        const auto* net = std::get_if<MultiNetwork>(&doc);
        if (!net) throw InputError("graph composition needs a graph network document");
        return generators_of(*net);
    }
    return generators_of(io::as_hypergraph(doc));
}

// check-regular ------------------------------------------------------------

struct CheckRegular {
    std::string network, partition, mode = "both";
};

int cmd_check_regular(const CheckRegular& o, std::ostream& out) {
    auto doc = io::load_network(o.network);
    auto e = io::load_partition(o.partition, io::actors_of(doc));
    bool all = true;
    if (const auto* net = std::get_if<MultiNetwork>(&doc)) {
        const auto mode = parse_mode(o.mode);
        for (const auto& [name, r] : net->relations()) {
            bool ow = is_outward_regular(r, e);
            bool iw = is_inward_regular(r, e);
            out << name << ": outward " << yes_no(ow) << ", inward " << yes_no(iw) << "\n";
            all = all && is_regular(r, e, mode);
        }
        out << "verdict: " << (all ? "regular" : "not regular") << " (mode " << o.mode << ")\n";
    } else {
        auto mh = io::as_hypergraph(doc);
        for (const auto& [name, h] : mh.relations()) {
            bool ok = is_regular_hyper(h, e);
            out << name << ": regular " << yes_no(ok) << "\n";
            all = all && ok;
        }
        out << "verdict: " << (all ? "regular" : "not regular") << "\n";
    }
    return all ? kOk : kNegative;
}

// max-regular --------------------------------------------------------------

struct MaxRegular {
    std::string network, mode = "both", seed, output = "-";
};

int cmd_max_regular(const MaxRegular& o, Outputs& files) {
    auto doc = io::load_network(o.network);
    std::optional<Partition> seed;
    if (!o.seed.empty()) seed = io::load_partition(o.seed, io::actors_of(doc));
    Partition p = std::holds_alternative<MultiNetwork>(doc)
                      ? max_regular_partition(std::get<MultiNetwork>(doc), parse_mode(o.mode), seed)
                      : max_regular_hyper_partition(io::as_hypergraph(doc), seed);
    files.add(o.output, io::dump(io::partition_json(p)));
    return kOk;
}

// blockmodel ---------------------------------------------------------------

struct Blockmodel {
    std::string network, partition, output = "-", dot;
};

int cmd_blockmodel(const Blockmodel& o, Outputs& files) {
    auto doc = io::load_network(o.network);
    auto e = io::load_partition(o.partition, io::actors_of(doc));
    if (const auto* net = std::get_if<MultiNetwork>(&doc)) {
        auto q = blockmodel_network(*net, e);
        files.add(o.output, io::dump(io::network_json(q)));
        if (!o.dot.empty()) files.add(o.dot, dot::export_dot(q));
    } else {
        auto q = blockmodel_multi_hypergraph(io::as_hypergraph(doc), e);
        files.add(o.output, io::dump(io::network_json(q)));
        if (!o.dot.empty()) files.add(o.dot, dot::export_dot(q));
    }
    return kOk;
}

// roles --------------------------------------------------------------------

struct Roles {
    std::string network, compose = "graph", table;
    bool prune = false, words = false, omit_zero = false;
    std::size_t cap = kDefaultClosureCap;
};

int cmd_roles(const Roles& o, std::ostream& out, std::ostream& err, Outputs& files) {
    auto doc = io::load_network(o.network);
    auto c = make_composition(o.compose, o.prune);
    auto s = generate_closure(generators_for(doc, c), c, o.cap);

    std::ostringstream summary;
    summary << "composition: " << to_string(c) << "\n";
    summary << "elements: " << s.size() << "\n";
    summary << "nonzero: " << s.nonzero_count() << "\n";
    auto absorbing = find_absorbing(s);
    auto identity = find_identity(s);
    summary << "absorbing: " << (absorbing ? s.word_label(*absorbing) : "none") << "\n";
    summary << "identity: " << (identity ? s.word_label(*identity) : "none") << "\n";
    if (o.words) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            summary << s.word_label(i) << "\t" << s.word_text(s.word(i)) << "\t" << element_text(s.element(i)) << "\n";
        }
    }
    // Keep standard output clean when the table itself goes there.
    (o.table == "-" ? err : out) << summary.str();
    if (!o.table.empty()) files.add(o.table, to_csv(multiplication_table(s, o.omit_zero)));
    return kOk;
}

// induce -------------------------------------------------------------------

struct Induce {
    std::string source, map, target, compose = "graph", direction = "out";
    bool prune = false;
    std::size_t cap = kDefaultClosureCap;
};

int cmd_induce(const Induce& o, std::ostream& out) {
    auto src = io::load_network(o.source);
    auto dst = io::load_network(o.target);
    auto f = io::load_map(o.map, io::actors_of(src), io::actors_of(dst));
    auto c = make_composition(o.compose, o.prune);

    ReductionReport rep;
    if (c.kind == ComposeKind::graph) {
        const auto* s = std::get_if<MultiNetwork>(&src);
        const auto* d = std::get_if<MultiNetwork>(&dst);
        if (!s || !d) throw InputError("graph composition needs graph network documents");
        rep = validate_positional_reduction_graph(f, *s, *d, parse_direction(o.direction));
    } else {
        rep = validate_positional_reduction_hyper(f, io::as_hypergraph(src), io::as_hypergraph(dst));
    }
    out << "surjective: " << yes_no(rep.surjective) << "\n";
    out << "preserving: " << yes_no(rep.preserving) << "\n";
    out << "reflecting: " << yes_no(rep.reflecting) << "\n";
    out << "matches blockmodel: " << yes_no(rep.matches_blockmodel) << "\n";
    if (!rep.detail.empty()) out << "note: " << rep.detail << "\n";

    auto rs = generate_closure(generators_for(src, c), c, o.cap);
    auto rd = generate_closure(generators_for(dst, c), c, o.cap);
    auto result = generator_induced_hom(rs, rd);
    if (const auto* fail = std::get_if<WellDefinednessFailure>(&result)) {
        out << "hom: not well defined\n";
        out << "witness: " << describe(*fail, rs, rd) << "\n";
        return kNegative;
    }
    const auto& hom = std::get<SemigroupHom>(result);
    out << "hom:\n";
    for (std::size_t i = 0; i < rs.size(); ++i) {
        out << "  " << rs.word_label(i) << " -> " << rd.word_label(hom.image[i]) << "\n";
    }
    out << "hom surjective: " << yes_no(hom.surjective) << "\n";
    return rep.ok() && hom.surjective ? kOk : kNegative;
}

// functor-check ------------------------------------------------------------

struct FunctorCheck {
    std::vector<std::string> stages;
    std::string compose = "graph", direction = "out";
    bool prune = false;
    std::size_t cap = kDefaultClosureCap;
};

struct LoadedStage {
    io::NetworkDocument network;
    std::optional<io::Json> map;
};

LoadedStage load_stage(const std::string& path) {
    auto doc = io::read_json(path);
    try {
        if (!doc.is_object() || !doc.contains("network")) throw InputError("missing field \"network\"");
        for (const auto& item : doc.items()) {
            if (item.key() != "network" && item.key() != "map") {
                throw InputError("unexpected field \"" + item.key() + "\"");
            }
        }
        const auto& n = doc["network"];
        LoadedStage st{n.is_string() ? io::load_network(std::filesystem::path(path).parent_path() /
                                                         n.get<std::string>())
                                     : io::parse_network(n),
                       std::nullopt};
        if (doc.contains("map")) {
            io::Json m = io::Json::object();
            m["map"] = doc["map"];
            st.map = std::move(m);
        }
        return st;
    } catch (const InputError& e) {
        throw InputError("\"" + path + "\": " + e.what());
    }
}

int cmd_functor_check(const FunctorCheck& o, std::ostream& out) {
    auto c = make_composition(o.compose, o.prune);
    std::vector<LoadedStage> loaded;
    for (const auto& p : o.stages) loaded.push_back(load_stage(p));

    std::vector<std::optional<ActorMap>> maps;
    for (std::size_t i = 0; i < loaded.size(); ++i) {
        if (i == 0) {
            if (loaded[i].map) throw InputError("\"" + o.stages[0] + "\": the first stage must not carry a map");
            maps.emplace_back();
            continue;
        }
        if (!loaded[i].map) throw InputError("\"" + o.stages[i] + "\": missing field \"map\"");
        try {
            maps.emplace_back(io::parse_map(*loaded[i].map, io::actors_of(loaded[i - 1].network),
                                            io::actors_of(loaded[i].network)));
        } catch (const InputError& e) {
            throw InputError("\"" + o.stages[i] + "\": " + e.what());
        }
    }

    FunctorialityReport rep;
    try {
        if (c.kind == ComposeKind::graph) {
            std::vector<GraphStage> chain;
            for (std::size_t i = 0; i < loaded.size(); ++i) {
                const auto* net = std::get_if<MultiNetwork>(&loaded[i].network);
                if (!net) throw InputError("\"" + o.stages[i] + "\": graph composition needs a graph network");
                chain.push_back({*net, maps[i]});
            }
            rep = check_functoriality(chain, parse_direction(o.direction), o.cap);
        } else {
            std::vector<HyperStage> chain;
            for (std::size_t i = 0; i < loaded.size(); ++i) {
                chain.push_back({io::as_hypergraph(loaded[i].network), maps[i]});
            }
            rep = check_functoriality(chain, c, o.cap);
        }
    } catch (const PreconditionError& e) {
        out << "stages: " << e.what() << "\n";
        out << "verdict: not a chain of positional reductions\n";
        return kNegative;
    }

    out << "semigroup sizes:";
    for (auto n : rep.semigroup_sizes) out << " " << n;
    out << "\n";
    out << "identity law: " << yes_no(rep.identity_law) << "\n";
    out << "composition law: " << yes_no(rep.composition_law) << "\n";
    out << "images are blockmodels: " << yes_no(rep.images_are_pushforwards) << "\n";
    if (!rep.witness.empty()) out << "witness: " << rep.witness << "\n";
    out << "verdict: " << (rep.holds ? "functorial" : "not functorial") << "\n";
    return rep.holds ? kOk : kNegative;
}

// convert ------------------------------------------------------------------

struct Convert {
    std::string undirected, output = "-";
};

int cmd_convert(const Convert& o, Outputs& files) {
    auto doc = io::load_network(o.undirected);
    const auto* u = std::get_if<io::UndirectedDocument>(&doc);
    if (!u) throw InputError("\"" + o.undirected + "\": expected an undirected hypergraph document");
    files.add(o.output, io::dump(io::network_json(io::as_hypergraph(doc))));
    return kOk;
}

// oracle -------------------------------------------------------------------

struct Oracle {
    std::string what, network, mode = "both", output = "-";
};

int cmd_oracle(const Oracle& o, std::ostream& out, Outputs& files) {
    auto doc = io::load_network(o.network);
    if (o.what == "partitions") {
        auto all = enumerate_partitions(io::actors_of(doc));
        out << "count: " << all.size() << "\n";
        for (const auto& p : all) out << blocks_line(p) << "\n";
        return kOk;
    }
    Partition p = std::holds_alternative<MultiNetwork>(doc)
                      ? coarsest_regular_bruteforce(std::get<MultiNetwork>(doc), parse_mode(o.mode))
                      : coarsest_regular_hyper_bruteforce(io::as_hypergraph(doc));
    files.add(o.output, io::dump(io::partition_json(p)));
    return kOk;
}

// dot ----------------------------------------------------------------------

struct Dot {
    std::string network, partition, output = "-";
};

int cmd_dot(const Dot& o, Outputs& files) {
    auto doc = io::load_network(o.network);
    std::optional<Partition> e;
    if (!o.partition.empty()) e = io::load_partition(o.partition, io::actors_of(doc));
    if (const auto* net = std::get_if<MultiNetwork>(&doc)) {
        files.add(o.output, dot::export_dot(e ? blockmodel_network(*net, *e) : *net));
    } else {
        auto mh = io::as_hypergraph(doc);
        files.add(o.output, dot::export_dot(e ? blockmodel_multi_hypergraph(mh, *e) : mh));
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Positional and role analysis of multirelational networks and F-hypergraphs", "rolekit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "rolekit 0.1.0");

    const std::vector<std::string> modes{"out", "in", "both"};
    const std::vector<std::string> kinds{"graph", "tight", "loose"};
    const std::vector<std::string> directions{"out", "in"};

    CheckRegular check;
    auto* c_check = app.add_subcommand("check-regular", "Test whether a partition is a regular equivalence");
    c_check->add_option("--network", check.network, "Network document")->required();
    c_check->add_option("--partition", check.partition, "Partition document")->required();
    c_check->add_option("--mode", check.mode, "out, in or both")->check(CLI::IsMember(modes));

    MaxRegular maxr;
    auto* c_max = app.add_subcommand("max-regular", "Coarsest regular partition refining a seed");
    c_max->add_option("--network", maxr.network, "Network document")->required();
    c_max->add_option("--mode", maxr.mode, "out, in or both (graphs only)")->check(CLI::IsMember(modes));
    c_max->add_option("--seed", maxr.seed, "Seed partition document (default: one block)");
    c_max->add_option("-o,--output", maxr.output, "Output file, - for standard output");

    Blockmodel bm;
    auto* c_bm = app.add_subcommand("blockmodel", "Quotient a network by a partition");
    c_bm->add_option("--network", bm.network, "Network document")->required();
    c_bm->add_option("--partition", bm.partition, "Partition document")->required();
    c_bm->add_option("-o,--output", bm.output, "Output file, - for standard output");
    c_bm->add_option("--dot", bm.dot, "Also write the blockmodel as DOT");

    Roles roles;
    auto* c_roles = app.add_subcommand("roles", "Generate the role semigroup");
    c_roles->add_option("--network", roles.network, "Network document")->required();
    c_roles->add_option("--compose", roles.compose, "graph, tight or loose")->check(CLI::IsMember(kinds));
    c_roles->add_flag("--prune-empty", roles.prune, "Drop empty-target hyperedges after loose composition");
    c_roles->add_option("--cap", roles.cap, "Maximum number of elements")->check(CLI::PositiveNumber);
    c_roles->add_option("--table", roles.table, "Write the multiplication table as CSV (- for standard output)");
    c_roles->add_flag("--words", roles.words, "List every element with its word");
    c_roles->add_flag("--omit-zero", roles.omit_zero, "Leave the zero element out of the table");

    Induce ind;
    auto* c_ind = app.add_subcommand("induce", "Role reduction induced by an actor map");
    c_ind->add_option("--source", ind.source, "Source network document")->required();
    c_ind->add_option("--map", ind.map, "Map document")->required();
    c_ind->add_option("--target", ind.target, "Target network document")->required();
    c_ind->add_option("--compose", ind.compose, "graph, tight or loose")->check(CLI::IsMember(kinds));
    c_ind->add_flag("--prune-empty", ind.prune, "Drop empty-target hyperedges after loose composition");
    c_ind->add_option("--direction", ind.direction, "out or in (graphs only)")->check(CLI::IsMember(directions));
    c_ind->add_option("--cap", ind.cap, "Maximum number of elements")->check(CLI::PositiveNumber);

    FunctorCheck fc;
    auto* c_fc = app.add_subcommand("functor-check", "Check Role on a chain of positional reductions");
    c_fc->add_option("--stages", fc.stages, "Stage documents in chain order")->required();
    c_fc->add_option("--compose", fc.compose, "graph, tight or loose")->check(CLI::IsMember(kinds));
    c_fc->add_flag("--prune-empty", fc.prune, "Drop empty-target hyperedges after loose composition");
    c_fc->add_option("--direction", fc.direction, "out or in (graphs only)")->check(CLI::IsMember(directions));
    c_fc->add_option("--cap", fc.cap, "Maximum number of elements")->check(CLI::PositiveNumber);

    Convert conv;
    auto* c_conv = app.add_subcommand("convert", "Embed an undirected hypergraph as an F-hypergraph");
    c_conv->add_option("--undirected", conv.undirected, "Undirected hypergraph document")->required();
    c_conv->add_option("-o,--output", conv.output, "Output file, - for standard output");

    Oracle orc;
    auto* c_orc = app.add_subcommand("oracle", "Brute-force enumeration for small actor sets");
    c_orc->add_option("what", orc.what, "partitions or coarsest")
        ->required()
        ->check(CLI::IsMember({"partitions", "coarsest"}));
    c_orc->add_option("--network", orc.network, "Network document")->required();
    c_orc->add_option("--mode", orc.mode, "out, in or both (graphs only)")->check(CLI::IsMember(modes));
    c_orc->add_option("-o,--output", orc.output, "Output file, - for standard output");

    Dot dt;
    auto* c_dot = app.add_subcommand("dot", "Export a network or its blockmodel as DOT");
    c_dot->add_option("--network", dt.network, "Network document")->required();
    c_dot->add_option("--partition", dt.partition, "Export the blockmodel by this partition");
    c_dot->add_option("-o,--output", dt.output, "Output file, - for standard output");

    std::vector<const char*> argv{"rolekit"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    Outputs files(out);
    try {
        int code = kOk;
        if (c_check->parsed()) code = cmd_check_regular(check, out);
        else if (c_max->parsed()) code = cmd_max_regular(maxr, files);
        else if (c_bm->parsed()) code = cmd_blockmodel(bm, files);
        else if (c_roles->parsed()) code = cmd_roles(roles, out, err, files);
        else if (c_ind->parsed()) code = cmd_induce(ind, out);
        else if (c_fc->parsed()) code = cmd_functor_check(fc, out);
        else if (c_conv->parsed()) code = cmd_convert(conv, files);
        else if (c_orc->parsed()) code = cmd_oracle(orc, out, files);
        else if (c_dot->parsed()) code = cmd_dot(dt, files);
        files.flush();
        return code;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << " (reached " << e.reached() << ")\n";
        return kResourceCap;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const StructuralError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kNegative;
    }
}

}  // namespace rolekit::cli
