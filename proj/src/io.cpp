#include "proxkit/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "proxkit/errors.hpp"

namespace proxkit {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::pair<uint32_t, uint32_t>> parse_pairs(const json& arr, const char* key) {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    if (!arr.is_array()) throw ParseError(std::string(key) + " must be an array of pairs");
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned() ||
            !item[1].is_number_unsigned())
            throw ParseError(std::string(key) + " entries must be [i, j] index pairs");
        out.emplace_back(item[0].get<uint32_t>(), item[1].get<uint32_t>());
    }
    return out;
}

}  // namespace

const char* file_kind_name(FileKind k) {
    switch (k) {
        case FileKind::Lattice: return "lattice";
        case FileKind::Poset: return "poset";
        case FileKind::Relation: return "relation";
        case FileKind::Morphism: return "morphism";
        case FileKind::Gleason: return "gleason";
    }
    return "?";
}

InstanceFile parse_instance(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("instance file must be a JSON object");

    InstanceFile f;
    std::string kind;
    if (doc.contains("kind")) {
        if (!doc["kind"].is_string()) throw ParseError("kind must be a string");
        kind = doc["kind"].get<std::string>();
    } else if (doc.contains("map")) {
        kind = "morphism";
    } else if (doc.contains("R")) {
        kind = "gleason";
    } else if (doc.contains("pairs")) {
        kind = "relation";
    } else if (doc.contains("leq")) {
        kind = "lattice";
    } else {
        throw ParseError("cannot determine the instance kind");
    }

    if (kind == "lattice")
        f.kind = FileKind::Lattice;
    else if (kind == "poset")
        f.kind = FileKind::Poset;
    else if (kind == "relation")
        f.kind = FileKind::Relation;
    else if (kind == "morphism")
        f.kind = FileKind::Morphism;
    else if (kind == "gleason")
        f.kind = FileKind::Gleason;
    else
        throw ParseError("unknown kind '" + kind + "'");

    if (f.kind == FileKind::Lattice || f.kind == FileKind::Poset ||
        f.kind == FileKind::Gleason) {
        if (doc.contains("elements")) {
            if (!doc["elements"].is_array()) throw ParseError("elements must be an array");
            for (const auto& e : doc["elements"]) {
                if (!e.is_string()) throw ParseError("element names must be strings");
                f.elements.push_back(e.get<std::string>());
            }
        } else if (doc.contains("size")) {
            if (!doc["size"].is_number_unsigned()) throw ParseError("size must be a count");
            f.elements = default_names(doc["size"].get<uint32_t>());
        } else {
            throw ParseError("lattice/poset/gleason files need elements or size");
        }
        f.leq = parse_pairs(doc.value("leq", json::array()), "leq");
        for (auto [i, j] : f.leq)
            if (i >= f.elements.size() || j >= f.elements.size())
                throw ParseError("leq index out of range");
    }
    if (f.kind == FileKind::Relation) {
        if (!doc.contains("pairs")) throw ParseError("relation files need pairs");
        f.pairs = parse_pairs(doc["pairs"], "pairs");
    }
    if (f.kind == FileKind::Morphism) {
        if (!doc.contains("map") || !doc["map"].is_array())
            throw ParseError("morphism files need a map array");
        for (const auto& v : doc["map"]) {
            if (!v.is_number_unsigned()) throw ParseError("map entries must be indices");
            f.map.push_back(v.get<uint32_t>());
        }
    }
    if (f.kind == FileKind::Gleason) {
        if (!doc.contains("R")) throw ParseError("gleason files need an R pair list");
        f.r_pairs = parse_pairs(doc["R"], "R");
        for (auto [i, j] : f.r_pairs)
            if (i >= f.elements.size() || j >= f.elements.size())
                throw ParseError("R index out of range");
    }
    return f;
}

InstanceFile load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_instance(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string resolve_input(const std::string& arg) {
    namespace fs = std::filesystem;
    if (fs::exists(arg)) return arg;

    std::vector<std::string> dirs;
    if (const char* env = std::getenv("PROXKIT_CORPUS")) dirs.push_back(env);
#ifdef PROXKIT_FIXTURE_DIR
    dirs.push_back(PROXKIT_FIXTURE_DIR);
#endif
    std::string lower = arg;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (const std::string& dir : dirs)
        for (const std::string& name : {arg, lower, arg + ".json", lower + ".json"}) {
            fs::path candidate = fs::path(dir) / name;
            if (fs::exists(candidate)) return candidate.string();
        }
    throw IoError("cannot resolve input '" + arg +
                  "' (not a file, not in the corpus directory)");
}

Poset poset_from_instance(const InstanceFile& f) {
    if (f.kind != FileKind::Lattice && f.kind != FileKind::Poset &&
        f.kind != FileKind::Gleason)
        throw ParseError("expected a poset-like file");
    return close_order(f.leq, static_cast<uint32_t>(f.elements.size()), f.elements);
}

LatticePtr lattice_from_instance(const InstanceFile& f) {
    return lattice_ptr_from_poset(poset_from_instance(f));
}

Rel relation_from_instance(const InstanceFile& f, uint32_t carrier) {
    if (f.kind != FileKind::Relation) throw ParseError("expected a relation file");
    Rel rel(carrier);
    for (auto [i, j] : f.pairs) {
        if (i >= carrier || j >= carrier)
            throw ParseError("relation pair out of range for carrier " +
                             std::to_string(carrier));
        rel.set(i, j);
    }
    return rel;
}

GleasonSpace gleason_from_instance(const InstanceFile& f) {
    if (f.kind != FileKind::Gleason) throw ParseError("expected a gleason file");
    GleasonSpace g;
    g.order = poset_from_instance(f);
    g.r = Rel(g.order.size());
    for (auto [i, j] : f.r_pairs) g.r.set(i, j);
    return g;
}

namespace {

json pairs_to_json(const std::vector<std::pair<uint32_t, uint32_t>>& pairs) {
    json arr = json::array();
    for (auto [i, j] : pairs) arr.push_back({i, j});
    return arr;
}

}  // namespace

std::string poset_to_json(const Poset& p) {
    json doc;
    doc["kind"] = "poset";
    doc["elements"] = p.names();
    doc["leq"] = pairs_to_json(p.as_relation().pairs());
    return doc.dump(2) + "\n";
}

std::string relation_to_json(const Rel& r) {
    json doc;
    doc["kind"] = "relation";
    doc["pairs"] = pairs_to_json(r.pairs());
    return doc.dump(2) + "\n";
}

std::string morphism_to_json(const std::vector<uint32_t>& map) {
    json doc;
    doc["kind"] = "morphism";
    doc["map"] = map;
    return doc.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << text;
}

}  // namespace proxkit
