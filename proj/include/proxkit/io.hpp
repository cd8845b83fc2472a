#pragma once

#include <optional>
#include <string>
#include <vector>

#include "proxkit/gleason.hpp"
#include "proxkit/lattice.hpp"

namespace proxkit {

enum class FileKind { Lattice, Poset, Relation, Morphism, Gleason };

const char* file_kind_name(FileKind k);

// One JSON document per object. Orders are given as arbitrary generating
// pairs; the reflexive-transitive closure is applied on ingestion.
struct InstanceFile {
    FileKind kind = FileKind::Lattice;
    std::vector<std::string> elements;                   // lattice/poset/gleason
    std::vector<std::pair<uint32_t, uint32_t>> leq;      // lattice/poset/gleason
    std::vector<std::pair<uint32_t, uint32_t>> pairs;    // relation
    std::vector<uint32_t> map;                           // morphism
    std::vector<std::pair<uint32_t, uint32_t>> r_pairs;  // gleason
};

InstanceFile parse_instance(const std::string& text);  // ParseError on bad input
InstanceFile load_instance(const std::string& path);   // IoError / ParseError

// Resolves a CLI input: a literal path first, then name variants inside the
// corpus directory (PROXKIT_CORPUS, falling back to the built-in default).
std::string resolve_input(const std::string& arg);

Poset poset_from_instance(const InstanceFile& f);
LatticePtr lattice_from_instance(const InstanceFile& f);
Rel relation_from_instance(const InstanceFile& f, uint32_t carrier);
GleasonSpace gleason_from_instance(const InstanceFile& f);

std::string poset_to_json(const Poset& p);
std::string relation_to_json(const Rel& r);
std::string morphism_to_json(const std::vector<uint32_t>& map);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace proxkit
