#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "invnum/inversion.hpp"
#include "invnum/oriented_graph.hpp"

namespace invnum {

// Text format:
//   # any comment line
//   n m
//   u v        (m lines, arc u->v, 0-based)
// A comment of the form "# label <i> <name>" names vertex i.

OrientedGraph read_graph(std::istream& in);
OrientedGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const OrientedGraph& d);
void write_graph_file(const std::string& path, const OrientedGraph& d);

void write_dot(std::ostream& out, const OrientedGraph& d, const std::string& name = "D");

/// {"n": n, "arcs": [[u, v], ...]} plus "labels" when the graph has them.
nlohmann::json graph_to_json(const OrientedGraph& d);

nlohmann::json family_to_json(const DecyclingFamily& family);
/// Same family written with vertex labels instead of indices.
nlohmann::json family_labels_to_json(const OrientedGraph& d, const DecyclingFamily& family);
/// Reads {"family": [[...], ...]} (or a bare array of arrays).
DecyclingFamily family_from_json(const nlohmann::json& j, std::size_t order);

}  // namespace invnum
