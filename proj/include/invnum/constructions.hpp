#pragma once

#include <optional>
#include <random>
#include <string>

#include "invnum/oriented_graph.hpp"

namespace invnum {

/// TT_n: vertices v1..vn, arcs vi->vj for i < j.
OrientedGraph transitive(std::size_t n);
/// C_k: v1->v2->...->vk->v1. Requires k >= 3.
OrientedGraph directed_cycle(std::size_t k);

/// L -> R: disjoint union plus every arc from V(L) to V(R). Vertices of R
/// follow those of L.
OrientedGraph dijoin(const OrientedGraph& left, const OrientedGraph& right);

/// D[H]: vertex (a, x) has index a * |V(H)| + x.
OrientedGraph lex_product(const OrientedGraph& d, const OrientedGraph& h);

/// z-augmentation sigma(z, D): appends x then y with z->y, y->x, x->z and
/// all arcs from {x, y} to V(D) - z. A non-empty `tag` names the new
/// vertices x<tag>, y<tag>.
OrientedGraph augment(const OrientedGraph& d, Vertex z, const std::string& tag = "");

/// Q_n: TT_n with its hamiltonian path v1..vn reversed.
OrientedGraph q_tournament(std::size_t n);
/// V_n: TT_{n-1} on v1..v(n-1) plus x with N+(x) = {vi : i odd}. Requires n >= 2.
OrientedGraph v_tournament(std::size_t n);
/// T_k: transitive A, B, C of order k with A->B, B->C, C->A.
OrientedGraph abc_tournament(std::size_t k);
/// S_2(D): every arc uv becomes the path u -> x_uv -> y_uv -> v.
OrientedGraph second_subdivision(const OrientedGraph& d);

enum class CatalogName { TT, C, A6, B6, D5, R5, V5, V, Q, J, D7, H1, H2, T };

struct CatalogEntry {
    CatalogName name;
    /// Order parameter for the parametric families (TT, C, V, Q, T).
    std::optional<std::size_t> param;
};

/// Parses "A6", "TT" (with param), "TT5", "Q7", ...
CatalogEntry parse_catalog_name(const std::string& name, std::optional<std::size_t> param = {});
bool catalog_needs_param(CatalogName name);
std::string catalog_display_name(const CatalogEntry& entry);

/// Builds a named graph from its defining formula.
OrientedGraph catalog(const CatalogEntry& entry);
OrientedGraph catalog(const std::string& name, std::optional<std::size_t> param = {});

/// Builds a graph from a construction expression such as "Q7",
/// "dijoin(C3,V5)", "lex(TT3,C3)", "augment(C3,v1,1)" or "subdiv(C4)".
/// An augment vertex is a label or a 0-based index; the tag is optional.
OrientedGraph parse_construction(const std::string& expr);

OrientedGraph random_tournament(std::size_t n, std::mt19937_64& rng);
/// Each pair is joined with probability `density`, in a uniform direction.
OrientedGraph random_oriented_graph(std::size_t n, double density, std::mt19937_64& rng);

}  // namespace invnum
