// Chains of simplicial complexes inside Cl(V, Z, 1), homology, Sperner and spanning trees.
#pragma once

#include "ga/morphisms.hpp"

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace ga::discrete {

using Z = mpz_class;
using Chain = Multivector<Z>;
using ZMatrix = Matrix<Z>;

class SimplicialComplex {
public:
    // Closes the given simplices under subsets; `added` reports how many were missing.
    SimplicialComplex(std::vector<std::string> vertices, const std::vector<Mask>& simplices, std::size_t* added = nullptr);

    const std::vector<std::string>& vertices() const { return names_; }
    const std::set<Mask>& simplices() const { return simplices_; }
    const SigPtr<Z>& sig() const { return sig_; }
    int num_vertices() const { return int(names_.size()); }
    bool contains(Mask m) const { return simplices_.count(m) > 0; }
    // Simplices of dimension d (d + 1 vertices); d = -1 is the empty simplex.
    std::vector<Mask> of_dim(int d) const;
    int max_dim() const;
    int vertex_index(const std::string& name) const;

private:
    std::vector<std::string> names_;
    std::set<Mask> simplices_;
    SigPtr<Z> sig_;
};

// One simplex per line, vertex names separated by spaces; '#' starts a comment.
SimplicialComplex parse_complex(const std::string& text, std::size_t* added = nullptr);

// Sum of all generators.
Chain vertex_sum(const SigPtr<Z>& sig);

// s_V ⌞ x.
Chain boundary(const Chain& x);

// s_p ⌞ x with s_p the sum of all p-element vertex sets.
Chain generalized_boundary(const Chain& x, int p);

bool supported_on(const Chain& x, const SimplicialComplex& K);

// Matrix of the boundary from d-chains to (d-1)-chains in the given simplex orders.
ZMatrix boundary_matrix(const SimplicialComplex& K, int d);

struct Smith {
    ZMatrix D;          // diagonal, each entry dividing the next
    ZMatrix U, V;       // unimodular with U * D * V = M
    std::vector<Z> diagonal;
};

Smith smith_normal_form(const ZMatrix& M);

struct HomologyResult {
    int min_degree = 0;                     // -1 when reduced
    std::vector<long> betti;                // betti[d - min_degree]
    std::vector<std::vector<Z>> torsion;    // torsion coefficients per degree
    long betti_at(int d) const {
        int i = d - min_degree;
        return i >= 0 && i < int(betti.size()) ? betti[i] : 0;
    }
};

HomologyResult homology(const SimplicialComplex& K, bool reduced = false);

// Vertex map K -> L given as target vertex indices.
using VertexMap = std::vector<int>;

bool is_complex_morphism(const SimplicialComplex& K, const SimplicialComplex& L, const VertexMap& f);

// Outermorphism extension of a vertex map applied to a chain.
Chain apply_vertex_map(const VertexMap& f, const Chain& x, const SigPtr<Z>& target);

// W * (F x) with W the product of all target vertices.
Z content(const VertexMap& f, const Chain& x, const SigPtr<Z>& target);

// (W a) * (F ∂x) for a fixed target vertex a.
Z index(const VertexMap& f, const Chain& x, const SigPtr<Z>& target, int a);

// Blade of an ordered simplex: the sign of the sorting permutation times the sorted blade.
Chain oriented_simplex(const SigPtr<Z>& sig, const std::vector<int>& ordered);

struct Triangulation {
    SimplicialComplex complex;
    std::vector<std::array<int, 3>> triangles;  // positively oriented vertex triples
    std::array<int, 3> corners;                 // A, B, C
};

// Regular subdivision of a triangle into m*m small triangles.
Triangulation grid_triangulation(int m);

// Labels take values 0, 1, 2 for a, b, c.
struct SpernerResult {
    Z index;
    Z content;
    long complete_triangles;
};

// Throws std::invalid_argument when the labeling violates the boundary conditions.
void validate_sperner_labels(const Triangulation& T, const std::vector<int>& labels);
SpernerResult sperner_check(const Triangulation& T, const std::vector<int>& labels);

// Sperner input files: triangles one per line in positive orientation; labels as "vertex label" lines
// with a header "corners: A B C".
Triangulation parse_triangulation(const std::string& cplx_text, const std::string& labels_text, std::vector<int>& labels);

struct Graph {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;  // (earlier, later) in the vertex order
    int num_vertices() const { return int(names.size()); }
};

// Edge lines "a b"; optional header "order: a b c ...".
Graph parse_graph(const std::string& text);
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);
bool connected(const Graph& G);

// Laplacian δδ* as an outermorphism on the vertex algebra.
Outermorphism<Z> laplacian(const Graph& G, const SigPtr<Z>& sig);

// u * Δ^adj(v) with Δ^adj(x) = Δ(x V) V^†.
Z kirchhoff_pairing(const Graph& G, int u, int v);
Z spanning_tree_count(const Graph& G);
Z brute_force_spanning_trees(const Graph& G);

// Wedge of δ over an edge subset (indices into G.edges).
Chain delta_wedge(const Graph& G, const std::vector<int>& edge_subset, const SigPtr<Z>& sig);

}  // namespace ga::discrete
