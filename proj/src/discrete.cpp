#include "ga/discrete.hpp"

#include "ga/products.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ga::discrete {

namespace {

std::vector<std::string> split_words(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::string strip_comment(const std::string& line) {
    auto p = line.find('#');
    return p == std::string::npos ? line : line.substr(0, p);
}

std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = strip_comment(line);
        if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
    }
    return out;
}

int intern(std::vector<std::string>& names, const std::string& n) {
    auto it = std::find(names.begin(), names.end(), n);
    if (it != names.end()) return int(it - names.begin());
    names.push_back(n);
    return int(names.size()) - 1;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices, const std::vector<Mask>& simplices, std::size_t* added)
    : names_(std::move(vertices)) {
    if (names_.size() > 62) throw std::invalid_argument("too many vertices");
    sig_ = Signature<Z>::counts(int(names_.size()), 0, 0);
    std::size_t given = 0;
    std::set<Mask> seen;
    for (Mask s : simplices) {
        if (s & ~sig_->full()) throw std::out_of_range("simplex uses unknown vertex");
        if (seen.insert(s).second) ++given;
        // all subsets of s
        Mask sub = s;
        while (true) {
            simplices_.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & s;
        }
    }
    simplices_.insert(0);
    if (added) {
        std::size_t already = 0;
        for (Mask s : seen) already += simplices_.count(s);
        *added = simplices_.size() - already;
    }
}

std::vector<Mask> SimplicialComplex::of_dim(int d) const {
    std::vector<Mask> out;
    for (Mask m : simplices_)
        if (grade(m) == d + 1) out.push_back(m);
    return out;
}

int SimplicialComplex::max_dim() const {
    int d = -1;
    for (Mask m : simplices_) d = std::max(d, grade(m) - 1);
    return d;
}

int SimplicialComplex::vertex_index(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw std::invalid_argument("unknown vertex '" + name + "'");
    return int(it - names_.begin());
}

SimplicialComplex parse_complex(const std::string& text, std::size_t* added) {
    std::vector<std::string> names;
    std::vector<std::vector<int>> raw;
    for (const auto& line : content_lines(text)) {
        std::vector<int> s;
        for (const auto& w : split_words(line)) s.push_back(intern(names, w));
        raw.push_back(std::move(s));
    }
    if (names.size() > 62) throw std::invalid_argument("too many vertices");
    std::vector<Mask> masks;
    for (const auto& s : raw) {
        Mask m = 0;
        for (int i : s) {
            if (m & (Mask(1) << i)) throw std::invalid_argument("repeated vertex in simplex");
            m |= Mask(1) << i;
        }
        masks.push_back(m);
    }
    return SimplicialComplex(names, masks, added);
}

Chain vertex_sum(const SigPtr<Z>& sig) {
    Chain s(sig);
    for (int i = 0; i < sig->dim(); ++i) s.add_term(Mask(1) << i, 1);
    return s;
}

Chain boundary(const Chain& x) { return left_inner(vertex_sum(x.sig()), x); }

Chain generalized_boundary(const Chain& x, int p) {
    const auto& sig = x.sig();
    Chain s(sig);
    Mask full = sig->full();
    for (Mask m = 0;; m = (m - full) & full) {  // all submasks of full
        if (grade(m) == p) s.add_term(m, 1);
        if (m == full) break;
    }
    return left_inner(s, x);
}

bool supported_on(const Chain& x, const SimplicialComplex& K) {
    for (const auto& [m, v] : x.terms())
        if (!K.contains(m)) return false;
    return true;
}

ZMatrix boundary_matrix(const SimplicialComplex& K, int d) {
    auto cols = K.of_dim(d);
    auto rows = K.of_dim(d - 1);
    std::map<Mask, std::size_t> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
    ZMatrix M(rows.size(), cols.size());
    auto s = vertex_sum(K.sig());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto b = left_inner(s, Chain::blade(K.sig(), cols[j]));
        for (const auto& [m, v] : b.terms()) M(row_of.at(m), j) = v;
    }
    return M;
}

Smith smith_normal_form(const ZMatrix& M) {
    const std::size_t r = M.rows(), c = M.cols();
    ZMatrix A = M;
    ZMatrix U = ZMatrix::identity(r), V = ZMatrix::identity(c);

    // Row op on A is mirrored by the inverse column op on U, and vice versa for V.
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < c; ++k) std::swap(A(i, k), A(j, k));
        for (std::size_t k = 0; k < r; ++k) std::swap(U(k, i), U(k, j));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Z& q) {  // row dst += q row src
        for (std::size_t k = 0; k < c; ++k) A(dst, k) += q * A(src, k);
        for (std::size_t k = 0; k < r; ++k) U(k, src) -= q * U(k, dst);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t k = 0; k < c; ++k) A(i, k) = -A(i, k);
        for (std::size_t k = 0; k < r; ++k) U(k, i) = -U(k, i);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < r; ++k) std::swap(A(k, i), A(k, j));
        for (std::size_t k = 0; k < c; ++k) std::swap(V(i, k), V(j, k));
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Z& q) {  // col dst += q col src
        for (std::size_t k = 0; k < r; ++k) A(k, dst) += q * A(k, src);
        for (std::size_t k = 0; k < c; ++k) V(src, k) -= q * V(dst, k);
    };

    std::vector<Z> diag;
    const std::size_t steps = std::min(r, c);
    for (std::size_t t = 0; t < steps; ++t) {
        // pivot: smallest nonzero magnitude in the remaining block
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j)
                if (sgn(A(i, j)) != 0 && (!found || mpz_cmpabs(A(i, j).get_mpz_t(), A(pi, pj).get_mpz_t()) < 0)) {
                    found = true;
                    pi = i;
                    pj = j;
                }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        // nearest-integer quotient keeps remainders at most half the pivot
        auto quotient = [](const Z& a, const Z& p) {
            Z q, twice = 2 * a + p;
            Z den = 2 * p;
            mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den.get_mpz_t());
            return q;
        };
        while (true) {
            for (std::size_t i = t + 1; i < r; ++i)
                if (sgn(A(i, t)) != 0) add_row(i, t, Z(-quotient(A(i, t), A(t, t))));
            for (std::size_t j = t + 1; j < c; ++j)
                if (sgn(A(t, j)) != 0) add_col(j, t, Z(-quotient(A(t, j), A(t, t))));
            // smallest leftover in the pivot row or column becomes the next pivot
            std::size_t bi = t, bj = t;
            for (std::size_t i = t + 1; i < r; ++i)
                if (sgn(A(i, t)) != 0 && mpz_cmpabs(A(i, t).get_mpz_t(), A(bi, bj).get_mpz_t()) < 0) bi = i, bj = t;
            for (std::size_t j = t + 1; j < c; ++j)
                if (sgn(A(t, j)) != 0 && mpz_cmpabs(A(t, j).get_mpz_t(), A(bi, bj).get_mpz_t()) < 0) bi = t, bj = j;
            if (bi != t || bj != t) {
                swap_rows(t, bi);
                swap_cols(t, bj);
                continue;
            }
            // divisibility of the remaining block
            bool fixed = false;
            for (std::size_t i = t + 1; i < r && !fixed; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (!mpz_divisible_p(A(i, j).get_mpz_t(), A(t, t).get_mpz_t())) {
                        add_row(t, i, Z(1));
                        fixed = true;
                        break;
                    }
            if (!fixed) break;
        }
        if (sgn(A(t, t)) < 0) negate_row(t);
        diag.push_back(A(t, t));
    }
    return Smith{A, U, V, diag};
}

HomologyResult homology(const SimplicialComplex& K, bool reduced) {
    HomologyResult res;
    res.min_degree = reduced ? -1 : 0;
    const int top = K.max_dim();
    if (top < res.min_degree) return res;
    // rank and invariant factors of ∂_d for d in [min+1, top]
    std::map<int, std::size_t> rank;
    std::map<int, std::vector<Z>> factors;
    for (int d = res.min_degree + 1; d <= top; ++d) {
        auto snf = smith_normal_form(boundary_matrix(K, d));
        rank[d] = snf.diagonal.size();
        for (const auto& v : snf.diagonal)
            if (v > 1) factors[d].push_back(v);
    }
    for (int d = res.min_degree; d <= top; ++d) {
        long cd = long(K.of_dim(d).size());
        long b = cd - long(rank.count(d) ? rank[d] : 0) - long(rank.count(d + 1) ? rank[d + 1] : 0);
        res.betti.push_back(b);
        res.torsion.push_back(factors.count(d + 1) ? factors[d + 1] : std::vector<Z>{});
    }
    return res;
}

bool is_complex_morphism(const SimplicialComplex& K, const SimplicialComplex& L, const VertexMap& f) {
    if (int(f.size()) != K.num_vertices()) return false;
    for (int v : f)
        if (v < 0 || v >= L.num_vertices()) return false;
    for (Mask s : K.simplices()) {
        Mask img = 0;
        for (int i : mask_indices(s)) img |= Mask(1) << f[i];
        if (!L.contains(img)) return false;
    }
    return true;
}

Chain apply_vertex_map(const VertexMap& f, const Chain& x, const SigPtr<Z>& target) {
    Chain out(target);
    for (const auto& [mask, v] : x.terms()) {
        Chain acc = Chain::scalar(target, v);
        for (int i : mask_indices(mask)) {
            if (i >= int(f.size())) throw std::out_of_range("vertex map too short");
            acc = outer(acc, Chain::gen(target, f[i]));
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    return out;
}

Z content(const VertexMap& f, const Chain& x, const SigPtr<Z>& target) {
    return scalar_product(pseudoscalar(target), apply_vertex_map(f, x, target));
}

Z index(const VertexMap& f, const Chain& x, const SigPtr<Z>& target, int a) {
    auto Wa = pseudoscalar(target) * Chain::gen(target, a);
    return scalar_product(Wa, apply_vertex_map(f, boundary(x), target));
}

Chain oriented_simplex(const SigPtr<Z>& sig, const std::vector<int>& ordered) {
    Chain acc = Chain::scalar(sig, 1);
    for (int i : ordered) acc = outer(acc, Chain::gen(sig, i));
    return acc;
}

Triangulation grid_triangulation(int m) {
    if (m < 1) throw std::invalid_argument("subdivision level must be positive");
    std::vector<std::string> names;
    std::map<std::pair<int, int>, int> id;
    for (int j = 0; j <= m; ++j)
        for (int i = 0; i + j <= m; ++i) {
            id[{i, j}] = int(names.size());
            names.push_back("p" + std::to_string(i) + "_" + std::to_string(j));
        }
    std::vector<std::array<int, 3>> tris;
    std::vector<Mask> masks;
    auto add = [&](int a, int b, int c) {
        tris.push_back({a, b, c});
        masks.push_back((Mask(1) << a) | (Mask(1) << b) | (Mask(1) << c));
    };
    for (int j = 0; j < m; ++j)
        for (int i = 0; i + j < m; ++i) {
            add(id[{i, j}], id[{i + 1, j}], id[{i, j + 1}]);
            if (i + j + 1 < m) add(id[{i + 1, j}], id[{i + 1, j + 1}], id[{i, j + 1}]);
        }
    return Triangulation{SimplicialComplex(names, masks), tris, {id[{0, 0}], id[{m, 0}], id[{0, m}]}};
}

namespace {

// Boundary cycle of the triangulated disc, starting at corner A.
std::vector<int> boundary_cycle(const Triangulation& T) {
    std::map<std::pair<int, int>, int> edge_count;
    for (const auto& t : T.triangles)
        for (int k = 0; k < 3; ++k) {
            int a = t[k], b = t[(k + 1) % 3];
            edge_count[{std::min(a, b), std::max(a, b)}]++;
        }
    std::map<int, std::vector<int>> adj;
    for (const auto& [e, n] : edge_count)
        if (n == 1) {
            adj[e.first].push_back(e.second);
            adj[e.second].push_back(e.first);
        }
    for (const auto& [v, nb] : adj)
        if (nb.size() != 2) throw std::invalid_argument("triangulation boundary is not a simple cycle");
    int start = T.corners[0];
    if (!adj.count(start)) throw std::invalid_argument("corner is not on the boundary");
    std::vector<int> cycle{start};
    int prev = start, cur = adj[start][0];
    while (cur != start) {
        cycle.push_back(cur);
        int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        if (cycle.size() > adj.size()) throw std::invalid_argument("triangulation boundary is not a simple cycle");
    }
    if (cycle.size() != adj.size()) throw std::invalid_argument("triangulation boundary is not a simple cycle");
    return cycle;
}

}  // namespace

void validate_sperner_labels(const Triangulation& T, const std::vector<int>& labels) {
    if (int(labels.size()) != T.complex.num_vertices()) throw std::invalid_argument("every vertex needs a label");
    for (int l : labels)
        if (l < 0 || l > 2) throw std::invalid_argument("labels must be a, b or c");
    for (int k = 0; k < 3; ++k)
        if (labels[T.corners[k]] != k) throw std::invalid_argument("corners must be labeled a, b, c");
    auto cycle = boundary_cycle(T);
    auto pos = [&](int v) { return int(std::find(cycle.begin(), cycle.end(), v) - cycle.begin()); };
    int pb = pos(T.corners[1]), pc = pos(T.corners[2]);
    if (pb == int(cycle.size()) || pc == int(cycle.size())) throw std::invalid_argument("corner is not on the boundary");
    // walk A -> first corner -> second corner -> A
    int first = std::min(pb, pc), second = std::max(pb, pc);
    int first_label = labels[cycle[first]], second_label = labels[cycle[second]];
    auto check_arc = [&](int from, int to, int la, int lb) {
        for (int i = from; i <= to; ++i) {
            int l = labels[cycle[i % cycle.size()]];
            if (l != la && l != lb)
                throw std::invalid_argument("boundary labeling violation at vertex '" + T.complex.vertices()[cycle[i % cycle.size()]] + "'");
        }
    };
    check_arc(0, first, 0, first_label);
    check_arc(first, second, first_label, second_label);
    check_arc(second, int(cycle.size()), second_label, 0);
}

SpernerResult sperner_check(const Triangulation& T, const std::vector<int>& labels) {
    validate_sperner_labels(T, labels);
    const auto& sig = T.complex.sig();
    Chain x(sig);
    long complete = 0;
    for (const auto& t : T.triangles) {
        x += oriented_simplex(sig, {t[0], t[1], t[2]});
        int seen = (1 << labels[t[0]]) | (1 << labels[t[1]]) | (1 << labels[t[2]]);
        if (seen == 7) ++complete;
    }
    auto target = Signature<Z>::counts(3, 0, 0);
    VertexMap f(labels.begin(), labels.end());
    return SpernerResult{index(f, x, target, 0), content(f, x, target), complete};
}

Triangulation parse_triangulation(const std::string& cplx_text, const std::string& labels_text, std::vector<int>& labels) {
    std::vector<std::string> names;
    std::vector<std::array<int, 3>> tris;
    for (const auto& line : content_lines(cplx_text)) {
        auto w = split_words(line);
        bool flip = false;
        if (!w.empty() && (w[0] == "-" || w[0] == "+")) {
            flip = w[0] == "-";
            w.erase(w.begin());
        }
        if (w.size() != 3) throw std::invalid_argument("triangulation lines need three vertices");
        std::array<int, 3> t{intern(names, w[0]), intern(names, w[1]), intern(names, w[2])};
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) throw std::invalid_argument("repeated vertex in simplex");
        if (flip) std::swap(t[1], t[2]);
        tris.push_back(t);
    }
    std::vector<Mask> masks;
    for (const auto& t : tris) masks.push_back((Mask(1) << t[0]) | (Mask(1) << t[1]) | (Mask(1) << t[2]));
    SimplicialComplex K(names, masks);

    std::array<int, 3> corners{-1, -1, -1};
    labels.assign(names.size(), -1);
    for (const auto& line : content_lines(labels_text)) {
        auto w = split_words(line);
        if (!w.empty() && w[0] == "corners:") {
            if (w.size() != 4) throw std::invalid_argument("corners header needs three vertices");
            for (int k = 0; k < 3; ++k) corners[k] = K.vertex_index(w[k + 1]);
            continue;
        }
        if (w.size() != 2) throw std::invalid_argument("label lines need a vertex and a label");
        int v = K.vertex_index(w[0]);
        if (w[1] == "a") labels[v] = 0;
        else if (w[1] == "b") labels[v] = 1;
        else if (w[1] == "c") labels[v] = 2;
        else throw std::invalid_argument("labels must be a, b or c");
    }
    if (corners[0] < 0) throw std::invalid_argument("missing corners header");
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] < 0) throw std::invalid_argument("vertex '" + names[i] + "' has no label");
    return Triangulation{K, tris, corners};
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph G;
    for (int i = 0; i < n; ++i) G.names.push_back("v" + std::to_string(i + 1));
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
        if (a == b) throw std::invalid_argument("graph has a loop");
        if (a < 0 || b < 0 || a >= n || b >= n) throw std::out_of_range("edge endpoint out of range");
        auto e = std::make_pair(std::min(a, b), std::max(a, b));
        if (!seen.insert(e).second) throw std::invalid_argument("graph has a repeated edge");
        G.edges.push_back(e);
    }
    return G;
}

Graph parse_graph(const std::string& text) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> raw;
    bool ordered = false;
    for (const auto& line : content_lines(text)) {
        auto w = split_words(line);
        if (w[0] == "order:") {
            if (ordered || !raw.empty()) throw std::invalid_argument("order header must come first");
            ordered = true;
            for (std::size_t i = 1; i < w.size(); ++i) {
                if (std::find(names.begin(), names.end(), w[i]) != names.end()) throw std::invalid_argument("repeated vertex in order header");
                names.push_back(w[i]);
            }
            continue;
        }
        if (w.size() != 2) throw std::invalid_argument("edge lines need two vertices");
        raw.emplace_back(w[0], w[1]);
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : raw) {
        auto lookup = [&](const std::string& n) {
            auto it = std::find(names.begin(), names.end(), n);
            if (it != names.end()) return int(it - names.begin());
            if (ordered) throw std::invalid_argument("vertex '" + n + "' missing from order header");
            names.push_back(n);
            return int(names.size()) - 1;
        };
        int ia = lookup(a), ib = lookup(b);
        edges.emplace_back(ia, ib);
    }
    Graph G = make_graph(int(names.size()), edges);
    G.names = names;
    return G;
}

bool connected(const Graph& G) {
    int n = G.num_vertices();
    if (n == 0) return true;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    int comps = n;
    for (auto [a, b] : G.edges) {
        int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --comps;
        }
    }
    return comps == 1;
}

Outermorphism<Z> laplacian(const Graph& G, const SigPtr<Z>& sig) {
    int n = G.num_vertices();
    ZMatrix D(n, G.edges.size());
    for (std::size_t k = 0; k < G.edges.size(); ++k) {
        D(G.edges[k].second, k) = 1;
        D(G.edges[k].first, k) = -1;
    }
    return Outermorphism<Z>(sig, D * D.transpose());
}

Z kirchhoff_pairing(const Graph& G, int u, int v) {
    int n = G.num_vertices();
    if (n > 12) throw std::invalid_argument("graph too large for the exterior-algebra count");
    auto sig = Signature<Z>::counts(n, 0, 0);
    auto lap = laplacian(G, sig);
    auto V = pseudoscalar(sig);
    auto adj = lap(Chain::gen(sig, v) * V) * V.reverse();
    return scalar_product(Chain::gen(sig, u), adj);
}

Z spanning_tree_count(const Graph& G) {
    if (G.num_vertices() == 0) return 0;
    if (G.num_vertices() == 1) return 1;
    return kirchhoff_pairing(G, 0, 0);
}

Z brute_force_spanning_trees(const Graph& G) {
    int n = G.num_vertices();
    int m = int(G.edges.size());
    if (n > 9) throw std::invalid_argument("graph too large for brute-force enumeration");
    if (n <= 1) return 1;
    int k = n - 1;
    if (m < k) return 0;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    long count = 0;
    std::vector<int> parent(n);
    while (true) {
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        bool acyclic = true;
        for (int e : pick) {
            int ra = find(G.edges[e].first), rb = find(G.edges[e].second);
            if (ra == rb) {
                acyclic = false;
                break;
            }
            parent[ra] = rb;
        }
        if (acyclic) ++count;
        int i = k - 1;
        while (i >= 0 && pick[i] == m - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return count;
}

Chain delta_wedge(const Graph& G, const std::vector<int>& edge_subset, const SigPtr<Z>& sig) {
    Chain acc = Chain::scalar(sig, 1);
    for (int e : edge_subset) {
        auto [a, b] = G.edges.at(e);
        acc = outer(acc, Chain::gen(sig, b) - Chain::gen(sig, a));
        if (acc.is_zero()) break;
    }
    return acc;
}

}  // namespace ga::discrete
