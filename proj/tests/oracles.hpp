// Independent reference computations shared by the unit and acceptance tests.
#pragma once

#include "ga/discrete.hpp"
#include "ga/tables.hpp"
#include "support.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

namespace test {

// Sign by adjoining the largest generator one step at a time.
inline int tau_recursive(ga::Mask a, ga::Mask b, const std::vector<int>& r) {
    if ((a | b) == 0) return 1;
    int z = 63 - std::countl_zero(a | b);
    ga::Mask bit = ga::Mask(1) << z;
    ga::Mask a1 = a & ~bit, b1 = b & ~bit;
    int rest = tau_recursive(a1, b1, r);
    int flip = (std::popcount(b1) & 1) ? -1 : 1;
    bool in_a = a & bit, in_b = b & bit;
    if (in_a && in_b) return r[z] * rest * flip;
    if (in_a) return rest * flip;
    return rest;
}

inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

// Rank over the rationals by plain Gaussian elimination.
inline std::size_t rational_rank(const ga::Matrix<Z>& m) {
    std::vector<std::vector<Q>> a(m.rows(), std::vector<Q>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Q(m(i, j));
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            Q f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

inline long oracle_betti(const ga::discrete::SimplicialComplex& K, int d) {
    long cd = long(K.of_dim(d).size());
    long r_here = d > 0 ? long(rational_rank(ga::discrete::boundary_matrix(K, d))) : 0;
    long r_up = d < K.max_dim() ? long(rational_rank(ga::discrete::boundary_matrix(K, d + 1))) : 0;
    return cd - r_here - r_up;
}

inline ga::discrete::SimplicialComplex make_complex(int n, const std::vector<std::vector<int>>& simplices) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
    std::vector<ga::Mask> masks;
    for (const auto& s : simplices) {
        ga::Mask m = 0;
        for (int i : s) m |= ga::Mask(1) << i;
        masks.push_back(m);
    }
    return ga::discrete::SimplicialComplex(names, masks);
}

// Random complex on n vertices from a few random faces of up to four vertices.
inline ga::discrete::SimplicialComplex random_complex(Rng& rng, int n) {
    std::vector<std::vector<int>> faces;
    int count = int(rng.integer(3, 9));
    for (int k = 0; k < count; ++k) {
        std::vector<int> f;
        int size = int(rng.integer(1, 4));
        while (int(f.size()) < size) {
            int v = int(rng.integer(0, n - 1));
            if (std::find(f.begin(), f.end(), v) == f.end()) f.push_back(v);
        }
        faces.push_back(f);
    }
    return make_complex(n, faces);
}

// Admissible labels on grid_triangulation(m), whose vertices are named "p<i>_<j>".
inline std::vector<int> random_sperner_labels(Rng& rng, const ga::discrete::Triangulation& T, int m) {
    std::vector<int> labels;
    for (const auto& name : T.complex.vertices()) {
        auto us = name.find('_');
        int i = std::stoi(name.substr(1, us - 1)), j = std::stoi(name.substr(us + 1));
        std::vector<int> allowed{0, 1, 2};
        if (j == 0) allowed = {0, 1};
        if (i == 0) allowed = j == 0 ? std::vector<int>{0} : std::vector<int>{0, 2};
        if (i + j == m) {
            if (j == 0) allowed = {1};
            else if (i == 0) allowed = {2};
            else allowed = {1, 2};
        }
        labels.push_back(allowed[rng.integer(0, long(allowed.size()) - 1)]);
    }
    return labels;
}

inline long complete_triangles(const ga::discrete::Triangulation& T, const std::vector<int>& lab) {
    long count = 0;
    for (const auto& t : T.triangles)
        if (std::set<int>{lab[t[0]], lab[t[1]], lab[t[2]]}.size() == 3) ++count;
    return count;
}

// Classification from (s - t) mod 8 and n = s + t.
inline ga::tables::AlgebraType mod8_oracle(int s, int t) {
    int n = s + t, k = ((s - t) % 8 + 8) % 8;
    auto make = [](char f, int log2size, bool d) { return ga::tables::AlgebraType{f, std::uint64_t(1) << log2size, d}; };
    switch (k) {
        case 0:
        case 2: return make('R', n / 2, false);
        case 1: return make('R', (n - 1) / 2, true);
        case 3:
        case 7: return make('C', (n - 1) / 2, false);
        case 4:
        case 6: return make('H', (n - 2) / 2, false);
        default: return make('H', (n - 3) / 2, true);
    }
}

// Spanning trees by a brute-force pass over edge subsets with a union-find check.
inline long count_trees_by_subsets(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n == 1) return 1;
    long count = 0;
    const int m = int(edges.size());
    for (unsigned long sub = 0; sub < (1ul << m); ++sub) {
        if (std::popcount(sub) != n - 1) continue;
        std::vector<int> parent(n);
        for (int i = 0; i < n; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool ok = true;
        for (int e = 0; e < m && ok; ++e)
            if (sub >> e & 1) {
                int a = find(edges[e].first), b = find(edges[e].second);
                if (a == b) ok = false;
                else parent[a] = b;
            }
        if (ok) ++count;
    }
    return count;
}

}  // namespace test
