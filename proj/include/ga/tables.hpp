// Classification of real and complex Clifford algebras, representation counts, octonions.
#pragma once

#include "ga/products.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ga::tables {

// K[N] or K[N] ⊕ K[N] with K one of R, C, H.
struct AlgebraType {
    char field = 'R';
    std::uint64_t size = 1;
    bool doubled = false;

    int field_dim() const { return field == 'R' ? 1 : field == 'C' ? 2 : 4; }
    // Real dimension of the algebra.
    long double real_dim() const {
        return (long double)(field_dim()) * (long double)size * (long double)size * (doubled ? 2 : 1);
    }
    std::string str() const;
    friend bool operator==(const AlgebraType&, const AlgebraType&) = default;
};

// "R", "C[2]", "H[2]+H[2]", also accepting ⊕.
AlgebraType parse_algebra(const std::string& text);

// G(R^{s,t}) with s positive and t negative generators.
AlgebraType classify_real(int s, int t);
AlgebraType classify_complex(int n);

// Signatures (s', t') with G^+(R^{s,t}) ≅ G(R^{s',t'}).
std::vector<std::pair<int, int>> even_subalgebra_signatures(int s, int t);

struct RepresentationCounts {
    int inequivalent = 1;    // number of inequivalent irreducible real representations
    std::uint64_t dim = 1;   // their real dimension
    friend bool operator==(const RepresentationCounts&, const RepresentationCounts&) = default;
};

RepresentationCounts representation_counts(int s, int t);
// Looked up in the stored definite table, extended by periodicity.
RepresentationCounts definite_representation_counts(int n, bool negative);
RepresentationCounts complex_representation_counts(int n);

// Maximal number of pointwise independent vector fields on S^N.
int radon_hurwitz(int N);

// Stored classification block for 0 <= s, t <= 8; entry [t][s].
const std::array<std::array<const char*, 9>, 9>& real_table();

template <class T>
using Mat2 = std::array<Cx<T>, 4>;  // row-major

// Matrix image of an element of G(R^3) under e_k ↦ σ_k.
template <class T>
Mat2<T> pauli_rep(const Multivector<T>& x) {
    auto c = x.sig()->counts();
    if (!c || c->s != 3 || c->t != 0 || c->u != 0) throw std::invalid_argument("pauli representation needs R(3,0,0)");
    using C = Cx<T>;
    const T z = Ring<T>::zero(), o = Ring<T>::one();
    auto mul = [](const Mat2<T>& a, const Mat2<T>& b) {
        return Mat2<T>{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
                       a[2] * b[1] + a[3] * b[3]};
    };
    const std::array<Mat2<T>, 3> sigma{Mat2<T>{C{z, z}, C{o, z}, C{o, z}, C{z, z}},
                                       Mat2<T>{C{z, z}, C{z, T(-o)}, C{z, o}, C{z, z}},
                                       Mat2<T>{C{o, z}, C{z, z}, C{z, z}, C{T(-o), z}}};
    Mat2<T> out{C{z, z}, C{z, z}, C{z, z}, C{z, z}};
    for (const auto& [mask, v] : x.terms()) {
        Mat2<T> m{C{o, z}, C{z, z}, C{z, z}, C{o, z}};
        for (int i : mask_indices(mask)) m = mul(m, sigma[i]);
        for (int k = 0; k < 4; ++k) out[k] = out[k] + C{v, z} * m[k];
    }
    return out;
}

// The trivector whose product structure gives the octonions inside G(R^{0,7}).
template <class T>
Multivector<T> octonion_trivector(const SigPtr<T>& sig) {
    static const int triples[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};
    Multivector<T> C(sig);
    for (const auto& t : triples)
        C += Multivector<T>::gen(sig, t[0] - 1) * Multivector<T>::gen(sig, t[1] - 1) * Multivector<T>::gen(sig, t[2] - 1);
    return C;
}

// ⟨a b (1 - C)⟩ restricted to grades 0 and 1, for a, b in R ⊕ R^{0,7}.
template <class T>
Multivector<T> octonion_product(const Multivector<T>& a, const Multivector<T>& b) {
    auto c = a.sig()->counts();
    if (!c || c->s != 0 || c->t != 7 || c->u != 0) throw std::invalid_argument("octonion product needs R(0,7,0)");
    for (const auto* x : {&a, &b})
        for (int g : x->grades())
            if (g > 1) throw std::invalid_argument("octonion operands must be scalar plus vector");
    const auto& sig = a.sig();
    auto one = Multivector<T>::scalar(sig, Ring<T>::one());
    return (a * b * (one - octonion_trivector(sig))).grade_parts({0, 1});
}

}  // namespace ga::tables
