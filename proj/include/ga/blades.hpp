// Blades, reciprocal bases, projections and projective constructions.
#pragma once

#include "ga/morphisms.hpp"

#include <array>

namespace ga {

template <class T>
Multivector<T> with_signature(const Multivector<T>& x, const SigPtr<T>& sig) {
    if (sig->dim() != x.dim()) throw std::invalid_argument("dimension mismatch");
    Multivector<T> r(sig);
    for (const auto& [m, v] : x.terms()) r.set_term(m, v);
    return r;
}

// (u_1 ∧ ... ∧ u_k) * (v_k ∧ ... ∧ v_1).
template <class T>
T gram_scalar(const std::vector<Multivector<T>>& u, const std::vector<Multivector<T>>& v) {
    if (u.size() != v.size()) throw std::invalid_argument("list length mismatch");
    if (u.empty()) return Ring<T>::one();
    std::vector<Multivector<T>> rv(v.rbegin(), v.rend());
    return scalar_product(wedge_all(u[0].sig(), u), wedge_all(u[0].sig(), rv));
}

template <class T>
bool near_zero(const Multivector<T>& x, double scale, double rel = 1e-10) {
    if constexpr (Ring<T>::exact) return x.is_zero();
    else return x.max_magnitude() <= rel * scale;
}

template <class T>
bool is_independent(const std::vector<Multivector<T>>& vs) {
    if (vs.empty()) return true;
    double scale = 1;
    for (const auto& v : vs) scale *= std::max(v.max_magnitude(), 1e-300);
    return !near_zero(wedge_all(vs[0].sig(), vs), scale);
}

template <class T>
std::vector<Multivector<T>> factor_blade(const Multivector<T>& A);

template <class T>
bool is_blade(const Multivector<T>& x) {
    int k = x.homogeneous_grade();
    if (k == -2) return false;
    if (k <= 1) return true;
    const int n = x.dim();
    if (k >= n - 1) return true;
    if (k == 2) {
        auto sq = outer(x, x);
        return near_zero(sq, x.max_magnitude() * x.max_magnitude(), 1e-9);
    }
    try {
        factor_blade(x);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

// Vectors whose wedge reproduces A; projections are taken under a euclidean copy of the metric.
template <class T>
std::vector<Multivector<T>> factor_blade(const Multivector<T>& A) {
    int k = A.homogeneous_grade();
    if (k == -2) throw std::domain_error("not a blade");
    if (k <= 0) return {};
    const auto& sig = A.sig();
    const int n = sig->dim();
    auto esig = Signature<T>::counts(n, 0, 0);
    auto Ae = with_signature(A, esig);
    auto Ainv = try_inverse(Ae);
    if (!Ainv) throw std::domain_error("not a blade");
    std::vector<Multivector<T>> kept;
    auto acc = Multivector<T>::scalar(esig, Ring<T>::one());
    double scale = 1;
    for (int i = 0; i < n && int(kept.size()) < k; ++i) {
        auto p = (left_inner(Multivector<T>::gen(esig, i), Ae) * *Ainv).grade_part(1);
        if (p.is_zero()) continue;
        for (const auto& q : kept) {
            T c = T(scalar_product(p, q));
            if constexpr (Ring<T>::field) p -= q * T(c * Ring<T>::inv(scalar_product(q, q)));
        }
        auto next = outer(acc, p);
        if (near_zero(next, scale * std::max(p.max_magnitude(), 1e-300))) continue;
        scale *= p.max_magnitude();
        acc = next;
        kept.push_back(p);
    }
    if (int(kept.size()) != k) throw std::domain_error("not a blade");
    // Rescale the last factor so the wedge equals A.
    Mask lead = 0;
    double best = -1;
    for (const auto& [m, v] : acc.terms())
        if (Ring<T>::magnitude(v) > best) { best = Ring<T>::magnitude(v); lead = m; }
    if constexpr (Ring<T>::field) {
        T lambda = T(Ae.coeff(lead) * Ring<T>::inv(acc.coeff(lead)));
        kept.back() = kept.back() * lambda;
    } else {
        throw std::domain_error("factorization needs a field");
    }
    std::vector<Multivector<T>> out;
    for (const auto& v : kept) out.push_back(with_signature(v, sig));
    auto check = wedge_all(sig, out) - A;
    if (!near_zero(check, A.max_magnitude(), 1e-9)) throw std::domain_error("not a blade");
    return out;
}

template <class T>
struct ReciprocalBasis {
    std::vector<Multivector<T>> basis;
    std::vector<Multivector<T>> reciprocal;
};

template <class T>
ReciprocalBasis<T> reciprocal_basis(const std::vector<Multivector<T>>& basis) {
    if (basis.empty()) return {};
    const auto& sig = basis[0].sig();
    auto E = wedge_all(sig, basis);
    if (!is_independent(basis)) throw std::domain_error("dependent basis");
    auto Einv = try_inverse(E);
    if (!Einv) throw std::domain_error("degenerate signature: basis blade not invertible");
    ReciprocalBasis<T> out{basis, {}};
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<Multivector<T>> others;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (j != i) others.push_back(basis[j]);
        auto r = (wedge_all(sig, others) * *Einv).grade_part(1);
        out.reciprocal.push_back(i % 2 ? -r : r);
    }
    return out;
}

template <class T>
Multivector<T> blade_inverse(const Multivector<T>& A) {
    auto inv = try_inverse(A);
    if (!inv) throw std::domain_error("blade not invertible");
    return *inv;
}

template <class T>
Multivector<T> project(const Multivector<T>& A, const Multivector<T>& x) {
    return left_inner(x, A) * blade_inverse(A);
}
template <class T>
Multivector<T> reject(const Multivector<T>& A, const Multivector<T>& x) {
    return outer(x, A) * blade_inverse(A);
}

// b_k = A_{k-1}^† A_k with A_k = a_1 ∧ ... ∧ a_k; no normalization.
template <class T>
std::vector<Multivector<T>> gram_schmidt_blades(const std::vector<Multivector<T>>& a) {
    std::vector<Multivector<T>> out;
    if (a.empty()) return out;
    const auto& sig = a[0].sig();
    if (!sig->euclidean()) throw std::invalid_argument("blade Gram-Schmidt needs a euclidean signature");
    auto prev = Multivector<T>::scalar(sig, Ring<T>::one());
    for (const auto& v : a) {
        auto cur = outer(prev, v);
        out.push_back((prev.reverse() * cur).grade_part(1));
        prev = cur;
    }
    return out;
}

// Cross ratio of four vectors in the plane.
template <class T>
T cross_ratio(const Multivector<T>& a, const Multivector<T>& b, const Multivector<T>& c, const Multivector<T>& d) {
    static_assert(Ring<T>::field, "cross ratio needs division");
    auto ac = outer(a, c), bd = outer(b, d);
    double s = a.max_magnitude() * std::max(b.max_magnitude(), c.max_magnitude()) * std::max(1.0, d.max_magnitude());
    if (near_zero(ac, s) || near_zero(bd, s)) throw std::domain_error("degenerate configuration");
    T num = (outer(a, b) * outer(c, d)).scalar_part();
    T den = (ac * bd).scalar_part();
    return T(num * Ring<T>::inv(den));
}

// Points of the plane embedded as x + e3 in G(R^3).
template <class T>
Multivector<T> embed_point(const SigPtr<T>& sig3, const T& x, const T& y) {
    return Multivector<T>::vector(sig3, {x, y, Ring<T>::one()});
}

template <class T>
struct LineIntersection {
    Multivector<T> homogeneous;
    bool at_infinity;
    T x, y;
};

template <class T>
T bracket3(const Multivector<T>& a, const Multivector<T>& b, const Multivector<T>& c) {
    auto rev = Multivector<T>::blade(a.sig(), 0b111, T(-Ring<T>::one()));  // e3∧e2∧e1
    return scalar_product(outer(outer(a, b), c), rev);
}

// Intersection of line ab with line cd, with [A,B,C]D - [A,B,D]C.
template <class T>
LineIntersection<T> project_line_intersect(const std::array<T, 2>& a, const std::array<T, 2>& b,
                                           const std::array<T, 2>& c, const std::array<T, 2>& d) {
    auto sig = Signature<T>::counts(3, 0, 0);
    auto A = embed_point(sig, a[0], a[1]), B = embed_point(sig, b[0], b[1]);
    auto C = embed_point(sig, c[0], c[1]), D = embed_point(sig, d[0], d[1]);
    auto P = D * bracket3(A, B, C) - C * bracket3(A, B, D);
    LineIntersection<T> out{P, false, Ring<T>::zero(), Ring<T>::zero()};
    T w = P.coeff(0b100);
    double scale = P.max_magnitude();
    if (is_zero(w) || Ring<T>::magnitude(w) <= 1e-12 * scale) {
        out.at_infinity = true;
        return out;
    }
    T winv = Ring<T>::inv(w);
    out.x = T(P.coeff(0b001) * winv);
    out.y = T(P.coeff(0b010) * winv);
    return out;
}

// Pseudoscalar coefficient of the Pascal triple wedge for a hexagon.
template <class T>
T pascal_check(const std::array<std::array<T, 2>, 6>& pts) {
    auto sig = Signature<T>::counts(3, 0, 0);
    std::vector<Multivector<T>> p;
    for (const auto& q : pts) p.push_back(embed_point(sig, q[0], q[1]));
    auto line = [&](int i, int j) { return outer(p[i], p[j]); };
    auto x = meet(line(0, 1), line(3, 4));
    auto y = meet(line(1, 2), line(4, 5));
    auto z = meet(line(2, 3), line(5, 0));
    return outer(outer(x, y), z).coeff(0b111);
}

template <class T>
bool self_adjoint(const Outermorphism<T>& f) {
    auto a = adjoint(f);
    if constexpr (Ring<T>::exact) return a.matrix() == f.matrix();
    else {
        double m = 0, scale = 0;
        for (std::size_t i = 0; i < f.matrix().rows(); ++i)
            for (std::size_t j = 0; j < f.matrix().cols(); ++j) {
                m = std::max(m, std::fabs(a.matrix()(i, j) - f.matrix()(i, j)));
                scale = std::max(scale, std::fabs(f.matrix()(i, j)));
            }
        return m <= 1e-12 * std::max(scale, 1.0);
    }
}

template <class T>
Multivector<T> polar(const Multivector<T>& x, const Outermorphism<T>& f) {
    if (!self_adjoint(f)) throw std::invalid_argument("quadric map must be self-adjoint");
    return dual(f(x));
}

template <class T>
T quadric_eval(const Multivector<T>& x, const Outermorphism<T>& f) {
    return scalar_product(x, f(x));
}

}  // namespace ga
