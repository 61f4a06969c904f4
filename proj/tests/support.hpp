// Seeded generators and comparison helpers shared by the test binaries.
#pragma once

#include "ga/core.hpp"
#include "ga/products.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace test {

using ga::Mask;
using ga::Multivector;
using ga::Ring;
using ga::SigPtr;
using ga::Signature;
using Q = mpq_class;
using Z = mpz_class;

struct Rng {
    explicit Rng(std::uint64_t seed) : g(seed) {}
    std::mt19937_64 g;
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(g); }
    Mask mask(int n) { return n == 0 ? 0 : Mask(g()) & ((n == 64) ? ~Mask(0) : (Mask(1) << n) - 1); }
};

template <class T>
T random_scalar(Rng& rng) {
    if constexpr (std::is_same_v<T, double>) return rng.real(-2, 2);
    else if constexpr (std::is_same_v<T, Q>) {
        Q q(rng.integer(-5, 5), rng.integer(1, 3));
        q.canonicalize();
        return q;
    } else return T(rng.integer(-3, 3));
}

// Metric values drawn from {+1, -1} and, when allowed, 0.
template <class T>
SigPtr<T> random_signature(Rng& rng, int n, bool allow_zero) {
    std::vector<T> r;
    for (int i = 0; i < n; ++i) {
        long v = rng.integer(allow_zero ? -1 : 0, 1);
        if (!allow_zero) v = v == 0 ? -1 : 1;
        r.push_back(Ring<T>::from_int(v));
    }
    return Signature<T>::make(std::move(r));
}

// Sparse multivector with about `terms` random blades.
template <class T>
Multivector<T> random_mv(Rng& rng, const SigPtr<T>& sig, int terms) {
    Multivector<T> x(sig);
    for (int k = 0; k < terms; ++k) x.add_term(rng.mask(sig->dim()), random_scalar<T>(rng));
    return x;
}

template <class T>
Multivector<T> random_grade(Rng& rng, const SigPtr<T>& sig, int k, int terms) {
    Multivector<T> x(sig);
    const int n = sig->dim();
    if (k < 0 || k > n) return x;
    for (int t = 0; t < terms; ++t) {
        // random k-subset
        Mask m = 0;
        while (ga::grade(m) < k) m |= Mask(1) << rng.integer(0, n - 1);
        x.add_term(m, random_scalar<T>(rng));
    }
    return x;
}

template <class T>
Multivector<T> random_vector(Rng& rng, const SigPtr<T>& sig) {
    std::vector<T> c;
    for (int i = 0; i < sig->dim(); ++i) c.push_back(random_scalar<T>(rng));
    return Multivector<T>::vector(sig, c);
}

inline double diff_norm(const Multivector<double>& a, const Multivector<double>& b) {
    double m = 0;
    for (const auto& [k, v] : a.terms()) m = std::max(m, std::fabs(v - b.coeff(k)));
    for (const auto& [k, v] : b.terms()) m = std::max(m, std::fabs(v - a.coeff(k)));
    return m;
}

inline bool close(const Multivector<double>& a, const Multivector<double>& b, double tol) {
    double scale = std::max({1.0, a.max_magnitude(), b.max_magnitude()});
    return diff_norm(a, b) <= tol * scale;
}

template <class T>
Multivector<T> S(const SigPtr<T>& sig, long v) {
    return Multivector<T>::scalar(sig, Ring<T>::from_int(v));
}
template <class T>
Multivector<T> E(const SigPtr<T>& sig, std::initializer_list<int> idx) {  // 1-based product e_i e_j ...
    auto x = Multivector<T>::scalar(sig, Ring<T>::one());
    for (int i : idx) x = x * Multivector<T>::gen(sig, i - 1);
    return x;
}

}  // namespace test
