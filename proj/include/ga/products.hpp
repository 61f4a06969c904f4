// Derived products, inverses, duality, exponentials and fermionic operators.
#pragma once

#include "ga/core.hpp"

#include <cmath>
#include <optional>

namespace ga {

template <class T>
Multivector<T> outer(const Multivector<T>& x, const Multivector<T>& y) {
    return x.combine(y, [](Mask a, Mask b) { return (a & b) == 0; });
}
template <class T>
Multivector<T> left_inner(const Multivector<T>& x, const Multivector<T>& y) {
    return x.combine(y, [](Mask a, Mask b) { return (a & ~b) == 0; });
}
template <class T>
Multivector<T> right_inner(const Multivector<T>& x, const Multivector<T>& y) {
    return x.combine(y, [](Mask a, Mask b) { return (b & ~a) == 0; });
}
template <class T>
T scalar_product(const Multivector<T>& x, const Multivector<T>& y) {
    return x.combine(y, [](Mask a, Mask b) { return a == b; }).scalar_part();
}
template <class T>
Multivector<T> dot_inner(const Multivector<T>& x, const Multivector<T>& y) {
    return x.combine(y, [](Mask a, Mask b) { return (a & ~b) == 0 || (b & ~a) == 0; });
}

template <class T>
Multivector<T> wedge_all(const SigPtr<T>& sig, const std::vector<Multivector<T>>& vs) {
    auto acc = Multivector<T>::scalar(sig, Ring<T>::one());
    for (const auto& v : vs) acc = outer(acc, v);
    return acc;
}
template <class T>
Multivector<T> product_all(const SigPtr<T>& sig, const std::vector<Multivector<T>>& vs) {
    auto acc = Multivector<T>::scalar(sig, Ring<T>::one());
    for (const auto& v : vs) acc = acc * v;
    return acc;
}

// True when x is a scalar, allowing float noise relative to `scale`.
template <class T>
bool is_scalar(const Multivector<T>& x, double rel = 1e-10) {
    if constexpr (Ring<T>::exact) {
        return x.is_zero() || (x.size() == 1 && x.terms().begin()->first == 0);
    } else {
        double s = Ring<T>::magnitude(x.scalar_part()), rest = 0;
        for (const auto& [m, v] : x.terms())
            if (m) rest = std::max(rest, Ring<T>::magnitude(v));
        return rest <= rel * std::max(s, 1e-300) || rest == 0;
    }
}

namespace detail {
template <class T>
std::optional<Multivector<T>> inverse_by_solve(const Multivector<T>& x) {
    const int n = x.dim();
    if (n > 10) return std::nullopt;
    const std::size_t N = std::size_t(1) << n;
    Matrix<T> L(N, N);
    for (Mask b = 0; b < N; ++b)
        for (const auto& [a, v] : x.terms()) {
            T t = x.sig()->tau(a, b);
            if (!is_zero(t)) L(a ^ b, b) += T(t * v);
        }
    std::vector<T> rhs(N, Ring<T>::zero());
    rhs[0] = Ring<T>::one();
    try {
        auto y = solve(L, rhs);
        Multivector<T> r(x.sig());
        for (Mask b = 0; b < N; ++b) r.add_term(b, y[b]);
        return r.prune(r.max_magnitude());
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}
}  // namespace detail

// Multiplicative inverse, or nullopt when none exists (or cannot be found in a non-field ring).
template <class T>
std::optional<Multivector<T>> try_inverse(const Multivector<T>& x) {
    if (x.is_zero()) return std::nullopt;
    for (auto kind : {Involution::reverse, Involution::conjugate, Involution::grade}) {
        auto c = x.involute(kind);
        auto p = x * c;
        if (!is_scalar(p)) continue;
        T s = p.scalar_part();
        if (is_zero(s)) continue;
        if constexpr (Ring<T>::field) {
            return c * Ring<T>::inv(s);
        } else {
            if (s == Ring<T>::one() || s == T(-Ring<T>::one())) return c * s;
        }
    }
    if constexpr (Ring<T>::field) return detail::inverse_by_solve(x);
    return std::nullopt;
}

template <class T>
Multivector<T> inverse(const Multivector<T>& x) {
    auto r = try_inverse(x);
    if (!r) throw std::domain_error("not invertible");
    return *r;
}

template <class T>
Multivector<T> pseudoscalar_inverse(const SigPtr<T>& sig) {
    auto I = pseudoscalar(sig);
    T sq = (I * I).scalar_part();
    if (is_zero(sq)) throw std::domain_error("pseudoscalar not invertible");
    if constexpr (Ring<T>::field) return I * Ring<T>::inv(sq);
    else return I * sq;  // sq is a unit (+-1) whenever nonzero in a unit-valued signature
}

template <class T>
Multivector<T> dual(const Multivector<T>& x) {
    return x * pseudoscalar_inverse(x.sig());
}
template <class T>
Multivector<T> undual(const Multivector<T>& x) {
    pseudoscalar_inverse(x.sig());
    return x * pseudoscalar(x.sig());
}
template <class T>
Multivector<T> meet(const Multivector<T>& x, const Multivector<T>& y) {
    return undual(outer(dual(x), dual(y)));
}

template <class T>
Multivector<T> cross3(const Multivector<T>& a, const Multivector<T>& b) {
    auto c = a.sig()->counts();
    if (!c || c->s != 3 || c->t != 0 || c->u != 0) throw std::invalid_argument("cross product needs R(3,0,0)");
    if (a.homogeneous_grade() > 1 || b.homogeneous_grade() > 1 || a.homogeneous_grade() == -2 ||
        b.homogeneous_grade() == -2 || a.scalar_part() != Ring<T>::zero() || b.scalar_part() != Ring<T>::zero())
        throw std::invalid_argument("cross product needs vectors");
    return dual(outer(a, b));
}

// Euclidean coefficient norm, used for convergence and tolerances.
template <class T>
double coeff_norm(const Multivector<T>& x) {
    double s = 0;
    for (const auto& [m, v] : x.terms()) {
        double a = Ring<T>::magnitude(v);
        s += a * a;
    }
    return std::sqrt(s);
}

template <class T>
Multivector<T> exp(const Multivector<T>& x) {
    const auto& sig = x.sig();
    auto one = Multivector<T>::scalar(sig, Ring<T>::one());
    if (x.is_zero()) return one;
    auto sq = x * x;
    if constexpr (Ring<T>::exact) {
        if (sq.is_zero()) return one + x;
        throw std::domain_error("exp in an exact ring needs a nilpotent argument; use floats");
    } else {
        double xn = x.max_magnitude();
        bool nil = sq.max_magnitude() <= 1e-14 * xn * xn;
        if (nil) return one + x;
        if (is_scalar(sq)) {
            double s = sq.scalar_part();
            double a = std::sqrt(std::fabs(s));
            if (s < 0) return (one * T(std::cos(a)) + x * T(std::sin(a) / a)).prune(1.0);
            return (one * T(std::cosh(a)) + x * T(std::sinh(a) / a)).prune(std::cosh(a));
        }
        auto sum = one;
        auto term = one;
        for (int k = 1; k <= 200; ++k) {
            term = (term * x) * T(1.0 / k);
            sum = sum + term;
            if (coeff_norm(term) < 1e-15 * coeff_norm(sum)) return sum;
        }
        throw std::runtime_error("no convergence (ill-conditioned input)");
    }
}

// Series exponential without the closed-form shortcuts.
template <class T>
Multivector<T> exp_series(const Multivector<T>& x) {
    auto one = Multivector<T>::scalar(x.sig(), Ring<T>::one());
    auto sum = one, term = one;
    for (int k = 1; k <= 200; ++k) {
        term = (term * x) * T(1.0 / k);
        sum = sum + term;
        if (term.is_zero() || coeff_norm(term) < 1e-15 * coeff_norm(sum)) return sum;
    }
    throw std::runtime_error("no convergence (ill-conditioned input)");
}

// x ⌞ (a_1 ∧ ... ∧ a_n) by enumerating ordered m-subsets of the factors.
template <class T>
Multivector<T> expand_inner(const Multivector<T>& x, int m, const std::vector<Multivector<T>>& factors) {
    const int n = int(factors.size());
    Multivector<T> out(x.sig());
    if (m > n || m < 0) return out;
    const Mask all = n == 64 ? ~Mask(0) : (Mask(1) << n) - 1;
    for (Mask lam = 0; lam <= all; ++lam) {
        if (grade(lam) != m) continue;
        Mask comp = all & ~lam;
        std::vector<Multivector<T>> in, outv;
        for (int i = 0; i < n; ++i) ((lam >> i) & 1 ? in : outv).push_back(factors[i]);
        T c = scalar_product(x, wedge_all(x.sig(), in));
        if (is_zero(c)) continue;
        if (reorder_odd(lam, comp)) c = T(-c);
        out += wedge_all(x.sig(), outv) * c;
        if (lam == all) break;
    }
    return out;
}

template <class T>
Multivector<T> fermion_create(int i, const Multivector<T>& psi) {
    if (i < 0 || i >= psi.dim()) throw std::out_of_range("fermion index out of range");
    return outer(Multivector<T>::gen(psi.sig(), i), psi);
}
template <class T>
Multivector<T> fermion_annihilate(int i, const Multivector<T>& psi) {
    if (i < 0 || i >= psi.dim()) throw std::out_of_range("fermion index out of range");
    return left_inner(Multivector<T>::gen(psi.sig(), i), psi);
}
template <class T>
Multivector<T> number_operator(const Multivector<T>& psi) {
    Multivector<T> out(psi.sig());
    for (int i = 0; i < psi.dim(); ++i) out += fermion_create(i, fermion_annihilate(i, psi));
    return out;
}

}  // namespace ga
