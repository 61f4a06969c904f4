// Versors, norm functions, reflections and rotors.
#pragma once

#include "ga/blades.hpp"

#include <Eigen/Dense>

namespace ga {

// x^⋆ y x^{-1}.
template <class T>
Multivector<T> twisted_adjoint(const Multivector<T>& x, const Multivector<T>& y) {
    auto inv = try_inverse(x);
    if (!inv) throw std::domain_error("not invertible");
    return x.grade_involution() * y * *inv;
}

// [x] flips every nonzero grade.
template <class T>
Multivector<T> flip_nonscalar(const Multivector<T>& x) {
    std::set<int> ks;
    for (int k = 1; k <= x.dim(); ++k) ks.insert(k);
    return x.flip_grades(ks);
}

namespace detail {
template <class T>
Multivector<T> norm_raw(const Multivector<T>& x) {
    switch (x.dim()) {
        case 0: return x;
        case 1:
        case 2: return x.conjugate() * x;
        case 3:
        case 4: {
            auto n2 = x.conjugate() * x;
            return flip_nonscalar(n2) * n2;
        }
        case 5: {
            auto n = x.reverse() * x;
            auto m = n.flip_grades({1, 4}) * n;
            return flip_nonscalar(m) * m;
        }
        default: throw std::domain_error("no closed-form norm implemented");
    }
}
}  // namespace detail

// Scalar-valued multiplicative norm for dimensions 0..5.
template <class T>
T norm_function(const Multivector<T>& x) {
    auto n = detail::norm_raw(x);
    if (!is_scalar(n, 1e-9)) throw std::domain_error("norm function is not scalar in this signature");
    return n.scalar_part();
}

template <class T>
Multivector<T> inverse_closed_form(const Multivector<T>& x) {
    static_assert(Ring<T>::field, "closed-form inverse needs division");
    T n = norm_function(x);
    if (is_zero(n) || (!Ring<T>::exact && Ring<T>::magnitude(n) <= 1e-300)) throw std::domain_error("not invertible");
    T ninv = Ring<T>::inv(n);
    switch (x.dim()) {
        case 0: return x * T(ninv * ninv);  // x^{-1} = 1/x with N_0(x) = x
        case 1:
        case 2: return x.conjugate() * ninv;
        case 3:
        case 4: return flip_nonscalar(x.conjugate() * x) * x.conjugate() * ninv;
        default: {
            auto r = x.reverse() * x;
            auto m = r.flip_grades({1, 4}) * r;
            return flip_nonscalar(m) * r.flip_grades({1, 4}) * x.reverse() * ninv;
        }
    }
}

template <class T>
bool approx_vector(const Multivector<T>& x, double scale) {
    for (const auto& [m, v] : x.terms())
        if (grade(m) != 1) {
            if constexpr (Ring<T>::exact) return false;
            else if (Ring<T>::magnitude(v) > 1e-9 * std::max(scale, 1.0)) return false;
        }
    return true;
}

template <class T>
bool is_versor(const Multivector<T>& x) {
    if (!x.sig()->nondegenerate()) throw std::domain_error("degenerate signature");
    auto inv = try_inverse(x);
    if (!inv) return false;
    auto xs = x.grade_involution();
    double scale = x.max_magnitude() * inv->max_magnitude();
    for (int i = 0; i < x.dim(); ++i)
        if (!approx_vector(xs * Multivector<T>::gen(x.sig(), i) * *inv, scale)) return false;
    return true;
}

enum class GroupClass { none, pin, spin, spin_plus };

inline const char* group_class_name(GroupClass g) {
    switch (g) {
        case GroupClass::pin: return "Pin";
        case GroupClass::spin: return "Spin";
        case GroupClass::spin_plus: return "Spin+";
        default: return "none";
    }
}

template <class T>
bool near_value(const Multivector<T>& x, const T& v) {
    auto d = x - Multivector<T>::scalar(x.sig(), v);
    if constexpr (Ring<T>::exact) return d.is_zero();
    else return d.max_magnitude() <= 1e-9;
}

template <class T>
GroupClass pin_spin_class(const Multivector<T>& x) {
    if (!is_versor(x)) return GroupClass::none;
    auto xr = x * x.reverse();
    bool plus = near_value(xr, Ring<T>::one());
    bool minus = near_value(xr, T(-Ring<T>::one()));
    if (!plus && !minus) return GroupClass::none;
    bool even = true;
    for (const auto& [m, v] : x.terms())
        if (grade(m) & 1) {
            if constexpr (Ring<T>::exact) even = false;
            else if (Ring<T>::magnitude(v) > 1e-9 * x.max_magnitude()) even = false;
        }
    if (!even) return GroupClass::pin;
    return plus ? GroupClass::spin_plus : GroupClass::spin;
}

template <class T>
bool is_rotor(const Multivector<T>& x) {
    return pin_spin_class(x) == GroupClass::spin_plus;
}

// Checks f(e_i) * f(e_j) = e_i * e_j.
template <class T>
bool is_orthogonal(const Outermorphism<T>& f, double tol = 1e-10) {
    const int n = f.sig()->dim();
    double scale = 1;
    for (int j = 0; j < n; ++j) scale = std::max(scale, f.image(j).max_magnitude());
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            T got = scalar_product(f.image(i), f.image(j));
            T want = i == j ? (*f.sig())[i] : Ring<T>::zero();
            if constexpr (Ring<T>::exact) {
                if (!(got == want)) return false;
            } else if (std::fabs(got - want) > tol * scale * scale) {
                return false;
            }
        }
    return true;
}

template <class T>
bool invertible_vector(const Multivector<T>& v) {
    T sq = scalar_product(v, v);
    if constexpr (Ring<T>::exact) return !is_zero(sq);
    else {
        double m = v.max_magnitude();
        return m > 0 && std::fabs(sq) > 1e-10 * m * m;
    }
}

// Image of v under the reflections u_1, u_2, ... applied in order.
template <class T>
Multivector<T> reflect_all(const std::vector<Multivector<T>>& us, Multivector<T> v) {
    for (const auto& u : us) {
        T sq = scalar_product(u, u);
        if (is_zero(sq)) throw std::domain_error("not invertible");
        if constexpr (Ring<T>::field) v = (u * v * u).grade_part(1) * T(-Ring<T>::inv(sq));
        else v = (u * v * u).grade_part(1) * T(-sq);
    }
    return v;
}

// Reflection vectors u_1..u_k with f = tAd_{u_k ... u_1}; at most 2n of them.
template <class T>
std::vector<Multivector<T>> cartan_dieudonne(const Outermorphism<T>& f) {
    const auto& sig = f.sig();
    if (!sig->nondegenerate()) throw std::domain_error("degenerate signature");
    if (!is_orthogonal(f)) throw std::invalid_argument("map is not orthogonal");
    const int n = sig->dim();
    std::vector<Multivector<T>> us;
    std::vector<int> flipped;
    // rounding in the images grows with the square of the largest matrix entry
    double spread = 1;
    for (std::size_t i = 0; i < f.matrix().rows(); ++i)
        for (std::size_t k = 0; k < f.matrix().cols(); ++k) spread = std::max(spread, Ring<T>::magnitude(f.matrix()(i, k)));
    for (int j = 0; j < n; ++j) {
        const auto& target = f.image(j);
        auto w = reflect_all(us, Multivector<T>::gen(sig, j));
        auto diff = w - target;
        bool same;
        if constexpr (Ring<T>::exact) same = diff.is_zero();
        else same = diff.max_magnitude() <= 1e-12 * spread * spread;
        if (same) continue;
        Multivector<T> u = diff, sum = w + target;
        bool use_sum;
        if constexpr (Ring<T>::exact) use_sum = !invertible_vector(u);
        else use_sum = std::fabs(scalar_product(sum, sum)) > std::fabs(scalar_product(u, u));  // the two squares add to ±4
        if (use_sum) {
            u = sum;
            flipped.push_back(j);
        }
        us.push_back(u);
    }
    for (int k : flipped) us.push_back(f.image(k));
    return us;
}

// Matrix of tAd_{u_k ... u_1}, applying one reflection at a time.
template <class T>
Matrix<T> reflections_matrix(const SigPtr<T>& sig, const std::vector<Multivector<T>>& us) {
    const int n = sig->dim();
    Matrix<T> m(n, n);
    for (int j = 0; j < n; ++j) {
        auto img = reflect_all(us, Multivector<T>::gen(sig, j));
        for (int i = 0; i < n; ++i) m(i, j) = img.coeff(Mask(1) << i);
    }
    return m;
}

template <class T>
Multivector<T> versor_of(const SigPtr<T>& sig, const std::vector<Multivector<T>>& us) {
    auto v = Multivector<T>::scalar(sig, Ring<T>::one());
    for (const auto& u : us) v = u * v;
    return v;
}

// Matrix of v ↦ tAd_x(v) on the generators.
template <class T>
Matrix<T> versor_matrix(const Multivector<T>& x) {
    const int n = x.dim();
    Matrix<T> m(n, n);
    for (int j = 0; j < n; ++j) {
        auto img = twisted_adjoint(x, Multivector<T>::gen(x.sig(), j));
        for (int i = 0; i < n; ++i) m(i, j) = img.coeff(Mask(1) << i);
    }
    return m;
}

template <class T>
Multivector<T> commutator(const Multivector<T>& a, const Multivector<T>& b) {
    return a * b - b * a;
}

template <class T>
bool is_antisymmetric(const SigPtr<T>& sig, const Matrix<T>& m) {
    const int n = sig->dim();
    double scale = 1;
    if constexpr (!Ring<T>::exact)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) scale = std::max(scale, std::fabs(m(i, j)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            T s = T((*sig)[i] * m(i, j) + (*sig)[j] * m(j, i));
            if constexpr (Ring<T>::exact) {
                if (!is_zero(s)) return false;
            } else if (std::fabs(s) > 1e-10 * scale) {
                return false;
            }
        }
    return true;
}

// Bivector B with ad_B = f on vectors.
template <class T>
Multivector<T> bivector_from_so(const SigPtr<T>& sig, const Matrix<T>& f) {
    static_assert(Ring<T>::field, "needs division");
    if (!sig->nondegenerate()) throw std::domain_error("degenerate signature");
    if (!is_antisymmetric(sig, f)) throw std::invalid_argument("map is not antisymmetric");
    const int n = sig->dim();
    Multivector<T> B(sig);
    T quarter = T(Ring<T>::one() * Ring<T>::inv(Ring<T>::from_int(4)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            // e^i * f(e^j) with e^k = e_k / r_k
            T c = T(f(i, j) * Ring<T>::inv((*sig)[j]));
            if (is_zero(c)) continue;
            Mask m = (Mask(1) << i) | (Mask(1) << j);
            B.add_term(m, T(quarter * (i < j ? c : T(-c))));
        }
    return B;
}

template <class T>
Matrix<T> so_from_bivector(const Multivector<T>& B) {
    if (B.homogeneous_grade() != 2 && !B.is_zero()) throw std::invalid_argument("expected a bivector");
    const int n = B.dim();
    Matrix<T> m(n, n);
    for (int j = 0; j < n; ++j) {
        auto img = commutator(B, Multivector<T>::gen(B.sig(), j));
        for (int i = 0; i < n; ++i) m(i, j) = img.coeff(Mask(1) << i);
    }
    return m;
}

// tr over bivectors of ad_A ad_B.
template <class T>
T killing_form(const Multivector<T>& A, const Multivector<T>& B) {
    const int n = A.dim();
    T tr = Ring<T>::zero();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Mask m = (Mask(1) << a) | (Mask(1) << b);
            auto E = Multivector<T>::blade(A.sig(), m);
            tr += commutator(A, commutator(B, E)).coeff(m);
        }
    return tr;
}

struct PlaneTerm {
    double weight;
    Multivector<double> f1, f2;  // unit factors in the splitting metric
    Multivector<double> blade;   // weight * f1 ∧ f2
};

// Orthogonal commuting 2-blades summing to B, via invariant planes of v ↦ v ⌞ B under the euclidean metric.
std::vector<PlaneTerm> split_bivector_euclidean_metric(const Multivector<double>& B);

// Euclidean signatures: pairwise commuting blades over orthogonal planes.
std::vector<PlaneTerm> split_bivector(const Multivector<double>& B);

// Any signature: a decomposition into 2-blades in some general basis.
std::vector<PlaneTerm> split_bivector_general(const Multivector<double>& B);

// Requires metric-orthonormal factors; throws when no such split exists.
std::vector<PlaneTerm> split_bivector_orthonormal(const Multivector<double>& B);

// ±e^B computed from a split when euclidean, by series otherwise.
Multivector<double> rotor_exp(const Multivector<double>& B);

// Points of R^n inside G(R^{n,0,1}); the null generator is the last one.
template <class T>
Multivector<T> null_generator(const SigPtr<T>& sig) {
    auto c = sig->counts();
    if (!c || c->t != 0 || c->u != 1 || !is_zero((*sig)[sig->dim() - 1]))
        throw std::invalid_argument("needs signature R(n,0,1) with the null generator last");
    return Multivector<T>::gen(sig, sig->dim() - 1);
}

template <class T>
Multivector<T> euclidean_embed(const SigPtr<T>& sig, const std::vector<T>& x) {
    auto e = null_generator(sig);
    auto v = x;
    v.push_back(Ring<T>::zero());
    return Multivector<T>::scalar(sig, Ring<T>::one()) + e * Multivector<T>::vector(sig, v);
}

template <class T>
Multivector<T> translation_rotor(const SigPtr<T>& sig, const std::vector<T>& a) {
    auto e = null_generator(sig);
    auto v = a;
    v.push_back(Ring<T>::zero());
    T half = T(Ring<T>::one() * Ring<T>::inv(Ring<T>::from_int(2)));
    return Multivector<T>::scalar(sig, Ring<T>::one()) - (e * Multivector<T>::vector(sig, v)) * half;
}

// Grade involution that leaves the null generator unflipped.
template <class T>
Multivector<T> involute_keep_null(const Multivector<T>& x) {
    Mask null = Mask(1) << (x.dim() - 1);
    Multivector<T> r(x.sig());
    for (const auto& [m, v] : x.terms()) r.set_term(m, (grade(m & ~null) & 1) ? T(-v) : v);
    return r;
}

template <class T>
std::vector<T> apply_euclidean(const Multivector<T>& versor, const std::vector<T>& x) {
    const auto& sig = versor.sig();
    null_generator(sig);
    auto y = involute_keep_null(versor) * euclidean_embed(sig, x) * inverse(versor);
    const int n = sig->dim() - 1;
    Mask null = Mask(1) << n;
    std::vector<T> out(n);
    for (int i = 0; i < n; ++i) out[i] = T(-y.coeff((Mask(1) << i) | null));
    return out;
}

}  // namespace ga
