// Signatures, basis-blade masks, the sign map and the Clifford product.
#pragma once

#include "ga/matrix.hpp"
#include "ga/scalar.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ga {

using Mask = std::uint64_t;

inline int grade(Mask m) { return std::popcount(m); }

// Parity of the number of pairs (i in a, j in b) with i > j.
inline bool reorder_odd(Mask a, Mask b) {
    unsigned cnt = 0;
    a >>= 1;
    while (a) {
        cnt += std::popcount(a & b);
        a >>= 1;
    }
    return cnt & 1u;
}

inline std::vector<int> mask_indices(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

struct SignatureCounts {
    int s = 0, t = 0, u = 0;
};

template <class T>
class Signature {
public:
    explicit Signature(std::vector<T> values) : r_(std::move(values)) {
        if (r_.size() > 64) throw std::invalid_argument("at most 64 generators");
        bool unit = true;
        for (std::size_t i = 0; i < r_.size(); ++i) {
            if (r_[i] == Ring<T>::one()) continue;
            if (r_[i] == T(-Ring<T>::one())) neg_ |= Mask(1) << i;
            else if (is_zero(r_[i])) zero_ |= Mask(1) << i;
            else unit = false;
        }
        unit_ = unit;
    }

    static std::shared_ptr<const Signature> make(std::vector<T> values) {
        return std::make_shared<const Signature>(std::move(values));
    }
    // Generators ordered as s positives, t negatives, then u null ones.
    static std::shared_ptr<const Signature> counts(int s, int t, int u = 0) {
        if (s < 0 || t < 0 || u < 0) throw std::invalid_argument("negative signature count");
        std::vector<T> v;
        for (int i = 0; i < s; ++i) v.push_back(Ring<T>::one());
        for (int i = 0; i < t; ++i) v.push_back(T(-Ring<T>::one()));
        for (int i = 0; i < u; ++i) v.push_back(Ring<T>::zero());
        return make(std::move(v));
    }

    int dim() const { return int(r_.size()); }
    const T& operator[](int i) const { return r_[i]; }
    const std::vector<T>& values() const { return r_; }
    Mask full() const { return r_.size() == 64 ? ~Mask(0) : (Mask(1) << r_.size()) - 1; }

    // Only defined when every value is +1, -1 or 0.
    std::optional<SignatureCounts> counts() const {
        if (!unit_) return std::nullopt;
        int t = std::popcount(neg_), u = std::popcount(zero_);
        return SignatureCounts{dim() - t - u, t, u};
    }
    bool unit_valued() const { return unit_; }
    bool nondegenerate() const {
        for (const auto& v : r_) {
            if (is_zero(v)) return false;
            if constexpr (!Ring<T>::field) {
                if (!(v == Ring<T>::one() || v == T(-Ring<T>::one()))) return false;
            }
        }
        return true;
    }
    bool euclidean() const { return unit_ && neg_ == 0 && zero_ == 0; }

    // Sign-and-metric factor of the product of basis blades a and b.
    T tau(Mask a, Mask b) const {
        Mask both = a & b;
        T v = reorder_odd(a, b) ? T(-Ring<T>::one()) : Ring<T>::one();
        if (unit_) {
            if (both & zero_) return Ring<T>::zero();
            if (std::popcount(both & neg_) & 1) v = T(-v);
            return v;
        }
        while (both) {
            v = T(v * r_[std::countr_zero(both)]);
            both &= both - 1;
        }
        return v;
    }

    friend bool operator==(const Signature& a, const Signature& b) { return a.r_ == b.r_; }

private:
    std::vector<T> r_;
    Mask neg_ = 0, zero_ = 0;
    bool unit_ = true;
};

template <class T>
using SigPtr = std::shared_ptr<const Signature<T>>;

enum class Involution { grade, reverse, conjugate };

// Sign applied to a grade-k blade by each canonical involution.
inline int involution_sign(Involution kind, int k) {
    switch (kind) {
        case Involution::grade: return (k & 1) ? -1 : 1;
        case Involution::reverse: return ((k * (k - 1) / 2) & 1) ? -1 : 1;
        case Involution::conjugate: return ((k * (k + 1) / 2) & 1) ? -1 : 1;
    }
    return 1;
}

template <class T>
class Multivector {
public:
    using Terms = std::map<Mask, T>;

    explicit Multivector(SigPtr<T> sig) : sig_(std::move(sig)) {
        if (!sig_) throw std::invalid_argument("null signature");
    }

    static Multivector scalar(SigPtr<T> sig, const T& v) {
        Multivector m(std::move(sig));
        if (!ga::is_zero(v)) m.terms_[0] = v;
        return m;
    }
    static Multivector blade(SigPtr<T> sig, Mask mask, const T& v = Ring<T>::one()) {
        if (mask & ~sig->full()) throw std::out_of_range("generator outside the signature");
        Multivector m(std::move(sig));
        if (!ga::is_zero(v)) m.terms_[mask] = v;
        return m;
    }
    // Generator e_{i+1}.
    static Multivector gen(SigPtr<T> sig, int i) { return blade(std::move(sig), Mask(1) << i); }
    static Multivector vector(SigPtr<T> sig, const std::vector<T>& coords) {
        if (int(coords.size()) != sig->dim()) throw std::invalid_argument("vector length differs from dimension");
        Multivector m(std::move(sig));
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (!ga::is_zero(coords[i])) m.terms_[Mask(1) << i] = coords[i];
        return m;
    }

    const SigPtr<T>& sig() const { return sig_; }
    int dim() const { return sig_->dim(); }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    T coeff(Mask m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Ring<T>::zero() : it->second;
    }
    T scalar_part() const { return coeff(0); }

    // Adds v to the coefficient of `mask`, dropping exact zeros.
    void add_term(Mask mask, const T& v) {
        if (ga::is_zero(v)) return;
        auto [it, fresh] = terms_.try_emplace(mask, v);
        if (!fresh) {
            it->second += v;
            if (ga::is_zero(it->second)) terms_.erase(it);
        }
    }
    void set_term(Mask mask, const T& v) {
        if (ga::is_zero(v)) terms_.erase(mask);
        else terms_[mask] = v;
    }

    double max_magnitude() const {
        double m = 0;
        for (const auto& [k, v] : terms_) m = std::max(m, Ring<T>::magnitude(v));
        return m;
    }
    // Float rings: drop terms with |c| <= 1e-12 * scale.
    Multivector& prune(double scale) {
        if constexpr (!Ring<T>::exact) {
            double cut = 1e-12 * scale;
            for (auto it = terms_.begin(); it != terms_.end();)
                it = Ring<T>::magnitude(it->second) <= cut ? terms_.erase(it) : std::next(it);
        }
        return *this;
    }

    std::set<int> grades() const {
        std::set<int> g;
        for (const auto& [k, v] : terms_) g.insert(grade(k));
        return g;
    }
    // -1 for zero, the grade if homogeneous, otherwise -2.
    int homogeneous_grade() const {
        auto g = grades();
        if (g.empty()) return -1;
        return g.size() == 1 ? *g.begin() : -2;
    }

    Multivector grade_part(int k) const {
        Multivector r(sig_);
        for (const auto& [m, v] : terms_)
            if (grade(m) == k) r.terms_.emplace(m, v);
        return r;
    }
    Multivector grade_parts(const std::set<int>& ks) const {
        Multivector r(sig_);
        for (const auto& [m, v] : terms_)
            if (ks.count(grade(m))) r.terms_.emplace(m, v);
        return r;
    }
    Multivector even() const {
        Multivector r(sig_);
        for (const auto& [m, v] : terms_)
            if (!(grade(m) & 1)) r.terms_.emplace(m, v);
        return r;
    }

    Multivector involute(Involution kind) const {
        Multivector r(sig_);
        for (const auto& [m, v] : terms_)
            r.terms_.emplace(m, involution_sign(kind, grade(m)) < 0 ? T(-v) : v);
        return r;
    }
    // Flips the sign of every listed grade.
    Multivector flip_grades(const std::set<int>& ks) const {
        Multivector r(sig_);
        for (const auto& [m, v] : terms_) r.terms_.emplace(m, ks.count(grade(m)) ? T(-v) : v);
        return r;
    }
    Multivector grade_involution() const { return involute(Involution::grade); }
    Multivector reverse() const { return involute(Involution::reverse); }
    Multivector conjugate() const { return involute(Involution::conjugate); }

    void check_same(const Multivector& o) const {
        if (sig_ != o.sig_ && !(*sig_ == *o.sig_)) throw std::invalid_argument("signature mismatch");
    }

    friend Multivector operator+(const Multivector& a, const Multivector& b) {
        a.check_same(b);
        Multivector r = a;
        for (const auto& [m, v] : b.terms_) r.add_term(m, v);
        return r.prune(std::max(a.max_magnitude(), b.max_magnitude()));
    }
    friend Multivector operator-(const Multivector& a) {
        Multivector r(a.sig_);
        for (const auto& [m, v] : a.terms_) r.terms_.emplace(m, T(-v));
        return r;
    }
    friend Multivector operator-(const Multivector& a, const Multivector& b) { return a + (-b); }
    friend Multivector operator*(const T& s, const Multivector& a) {
        Multivector r(a.sig_);
        if (ga::is_zero(s)) return r;
        for (const auto& [m, v] : a.terms_) r.add_term(m, T(s * v));
        return r;
    }
    friend Multivector operator*(const Multivector& a, const T& s) { return s * a; }
    Multivector& operator+=(const Multivector& o) { return *this = *this + o; }
    Multivector& operator-=(const Multivector& o) { return *this = *this - o; }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return *a.sig_ == *b.sig_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

    // Bilinear extension of a blade-level rule; `rule(ma, mb)` reports whether the pair contributes.
    template <class Rule>
    Multivector combine(const Multivector& o, Rule rule) const {
        check_same(o);
        Multivector r(sig_);
        for (const auto& [ma, va] : terms_)
            for (const auto& [mb, vb] : o.terms_) {
                if (!rule(ma, mb)) continue;
                T t = sig_->tau(ma, mb);
                if (ga::is_zero(t)) continue;
                r.add_term(ma ^ mb, T(t * T(va * vb)));
            }
        return r.prune(max_magnitude() * o.max_magnitude());
    }

    friend Multivector operator*(const Multivector& a, const Multivector& b) {
        return a.combine(b, [](Mask, Mask) { return true; });
    }

private:
    SigPtr<T> sig_;
    Terms terms_;
};

template <class T>
Multivector<T> pseudoscalar(const SigPtr<T>& sig) {
    return Multivector<T>::blade(sig, sig->full());
}

// Closed form (-1)^{n(n-1)/2 + t} when u = 0, else 0.
inline int pseudoscalar_square_sign(int s, int t, int u) {
    if (u > 0) return 0;
    long n = s + t;
    return ((n * (n - 1) / 2 + t) & 1) ? -1 : 1;
}

template <class T>
T pseudoscalar_square(const SigPtr<T>& sig) {
    auto I = pseudoscalar(sig);
    return (I * I).scalar_part();
}

// Basis change P with P^T Q P diagonal, found by repeated orthogonal splitting.
template <class T>
struct Diagonalization {
    Matrix<T> basis;          // columns are the new basis vectors
    std::vector<T> diagonal;  // q of each new basis vector
    SignatureCounts counts;
};

template <class T>
Diagonalization<T> diagonalize_quadratic_form(const Matrix<T>& Q) {
    static_assert(Ring<T>::field, "diagonalization needs a field");
    if (!Q.symmetric()) throw std::invalid_argument("quadratic form matrix is not symmetric");
    const std::size_t n = Q.rows();
    auto beta = [&](const std::vector<T>& x, const std::vector<T>& y) {
        T acc = Ring<T>::zero();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) acc += T(x[i] * Q(i, j) * y[j]);
        return acc;
    };
    std::vector<std::vector<T>> rest;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<T> e(n, Ring<T>::zero());
        e[i] = Ring<T>::one();
        rest.push_back(e);
    }
    std::vector<std::vector<T>> done;
    std::vector<T> diag;
    while (!rest.empty()) {
        std::size_t pick = rest.size();
        std::vector<T> e;
        for (std::size_t i = 0; i < rest.size() && pick == rest.size(); ++i)
            if (!is_zero(beta(rest[i], rest[i]))) { pick = i; e = rest[i]; }
        if (pick == rest.size()) {
            for (std::size_t i = 0; i < rest.size() && pick == rest.size(); ++i)
                for (std::size_t j = i + 1; j < rest.size(); ++j)
                    if (!is_zero(beta(rest[i], rest[j]))) {
                        pick = i;
                        e = rest[i];
                        for (std::size_t k = 0; k < n; ++k) e[k] += rest[j][k];
                        break;
                    }
        }
        if (pick == rest.size()) {
            for (auto& v : rest) { done.push_back(v); diag.push_back(Ring<T>::zero()); }
            break;
        }
        rest.erase(rest.begin() + long(pick));
        T qe = beta(e, e);
        for (auto& x : rest) {
            T c = T(beta(x, e) / qe);
            for (std::size_t k = 0; k < n; ++k) x[k] -= T(c * e[k]);
        }
        done.push_back(e);
        diag.push_back(qe);
    }
    Diagonalization<T> out{Matrix<T>(n, n), diag, {}};
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) out.basis(i, j) = done[j][i];
    for (const auto& d : diag) {
        int sg = Ring<T>::sign(d);
        (sg > 0 ? out.counts.s : sg < 0 ? out.counts.t : out.counts.u)++;
    }
    return out;
}

}  // namespace ga
