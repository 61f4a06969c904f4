// Outermorphisms, adjoints, determinants, dual maps and the mother-algebra embedding.
#pragma once

#include "ga/products.hpp"

#include <functional>

namespace ga {

template <class T>
using MultiMap = std::function<Multivector<T>(const Multivector<T>&)>;

// A linear map on vectors (column j holds the image of e_{j+1}) and its grade-wise extension.
template <class T>
class Outermorphism {
public:
    Outermorphism(SigPtr<T> sig, Matrix<T> m) : sig_(std::move(sig)), m_(std::move(m)) {
        if (!m_.square() || int(m_.rows()) != sig_->dim()) throw std::invalid_argument("map dimension mismatch");
        for (int j = 0; j < sig_->dim(); ++j) images_.push_back(Multivector<T>::vector(sig_, m_.column(j)));
    }
    static Outermorphism identity(SigPtr<T> sig) {
        auto n = std::size_t(sig->dim());
        return Outermorphism(std::move(sig), Matrix<T>::identity(n));
    }

    const SigPtr<T>& sig() const { return sig_; }
    const Matrix<T>& matrix() const { return m_; }
    const Multivector<T>& image(int j) const { return images_[j]; }

    Multivector<T> operator()(const Multivector<T>& x) const {
        if (!(*x.sig() == *sig_)) throw std::invalid_argument("map dimension mismatch");
        Multivector<T> out(sig_);
        for (const auto& [mask, v] : x.terms()) {
            auto acc = Multivector<T>::scalar(sig_, v);
            for (int i : mask_indices(mask)) {
                acc = outer(acc, images_[i]);
                if (acc.is_zero()) break;
            }
            out += acc;
        }
        return out;
    }

    friend Outermorphism compose(const Outermorphism& g, const Outermorphism& f) {
        return Outermorphism(f.sig_, g.m_ * f.m_);
    }

private:
    SigPtr<T> sig_;
    Matrix<T> m_;
    std::vector<Multivector<T>> images_;
};

// Metric adjoint: F*(x) * y = x * F(y).
template <class T>
Outermorphism<T> adjoint(const Outermorphism<T>& f) {
    const auto& sig = *f.sig();
    if (!sig.nondegenerate()) throw std::domain_error("adjoint needs a nondegenerate signature");
    const int n = sig.dim();
    Matrix<T> a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            T v = T(sig[j] * f.matrix()(j, i));
            if constexpr (Ring<T>::field) a(i, j) = T(v * Ring<T>::inv(sig[i]));
            else a(i, j) = T(v * sig[i]);  // r_i = +-1
        }
    return Outermorphism<T>(f.sig(), a);
}

template <class T>
T determinant(const Outermorphism<T>& f) {
    return f(pseudoscalar(f.sig())).coeff(f.sig()->full());
}

// F^c(x) = F(xI) I^{-1}.
template <class T>
MultiMap<T> dual_map(const MultiMap<T>& F, const SigPtr<T>& sig) {
    auto I = pseudoscalar(sig);
    auto Iinv = pseudoscalar_inverse(sig);
    return [F, I, Iinv](const Multivector<T>& x) { return F(x * I) * Iinv; };
}

template <class T>
MultiMap<T> as_map(const Outermorphism<T>& f) {
    return [f](const Multivector<T>& x) { return f(x); };
}

// F^{*c}, taken as the adjugate.
template <class T>
MultiMap<T> adjugate(const Outermorphism<T>& f) {
    return dual_map(as_map(adjoint(f)), f.sig());
}

template <class T>
Outermorphism<T> inverse(const Outermorphism<T>& f) {
    T d = determinant(f);
    if (is_zero(d)) throw std::domain_error("singular");
    auto adj = adjugate(f);
    const int n = f.sig()->dim();
    Matrix<T> m(n, n);
    T dinv = Ring<T>::inv(d);
    for (int j = 0; j < n; ++j) {
        auto img = adj(Multivector<T>::gen(f.sig(), j));
        for (int i = 0; i < n; ++i) m(i, j) = T(img.coeff(Mask(1) << i) * dinv);
    }
    return Outermorphism<T>(f.sig(), m);
}

// Embedding of G(R^{s,t,u}) into G(R^{n,n}): generators 0..n-1 of the target square to +1, n..2n-1 to -1.
template <class T>
class MotherEmbedding {
public:
    explicit MotherEmbedding(SigPtr<T> source) : src_(std::move(source)) {
        auto c = src_->counts();
        if (!c) throw std::invalid_argument("mother embedding needs a +1/-1/0 signature");
        const int n = src_->dim();
        if (2 * n > 64) throw std::invalid_argument("dimension overflow: target needs at most 64 generators");
        dst_ = Signature<T>::counts(n, n, 0);
        int p = 0, q = 0, k = 0;
        const int st = c->s + c->t;
        for (int i = 0; i < n; ++i) {
            const T& r = (*src_)[i];
            if (r == Ring<T>::one()) images_.push_back(Multivector<T>::gen(dst_, p++));
            else if (r == T(-Ring<T>::one())) images_.push_back(Multivector<T>::gen(dst_, n + q++));
            else {
                int idx = st + k++;
                images_.push_back(Multivector<T>::gen(dst_, idx) - Multivector<T>::gen(dst_, n + idx));
            }
        }
    }
    const SigPtr<T>& target() const { return dst_; }

    Multivector<T> operator()(const Multivector<T>& x) const {
        if (!(*x.sig() == *src_)) throw std::invalid_argument("signature mismatch");
        Multivector<T> out(dst_);
        for (const auto& [mask, v] : x.terms()) {
            auto acc = Multivector<T>::scalar(dst_, v);
            for (int i : mask_indices(mask)) acc = acc * images_[i];
            out += acc;
        }
        return out;
    }

private:
    SigPtr<T> src_, dst_;
    std::vector<Multivector<T>> images_;
};

}  // namespace ga
