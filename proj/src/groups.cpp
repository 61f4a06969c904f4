#include "ga/groups.hpp"

#include <numeric>

namespace ga {

namespace {

using Vec = Eigen::VectorXd;

Multivector<double> to_mv(const SigPtr<double>& sig, const Vec& v) {
    std::vector<double> c(v.data(), v.data() + v.size());
    return Multivector<double>::vector(sig, c);
}

}  // namespace

std::vector<PlaneTerm> split_bivector_euclidean_metric(const Multivector<double>& Bin) {
    if (Bin.homogeneous_grade() != 2 && !Bin.is_zero()) throw std::invalid_argument("expected a bivector");
    const int n = Bin.dim();
    auto esig = Signature<double>::counts(n, 0, 0);
    auto B = with_signature(Bin, esig);
    // M(i,j) = coefficient of e_i in e_j ⌞ B; antisymmetric.
    Eigen::MatrixXd M(n, n);
    for (int j = 0; j < n; ++j) {
        auto img = left_inner(Multivector<double>::gen(esig, j), B);
        for (int i = 0; i < n; ++i) M(i, j) = img.coeff(Mask(1) << i);
    }
    std::vector<PlaneTerm> out;
    double mnorm = M.cwiseAbs().maxCoeff();
    if (mnorm == 0) return out;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M.transpose() * M);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return es.eigenvalues()(a) > es.eigenvalues()(b); });
    std::vector<Vec> used;
    auto orth = [&](Vec v) {
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : used) v -= q.dot(v) * q;
        return v;
    };
    for (int idx : order) {
        Vec v = orth(es.eigenvectors().col(idx));
        if (v.norm() < 1e-6) continue;
        v.normalize();
        Vec w = orth(M * v);
        w -= w.dot(v) * v;
        double beta = w.norm();
        if (beta <= 1e-12 * mnorm) break;
        w /= beta;
        used.push_back(v);
        used.push_back(w);
        auto f1 = to_mv(esig, v), f2 = to_mv(esig, w);
        auto P = outer(f1, f2);
        double weight = scalar_product(B, P) / scalar_product(P, P);
        const auto& sig = Bin.sig();
        auto g1 = with_signature(f1, sig), g2 = with_signature(f2, sig);
        out.push_back({weight, g1, g2, outer(g1, g2) * weight});
    }
    return out;
}

std::vector<PlaneTerm> split_bivector(const Multivector<double>& B) {
    if (!B.sig()->euclidean()) throw std::invalid_argument("orthogonal split needs a euclidean signature");
    return split_bivector_euclidean_metric(B);
}

std::vector<PlaneTerm> split_bivector_general(const Multivector<double>& B) {
    return split_bivector_euclidean_metric(B);
}

std::vector<PlaneTerm> split_bivector_orthonormal(const Multivector<double>& B) {
    if (B.sig()->euclidean()) return split_bivector(B);
    if (!B.sig()->nondegenerate()) throw std::domain_error("degenerate signature");
    auto terms = split_bivector_euclidean_metric(B);
    double scale = std::max(1.0, B.max_magnitude());
    std::vector<Multivector<double>> fs;
    for (auto& t : terms) {
        fs.push_back(t.f1);
        fs.push_back(t.f2);
    }
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = 0; j < fs.size(); ++j) {
            double p = scalar_product(fs[i], fs[j]);
            if (i == j && std::fabs(p) < 1e-9) throw std::domain_error("no orthonormal split: null factor");
            if (i != j && std::fabs(p) > 1e-9 * scale) throw std::domain_error("no orthonormal split: factors not orthogonal");
        }
    for (auto& t : terms) {
        double a = std::sqrt(std::fabs(scalar_product(t.f1, t.f1)));
        double b = std::sqrt(std::fabs(scalar_product(t.f2, t.f2)));
        t.f1 = t.f1 * (1 / a);
        t.f2 = t.f2 * (1 / b);
        t.weight *= a * b;
    }
    return terms;
}

Multivector<double> rotor_exp(const Multivector<double>& B) {
    if (B.homogeneous_grade() != 2 && !B.is_zero()) throw std::invalid_argument("expected a bivector");
    if (!B.sig()->euclidean()) return exp(B);
    auto R = Multivector<double>::scalar(B.sig(), 1.0);
    for (const auto& t : split_bivector(B)) R = R * exp(t.blade);
    return R;
}

}  // namespace ga
