#include "ga/tables.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace ga;
using namespace ga::tables;
using namespace test;

namespace {

using CQ = Cx<Q>;
using CD = Cx<double>;

template <class T>
Mat2<T> mat_mul(const Mat2<T>& a, const Mat2<T>& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

double mat_diff(const Mat2<double>& a, const Mat2<double>& b) {
    double m = 0;
    for (int k = 0; k < 4; ++k) m = std::max({m, std::fabs(a[k].re - b[k].re), std::fabs(a[k].im - b[k].im)});
    return m;
}

double coeff_norm(const Multivector<double>& x) {
    double s = 0;
    for (const auto& [m, v] : x.terms()) s += v * v;
    return std::sqrt(s);
}

Multivector<double> random_octonion(Rng& rng, const SigPtr<double>& sig) {
    auto x = Multivector<double>::scalar(sig, rng.real(-1, 1));
    for (int i = 0; i < 7; ++i) x += Multivector<double>::gen(sig, i) * rng.real(-1, 1);
    return x;
}

}  // namespace

TEST_CASE("real classification") {
    CHECK(classify_real(0, 1).str() == "C");
    CHECK(classify_real(3, 0).str() == "C[2]");
    CHECK(classify_real(1, 3).str() == "H[2]");
    CHECK(classify_real(1, 0).str() == "R+R");
    CHECK(classify_real(0, 3).str() == "H+H");
    CHECK(classify_real(8, 8).str() == "R[256]");
    CHECK(classify_real(7, 8).str() == "C[128]");
    CHECK(classify_real(0, 9).str() == "C[16]");
    CHECK(classify_real(9, 0).str() == "R[16]+R[16]");
    for (int t = 0; t <= 8; ++t)
        for (int s = 0; s <= 8; ++s) {
            auto a = parse_algebra(real_table()[t][s]);
            REQUIRE(a == classify_real(s, t));
            REQUIRE(a == mod8_oracle(s, t));
            REQUIRE(a.real_dim() == std::ldexp(1.0L, s + t));
            if (s < 8 && t < 8) {
                // tensoring with R[2] doubles the matrix size
                auto b = parse_algebra(real_table()[t + 1][s + 1]);
                REQUIRE(b.field == a.field);
                REQUIRE(b.doubled == a.doubled);
                REQUIRE(b.size == 2 * a.size);
            }
        }
    for (int s = 0; s <= 16; ++s)
        for (int t = 0; t <= 16; ++t) {
            REQUIRE(classify_real(s, t) == mod8_oracle(s, t));
            REQUIRE(classify_real(s, t).real_dim() == std::ldexp(1.0L, s + t));
        }
    CHECK(classify_real(40, 3) == mod8_oracle(40, 3));
    CHECK_THROWS(classify_real(-1, 0));
}

TEST_CASE("algebra names") {
    CHECK(parse_algebra("H[2]+H[2]") == AlgebraType{'H', 2, true});
    CHECK(parse_algebra("C[4]") == AlgebraType{'C', 4, false});
    CHECK(parse_algebra("R ⊕ R") == AlgebraType{'R', 1, true});
    CHECK_THROWS(parse_algebra("Q[2]"));
    CHECK_THROWS(parse_algebra("R[2]+C[2]"));
}

TEST_CASE("complex classification") {
    CHECK(classify_complex(0).str() == "C");
    CHECK(classify_complex(1).str() == "C+C");
    CHECK(classify_complex(4).str() == "C[4]");
    CHECK(classify_complex(7).str() == "C[8]+C[8]");
    for (int n = 0; n <= 30; ++n) REQUIRE(classify_complex(n).real_dim() == std::ldexp(1.0L, n + 1));
    auto r = complex_representation_counts(5);
    CHECK(r.inequivalent == 2);
    CHECK(r.dim == 4);
    CHECK(complex_representation_counts(4) == RepresentationCounts{1, 4});
}

TEST_CASE("even subalgebras") {
    using P = std::vector<std::pair<int, int>>;
    CHECK(even_subalgebra_signatures(3, 0) == P{{0, 2}});
    CHECK(even_subalgebra_signatures(2, 0) == P{{0, 1}});
    auto sta = even_subalgebra_signatures(1, 3);
    CHECK(std::find(sta.begin(), sta.end(), std::make_pair(3, 0)) != sta.end());
    CHECK(even_subalgebra_signatures(2, 2) == P{{2, 1}});
    CHECK_THROWS(even_subalgebra_signatures(0, 0));
    for (int s = 0; s <= 12; ++s)
        for (int t = 0; t <= 12; ++t) {
            if (s + t == 0) continue;
            auto here = classify_real(s, t);
            auto list = even_subalgebra_signatures(s, t);
            REQUIRE(!list.empty());
            for (auto [a, b] : list) {
                REQUIRE(classify_real(a, b).real_dim() * 2 == here.real_dim());
                REQUIRE(classify_real(a, b) == classify_real(list[0].first, list[0].second));
            }
            auto flipped = even_subalgebra_signatures(t, s);
            REQUIRE(classify_real(list[0].first, list[0].second) == classify_real(flipped[0].first, flipped[0].second));
        }
}

TEST_CASE("even subalgebra agrees with the actual product structure") {
    // G+(R^{3,0}) spanned by 1, e23, e31, e12: the bivectors square to -1 like the quaternions
    auto s = Signature<Q>::counts(3, 0, 0);
    auto i = E(s, {2, 3}), j = E(s, {3, 1}), k = E(s, {1, 2});
    CHECK(i * i == S(s, -1));
    CHECK(i * j * k == S(s, 1));  // reversed orientation of the quaternion units
    auto q = Signature<Q>::counts(0, 2, 0);
    CHECK(E(q, {1}) * E(q, {2}) * E(q, {1, 2}) == S(q, -1));
}

TEST_CASE("representation counts") {
    const RepresentationCounts pos[9] = {{1, 1}, {2, 1}, {1, 2}, {1, 4}, {1, 8}, {2, 8}, {1, 16}, {1, 16}, {1, 16}};
    const RepresentationCounts neg[9] = {{1, 1}, {1, 2}, {1, 4}, {2, 4}, {1, 8}, {1, 8}, {1, 8}, {2, 8}, {1, 16}};
    for (int n = 0; n <= 8; ++n) {
        REQUIRE(representation_counts(n, 0) == pos[n]);
        REQUIRE(representation_counts(0, n) == neg[n]);
        REQUIRE(definite_representation_counts(n, false) == pos[n]);
        REQUIRE(definite_representation_counts(n, true) == neg[n]);
    }
    CHECK(representation_counts(0, 3) == RepresentationCounts{2, 4});
    CHECK(representation_counts(7, 0) == RepresentationCounts{1, 16});
    CHECK(representation_counts(0, 9) == RepresentationCounts{1, 32});
    for (int n = 0; n <= 40; ++n) {
        auto a = definite_representation_counts(n, false), b = definite_representation_counts(n + 8, false);
        REQUIRE(b.inequivalent == a.inequivalent);
        REQUIRE(b.dim == 16 * a.dim);
    }
    // mixed signatures follow the classification
    for (int s = 0; s <= 10; ++s)
        for (int t = 0; t <= 10; ++t) {
            auto c = classify_real(s, t);
            auto r = representation_counts(s, t);
            REQUIRE(r.inequivalent == (c.doubled ? 2 : 1));
            REQUIRE(r.dim == std::uint64_t(c.field_dim()) * c.size);
        }
    // two inequivalent representations exactly when I is central and squares to 1
    for (int s = 0; s <= 6; ++s)
        for (int t = s == 0 ? 1 : 0; s + t <= 6; ++t) {
            auto sig = Signature<Q>::counts(s, t, 0);
            auto I = pseudoscalar(sig);
            bool central = true;
            for (int k = 0; k < s + t; ++k) central = central && I * Multivector<Q>::gen(sig, k) == Multivector<Q>::gen(sig, k) * I;
            bool two = central && I * I == S(sig, 1);
            REQUIRE((representation_counts(s, t).inequivalent == 2) == two);
        }
}

TEST_CASE("Radon-Hurwitz numbers") {
    const int row[17] = {0, 1, 0, 3, 0, 1, 0, 7, 0, 1, 0, 3, 0, 1, 0, 8, 0};
    for (int N = 0; N <= 16; ++N) REQUIRE(radon_hurwitz(N) == row[N]);
    for (int k = 0; k <= 64; ++k) REQUIRE(radon_hurwitz(2 * k) == 0);
    CHECK(radon_hurwitz(31) == 9);
    CHECK(radon_hurwitz(63) == 11);
    CHECK(radon_hurwitz(127) == 15);
    CHECK(radon_hurwitz(255) == 16);
    CHECK_THROWS(radon_hurwitz(-1));
}

TEST_CASE("Pauli representation") {
    auto s = Signature<Q>::counts(3, 0, 0);
    const Q z = 0, o = 1;
    auto p1 = pauli_rep(E(s, {1}));
    CHECK(p1 == Mat2<Q>{CQ{z, z}, CQ{o, z}, CQ{o, z}, CQ{z, z}});
    CHECK(pauli_rep(S(s, 1)) == Mat2<Q>{CQ{o, z}, CQ{z, z}, CQ{z, z}, CQ{o, z}});
    auto prod = mat_mul(mat_mul(pauli_rep(E(s, {1})), pauli_rep(E(s, {2}))), pauli_rep(E(s, {3})));
    CHECK(prod == Mat2<Q>{CQ{z, o}, CQ{z, z}, CQ{z, z}, CQ{z, o}});
    CHECK_THROWS(pauli_rep(S(Signature<Q>::counts(2, 0, 0), 1)));

    Rng rng(91);
    for (int trial = 0; trial < 50; ++trial) {
        Q al = random_scalar<Q>(rng), be = random_scalar<Q>(rng);
        Q a[3], b[3];
        for (int i = 0; i < 3; ++i) a[i] = random_scalar<Q>(rng), b[i] = random_scalar<Q>(rng);
        auto av = Multivector<Q>::vector(s, {a[0], a[1], a[2]}), bv = Multivector<Q>::vector(s, {b[0], b[1], b[2]});
        auto I = pseudoscalar(s);
        auto x = S(s, 1) * al + av + bv * I + I * be;
        Mat2<Q> want{CQ{Q(al + a[2]), Q(be + b[2])}, CQ{Q(a[0] + b[1]), Q(b[0] - a[1])},
                     CQ{Q(a[0] - b[1]), Q(b[0] + a[1])}, CQ{Q(al - a[2]), Q(be - b[2])}};
        REQUIRE(pauli_rep(x) == want);
        auto y = random_mv<Q>(rng, s, 8);
        REQUIRE(pauli_rep(x * y) == mat_mul(pauli_rep(x), pauli_rep(y)));
    }
    auto sd = Signature<double>::counts(3, 0, 0);
    for (int trial = 0; trial < 500; ++trial) {
        auto x = random_mv<double>(rng, sd, 8), y = random_mv<double>(rng, sd, 8);
        REQUIRE(mat_diff(pauli_rep(x * y), mat_mul(pauli_rep(x), pauli_rep(y))) < 1e-12);
    }
}

TEST_CASE("octonions") {
    auto sq = Signature<Q>::counts(0, 7, 0);
    auto one = S(sq, 1);
    Rng rng(92);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = Multivector<Q>::scalar(sq, random_scalar<Q>(rng)) + random_vector<Q>(rng, sq);
        REQUIRE(octonion_product(one, a) == a);
        REQUIRE(octonion_product(a, one) == a);
    }
    CHECK(octonion_product(E(sq, {1}), E(sq, {1})) == S(sq, -1));
    for (int i = 1; i <= 7; ++i) REQUIRE(octonion_product(E(sq, {i}), E(sq, {i})) == S(sq, -1));
    CHECK_THROWS(octonion_product(E(sq, {1, 2}), one));
    CHECK_THROWS(octonion_product(S(Signature<Q>::counts(7, 0, 0), 1), S(Signature<Q>::counts(7, 0, 0), 1)));
    // imaginary units anticommute
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j) {
            auto p = octonion_product(E(sq, {i}), E(sq, {j}));
            REQUIRE(p == -octonion_product(E(sq, {j}), E(sq, {i})));
            REQUIRE(p.homogeneous_grade() == 1);
        }
    bool nonassoc = false;
    for (int i = 1; i <= 7 && !nonassoc; ++i)
        for (int j = 1; j <= 7 && !nonassoc; ++j)
            for (int k = 1; k <= 7 && !nonassoc; ++k) {
                auto l = octonion_product(octonion_product(E(sq, {i}), E(sq, {j})), E(sq, {k}));
                auto r = octonion_product(E(sq, {i}), octonion_product(E(sq, {j}), E(sq, {k})));
                if (!(l == r)) nonassoc = true;
            }
    CHECK(nonassoc);

    auto sd = Signature<double>::counts(0, 7, 0);
    for (int trial = 0; trial < 1000; ++trial) {
        auto a = random_octonion(rng, sd), b = random_octonion(rng, sd);
        REQUIRE(std::fabs(coeff_norm(octonion_product(a, b)) - coeff_norm(a) * coeff_norm(b)) < 1e-10);
    }
}
