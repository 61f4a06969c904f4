#include "ga/blades.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ga;
using namespace test;

TEST_CASE("gram scalar is the determinant of scalar products") {
    auto sig = Signature<Q>::counts(2, 0, 0);
    CHECK(gram_scalar<Q>({E(sig, {1}), E(sig, {2})}, {E(sig, {1}), E(sig, {2})}) == 1);
    Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        int n = int(rng.integer(1, 5));
        auto s = random_signature<Q>(rng, n, true);
        int k = int(rng.integer(1, n));
        std::vector<Multivector<Q>> u, v;
        for (int i = 0; i < k; ++i) {
            u.push_back(random_vector<Q>(rng, s));
            v.push_back(random_vector<Q>(rng, s));
        }
        Matrix<Q> m(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m(i, j) = scalar_product(u[i], v[j]);
        REQUIRE(gram_scalar(u, v) == determinant(m));
    }
    auto a = E(sig, {1}) + E(sig, {2});
    CHECK(gram_scalar<Q>({a, a * Q(2)}, {E(sig, {1}), E(sig, {2})}) == 0);
}

TEST_CASE("independence via the wedge") {
    auto sig = Signature<Q>::counts(2, 0, 0);
    CHECK(is_independent<Q>({E(sig, {1}), E(sig, {2})}));
    CHECK(!is_independent<Q>({E(sig, {1}), E(sig, {1}) * Q(2)}));
    auto lor = Signature<Q>::make({1, -1});  // e0, e1
    auto np = E(lor, {1}) + E(lor, {2}), nm = E(lor, {1}) - E(lor, {2});
    CHECK(is_independent<Q>({np, nm}));
    CHECK(scalar_product(np, nm) == 2);
    CHECK(outer(np, nm) == E(lor, {2, 1}) * Q(2));
    // rank oracle
    Rng rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        int n = int(rng.integer(1, 5)), k = int(rng.integer(1, n));
        auto s = Signature<Q>::counts(n, 0, 0);
        std::vector<Multivector<Q>> vs;
        Matrix<Q> m(n, k);
        for (int j = 0; j < k; ++j) {
            std::vector<Q> c;
            for (int i = 0; i < n; ++i) c.push_back(Q(rng.integer(-1, 1)));
            vs.push_back(Multivector<Q>::vector(s, c));
            for (int i = 0; i < n; ++i) m(i, j) = c[i];
        }
        REQUIRE(is_independent(vs) == (rank(m) == std::size_t(k)));
    }
}

TEST_CASE("blade recognition and factorization") {
    auto s4 = Signature<Q>::counts(4, 0, 0);
    auto B = E(s4, {1, 2}) + E(s4, {3, 4});
    CHECK(!is_blade(B));
    CHECK_THROWS_WITH(factor_blade(B), "not a blade");
    CHECK(B * B == (S(s4, 1) - pseudoscalar(s4)) * Q(-2));
    CHECK(is_blade(E(s4, {1}) + E(s4, {3})));
    CHECK(is_blade(E(s4, {1, 2, 3})));
    CHECK(!is_blade(S(s4, 1) + E(s4, {1})));
    auto s3 = Signature<Q>::counts(3, 0, 0);
    auto A = outer(E(s3, {1}) + E(s3, {2}), E(s3, {3}));
    auto f = factor_blade(A);
    CHECK(f.size() == 2);
    CHECK(wedge_all(s3, f) == A);
    CHECK(wedge_all(s3, factor_blade(E(s3, {1, 2}))) == E(s3, {1, 2}));

    Rng rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        int n = int(rng.integer(2, 6)), k = int(rng.integer(1, n));
        auto s = random_signature<Q>(rng, n, true);
        std::vector<Multivector<Q>> vs;
        for (int i = 0; i < k; ++i) vs.push_back(random_vector<Q>(rng, s));
        auto W = wedge_all(s, vs);
        if (W.is_zero()) continue;
        REQUIRE(is_blade(W));
        REQUIRE(wedge_all(s, factor_blade(W)) == W);
        // blade square is a scalar
        auto sq = W * W;
        REQUIRE((sq.is_zero() || sq.grades() == std::set<int>{0}));
        // subspace membership: a ∧ W = 0 iff a lies in the span
        auto inside = vs[0] * Q(2) - vs.back();
        REQUIRE(outer(inside, W).is_zero());
    }
    // float version with tolerance
    auto sd = Signature<double>::counts(5, 0, 0);
    Rng r2(34);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Multivector<double>> vs{random_vector<double>(r2, sd), random_vector<double>(r2, sd), random_vector<double>(r2, sd)};
        auto W = wedge_all(sd, vs);
        REQUIRE(close(wedge_all(sd, factor_blade(W)), W, 1e-9));
    }
}

TEST_CASE("blade square formula for 2-blades") {
    Rng rng(35);
    for (int trial = 0; trial < 100; ++trial) {
        auto s = random_signature<Q>(rng, int(rng.integer(2, 6)), true);
        auto a = random_vector<Q>(rng, s), b = random_vector<Q>(rng, s);
        auto ab = outer(a, b);
        Q want = scalar_product(a, b) * scalar_product(a, b) - scalar_product(a, a) * scalar_product(b, b);
        REQUIRE(ab * ab == Multivector<Q>::scalar(s, want));
    }
}

TEST_CASE("reciprocal bases") {
    auto s3 = Signature<Q>::counts(3, 0, 0);
    std::vector<Multivector<Q>> std3{E(s3, {1}), E(s3, {2}), E(s3, {3})};
    auto r = reciprocal_basis(std3);
    for (int i = 0; i < 3; ++i) CHECK(r.reciprocal[i] == std3[i]);

    auto lor = Signature<Q>::make({1, -1});  // e0 then e1
    auto e0 = E(lor, {1}), e1 = E(lor, {2});
    auto np = e0 + e1, nm = e0 - e1;
    auto rn = reciprocal_basis<Q>({np, nm});
    CHECK(rn.reciprocal[0] == nm * Q(1, 2));
    CHECK(rn.reciprocal[1] == np * Q(1, 2));

    auto sta = Signature<Q>::make({1, -1, -1, -1});  // e0, e1, e2, e3
    std::vector<Multivector<Q>> b;
    for (int i = 1; i <= 4; ++i) b.push_back(E(sta, {i}));
    auto rs = reciprocal_basis(b);
    CHECK(rs.reciprocal[0] == b[0]);
    for (int j = 1; j < 4; ++j) CHECK(rs.reciprocal[j] == -b[j]);

    Rng rng(36);
    for (int trial = 0; trial < 60; ++trial) {
        int n = int(rng.integer(1, 5));
        auto s = random_signature<Q>(rng, n, false);
        std::vector<Multivector<Q>> vs;
        for (int i = 0; i < n; ++i) vs.push_back(random_vector<Q>(rng, s));
        if (wedge_all(s, vs).is_zero()) continue;
        auto rb = reciprocal_basis(vs);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) REQUIRE(scalar_product(rb.reciprocal[i], vs[j]) == (i == j ? 1 : 0));
        auto rr = reciprocal_basis(rb.reciprocal);
        for (int i = 0; i < n; ++i) REQUIRE(rr.reciprocal[i] == vs[i]);
        // frame identities
        Multivector<Q> sum(s);
        for (int i = 0; i < n; ++i) sum += vs[i] * rb.reciprocal[i];
        REQUIRE(sum == S(s, n));
        for (int r = 0; r <= n; ++r) {
            auto Ar = random_grade<Q>(rng, s, r, 3);
            Multivector<Q> a(s), c(s);
            for (int i = 0; i < n; ++i) {
                a += vs[i] * left_inner(rb.reciprocal[i], Ar);
                c += vs[i] * Ar * rb.reciprocal[i];
            }
            REQUIRE(a == Ar * Q(r));
            REQUIRE(c == Ar * Q((r % 2 ? -1 : 1) * (n - 2 * r)));
        }
    }
    CHECK_THROWS(reciprocal_basis<Q>({E(s3, {1}), E(s3, {1})}));
    auto deg = Signature<Q>::counts(1, 0, 1);
    CHECK_THROWS(reciprocal_basis<Q>({E(deg, {1}), E(deg, {2})}));
}

TEST_CASE("projection and rejection") {
    auto s3 = Signature<Q>::counts(3, 0, 0);
    auto A = E(s3, {1, 2});
    auto v = E(s3, {1}) + E(s3, {3});
    CHECK(project(A, v) == E(s3, {1}));
    CHECK(reject(A, v) == E(s3, {3}));
    CHECK(project(A, E(s3, {2})) == E(s3, {2}));
    CHECK(reject(A, E(s3, {2})).is_zero());
    CHECK(project(A, S(s3, 1)) == S(s3, 1));
    auto null = Signature<Q>::counts(1, 1, 0);
    CHECK_THROWS_WITH(project(E(null, {1}) + E(null, {2}), E(null, {1})), "blade not invertible");

    Rng rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        int n = int(rng.integer(2, 5));
        auto s = random_signature<Q>(rng, n, false);
        std::vector<Multivector<Q>> f;
        int k = int(rng.integer(1, n));
        for (int i = 0; i < k; ++i) f.push_back(random_vector<Q>(rng, s));
        auto B = wedge_all(s, f);
        if ((B * B).is_zero()) continue;
        auto x = random_vector<Q>(rng, s), y = random_vector<Q>(rng, s);
        REQUIRE(project(B, project(B, x)) == project(B, x));
        REQUIRE(project(B, x) + reject(B, x) == x);
        REQUIRE(scalar_product(project(B, x), y) == scalar_product(x, project(B, y)));
        REQUIRE(scalar_product(reject(B, x), y) == scalar_product(x, reject(B, y)));
        // outermorphism on 2-vectors
        REQUIRE(project(B, outer(x, y)) == outer(project(B, x), project(B, y)));
    }
}

TEST_CASE("blade Gram-Schmidt") {
    auto s3 = Signature<Q>::counts(3, 0, 0);
    auto g = gram_schmidt_blades<Q>({E(s3, {1}), E(s3, {1}) + E(s3, {2})});
    CHECK(g[0] == E(s3, {1}));
    CHECK(g[1] == E(s3, {2}));
    auto ortho = gram_schmidt_blades<Q>({E(s3, {1}) * Q(2), E(s3, {3}), E(s3, {2})});
    CHECK(ortho[0] == E(s3, {1}) * Q(2));
    CHECK(ortho[1] == E(s3, {3}) * Q(4));
    Rng rng(38);
    for (int trial = 0; trial < 40; ++trial) {
        auto s = Signature<Q>::counts(int(rng.integer(2, 5)), 0, 0);
        std::vector<Multivector<Q>> a;
        for (int i = 0; i < s->dim(); ++i) a.push_back(random_vector<Q>(rng, s));
        auto b = gram_schmidt_blades(a);
        // classical Gram-Schmidt oracle
        std::vector<Multivector<Q>> c;
        for (const auto& v : a) {
            auto w = v;
            for (const auto& u : c)
                if (!u.is_zero()) w -= u * (scalar_product(v, u) / scalar_product(u, u));
            c.push_back(w);
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) REQUIRE(scalar_product(b[i], b[j]) == 0);
            if (c[i].is_zero()) {
                REQUIRE(b[i].is_zero());
                break;
            }
            Q ratio = scalar_product(b[i], c[i]) / scalar_product(c[i], c[i]);
            REQUIRE(ratio > 0);
            REQUIRE(b[i] == c[i] * ratio);
        }
    }
    CHECK_THROWS(gram_schmidt_blades<Q>({E(Signature<Q>::counts(1, 1, 0), {1})}));
}

TEST_CASE("cross ratio") {
    auto s2 = Signature<Q>::counts(2, 0, 0);
    auto pt = [&](Q x) { return Multivector<Q>::vector(s2, {x, Q(1)}); };
    CHECK(cross_ratio(pt(0), pt(1), pt(2), pt(3)) == Q(1, 4));
    Rng rng(39);
    for (int trial = 0; trial < 50; ++trial) {
        Q A(rng.integer(-9, 9)), B(rng.integer(-9, 9)), C(rng.integer(-9, 9)), D(rng.integer(-9, 9));
        if (A == C || B == D) continue;
        Q want = (A - B) * (C - D) / ((A - C) * (B - D));
        REQUIRE(cross_ratio(pt(A), pt(B), pt(C), pt(D)) == want);
        REQUIRE(cross_ratio(pt(A) * Q(3, 7), pt(B), pt(C), pt(D)) == want);
        Matrix<Q> T = Matrix<Q>::from_rows({{Q(rng.integer(-3, 3)), Q(rng.integer(-3, 3))}, {Q(rng.integer(-3, 3)), Q(rng.integer(-3, 3))}});
        if (determinant(T) == 0) continue;
        Outermorphism<Q> f(s2, T);
        REQUIRE(cross_ratio(f(pt(A)), f(pt(B)), f(pt(C)), f(pt(D))) == want);
    }
    CHECK_THROWS_WITH(cross_ratio(pt(1), pt(2), pt(1), pt(3)), "degenerate configuration");
}

TEST_CASE("projective line intersection") {
    auto r = project_line_intersect<Q>({-1, 0}, {1, 0}, {0, -2}, {0, 5});
    CHECK(!r.at_infinity);
    CHECK(r.x == 0);
    CHECK(r.y == 0);
    auto par = project_line_intersect<Q>({0, 0}, {1, 1}, {0, 1}, {2, 3});
    CHECK(par.at_infinity);
    Rng rng(40);
    for (int trial = 0; trial < 60; ++trial) {
        std::array<Q, 2> a{Q(rng.integer(-5, 5)), Q(rng.integer(-5, 5))}, b{Q(rng.integer(-5, 5)), Q(rng.integer(-5, 5))},
            c{Q(rng.integer(-5, 5)), Q(rng.integer(-5, 5))}, d{Q(rng.integer(-5, 5)), Q(rng.integer(-5, 5))};
        // solve a + s(b-a) = c + u(d-c)
        Matrix<Q> M = Matrix<Q>::from_rows({{b[0] - a[0], c[0] - d[0]}, {b[1] - a[1], c[1] - d[1]}});
        if (a == b || c == d || determinant(M) == 0) continue;
        auto sol = solve(M, std::vector<Q>{c[0] - a[0], c[1] - a[1]});
        auto got = project_line_intersect(a, b, c, d);
        REQUIRE(!got.at_infinity);
        REQUIRE(got.x == a[0] + sol[0] * (b[0] - a[0]));
        REQUIRE(got.y == a[1] + sol[0] * (b[1] - a[1]));
    }
}

TEST_CASE("Pascal hexagon residual") {
    auto circle = [](Q t) { return std::array<Q, 2>{(1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)}; };
    std::array<std::array<Q, 2>, 6> on{circle(0), circle(Q(1, 2)), circle(1), circle(2), circle(-3), circle(Q(-1, 3))};
    CHECK(pascal_check(on) == 0);
    auto rotated = on;
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    CHECK(pascal_check(rotated) == 0);
    // an ellipse image of the circle
    auto ell = on;
    for (auto& p : ell) p = {p[0] * 3 + p[1], p[1] * 2 - 1};
    CHECK(pascal_check(ell) == 0);
    std::array<std::array<Q, 2>, 6> generic{{{0, 0}, {3, 1}, {1, 4}, {-2, 5}, {7, -1}, {2, 2}}};
    CHECK(pascal_check(generic) != 0);
}

TEST_CASE("polars with respect to a quadric") {
    Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        int n = int(rng.integer(2, 4));
        auto s = random_signature<Q>(rng, n, false);
        // self-adjoint: T = G^{-1} S with S symmetric, G the metric diagonal
        Matrix<Q> Sm(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) Sm(i, j) = Sm(j, i) = Q(rng.integer(-3, 3));
        Matrix<Q> Tm(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) Tm(i, j) = Sm(i, j) / (*s)[i];
        Outermorphism<Q> T(s, Tm);
        REQUIRE(self_adjoint(T));
        auto id = Outermorphism<Q>::identity(s);
        auto x = random_mv<Q>(rng, s, 4);
        REQUIRE(polar(x, id) == dual(x));
        int m = int(rng.integer(0, n));
        auto xm = random_grade<Q>(rng, s, m, 2), ym = random_grade<Q>(rng, s, m, 2);
        REQUIRE(outer(xm, polar(ym, T)) == outer(ym, polar(xm, T)));
        // f(Pol x) = tau det T f(x), tau = (-1)^{mn-m} I^2
        Q tau = Q(((m * n - m) % 2) ? -1 : 1) * pseudoscalar_square(s);
        REQUIRE(quadric_eval(polar(xm, T), T) == tau * determinant(T) * quadric_eval(xm, T));
    }
    auto s2 = Signature<Q>::counts(2, 0, 0);
    Outermorphism<Q> skew(s2, Matrix<Q>::from_rows({{0, 1}, {-1, 0}}));
    CHECK_THROWS(polar(E(s2, {1}), skew));
}
