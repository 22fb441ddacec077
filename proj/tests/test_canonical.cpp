#include <catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace consim;

namespace {

Mat<CRat> jblock(const CRat& eig, std::size_t size) {
    return jordan_matrix(JordanSpec{{{eig, size}}});
}

}  // namespace

TEST_CASE("char_poly") {
    CRat lam(Rat(2), Rat(-1));
    Poly p = char_poly(jblock(lam, 2));
    // (x - lam)^2
    Poly expect = poly_mul({-lam, CRat(1)}, {-lam, CRat(1)});
    CHECK(p == expect);

    Mat<CRat> rot{{CRat(0), CRat(1)}, {CRat(-1), CRat(0)}};
    CHECK(char_poly(rot) == Poly{CRat(1), CRat(0), CRat(1)});

    // companion matrix of x^3 - 2x + 1
    Mat<CRat> comp{{CRat(0), CRat(0), CRat(-1)},
                   {CRat(1), CRat(0), CRat(2)},
                   {CRat(0), CRat(1), CRat(0)}};
    CHECK(char_poly(comp) == Poly{CRat(1), CRat(-2), CRat(0), CRat(1)});

    CHECK_THROWS_AS(char_poly(Mat<CRat>(2, 3)), NotSquare);
}

TEST_CASE("gaussian_rational_roots") {
    auto r1 = gaussian_rational_roots({CRat(1), CRat(0), CRat(1)});  // x^2 + 1
    REQUIRE(r1.size() == 2);
    CHECK(r1[0].first == -CRat::i());
    CHECK(r1[0].second == 1);
    CHECK(r1[1].first == CRat::i());
    CHECK(r1[1].second == 1);

    CHECK_THROWS_AS(gaussian_rational_roots({CRat(-2), CRat(0), CRat(1)}),
                    EigenvaluesNotGaussianRational);

    // oracle: expand (x - (1+i))^2 (x - 3) and refactor
    CRat a(Rat(1), Rat(1));
    Poly p = poly_mul(poly_mul({-a, CRat(1)}, {-a, CRat(1)}), {CRat(-3), CRat(1)});
    auto r2 = gaussian_rational_roots(p);
    REQUIRE(r2.size() == 2);
    CHECK(r2[0].first == a);
    CHECK(r2[0].second == 2);
    CHECK(r2[1].first == CRat(3));
    CHECK(r2[1].second == 1);

    // zero roots and fractional roots
    Poly q = poly_mul({CRat(0), CRat(1)}, {CRat(Rat(-1, 2)), CRat(1)});  // x (x - 1/2)
    auto r3 = gaussian_rational_roots(q);
    REQUIRE(r3.size() == 2);
    CHECK(r3[0].first == CRat(0));
    CHECK(r3[1].first == CRat(Rat(1, 2)));
}

TEST_CASE("jordan_spec_complex examples") {
    CHECK(jordan_spec_complex(jblock(CRat(2), 3)) == JordanSpec{{{CRat(2), 3}}});
    CHECK(jordan_spec_complex(Mat<CRat>{{CRat(0), CRat(1)}, {CRat(0), CRat(0)}}) ==
          JordanSpec{{{CRat(0), 2}}});

    // diag(5) + J2(5); oracle = the rank sequence of (m - 5I)^s
    JordanSpec spec{{{CRat(5), 2}, {CRat(5), 1}}};
    Mat<CRat> m = jordan_matrix(spec);
    Mat<CRat> n = m - CRat(5) * Mat<CRat>::identity(3);
    CHECK(rank(n) == 1);
    CHECK(rank(n * n) == 0);
    // blocks of size >= 1: 3 - 1 = 2; size >= 2: 1 - 0 = 1 -> sizes {2, 1}
    CHECK(jordan_spec_complex(m) == spec);
}

TEST_CASE("jordan_spec_complex under random similarity") {
    ct::Rng g(20);
    for (int t = 0; t < 25; ++t) {
        JordanSpec spec = ct::random_spec(g, 4, ct::pool_complex());
        Mat<CRat> s = ct::rc_nonsingular(g, spec.total_size());
        Mat<CRat> m = s * jordan_matrix(spec) * inverse(s);
        CHECK(jordan_spec_complex(m) == spec);
    }
}

TEST_CASE("jordan_spec_quaternion examples") {
    // [j]: adjoint [[0,1],[-1,0]] has eigenvalues +-i; emit Im >= 0
    Mat<QRat> mj{{QRat::j()}};
    CHECK(jordan_spec_complex(complex_adjoint(mj)) ==
          JordanSpec{{{CRat::i(), 1}, {-CRat::i(), 1}}});
    CHECK(jordan_spec_quaternion(mj) == JordanSpec{{{CRat::i(), 1}}});

    // diag(i, -i): -i is quaternion-similar to i
    Mat<QRat> m2{{QRat::i(), QRat(0)}, {QRat(0), -QRat::i()}};
    CHECK(jordan_spec_quaternion(m2) == JordanSpec{{{CRat::i(), 1}, {CRat::i(), 1}}});

    CHECK(jordan_spec_quaternion(to_quaternion(jblock(CRat(5), 2))) ==
          JordanSpec{{{CRat(5), 2}}});
}

TEST_CASE("adjoint spec is conjugation-invariant") {
    ct::Rng g(21);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = static_cast<std::size_t>(ct::rint(g, 1, 3));
        JordanSpec spec = ct::random_spec(g, n, ct::pool_sigma_one());
        Mat<QRat> m = ct::conceal(g, spec);
        JordanSpec adj = jordan_spec_complex(complex_adjoint(m));
        std::vector<JordanBlock> conj_blocks;
        for (const auto& b : adj.blocks) conj_blocks.push_back({b.eigenvalue.conj(), b.size});
        CHECK(JordanSpec::of(std::move(conj_blocks)) == adj);
    }
}

TEST_CASE("jordan_certificate on [j]") {
    Mat<QRat> mj{{QRat::j()}};
    auto [spec, s] = jordan_certificate(mj);
    CHECK(spec == JordanSpec{{{CRat::i(), 1}}});
    CHECK(inverse(s) * mj * s == jordan_matrix_quaternion(spec));

    // the exhibited certificate (i+j) works too: (i+j)^{-1} j (i+j) = i
    QRat w = QRat::i() + QRat::j();
    CHECK(w.inverse() * QRat::j() * w == QRat::i());
}

TEST_CASE("jordan_certificate on J2(3) is the identity") {
    Mat<QRat> m = to_quaternion(jblock(CRat(3), 2));
    auto [spec, s] = jordan_certificate(m);
    CHECK(spec == JordanSpec{{{CRat(3), 2}}});
    CHECK(s == Mat<QRat>::identity(2));
}

TEST_CASE("jordan_certificate under random similarity") {
    ct::Rng g(22);
    for (int t = 0; t < 20; ++t) {
        JordanSpec spec = ct::random_spec(g, 3, ct::pool_sigma_one());
        Mat<QRat> m = ct::conceal(g, spec);
        auto [found, s] = jordan_certificate(m);
        CHECK(found == spec);
        CHECK(inverse(s) * m * s == jordan_matrix_quaternion(found));
    }
    // T^{-1} J2(i) T for random nonsingular quaternion T
    JordanSpec j2i{{{CRat::i(), 2}}};
    for (int t = 0; t < 5; ++t) {
        Mat<QRat> tr = ct::rq_nonsingular(g, 2);
        Mat<QRat> m = inverse(tr) * jordan_matrix_quaternion(j2i) * tr;
        auto [found, s] = jordan_certificate(m);
        CHECK(found == j2i);
        CHECK(inverse(s) * m * s == jordan_matrix_quaternion(j2i));
    }
}

TEST_CASE("canonical_consimilarity sigma = 1") {
    CRat lam(Rat(1), Rat(2));
    Mat<QRat> m = to_quaternion(jblock(lam, 2));
    auto res = canonical_consimilarity(m, Sigma::One);
    CHECK(res.spec == JordanSpec{{{lam, 2}}});
    CHECK(res.certificate == Mat<QRat>::identity(2));
    CHECK(ct::canonical_certificate_sound(m, res));
}

TEST_CASE("canonical_consimilarity sigma = i on its own canonical form") {
    Mat<QRat> m = to_quaternion(jblock(CRat::i(), 2));
    auto res = canonical_consimilarity(m, Sigma::I);
    CHECK(res.spec == JordanSpec{{{CRat::i(), 2}}});
    CHECK(ct::canonical_certificate_sound(m, res));
    Mat<QRat> t_hat = apply_hat(res.certificate, Sigma::I);
    CHECK(inverse(t_hat) * m * res.certificate == m);
}

TEST_CASE("canonical_consimilarity: [j] is i-consimilar to [1]") {
    Mat<QRat> mj{{QRat::j()}};
    auto res = canonical_consimilarity(mj, Sigma::I);
    CHECK(res.spec == JordanSpec{{{CRat(1), 1}}});
    CHECK(ct::canonical_certificate_sound(mj, res));
}

TEST_CASE("canonical invariance and certificate soundness") {
    ct::Rng g(23);
    for (Sigma sigma : {Sigma::One, Sigma::I}) {
        for (int t = 0; t < 25; ++t) {
            JordanSpec spec = ct::random_spec(g, 3, ct::pool_for(sigma));
            Mat<QRat> a = jordan_matrix_quaternion(spec);
            std::size_t n = spec.total_size();
            Mat<QRat> s = ct::rq_nonsingular(g, n);
            Mat<QRat> a2 = inverse(apply_hat(s, sigma)) * a * s;
            auto res = canonical_consimilarity(a2, sigma);
            CHECK(res.spec == spec);
            CHECK(ct::canonical_certificate_sound(a2, res));
            // idempotence on the canonical form itself
            auto res0 = canonical_consimilarity(a, sigma);
            CHECK(res0.spec == spec);
            CHECK(ct::canonical_certificate_sound(a, res0));
        }
    }
}

TEST_CASE("canonical normalization constraints") {
    ct::Rng g(24);
    for (Sigma sigma : {Sigma::One, Sigma::I}) {
        for (int t = 0; t < 15; ++t) {
            JordanSpec spec = ct::random_spec(g, 3, ct::pool_for(sigma));
            Mat<QRat> a = ct::conceal_sigma(g, spec, sigma);
            auto res = canonical_consimilarity(a, sigma);
            for (const auto& b : res.spec.blocks) {
                if (sigma == Sigma::One)
                    CHECK(b.eigenvalue.im.sign() >= 0);
                else
                    CHECK(b.eigenvalue.re.sign() >= 0);
            }
        }
    }
}

TEST_CASE("are_consimilar examples") {
    Mat<QRat> mj{{QRat::j()}}, m1{{QRat(1)}}, mm1{{QRat(-1)}};
    CHECK(are_consimilar(mj, m1, Sigma::I));
    CHECK_FALSE(are_consimilar(m1, mm1, Sigma::One));
    CHECK(are_consimilar(m1, mm1, Sigma::I));
    // oracle for the last: S = [j] transforms -1 to 1
    QRat s = QRat::j();
    CHECK(apply_hat(s, Sigma::I).inverse() * QRat(-1) * s == QRat(1));
    CHECK_THROWS_AS(are_consimilar(m1, Mat<QRat>::identity(2), Sigma::I), ShapeMismatch);
}

TEST_CASE("lemma 2 four-way agreement") {
    ct::Rng g(25);
    const QRat iq = QRat::i();
    for (int t = 0; t < 30; ++t) {
        std::size_t n = static_cast<std::size_t>(ct::rint(g, 1, 3));
        JordanSpec sa = ct::random_spec_exact(g, n, ct::pool_sigma_i());
        Mat<QRat> a = ct::conceal_sigma(g, sa, Sigma::I);
        Mat<QRat> b = (t % 2 == 0)
                          ? ct::conceal_sigma(g, sa, Sigma::I)
                          : ct::conceal_sigma(
                                g, ct::random_spec_exact(g, n, ct::pool_sigma_i()), Sigma::I);
        bool v1 = consimilarity_spec(a, Sigma::I) == consimilarity_spec(b, Sigma::I);
        bool v2 = are_similar(a.scale_left(iq), b.scale_left(iq));
        bool v3 = are_similar(a.scale_left(iq), b.scale_right(iq));
        bool v4 = are_similar(a.scale_right(iq), b.scale_right(iq));
        CHECK(v1 == v2);
        CHECK(v2 == v3);
        CHECK(v3 == v4);
        CHECK(are_consimilar(a, b, Sigma::I) == v1);
    }
}

TEST_CASE("eigenvalues outside Q(i) are rejected") {
    // [[0, 2], [1, 0]] has eigenvalues +-sqrt(2)
    Mat<QRat> m{{QRat(0), QRat(2)}, {QRat(1), QRat(0)}};
    CHECK_THROWS_AS(jordan_spec_quaternion(m), EigenvaluesNotGaussianRational);
    CHECK_THROWS_AS(canonical_consimilarity(m, Sigma::One), EigenvaluesNotGaussianRational);
}
