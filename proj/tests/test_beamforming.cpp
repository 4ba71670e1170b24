#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fdxsim/beamforming.hpp"
#include "fdxsim/rng.hpp"
#include "oracle_utils.hpp"

using namespace fdx;

namespace {

// Direct evaluation of the precoder formula with the test-side inverse.
CMat mmse_reference(const MmseInputs& in) {
    const Eigen::Index nrf = in.h_des.cols();
    CMat gram = oracle::mul(oracle::adjoint(in.h_des), in.h_des);
    const CMat gi = oracle::mul(oracle::adjoint(in.h_int), in.h_int);
    for (Eigen::Index j = 0; j < nrf; ++j)
        for (Eigen::Index i = 0; i < nrf; ++i) gram(i, j) += (in.snr_si / in.snr_des) * gi(i, j);
    for (Eigen::Index i = 0; i < nrf; ++i) gram(i, i) += in.ns / in.snr_des;
    return oracle::mul(oracle::inverse(gram), oracle::adjoint(in.h_des)).leftCols(in.ns);
}

}  // namespace

TEST_CASE("svd combiner and precoder pick the dominant singular directions") {
    CMat a = CMat::Zero(2, 2);
    a(0, 0) = 3.0;
    a(1, 1) = 1.0;
    const CMat w = svd_combiner(a, 1);
    const CMat f = svd_precoder(a, 1);
    CHECK(std::abs(w(0, 0)) == Catch::Approx(1.0).margin(1e-12));
    CHECK(std::abs(w(1, 0)) < 1e-12);
    CHECK(std::abs(f(0, 0)) == Catch::Approx(1.0).margin(1e-12));
    CHECK(std::abs(f(1, 0)) < 1e-12);
}

TEST_CASE("svd factors keep orthonormal columns at full rank") {
    Rng rng(3);
    const CMat h = oracle::random_matrix(rng, 4, 4);
    const CMat w = svd_combiner(h, 4);
    const CMat f = svd_precoder(h, 4);
    CHECK(oracle::frob(oracle::mul(oracle::adjoint(w), w) - CMat::Identity(4, 4)) < 1e-10);
    CHECK(oracle::frob(oracle::mul(oracle::adjoint(f), f) - CMat::Identity(4, 4)) < 1e-10);
}

TEST_CASE("svd_combiner columns satisfy the eigen equation of H H^*") {
    Rng rng(5);
    const CMat h = oracle::random_matrix(rng, 4, 4);
    const CMat w = svd_combiner(h, 2);
    const SvdResult dec = svd(h);
    const CMat gram = oracle::mul(h, oracle::adjoint(h));
    for (int c = 0; c < 2; ++c) {
        const CMat res = oracle::mul(gram, w.col(c)) - dec.s(c) * dec.s(c) * w.col(c);
        CHECK(res.cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("svd_precoder columns satisfy the eigen equation of H^* H") {
    Rng rng(7);
    const CMat h = oracle::random_matrix(rng, 3, 4);
    const CMat v = svd_precoder(h, 2);
    const SvdResult dec = svd(h);
    const CMat gram = oracle::mul(oracle::adjoint(h), h);
    for (int c = 0; c < 2; ++c) {
        const CMat res = oracle::mul(gram, v.col(c)) - dec.s(c) * dec.s(c) * v.col(c);
        CHECK(res.cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("stream counts beyond the rank budget are rejected") {
    CHECK_THROWS_AS(svd_combiner(CMat::Identity(2, 4), 3), std::invalid_argument);
    CHECK_THROWS_AS(svd_precoder(CMat::Identity(2, 4), 3), std::invalid_argument);
}

TEST_CASE("mmse precoder closed form without interference") {
    MmseInputs in;
    in.h_des = CMat::Identity(2, 2);
    in.h_int = CMat::Zero(2, 2);
    in.snr_des = 2.0;
    in.snr_si = 1.0;
    in.ns = 2;
    const CMat f = mmse_precoder(in);
    CHECK((f - 0.5 * CMat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("without interference the precoder lives in the desired column space") {
    Rng rng(11);
    MmseInputs in;
    in.h_des = oracle::random_matrix(rng, 2, 4);
    in.h_int = CMat::Zero(2, 4);
    in.snr_des = 10.0;
    in.snr_si = 1.0;
    in.ns = 2;
    const CMat f = mmse_precoder(in);
    // Projector onto the column space of h_des^*.
    const CMat hd = oracle::adjoint(in.h_des);   // 4x2
    const CMat gram_inv = oracle::inverse(oracle::mul(in.h_des, hd));
    const CMat proj = oracle::mul(oracle::mul(hd, gram_inv), in.h_des);
    const CMat off = f - oracle::mul(proj, f);
    CHECK(oracle::frob(off) < 1e-9);
}

TEST_CASE("mmse precoder matches the explicit-inverse reference") {
    Rng rng(13);
    MmseInputs in;
    in.h_des = oracle::random_matrix(rng, 2, 4);
    in.h_int = oracle::random_matrix(rng, 2, 4);
    in.snr_des = 10.0;
    in.snr_si = 1e4;
    in.ns = 2;
    const CMat f = mmse_precoder(in);
    REQUIRE(f.rows() == 4);
    REQUIRE(f.cols() == 2);
    CHECK(oracle::frob(f - mmse_reference(in)) < 1e-9);
}

TEST_CASE("mmse precoder is continuous as the interference weight vanishes") {
    Rng rng(17);
    MmseInputs in;
    in.h_des = oracle::random_matrix(rng, 2, 4);
    in.h_int = oracle::random_matrix(rng, 2, 4);
    in.snr_des = 10.0;
    in.snr_si = 1e-12;
    in.ns = 2;
    MmseInputs clean = in;
    clean.h_int = CMat::Zero(2, 4);
    clean.snr_si = 1.0;
    CHECK(oracle::frob(mmse_precoder(in) - mmse_precoder(clean)) < 1e-9);
}

TEST_CASE("scaling the interference equals scaling its SNR") {
    Rng rng(19);
    MmseInputs a;
    a.h_des = oracle::random_matrix(rng, 2, 4);
    a.h_int = oracle::random_matrix(rng, 2, 4);
    a.snr_des = 10.0;
    a.snr_si = 50.0;
    a.ns = 2;
    MmseInputs b = a;
    b.h_int = 2.0 * a.h_int;
    MmseInputs c = a;
    c.snr_si = 4.0 * a.snr_si;
    CHECK(oracle::frob(mmse_precoder(b) - mmse_precoder(c)) < 1e-10);
}

TEST_CASE("stream normalization enforces unit effective columns") {
    CHECK((normalize_streams(CMat::Identity(3, 3), 2.0 * CMat::Identity(3, 3)) -
           CMat::Identity(3, 3))
              .cwiseAbs()
              .maxCoeff() < 1e-15);

    Rng rng(23);
    const CMat rf = oracle::random_matrix(rng, 6, 3);
    const CMat bb = oracle::random_matrix(rng, 3, 2);
    const CMat out = normalize_streams(rf, bb);
    for (int l = 0; l < 2; ++l)
        CHECK((rf * out.col(l)).norm() == Catch::Approx(1.0).margin(1e-12));
    CHECK((rf * out).squaredNorm() == Catch::Approx(2.0).margin(1e-9));
}

TEST_CASE("stream normalization is idempotent") {
    Rng rng(29);
    const CMat rf = oracle::random_matrix(rng, 5, 3);
    const CMat bb = oracle::random_matrix(rng, 3, 3);
    const CMat once = normalize_streams(rf, bb);
    const CMat twice = normalize_streams(rf, once);
    CHECK((once - twice).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("a zero effective column is a degenerate precoder") {
    CMat bb = CMat::Identity(3, 2);
    bb.col(1).setZero();
    CHECK_THROWS_AS(normalize_streams(CMat::Identity(3, 3), bb), std::runtime_error);
}
