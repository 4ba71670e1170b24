#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fdxsim/asic.hpp"
#include "oracle_utils.hpp"

using namespace fdx;

TEST_CASE("zero bits disables the canceller") {
    Rng rng(1);
    const CMat h = oracle::random_matrix(rng, 2, 4);
    const AsicFilter f = configure_asic(h, AsicConfig{0});
    CHECK(f.replica.cwiseAbs().maxCoeff() == 0.0);
    CHECK(f.step == 0.0);
    CHECK((residual(h, f) - h).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("a zero channel yields a zero replica at any resolution") {
    for (unsigned bits : {1u, 4u, 24u}) {
        const AsicFilter f = configure_asic(CMat::Zero(3, 3), AsicConfig{bits});
        CHECK(f.replica.cwiseAbs().maxCoeff() == 0.0);
        CHECK(f.amplitude == 0.0);
    }
}

TEST_CASE("24-bit quantization error is within half a step per component") {
    Rng rng(7);
    const CMat h = oracle::random_matrix(rng, 2, 2);
    const AsicFilter f = configure_asic(h, AsicConfig{24});
    const double half_step = f.amplitude / std::ldexp(1.0, 24);
    CHECK(f.step == Catch::Approx(2.0 * half_step));
    const CMat err = h - f.replica;
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 2; ++i) {
            CHECK(std::abs(err(i, j).real()) <= half_step * (1 + 1e-12));
            CHECK(std::abs(err(i, j).imag()) <= half_step * (1 + 1e-12));
        }
}

TEST_CASE("one-bit quantization of the unit entry") {
    CMat h(1, 1);
    h(0, 0) = cplx(1.0, 1.0);
    const AsicFilter f = configure_asic(h, AsicConfig{1});
    CHECK(f.amplitude == 1.0);
    CHECK(f.step == 1.0);
    CHECK(f.replica(0, 0) == cplx(0.5, 0.5));
    CHECK(residual(h, f)(0, 0) == cplx(0.5, 0.5));
}

TEST_CASE("replica components sit on odd multiples of half a step") {
    Rng rng(13);
    const CMat h = oracle::random_matrix(rng, 3, 5);
    for (unsigned bits : {1u, 2u, 5u}) {
        const AsicFilter f = configure_asic(h, AsicConfig{bits});
        for (int j = 0; j < 5; ++j)
            for (int i = 0; i < 3; ++i)
                for (double c : {f.replica(i, j).real(), f.replica(i, j).imag()}) {
                    const double k = c / (f.step / 2.0);
                    CHECK(std::abs(k - std::round(k)) < 1e-9);
                    CHECK(std::abs(std::remainder(std::round(k), 2.0)) == 1.0);
                    CHECK(std::abs(c) <= f.amplitude - f.step / 2.0 + 1e-15);
                }
    }
}

TEST_CASE("entrywise residual bound and per-bit refinement") {
    Rng rng(19);
    const CMat h = oracle::random_matrix(rng, 2, 4);
    const double a = [&] {
        double m = 0.0;
        for (int j = 0; j < 4; ++j)
            for (int i = 0; i < 2; ++i) {
                m = std::max(m, std::abs(h(i, j).real()));
                m = std::max(m, std::abs(h(i, j).imag()));
            }
        return m;
    }();
    double prev_frob_bound = 0.0;
    for (unsigned bits = 1; bits <= 12; ++bits) {
        const AsicFilter f = configure_asic(h, AsicConfig{bits});
        const CMat err = residual(h, f);
        const double entry_bound = std::sqrt(2.0) * a / std::ldexp(1.0, static_cast<int>(bits));
        CHECK(err.cwiseAbs().maxCoeff() <= entry_bound * (1 + 1e-12));
        const double frob_bound = entry_bound * std::sqrt(8.0);   // 2x4 entries
        if (bits > 1) {
            CHECK(err.norm() <= prev_frob_bound * (1 + 1e-12));
            CHECK(frob_bound == Catch::Approx(prev_frob_bound / 2.0));
        }
        prev_frob_bound = frob_bound;
    }
}

TEST_CASE("replica plus residual recovers the channel with no drift") {
    // residual() is a single subtraction, so round-tripping through it can
    // lose at most one rounding step per component.
    Rng rng(23);
    for (unsigned bits : {1u, 3u, 8u}) {
        const CMat h = oracle::random_matrix(rng, 4, 4);
        const AsicFilter f = configure_asic(h, AsicConfig{bits});
        const CMat back = f.replica + residual(h, f);
        CHECK((back - h).cwiseAbs().maxCoeff() <= 1e-15 * f.amplitude);
    }
}

TEST_CASE("quantization onto a fixed grid is idempotent") {
    Rng rng(29);
    const CMat h = oracle::random_matrix(rng, 2, 4);
    for (unsigned bits : {1u, 2u, 6u, 12u}) {
        const AsicFilter f = configure_asic(h, AsicConfig{bits});
        const CMat again = quantize_matrix(f.replica, bits, f.amplitude);
        CHECK((again - f.replica).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("quantizer is deterministic") {
    Rng rng(31);
    const CMat h = oracle::random_matrix(rng, 2, 2);
    const AsicFilter f1 = configure_asic(h, AsicConfig{5});
    const AsicFilter f2 = configure_asic(h, AsicConfig{5});
    CHECK((f1.replica - f2.replica).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("configuration-error hook perturbs the replica only when enabled") {
    Rng rng(37);
    const CMat h = oracle::random_matrix(rng, 2, 2);

    Rng quiet(101);
    const AsicFilter clean = configure_asic(h, AsicConfig{4, 0.0}, quiet);
    CHECK((clean.replica - configure_asic(h, AsicConfig{4}).replica).cwiseAbs().maxCoeff() == 0.0);

    Rng noisy1(101), noisy2(101);
    const AsicFilter p1 = configure_asic(h, AsicConfig{4, 0.01}, noisy1);
    const AsicFilter p2 = configure_asic(h, AsicConfig{4, 0.01}, noisy2);
    CHECK((p1.replica - p2.replica).cwiseAbs().maxCoeff() == 0.0);   // seeded, reproducible
    CHECK((p1.replica - clean.replica).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("non-finite input and mismatched dimensions are rejected") {
    CMat bad(1, 1);
    bad(0, 0) = cplx(std::numeric_limits<double>::infinity(), 0.0);
    CHECK_THROWS_AS(configure_asic(bad, AsicConfig{4}), std::invalid_argument);

    Rng rng(41);
    const CMat h = oracle::random_matrix(rng, 2, 2);
    const AsicFilter f = configure_asic(h, AsicConfig{4});
    CHECK_THROWS_AS(residual(oracle::random_matrix(rng, 3, 2), f), std::invalid_argument);
}
