#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fdxsim/rng.hpp"

using namespace fdx;

TEST_CASE("identical seeds reproduce identical CN streams") {
    Rng a(7), b(7);
    const CVec va = sample_cn(a, 5);
    const CVec vb = sample_cn(b, 5);
    for (int i = 0; i < 5; ++i) CHECK(va(i) == vb(i));
}

TEST_CASE("streams are invariant to chunking") {
    Rng whole(42), parts(42);
    const CVec v = sample_cn(whole, 5);
    const CVec first = sample_cn(parts, 2);
    const CVec rest = sample_cn(parts, 3);
    CHECK(v(0) == first(0));
    CHECK(v(1) == first(1));
    CHECK(v(2) == rest(0));
    CHECK(v(3) == rest(1));
    CHECK(v(4) == rest(2));
}

TEST_CASE("substreams with distinct keys decorrelate") {
    Rng a = Rng::substream(1, 0, 0);
    Rng b = Rng::substream(1, 0, 1);
    Rng c = Rng::substream(1, 1, 0);
    CHECK(a.next_u64() != b.next_u64());
    CHECK(Rng::substream(1, 0, 0).next_u64() != c.next_u64());
    // and the same key reproduces:
    Rng a2 = Rng::substream(1, 0, 0);
    Rng a3 = Rng::substream(1, 0, 0);
    CHECK(a2.next_u64() == a3.next_u64());
}

TEST_CASE("CN(0,1) sample moments land where they should") {
    Rng rng(123);
    const int n = 100000;
    cplx mean(0.0, 0.0);
    double power = 0.0;
    for (int i = 0; i < n; ++i) {
        const cplx z = rng.sample_cn();
        REQUIRE(std::isfinite(z.real()));
        REQUIRE(std::isfinite(z.imag()));
        mean += z;
        power += std::norm(z);
    }
    mean /= static_cast<double>(n);
    power /= static_cast<double>(n);
    CHECK(std::abs(mean) < 0.02);
    CHECK(power > 0.98);
    CHECK(power < 1.02);
}

TEST_CASE("real and imaginary parts each carry half the variance") {
    Rng rng(99);
    double vr = 0.0, vi = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const cplx z = rng.sample_cn();
        vr += z.real() * z.real();
        vi += z.imag() * z.imag();
    }
    CHECK(vr / n == Catch::Approx(0.5).margin(0.01));
    CHECK(vi / n == Catch::Approx(0.5).margin(0.01));
}

TEST_CASE("sample_cn rejects empty requests") {
    Rng rng(1);
    CHECK_THROWS_AS(sample_cn(rng, 0), std::invalid_argument);
}

TEST_CASE("uniform_int covers its inclusive range") {
    Rng rng(8);
    bool seen[4] = {false, false, false, false};
    for (int i = 0; i < 200; ++i) {
        const int v = rng.uniform_int(2, 5);
        REQUIRE(v >= 2);
        REQUIRE(v <= 5);
        seen[v - 2] = true;
    }
    for (bool s : seen) CHECK(s);
    CHECK(rng.uniform_int(3, 3) == 3);
}

TEST_CASE("uniform stays inside its interval") {
    Rng rng(31);
    for (int i = 0; i < 1000; ++i) {
        const double u = rng.uniform();
        REQUIRE(u > 0.0);
        REQUIRE(u <= 1.0);
        const double v = rng.uniform(-1.5, 2.5);
        REQUIRE(v >= -1.5);
        REQUIRE(v < 2.5);
    }
}
