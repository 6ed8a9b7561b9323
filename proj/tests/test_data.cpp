#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "cugan/data.hpp"
#include "cugan/errors.hpp"

using namespace cugan;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST_CASE("single-mode ring is an isotropic gaussian at the origin") {
    const int n = 4000;
    const Dataset ds = make_ring_gmm(1, 0.0, 1.0, n, 7);
    REQUIRE(ds.size() == n);
    REQUIRE(ds.dim() == 2);
    double mx = 0.0, my = 0.0;
    for (int i = 0; i < n; ++i) {
        mx += ds.samples.at(i, 0);
        my += ds.samples.at(i, 1);
    }
    mx /= n;
    my /= n;
    const double bound = 3.0 / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(mx) < bound);
    CHECK(std::abs(my) < bound);
}

TEST_CASE("ring mode means sit on the circle") {
    const Dataset ds = make_ring_gmm(8, 2.0, 0.05, 10, 3);
    REQUIRE(ds.meta.has_value());
    const DatasetMeta& meta = *ds.meta;
    REQUIRE(meta.mode_means.size() == 8);
    CHECK(meta.mode_means[0][0] == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(meta.mode_means[0][1] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(meta.mode_means[2][0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(meta.mode_means[2][1] == doctest::Approx(2.0).epsilon(1e-12));
    for (const auto& mean : meta.mode_means) {
        CHECK(std::hypot(mean[0], mean[1]) == doctest::Approx(2.0).epsilon(1e-12));
    }
}

TEST_CASE("per-mode empirical covariance approximates sigma^2 I") {
    const double sigma = 0.35;
    const Dataset ds = make_ring_gmm(1, 0.0, sigma, 10000, 11);
    double cxx = 0.0, cyy = 0.0, cxy = 0.0;
    for (int i = 0; i < ds.size(); ++i) {
        const double x = ds.samples.at(i, 0);
        const double y = ds.samples.at(i, 1);
        cxx += x * x;
        cyy += y * y;
        cxy += x * y;
    }
    cxx /= ds.size();
    cyy /= ds.size();
    cxy /= ds.size();
    CHECK(cxx == doctest::Approx(sigma * sigma).epsilon(0.10));
    CHECK(cyy == doctest::Approx(sigma * sigma).epsilon(0.10));
    CHECK(std::abs(cxy) < 0.1 * sigma * sigma);
}

TEST_CASE("graded mixture with equal bounds reproduces the ring exactly") {
    const Dataset ring = make_ring_gmm(4, 1.5, 0.2, 25, 91);
    const Dataset graded = make_graded_mixture(4, 1.5, 0.2, 0.2, 25, 91);
    CHECK(ring.samples.data == graded.samples.data);
    CHECK(ring.meta->mode_sigmas == graded.meta->mode_sigmas);
}

TEST_CASE("graded sigmas interpolate geometrically") {
    const Dataset ds = make_graded_mixture(5, 1.0, 0.1, 1.0, 2, 1);
    const auto& sigmas = ds.meta->mode_sigmas;
    REQUIRE(sigmas.size() == 5);
    CHECK(sigmas[0] == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(sigmas[4] == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t j = 1; j < sigmas.size(); ++j) {
        CHECK(sigmas[j] / sigmas[j - 1] ==
              doctest::Approx(std::pow(10.0, 0.25)).epsilon(1e-9));
    }
}

TEST_CASE("tight modes concentrate near their means") {
    const Dataset ds = make_graded_mixture(2, 2.0, 0.1, 1.0, 5000, 17);
    const auto& meta = *ds.meta;
    int within = 0, total = 0;
    for (int i = 0; i < ds.size(); ++i) {
        if (meta.mode_of[i] != 0) continue;
        ++total;
        const double dx = ds.samples.at(i, 0) - meta.mode_means[0][0];
        const double dy = ds.samples.at(i, 1) - meta.mode_means[0][1];
        if (std::hypot(dx, dy) < 0.5) ++within;
    }
    CHECK(static_cast<double>(within) / total > 0.999);
}

TEST_CASE("generation is reproducible per seed") {
    const Dataset a = make_ring_gmm(3, 1.0, 0.3, 50, 123);
    const Dataset b = make_ring_gmm(3, 1.0, 0.3, 50, 123);
    const Dataset c = make_ring_gmm(3, 1.0, 0.3, 50, 124);
    CHECK(a.samples.data == b.samples.data);
    CHECK(a.samples.data != c.samples.data);
}

TEST_CASE("csv loading") {
    SUBCASE("happy path") {
        const auto path = temp_path("cugan_ds.csv");
        std::ofstream(path) << "0,0\n1,1\n";
        const Dataset ds = load_csv_dataset(path);
        CHECK(ds.size() == 2);
        CHECK(ds.dim() == 2);
        CHECK(ds.samples.at(1, 0) == 1.0);
        CHECK_FALSE(ds.meta.has_value());
    }
    SUBCASE("empty file is too small") {
        const auto path = temp_path("cugan_empty.csv");
        std::ofstream(path) << "";
        CHECK_THROWS_AS(static_cast<void>(load_csv_dataset(path)), DataError);
    }
    SUBCASE("ragged rows are rejected with a line number") {
        const auto path = temp_path("cugan_ragged.csv");
        std::ofstream(path) << "0,0\n1,1,1\n";
        CHECK_THROWS_WITH_AS(static_cast<void>(load_csv_dataset(path)),
                             doctest::Contains("line 2"), DataError);
    }
    SUBCASE("non-numeric cells are rejected") {
        const auto path = temp_path("cugan_nonnum.csv");
        std::ofstream(path) << "0,zero\n1,1\n";
        CHECK_THROWS_WITH_AS(static_cast<void>(load_csv_dataset(path)),
                             doctest::Contains("line 1"), DataError);
    }
    SUBCASE("missing file raises an io error") {
        CHECK_THROWS_AS(static_cast<void>(load_csv_dataset("/nonexistent/nope.csv")), IoError);
    }
}

TEST_CASE("dataset round-trips through csv bit-exactly") {
    const Dataset ds = make_ring_gmm(8, 2.0, 0.05, 40, 2718);
    const auto path = temp_path("cugan_roundtrip.csv");
    save_csv_dataset(ds, path);
    const Dataset reloaded = load_csv_dataset(path);
    REQUIRE(reloaded.size() == ds.size());
    CHECK(reloaded.samples.data == ds.samples.data);
}
