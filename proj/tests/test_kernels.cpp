#include <gtest/gtest.h>

#include <omp.h>

#include "support.hpp"
#include "cuspidal/kernels.hpp"

using namespace cusp;
using namespace cusp::test;

TEST(Kernels, ScanSerialEqualsParallel) {
    omp_set_num_threads(4);
    for (const char* name : {"fplus", "cycloid", "normal_form", "sphere"}) {
        const auto s = fixture(name);
        const auto a = scan_singular_grid_serial(s, 48, {});
        const auto b = scan_singular_grid_parallel(s, 48, {});
        ASSERT_EQ(a.size(), b.size()) << name;
        for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]) << name;
    }
}

TEST(Kernels, ScanFindsTheSingularSet) {
    const auto pts = scan_singular_grid_parallel(fixture("normal_form"), 16, {});
    // the edge lies on a grid row: every node and every row-edge midpoint on it
    ASSERT_EQ(pts.size(), 33u);
    for (const auto& p : pts) EXPECT_NEAR(p.y(), 0.0, 1e-12);
    EXPECT_TRUE(scan_singular_grid_parallel(fixture("sphere"), 16, {}).empty());
}

TEST(Kernels, SampleGridSerialEqualsParallel) {
    omp_set_num_threads(4);
    const auto s = fixture("cycloid");
    const auto a = sample_grid_serial(s, 40, {});
    const auto b = sample_grid_parallel(s, 40, {});
    ASSERT_EQ(a.size(), 41u * 41u);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].point, b[i].point);
        EXPECT_EQ(a[i].has_K, b[i].has_K);
        EXPECT_EQ(a[i].K, b[i].K);
    }
}

TEST(Kernels, SampleGridLayoutIsRowMajorInV) {
    const auto s = fixture("sphere");
    const auto g = sample_grid_serial(s, 4, {});
    EXPECT_DOUBLE_EQ(g[0].location.x(), -1.0);
    EXPECT_DOUBLE_EQ(g[1].location.x(), -0.5);
    EXPECT_DOUBLE_EQ(g[5].location.y(), -0.5);
    for (const auto& n : g) {
        ASSERT_TRUE(n.has_K);
        EXPECT_NEAR(n.K, 1.0, 1e-12);
    }
}
