#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ndi/nsi.hpp"
#include "support/test_support.hpp"

namespace ndi {
namespace {

UnitDiskEmbedding points(std::size_t n, std::size_t k, std::initializer_list<double> xs) {
  UnitDiskEmbedding e{Matrix(n, k), {}};
  std::size_t i = 0;
  for (double x : xs) {
    e.coords(i / k, i % k) = x;
    ++i;
  }
  return e;
}

UnitDiskEmbedding random_points(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  UnitDiskEmbedding e{Matrix(n, k), {}};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < k; ++c) e.coords(r, c) = u(rng);
  return e;
}

// Oracle: smallest pairwise distance d such that the graph on all pairs
// with distance <= d is connected, by trying every candidate distance.
double brute_force_threshold(const UnitDiskEmbedding& e) {
  const std::size_t n = e.coords.rows();
  std::vector<double> candidates{0.0};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      candidates.push_back(euclidean_distance(e.coords.row(i), e.coords.row(j)));
  std::sort(candidates.begin(), candidates.end());
  for (double d : candidates) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t groups = n;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (euclidean_distance(e.coords.row(i), e.coords.row(j)) <= d) {
          const auto a = find(i), b = find(j);
          if (a != b) {
            parent[a] = b;
            --groups;
          }
        }
    if (groups == 1) return d;
  }
  return candidates.back();
}

TEST(MinMax, Examples) {
  MetricTable t{{"a", "b"}, {"x", "y", "z"}, Matrix(3, 2)};
  t.values(0, 0) = 2;
  t.values(1, 0) = 4;
  t.values(2, 0) = 6;
  for (std::size_t r = 0; r < 3; ++r) t.values(r, 1) = 7;
  const auto e = minmax_normalize(t);
  EXPECT_DOUBLE_EQ(e.coords(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(e.coords(1, 0), 0.5);
  EXPECT_DOUBLE_EQ(e.coords(2, 0), 1.0);
  EXPECT_EQ(e.degenerate_columns, (std::vector<std::size_t>{1}));
  EXPECT_EQ(e.coords(2, 1), 0.0);
}

TEST(UnitNorm, ColumnsHaveUnitLength) {
  MetricTable t{{"a", "b"}, {"x", "y"}, Matrix(2, 2)};
  t.values(0, 0) = 3;
  t.values(1, 0) = 4;
  const auto e = unit_norm_normalize(t);
  EXPECT_DOUBLE_EQ(e.coords(0, 0), 0.6);
  EXPECT_DOUBLE_EQ(e.coords(1, 0), 0.8);
  EXPECT_EQ(e.degenerate_columns, (std::vector<std::size_t>{1}));
  t.values(0, 1) = -1;
  EXPECT_THROW(unit_norm_normalize(t), std::invalid_argument);
}

TEST(Threshold, TwoPointsInTheUnitSquare) {
  const auto e = points(2, 2, {0, 0, 1, 1});
  EXPECT_NEAR(mst_bottleneck(e), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(min_connectivity_threshold_bsearch(e), std::sqrt(2.0), 1e-6);
}

TEST(Threshold, CollinearPoints) {
  const auto e = points(3, 1, {0, 0.5, 1});
  EXPECT_DOUBLE_EQ(mst_bottleneck(e), 0.5);
  const double b = min_connectivity_threshold_bsearch(e, 1e-6);
  EXPECT_GE(b, 0.5);
  EXPECT_LT(b, 0.5 + 1e-6);
}

TEST(Threshold, CoincidentPointsGiveZero) {
  const auto e = points(3, 2, {0.3, 0.3, 0.3, 0.3, 0.3, 0.3});
  EXPECT_EQ(mst_bottleneck(e), 0.0);
  EXPECT_EQ(min_connectivity_threshold_bsearch(e), 0.0);
}

TEST(Threshold, MethodsAgreeWithBruteForce) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 250; ++trial) {
    const auto e = random_points(2 + trial % 25, 1 + trial % 4, rng);
    const double oracle = brute_force_threshold(e);
    const double mst = mst_bottleneck(e);
    const double bs = min_connectivity_threshold_bsearch(e, 1e-7);
    EXPECT_NEAR(mst, oracle, 1e-12);
    EXPECT_GE(bs, oracle - 1e-12);
    EXPECT_LE(bs, oracle + 1e-7);
  }
}

TEST(Threshold, ConnectivityIsMonotoneInRadius) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const auto e = random_points(15, 3, rng);
    bool was_connected = false;
    for (double r = 0.0; r <= 2.0; r += 0.01) {
      const bool now = disk_graph_connected(e, r);
      EXPECT_FALSE(was_connected && !now);
      was_connected = now;
    }
    EXPECT_TRUE(disk_graph_connected(e, std::sqrt(3.0)));
  }
}

TEST(Threshold, InvalidArguments) {
  EXPECT_THROW(mst_bottleneck(points(1, 2, {0, 0})), std::invalid_argument);
  EXPECT_THROW(min_connectivity_threshold_bsearch(points(2, 1, {0, 1}), 0.0), std::invalid_argument);
}

TEST(ComputeNsi, RegularGraphIsFullySimilar) {
  for (auto method : {ThresholdMethod::mst_bottleneck, ThresholdMethod::binary_search}) {
    NsiOptions opts;
    opts.method = method;
    const auto r = compute_nsi(testing::complete_graph(4), opts);
    EXPECT_EQ(r.min_threshold, 0.0);
    EXPECT_EQ(r.nsi, 1.0);
    EXPECT_EQ(r.degenerate_columns.size(), 4u);
  }
}

TEST(ComputeNsi, BoundedOnRandomGraphs) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_connected(10 + trial % 20, 0.2, rng);
    for (auto norm : {NsiNormalization::unit_norm, NsiNormalization::min_max}) {
      NsiOptions opts;
      opts.normalization = norm;
      const auto r = compute_nsi(g, opts);
      EXPECT_GE(r.nsi, 0.0);
      EXPECT_LE(r.nsi, 1.0);
    }
  }
}

TEST(ComputeNsi, KarateAndLesMisBothMethods) {
  struct Case {
    const char* file;
    double expected;
  };
  for (const Case c : {Case{"karate.txt", 0.8453}, Case{"lesmis.txt", 0.6793}}) {
    const Graph g = read_edge_list(testing::data_dir() / c.file).graph;
    NsiOptions mst;
    NsiOptions bs;
    bs.method = ThresholdMethod::binary_search;
    const auto a = compute_nsi(g, mst);
    const auto b = compute_nsi(g, bs);
    EXPECT_NEAR(a.nsi, c.expected, 0.01) << c.file;
    EXPECT_NEAR(a.nsi, b.nsi, 2 * bs.epsilon) << c.file;
  }
}

TEST(NsiEnums, ParseRoundTrip) {
  for (auto n : {NsiNormalization::unit_norm, NsiNormalization::min_max})
    EXPECT_EQ(parse_nsi_normalization(to_string(n)), n);
  for (auto m : {ThresholdMethod::mst_bottleneck, ThresholdMethod::binary_search})
    EXPECT_EQ(parse_threshold_method(to_string(m)), m);
  EXPECT_FALSE(parse_threshold_method("kruskal").has_value());
}

}  // namespace
}  // namespace ndi
