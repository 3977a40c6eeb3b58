#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "ndi/analysis.hpp"
#include "support/test_support.hpp"

namespace ndi {
namespace {

const FitRecord& fit_named(const CorrelationStudy& s, const std::string& x) {
  for (const auto& f : s.fits)
    if (f.x_name == x) return f;
  throw std::out_of_range(x);
}

TEST(SpectralRadiusRatio, RegularGraphsAreOne) {
  for (std::size_t n = 3; n <= 9; ++n) {
    EXPECT_NEAR(spectral_radius_ratio(testing::complete_graph(n)), 1.0, 1e-12);
    EXPECT_NEAR(spectral_radius_ratio(testing::cycle_graph(n)), 1.0, 1e-12);
  }
}

TEST(SpectralRadiusRatio, Star) {
  // K_{1,3}: lambda = sqrt(3), mean degree 6/4.
  EXPECT_NEAR(spectral_radius_ratio(testing::star_graph(3)), std::sqrt(3.0) / 1.5, 1e-12);
  EXPECT_NEAR(spectral_radius_ratio(testing::star_graph(3)), 1.1547, 1e-4);
}

TEST(SpectralRadiusRatio, AtLeastOneAndMatchesJacobi) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_connected(4 + trial % 12, 0.3, rng);
    const double lambda = jacobi_eigen(testing::adjacency_matrix(g)).front().value;
    const double mean_deg = 2.0 * g.edge_count() / g.node_count();
    EXPECT_NEAR(spectral_radius_ratio(g), lambda / mean_deg, 1e-10);
    EXPECT_GE(spectral_radius_ratio(g), 1.0 - 1e-12);
  }
}

TEST(SpectralRadiusRatio, DataSets) {
  const auto karate = read_edge_list(testing::data_dir() / "karate.txt").graph;
  const auto lesmis = read_edge_list(testing::data_dir() / "lesmis.txt").graph;
  EXPECT_NEAR(spectral_radius_ratio(karate), 6.725697727631737 / (156.0 / 34.0), 1e-10);
  EXPECT_NEAR(spectral_radius_ratio(karate), 1.47, 0.01);
  EXPECT_NEAR(spectral_radius_ratio(lesmis), 1.82, 0.01);
}

TEST(Manifest, ParsesAndResolvesRelativePaths) {
  const auto m = parse_manifest("name,path\n\"A, B\",a.txt\nC,/abs/c.txt\n", "/base");
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0].name, "A, B");
  EXPECT_EQ(m[0].path, std::filesystem::path("/base/a.txt"));
  EXPECT_EQ(m[1].path, std::filesystem::path("/abs/c.txt"));
}

TEST(Manifest, Errors) {
  EXPECT_THROW(parse_manifest(""), std::invalid_argument);
  EXPECT_THROW(parse_manifest("title,file\nx,y\n"), std::invalid_argument);
  EXPECT_TRUE(parse_manifest("name,path\n").empty());
}

TEST(Batch, DataManifestInOrder) {
  const auto manifest = read_manifest(testing::data_dir() / "manifest.csv");
  BatchOptions opts;
  opts.threads = 2;
  const auto results = batch_evaluate(manifest, opts);
  ASSERT_EQ(results.size(), 2u);
  EXPECT_EQ(results[0].name, "Karate Net");
  EXPECT_EQ(results[1].name, "Les Miserables Net");
  for (const auto& r : results) ASSERT_TRUE(r.summary.has_value()) << r.error;
  EXPECT_EQ(results[0].summary->nodes, 34u);
  EXPECT_EQ(results[0].summary->edges, 78u);
  EXPECT_NEAR(results[0].summary->ndi, 1.1966, 1e-4);
  EXPECT_NEAR(results[1].summary->ndi, 1.2501, 1e-4);
  EXPECT_EQ(results[1].summary->nodes, 77u);
}

TEST(Batch, ThreadCountDoesNotChangeResults) {
  const auto manifest = read_manifest(testing::data_dir() / "manifest.csv");
  BatchOptions one, four;
  four.threads = 4;
  const auto a = batch_evaluate(manifest, one);
  const auto b = batch_evaluate(manifest, four);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].summary->ndi, b[i].summary->ndi);
    EXPECT_EQ(a[i].summary->nsi, b[i].summary->nsi);
  }
}

TEST(Batch, EmptyManifestAndBadEntries) {
  EXPECT_TRUE(batch_evaluate(std::vector<ManifestEntry>{}).empty());

  const auto dir = std::filesystem::temp_directory_path() / "ndi_analysis_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "split.txt") << "0 1\n2 3\n";
  const std::vector<ManifestEntry> m{{"missing", "/nonexistent/x.txt"},
                                     {"split", dir / "split.txt"},
                                     {"karate", testing::data_dir() / "karate.txt"}};
  const auto r = batch_evaluate(m);
  EXPECT_EQ(r[0].failure, FailureKind::input);
  EXPECT_EQ(r[1].failure, FailureKind::input);
  EXPECT_NE(r[1].error.find("2 components"), std::string::npos);
  EXPECT_EQ(r[2].failure, FailureKind::none);

  BatchOptions lcc;
  lcc.lcc_mode = true;
  std::ofstream(dir / "tail.txt") << "a b\nb c\nc a\nc d\nx y\n";
  const std::vector<ManifestEntry> t{{"tail", dir / "tail.txt"}};
  const auto rt = batch_evaluate(t, lcc);
  ASSERT_TRUE(rt[0].summary.has_value()) << rt[0].error;
  EXPECT_EQ(rt[0].summary->nodes, 4u);
  std::filesystem::remove_all(dir);
}

TEST(CorrelationStudy, TooFewNetworks) {
  const std::vector<NetworkSummary> two(2);
  EXPECT_THROW(correlation_study(two), std::invalid_argument);
}

TEST(CorrelationStudy, CollinearGivesPerfectFit) {
  std::vector<NetworkSummary> s;
  for (int i = 0; i < 5; ++i) s.push_back({"n", 10, 20, 1.0 + i, 1.0 + 0.1 * i, 0.5});
  const auto study = correlation_study(s);
  EXPECT_NEAR(fit_named(study, "lambda_sp").fit.r_squared, 1.0, 1e-12);
  EXPECT_EQ(study.omitted, (std::vector<std::string>{"nsi"}));
}

// R^2 from textbook Pearson r over the transcribed published summary rows.
double pearson_r2(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    syy += y[i] * y[i];
    sxy += x[i] * y[i];
  }
  const double r = (n * sxy - sx * sy) / std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
  return r * r;
}

TEST(CorrelationStudy, PublishedSummaryTable) {
  const auto rows = read_summary_csv(testing::data_dir() / "published_summary.csv");
  ASSERT_EQ(rows.size(), 12u);
  std::vector<double> lambda, ndi, nsi;
  for (const auto& r : rows) {
    lambda.push_back(r.lambda_sp);
    ndi.push_back(r.ndi);
    nsi.push_back(r.nsi);
  }
  const auto study = correlation_study(rows);
  EXPECT_NEAR(fit_named(study, "lambda_sp").fit.r_squared, pearson_r2(lambda, ndi), 1e-12);
  EXPECT_NEAR(fit_named(study, "nsi").fit.r_squared, pearson_r2(nsi, ndi), 1e-12);
  EXPECT_NEAR(fit_named(study, "lambda_sp").fit.r_squared, 0.4083, 0.01);
  EXPECT_NEAR(fit_named(study, "nsi").fit.r_squared, 0.5382, 0.01);
}

TEST(SummaryCsv, Errors) {
  EXPECT_THROW(parse_summary_csv(""), std::invalid_argument);
  EXPECT_THROW(parse_summary_csv("name,nodes,edges,lambda_sp,ndi,nsi\nx,1,2,abc,1,1\n"),
               std::invalid_argument);
}

}  // namespace
}  // namespace ndi
