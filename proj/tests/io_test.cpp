#include "cbgen/io.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "cbgen/config.hpp"
#include "cbgen/errors.hpp"

namespace {

using cbgen::Assignment;
using cbgen::ConfigError;
using cbgen::EdgeList;
using cbgen::GeneratorConfig;
using cbgen::Model;
using cbgen::ParseError;
using cbgen::Variant;

TEST(EdgeListIo, WritesOneBasedSortedPairs) {
  EdgeList edges;
  edges.append(cbgen::make_edge(3, 1), 0);
  edges.append(cbgen::make_edge(0, 1), 1);
  std::ostringstream out;
  EXPECT_EQ(cbgen::write_edge_list(edges, out), 2u);
  EXPECT_EQ(out.str(), "1\t2\n2\t4\n");
}

TEST(EdgeListIo, RoundTripsThroughText) {
  EdgeList edges;
  edges.append(cbgen::make_edge(0, 5), 0);
  edges.append(cbgen::make_edge(2, 3), 0);
  edges.append(cbgen::make_edge(0, 1), 0);
  std::ostringstream out;
  cbgen::write_edge_list(edges, out);
  std::istringstream in(out.str());
  const EdgeList back = cbgen::read_edge_list(in, "edges");
  ASSERT_EQ(back.size(), 3u);
  EXPECT_EQ(back.edges[0], cbgen::make_edge(0, 1));
  EXPECT_EQ(back.edges[1], cbgen::make_edge(0, 5));
  EXPECT_EQ(back.edges[2], cbgen::make_edge(2, 3));
}

TEST(EdgeListIo, RejectsLoopsZeroIdsAndJunk) {
  {
    std::istringstream in("1\t1\n");
    EXPECT_THROW(cbgen::read_edge_list(in, "edges"), ParseError);
  }
  {
    std::istringstream in("0\t2\n");
    EXPECT_THROW(cbgen::read_edge_list(in, "edges"), ParseError);
  }
  {
    std::istringstream in("1\ttwo\n");
    EXPECT_THROW(cbgen::read_edge_list(in, "edges"), ParseError);
  }
  {
    std::istringstream in("1\n");
    EXPECT_THROW(cbgen::read_edge_list(in, "edges"), ParseError);
  }
}

TEST(EdgeListIo, ErrorsNameTheLine) {
  std::istringstream in("1\t2\n3\t3\n");
  try {
    cbgen::read_edge_list(in, "edges");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("edges"), std::string::npos);
  }
}

TEST(SequenceIo, RoundTripsValues) {
  const std::vector<std::uint32_t> values{9, 4, 4, 1};
  std::ostringstream out;
  cbgen::write_sequence(values, out);
  EXPECT_EQ(out.str(), "9\n4\n4\n1\n");
  std::istringstream in(out.str());
  EXPECT_EQ(cbgen::read_sequence(in, "degrees"), values);
}

TEST(SequenceIo, RejectsNonNumbers) {
  std::istringstream in("3\nx\n");
  EXPECT_THROW(cbgen::read_sequence(in, "degrees"), ParseError);
}

TEST(PartitionIo, RoundTripsMembership) {
  Assignment a;
  a.community_of = {1, 0, 1, 0};
  a.members = {{1, 3}, {0, 2}};
  a.volumes = {2, 2};
  std::ostringstream out;
  cbgen::write_partition(a, out);
  EXPECT_EQ(out.str(), "1\t2\n2\t1\n3\t2\n4\t1\n");
  std::istringstream in(out.str());
  const Assignment back = cbgen::read_partition(in, "communities");
  EXPECT_EQ(back.community_of, a.community_of);
  EXPECT_EQ(back.members, a.members);
}

TEST(PartitionIo, RequiresDenseVertexNumbering) {
  {
    std::istringstream in("1\t1\n3\t1\n");
    EXPECT_THROW(cbgen::read_partition(in, "communities"), ParseError);
  }
  {
    std::istringstream in("1\t0\n");
    EXPECT_THROW(cbgen::read_partition(in, "communities"), ParseError);
  }
  {
    std::istringstream in("");
    EXPECT_THROW(cbgen::read_partition(in, "communities"), ParseError);
  }
}

GeneratorConfig base_config() {
  GeneratorConfig cfg;
  cfg.n = 100;
  cfg.gamma = 2.5;
  cfg.min_degree = 5;
  cfg.max_degree = 20;
  cfg.beta = 1.5;
  cfg.min_community = 10;
  cfg.max_community = 50;
  cfg.mu = 0.2;
  cfg.model = Model::config_model;
  cfg.out_edges = "edges.tsv";
  cfg.out_communities = "communities.tsv";
  return cfg;
}

void expect_invalid(const GeneratorConfig& cfg, const std::string& fragment) {
  try {
    cfg.validate();
    FAIL() << "expected ConfigError mentioning: " << fragment;
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos)
        << "actual message: " << e.what();
  }
}

TEST(ConfigValidate, AcceptsACompleteConfig) {
  EXPECT_NO_THROW(base_config().validate());
}

TEST(ConfigValidate, RequiresExactlyOneMixingParameter) {
  auto cfg = base_config();
  cfg.xi = 0.3;
  expect_invalid(cfg, "xi");
  cfg.mu.reset();
  EXPECT_NO_THROW(cfg.validate());
  cfg.xi.reset();
  expect_invalid(cfg, "xi");
}

TEST(ConfigValidate, LocalVariantNeedsMu) {
  auto cfg = base_config();
  cfg.variant = Variant::local;
  EXPECT_NO_THROW(cfg.validate());
  cfg.mu.reset();
  cfg.xi = 0.3;
  expect_invalid(cfg, "local");
}

TEST(ConfigValidate, ChecksRangesAndRequiredFields) {
  {
    auto cfg = base_config();
    cfg.n = 0;
    expect_invalid(cfg, "n");
  }
  {
    auto cfg = base_config();
    cfg.mu = 1.5;
    expect_invalid(cfg, "mu");
  }
  {
    auto cfg = base_config();
    cfg.model.reset();
    expect_invalid(cfg, "model");
  }
  {
    auto cfg = base_config();
    cfg.max_community = 101;
    expect_invalid(cfg, "max-community");
  }
  {
    auto cfg = base_config();
    cfg.min_degree.reset();
    cfg.avg_degree = 8.0;
    EXPECT_NO_THROW(cfg.validate());
    cfg.min_degree = 5;
    expect_invalid(cfg, "min-degree");
  }
  {
    auto cfg = base_config();
    cfg.out_edges.clear();
    expect_invalid(cfg, "out-edges");
    cfg.skip_write = true;
    EXPECT_NO_THROW(cfg.validate());
  }
}

TEST(ConfigValidate, InputFilesReplaceTheLaws) {
  auto cfg = base_config();
  cfg.in_degrees = "degrees.tsv";
  expect_invalid(cfg, "in-degrees");
  cfg.gamma.reset();
  cfg.min_degree.reset();
  cfg.max_degree.reset();
  EXPECT_NO_THROW(cfg.validate());

  cfg.in_sizes = "sizes.tsv";
  expect_invalid(cfg, "in-sizes");
  cfg.beta.reset();
  cfg.min_community.reset();
  cfg.max_community.reset();
  EXPECT_NO_THROW(cfg.validate());
}

TEST(ConfigValidate, ReportsEveryProblemAtOnce) {
  GeneratorConfig cfg;
  cfg.n = 0;
  try {
    cfg.validate();
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find(';'), std::string::npos);
    EXPECT_NE(msg.find("model"), std::string::npos);
  }
}

}  // namespace
