// Copyright 2026 The tactslip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "tactslip/config.hpp"
#include "tactslip/error.hpp"

namespace tactslip {
namespace {

TEST(Manifest, ParseIgnoresCommentsAndBlanks) {
  const Manifest m = Manifest::parse("# header\n\nalpha = 1\n  beta=two words  \n");
  ASSERT_EQ(m.entries().size(), 2u);
  EXPECT_EQ(m.require("alpha"), "1");
  EXPECT_EQ(m.get("beta").value(), "two words");
  EXPECT_FALSE(m.get("gamma").has_value());
  EXPECT_THROW(m.require("gamma"), InvalidArgument);
}

TEST(Manifest, RejectsLineWithoutEquals) {
  EXPECT_THROW(Manifest::parse("just words\n"), InvalidArgument);
}

TEST(Manifest, TextRoundTrip) {
  Manifest m;
  m.set("x", "1.5");
  m.set("y", "skeleton");
  EXPECT_EQ(m.str(), "x = 1.5\ny = skeleton\n");
  EXPECT_EQ(Manifest::parse(m.str()), m);
}

TEST(FormatDouble, ShortestRoundTrip) {
  for (double v : {0.1, 1.3, -2.5e-7, 159.5, 1.0 / 3.0}) {
    EXPECT_EQ(parse_double(format_double(v)), v);
  }
  EXPECT_EQ(format_double(20.0), "20");
  EXPECT_THROW(parse_double("1.2x"), InvalidArgument);
  EXPECT_THROW(parse_integer("3.5"), InvalidArgument);
}

TEST(PipelineConfig, DefaultsRoundTrip) {
  const PipelineConfig def;
  const Manifest m = def.to_manifest();
  EXPECT_EQ(m.str(),
            "estimator = skeleton\n"
            "circularity_threshold = 1.3\n"
            "min_area = 20\n"
            "threshold = 25\n"
            "open_radius = 1\n"
            "close_radius = 2\n"
            "smoothing_window = 0\n");
  EXPECT_EQ(PipelineConfig::from_manifest(Manifest::parse(m.str())), def);
}

TEST(PipelineConfig, CustomRoundTrip) {
  PipelineConfig c;
  c.estimator = Estimator::Ellipse;
  c.orientation.circularity_threshold = 1.4142135623730951;
  c.segment.threshold = 40;
  c.smoothing_window = 5;
  const PipelineConfig back =
      PipelineConfig::from_manifest(Manifest::parse(c.to_manifest().str()));
  EXPECT_EQ(back, c);
  EXPECT_EQ(back.orientation.circularity_threshold, 1.4142135623730951);
}

TEST(PipelineConfig, PartialManifestKeepsDefaults) {
  const PipelineConfig c =
      PipelineConfig::from_manifest(Manifest::parse("estimator = pca\n"));
  EXPECT_EQ(c.estimator, Estimator::Pca);
  EXPECT_EQ(c.segment.close_radius, 2);
}

TEST(PipelineConfig, Rejections) {
  EXPECT_THROW(PipelineConfig::from_manifest(Manifest::parse("colour = red\n")),
               InvalidArgument);
  EXPECT_THROW(PipelineConfig::from_manifest(Manifest::parse("threshold = 300\n")),
               InvalidArgument);
  EXPECT_THROW(PipelineConfig::from_manifest(Manifest::parse("estimator = hough\n")),
               InvalidArgument);
  EXPECT_THROW(
      PipelineConfig::from_manifest(Manifest::parse("circularity_threshold = 0.5\n")),
      InvalidArgument);
}

}  // namespace
}  // namespace tactslip
