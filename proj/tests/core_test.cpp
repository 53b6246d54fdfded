// Copyright 2026 The segjoin Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "reference.hpp"
#include "segjoin/core.hpp"

namespace segjoin {
namespace {

using testing::reference_distance;

TEST(EditDistanceTest, WorkedExamples) {
  EXPECT_EQ(edit_distance("kaushic chaduri", "kaushuk chadhui"), 4);
  EXPECT_EQ(edit_distance("abc", "abc"), 0);
  EXPECT_EQ(edit_distance("abc", ""), 3);
  EXPECT_EQ(edit_distance("", ""), 0);
}

TEST(EditDistanceTest, SimilarNames) {
  // c->k substitution plus two trailing deletions.
  EXPECT_EQ(reference_distance("kaushik chakrab", "caushik chakrabar"), 3);
  EXPECT_EQ(edit_distance("kaushik chakrab", "caushik chakrabar"), 3);
}

TEST(EditDistanceTest, BytesAreOpaque) {
  // A two-byte UTF-8 character differs from ASCII in two byte edits.
  EXPECT_EQ(edit_distance("caf\xc3\xa9", "cafe"), 2);
  EXPECT_EQ(edit_distance(std::string_view("a\0b", 3), "ab"), 1);
}

TEST(EditDistanceTest, MetricProperties) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1500; ++trial) {
    const int alphabet = trial % 2 == 0 ? 3 : 26;
    const auto a = testing::random_bytes(rng, static_cast<int>(rng() % 41), alphabet);
    const auto b = testing::random_bytes(rng, static_cast<int>(rng() % 41), alphabet);
    const auto c = testing::mutate(rng, b, static_cast<int>(rng() % 5), alphabet);
    const int ab = edit_distance(a, b);
    ASSERT_EQ(ab, reference_distance(a, b));
    ASSERT_EQ(ab, edit_distance(b, a));
    ASSERT_EQ(ab == 0, a == b);
    ASSERT_LE(edit_distance(a, c), ab + edit_distance(b, c));
    ASSERT_GE(ab, std::abs(static_cast<int>(a.size()) - static_cast<int>(b.size())));
  }
}

TEST(EditDistanceTest, SingleEditNeighbors) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = testing::random_bytes(rng, static_cast<int>(rng() % 41), 4);
    const auto b = testing::mutate(rng, a, 1, 4);
    ASSERT_LE(edit_distance(a, b), 1) << a << " / " << b;
  }
}

TEST(ThresholdTest, RejectsNegative) {
  EXPECT_THROW(Threshold(-1), std::invalid_argument);
  EXPECT_EQ(Threshold(3).segments(), 4);
  EXPECT_EQ(Threshold().value(), 0);
}

TEST(VerdictTest, States) {
  const Verdict w = Verdict::within(2);
  const Verdict e = Verdict::exceeds(3);
  EXPECT_TRUE(w.is_within());
  EXPECT_EQ(w.distance(), 2);
  EXPECT_FALSE(e);
  EXPECT_EQ(e.bound(), 3);
  EXPECT_NE(w, Verdict::exceeds(2));
}

}  // namespace
}  // namespace segjoin
