// Copyright 2026 The tame-certify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tame/kummer.hpp"

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tame/error.hpp"

namespace tame {
namespace {

TEST(Setup, Validation) {
  const auto s = make_setup(3, {13, 7}, {2}, {3});
  EXPECT_EQ(s.S, (PrimeSet{7, 13}));
  EXPECT_THROW(make_setup(4, {7}, {}), InvalidSetup);
  EXPECT_THROW(make_setup(2, {7}, {}), InvalidSetup);
  EXPECT_THROW(make_setup(3, {7}, {7}), InvalidSetup);
  EXPECT_THROW(make_setup(3, {7}, {2}, {2}), InvalidSetup);
  EXPECT_THROW(make_setup(3, {}, {3}), InvalidSetup);
  EXPECT_THROW(make_setup(3, {15}, {}), InvalidSetup);
  EXPECT_THROW(make_setup(3, {7, 7}, {}), InvalidSetup);
  EXPECT_NO_THROW(make_setup(3, {3}, {}));
}

TEST(TUnitGenerators, Examples) {
  EXPECT_EQ(t_unit_generators({2}, 3), (PrimeSet{2}));
  EXPECT_TRUE(t_unit_generators({}, 3).empty());
  EXPECT_EQ(t_unit_generators({2, 11}, 5), (PrimeSet{2, 11}));
}

TEST(SElement, Examples) {
  EXPECT_EQ(s_element(7, {}), 7);
  EXPECT_EQ(s_element(13, {2}), 13);
  EXPECT_THROW(s_element(2, {2}), PreconditionError);
}

TEST(KummerRow, Places) {
  EXPECT_EQ(kummer_row(7, {2, 5}, 3), (FpVector{2, index(5, 7, 3)}));
  EXPECT_EQ(kummer_row(3, {2, 5}, 3), (FpVector{1, 2}));
  EXPECT_EQ(kummer_row(5, {2, 7}, 3), (FpVector{0, 0}));
}

TEST(VSpace, Examples) {
  EXPECT_EQ(v_space(make_setup(3, {}, {2})).dim(), 1u);
  EXPECT_EQ(v_space(make_setup(3, {7}, {2})).dim(), 0u);
  EXPECT_EQ(v_space(make_setup(3, {7}, {})).dim(), 0u);
  // 2 is a cube mod 31, so 31 imposes no condition.
  EXPECT_EQ(v_dim(3, {31}, {2}), 1u);
  EXPECT_EQ(v_dim(3, {5, 11}, {2, 7}), 2u);
}

TEST(VSpace, BasisLiesInKernel) {
  const auto space = v_space(make_setup(3, {7, 31}, {2, 5, 11}));
  EXPECT_EQ(space.generators, (PrimeSet{2, 5, 11}));
  for (const auto& v : space.basis) {
    for (std::size_t r = 0; r < space.constraints.rows(); ++r) {
      EXPECT_EQ(dot(space.constraints.row(r), v, 3), 0u);
    }
  }
}

TEST(VSpace, MatchesBruteForce) {
  oracle::SetupGenerator gen(21);
  for (int i = 0; i < 300; ++i) {
    const auto s = gen.next();
    ASSERT_EQ(v_dim(s.p, s.S, s.T), oracle::v_dim(s.p, s.S, s.T))
        << "p=" << s.p;
  }
}

TEST(VSpace, EmptySHasDimensionT) {
  oracle::SetupGenerator gen(22);
  for (int i = 0; i < 100; ++i) {
    const auto s = gen.next();
    EXPECT_EQ(v_dim(s.p, {}, s.T), s.T.size());
  }
}

TEST(VSpace, MonotoneWithCodimensionAtMostOne) {
  oracle::SetupGenerator gen(23);
  for (int i = 0; i < 200; ++i) {
    const auto s = gen.next();
    PrimeSet S;
    std::size_t prev = v_dim(s.p, S, s.T);
    for (u64 v : s.S) {
      S.push_back(v);
      std::sort(S.begin(), S.end());
      const std::size_t cur = v_dim(s.p, S, s.T);
      ASSERT_LE(cur, prev);
      if (v != s.p) {
        ASSERT_LE(prev - cur, static_cast<std::size_t>(v % s.p == 1));
      }
      prev = cur;
    }
  }
}

TEST(VskillSearch, Examples) {
  EXPECT_EQ(vskill_search({2}, {3}, 3, 1000, 2),
            (std::vector<PrimeSet>{{7}, {13}}));
  EXPECT_EQ(vskill_search({}, {3}, 3, 1000, 2),
            (std::vector<PrimeSet>{{}, {}}));
  EXPECT_EQ(vskill_search({2}, {5}, 5, 1000, 1),
            (std::vector<PrimeSet>{{11}}));
}

TEST(VskillSearch, Errors) {
  EXPECT_THROW(vskill_search({2}, {3}, 3, 10, 2), SearchExhausted);
  EXPECT_THROW(vskill_search({2}, {3}, 3, 1000, 0), PreconditionError);
  EXPECT_THROW(vskill_search({2}, {3}, 3, 0, 1), PreconditionError);
}

TEST(VskillSearch, KillsAfterRemovingAnyElement) {
  const std::vector<std::pair<u64, PrimeSet>> cases = {
      {3, {2}}, {3, {2, 5}}, {5, {2, 3}}, {7, {2}}, {3, {2, 5, 11}}};
  for (const auto& [p, T] : cases) {
    const auto sets = vskill_search(T, {p}, p, 1000000, 2);
    ASSERT_EQ(sets.size(), 2u);
    PrimeSet S0;
    for (const auto& set : sets) {
      EXPECT_EQ(v_dim(p, set, T), 0u);
      for (u64 l : set) {
        EXPECT_EQ(l % p, 1u);
        EXPECT_FALSE(contains(T, l));
        S0.push_back(l);
      }
    }
    std::sort(S0.begin(), S0.end());
    EXPECT_EQ(std::adjacent_find(S0.begin(), S0.end()), S0.end());
    for (u64 l : S0) {
      PrimeSet rest;
      for (u64 x : S0) {
        if (x != l) rest.push_back(x);
      }
      EXPECT_EQ(v_dim(p, rest, T), 0u) << "p=" << p << " l=" << l;
    }
  }
}

}  // namespace
}  // namespace tame
