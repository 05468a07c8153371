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

#include "tame/classfield.hpp"

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tame/coh_dims.hpp"
#include "tame/error.hpp"

namespace tame {
namespace {

GenusGroupPtr group(u64 p, PrimeSet S, PrimeSet T) {
  return genus_group(make_setup(p, std::move(S), std::move(T)));
}

TEST(GenusGroup, Examples) {
  const auto g = group(3, {7, 13}, {2});
  EXPECT_EQ(g->ambient_dim(), 2u);
  ASSERT_EQ(g->relations().rows(), 1u);
  EXPECT_EQ(g->relations().row_vectors()[0], (FpVector{2, 1}));
  EXPECT_EQ(g->quotient_dim(), 1u);

  const auto wild = group(3, {3}, {});
  EXPECT_EQ(wild->columns(), (std::vector<u64>{3}));
  EXPECT_EQ(wild->relations().rows(), 0u);
  EXPECT_EQ(wild->quotient_dim(), 1u);

  const auto redundant = group(3, {5}, {});
  EXPECT_EQ(redundant->ambient_dim(), 0u);
  EXPECT_EQ(redundant->quotient_dim(), 0u);
}

TEST(GenusGroup, WildColumnUsesFermatQuotient) {
  const auto g = group(3, {3, 7}, {2, 5});
  EXPECT_EQ(g->columns(), (std::vector<u64>{3, 7}));
  EXPECT_EQ(g->relations().row_vectors()[0],
            (FpVector{fermat_quotient(2, 3), index(2, 7, 3)}));
  EXPECT_EQ(g->relations().row_vectors()[1],
            (FpVector{fermat_quotient(5, 3), index(5, 7, 3)}));
}

TEST(GenusGroup, OrderedColumns) {
  const auto g = GenusGroup::make_ordered(3, {13, 7}, {2});
  EXPECT_EQ(g->columns(), (std::vector<u64>{13, 7}));
  EXPECT_EQ(g->relations().row_vectors()[0], (FpVector{1, 2}));
  EXPECT_EQ(g->require_column(7), 1u);
  EXPECT_FALSE(g->column_of(19).has_value());
  EXPECT_THROW(g->require_column(19), PreconditionError);
  EXPECT_THROW(GenusGroup::make_ordered(3, {5}, {}), PreconditionError);
}

TEST(MinSet, Examples) {
  EXPECT_EQ(min_set({5, 7}, 3), (PrimeSet{7}));
  EXPECT_EQ(min_set({3, 7}, 3), (PrimeSet{3, 7}));
  EXPECT_TRUE(min_set({}, 5).empty());
}

TEST(Inertia, Examples) {
  const auto g = group(3, {7, 13}, {2});
  EXPECT_FALSE(g->is_zero_class(inertia_class(*g, 7)));
  EXPECT_TRUE(ramifies(*g, 7));
  EXPECT_TRUE(ramifies(*group(3, {7}, {}), 7));
  EXPECT_FALSE(ramifies(*group(3, {7}, {2}), 7));
  EXPECT_THROW(inertia_class(*g, 19), PreconditionError);
}

TEST(FrobeniusVector, Examples) {
  const auto g = group(3, {7}, {});
  EXPECT_EQ(frobenius_vector(*g, 2), (FpVector{2}));
  EXPECT_EQ(frobenius_vector(*g, 13), (FpVector{0}));
  EXPECT_THROW(frobenius_vector(*g, 6), PreconditionError);
  EXPECT_THROW(frobenius_vector(*g, 7), PreconditionError);
  EXPECT_THROW(frobenius_vector(*group(3, {7}, {2}), 2), PreconditionError);
  // 43 = 1 mod 7 and is a cube mod 7: Frobenius is trivial.
  EXPECT_TRUE(g->is_zero_class(frobenius_vector(*g, 43)));
}

TEST(FrobeniusVector, TrivialClassMatchesPthPower) {
  for (u64 p : {3u, 5u}) {
    for (u64 l = p + 1; l < 200; ++l) {
      if (l % p != 1 || !oracle::trial_prime(l)) continue;
      const auto g = group(p, {l}, {});
      for (u64 q = 2; q < 300; ++q) {
        if (!oracle::trial_prime(q) || q == l) continue;
        ASSERT_EQ(g->is_zero_class(frobenius_vector(*g, q)),
                  oracle::pth_power(static_cast<i64>(q), l, p));
      }
    }
  }
}

TEST(FrobeniusEval, Examples) {
  const auto g = group(3, {7, 13}, {});
  const Character chi(g, {0, 1});
  // dlog_2(7) mod 13 = 11, so -index(7, 13, 3) = -2 = 1.
  EXPECT_EQ(oracle::dlog(7, 13), 11u);
  EXPECT_EQ(frobenius_eval(chi, 7), 1u);
  EXPECT_THROW(frobenius_eval(Character(g, {1, 0}), 7), RamifiedCharacterEval);
  EXPECT_EQ(frobenius_eval(Character::zero(g), 7), 0u);
  EXPECT_EQ(reciprocity_vector(*g, 7), (FpVector{0, 1}));
}

TEST(FrobeniusEval, IndependentOfInertiaAmbiguity) {
  const auto g = group(5, {11, 31, 41}, {2});
  for (const auto& chi : character_basis(g)) {
    for (u64 l : g->columns()) {
      if (chi.on_inertia(l) != 0) continue;
      auto sigma = reciprocity_vector(*g, l);
      const u64 base = chi(sigma);
      for (u64 c = 1; c < 5; ++c) {
        auto shifted = sigma;
        shifted[g->require_column(l)] = c;
        EXPECT_EQ(chi(shifted), base);
      }
      EXPECT_EQ(frobenius_eval(chi, l), base);
    }
  }
}

TEST(Character, Validation) {
  const auto g = group(3, {7, 13}, {2});
  EXPECT_THROW(Character(g, {1, 0}), PreconditionError);
  EXPECT_THROW(Character(g, {1}), PreconditionError);
  const Character chi(g, {1, 1});
  EXPECT_EQ(chi.on_inertia(7), 1u);
  EXPECT_EQ((chi + chi).coeffs(), (FpVector{2, 2}));
  EXPECT_EQ(chi.scaled(3), Character::zero(g));
  EXPECT_TRUE(Character::zero(g).is_zero());
  EXPECT_THROW(Character::coordinate(g, 7), PreconditionError);
  const auto free = group(3, {7, 13}, {});
  EXPECT_EQ(Character::coordinate(free, 13).coeffs(), (FpVector{0, 1}));
  EXPECT_THROW(chi + Character::zero(free), PreconditionError);
}

TEST(CharacterBasis, DimensionMatchesQuotient) {
  oracle::SetupGenerator gen(31);
  for (int i = 0; i < 200; ++i) {
    const auto s = gen.next();
    const auto g = group(s.p, s.S, s.T);
    ASSERT_EQ(character_basis(g).size(), g->quotient_dim());
  }
}

TEST(Splitting, Examples) {
  EXPECT_TRUE(splits_in_kummer(7, 6, 3));
  EXPECT_FALSE(splits_in_kummer(7, 2, 3));
  EXPECT_TRUE(splits_in_kummer(13, 1, 3));
  EXPECT_THROW(splits_in_kummer(5, 2, 3), NotOneModP);
  EXPECT_TRUE(splits_completely_in_unit_kummer(7, {}, 3));
  EXPECT_FALSE(splits_completely_in_unit_kummer(7, {2}, 3));
  EXPECT_TRUE(splits_completely_in_unit_kummer(31, {2}, 3));
  EXPECT_THROW(splits_completely_in_unit_kummer(11, {}, 3), NotOneModP);
}

TEST(Properties, RamificationWhenKilled) {
  oracle::SetupGenerator gen(32);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const auto s = gen.next();
    if (v_dim(s.p, s.S, s.T) != 0) continue;
    const auto g = group(s.p, s.S, s.T);
    for (u64 l : s.S) {
      if (l % s.p != 1) continue;
      PrimeSet rest;
      for (u64 x : s.S) {
        if (x != l) rest.push_back(x);
      }
      if (v_dim(s.p, rest, s.T) != 0) continue;
      ++checked;
      ASSERT_TRUE(ramifies(*g, l));
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(Properties, QuotientDimEqualsH1ForSAndMinSet) {
  oracle::SetupGenerator gen(33);
  for (int i = 0; i < 200; ++i) {
    const auto s = gen.next();
    const auto setup = make_setup(s.p, s.S, s.T);
    const auto reduced = make_setup(s.p, min_set(s.S, s.p), s.T);
    ASSERT_EQ(genus_group(setup)->quotient_dim(), h_vector(setup).h1);
    ASSERT_EQ(genus_group(reduced)->quotient_dim(), h_vector(reduced).h1);
  }
}

}  // namespace
}  // namespace tame
