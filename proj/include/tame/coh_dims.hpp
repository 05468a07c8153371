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

#pragma once

// Dimension formulas for the etale cohomology of marked arithmetic curves
// over Q with F_p coefficients, p odd.
//
// Over Q: r = r1 = 1, r2 = 0, delta = 0 (mu_p is not in Q), Cl = 0.

#include <cstdint>
#include <map>

#include "tame/kummer.hpp"

namespace tame {

struct HVector {
  std::uint64_t h0 = 1;
  std::uint64_t h1 = 0;
  std::uint64_t h2 = 0;
  std::uint64_t h3 = 0;
  int theta = 0;
  int delta = 0;
  std::map<u64, int> delta_flags;  // place of S -> delta_v

  std::int64_t alternating_sum() const {
    return static_cast<std::int64_t>(h0) - static_cast<std::int64_t>(h1) +
           static_cast<std::int64_t>(h2) - static_cast<std::int64_t>(h3);
  }

  friend bool operator==(const HVector&, const HVector&) = default;
};

inline constexpr int kUnitRank = 1;  // r = r1 + r2 - 1 + 1 for Q

// 1 iff mu_p lies in Q_l, i.e. l = 1 mod p. delta_p = 0 for odd p.
int delta_v(u64 l, u64 p);

// Local cohomology at the closed point l: zero in degrees 0, 1; in degree 2
// delta_l + [Q_l : Q_p] + (1 if marked); in degree 3 delta_l.
std::uint64_t local_h(int i, u64 l, u64 p, bool marked);

HVector h_vector(const MarkedSetup& setup);

// 1 + #T - (1 if p in S).
std::int64_t euler_char(const MarkedSetup& setup);

// dim Sha^2(Q, S, T) = dim V_S^T.
std::size_t sha2_dim(const MarkedSetup& setup);

// The five-term sequence for dropping the marking:
// h1(S,T) - h1(S) + #T - h2(S,T) + h2(S) == 0.
bool excision_check(const MarkedSetup& setup);

}  // namespace tame
