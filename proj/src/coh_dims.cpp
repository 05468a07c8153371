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

#include "tame/coh_dims.hpp"

#include <cassert>
#include <string>

#include "tame/error.hpp"

namespace tame {

int delta_v(u64 l, u64 p) { return is_one_mod(l, p) ? 1 : 0; }

std::uint64_t local_h(int i, u64 l, u64 p, bool marked) {
  if (i < 0 || i > 3) {
    throw PreconditionError("local_h: degree " + std::to_string(i) +
                            " out of range");
  }
  const std::uint64_t local_degree = (l == p) ? 1 : 0;
  switch (i) {
    case 2:
      return delta_v(l, p) + local_degree + (marked ? 1 : 0);
    case 3:
      return delta_v(l, p);
    default:
      return 0;
  }
}

HVector h_vector(const MarkedSetup& setup) {
  validate(setup);
  HVector h;
  std::int64_t sum_delta = 0;
  for (u64 v : setup.S) {
    h.delta_flags[v] = delta_v(v, setup.p);
    sum_delta += h.delta_flags[v];
  }
  const auto dim_v = static_cast<std::int64_t>(v_space(setup).dim());
  const std::int64_t wild = contains(setup.S, setup.p) ? 1 : 0;
  // theta = 1 needs delta = 1 and S empty; delta is 0 over Q.
  h.theta = (h.delta == 1 && setup.S.empty()) ? 1 : 0;
  assert(h.theta == 0);

  const std::int64_t h1 = 1 + sum_delta - h.delta + dim_v + wild - kUnitRank -
                          static_cast<std::int64_t>(setup.T.size());
  const std::int64_t h2 = sum_delta - h.delta + dim_v + h.theta;
  if (h1 < 0 || h2 < 0) {
    throw std::logic_error("negative cohomology dimension");
  }
  h.h1 = static_cast<std::uint64_t>(h1);
  h.h2 = static_cast<std::uint64_t>(h2);
  h.h3 = static_cast<std::uint64_t>(h.theta);
  return h;
}

std::int64_t euler_char(const MarkedSetup& setup) {
  validate(setup);
  return kUnitRank + static_cast<std::int64_t>(setup.T.size()) -
         (contains(setup.S, setup.p) ? 1 : 0);
}

std::size_t sha2_dim(const MarkedSetup& setup) {
  return v_space(setup).dim();
}

bool excision_check(const MarkedSetup& setup) {
  const auto marked = h_vector(setup);
  MarkedSetup unmarked = setup;
  unmarked.T.clear();
  const auto plain = h_vector(unmarked);
  const auto lhs = static_cast<std::int64_t>(marked.h1) -
                   static_cast<std::int64_t>(plain.h1) +
                   static_cast<std::int64_t>(setup.T.size()) -
                   static_cast<std::int64_t>(marked.h2) +
                   static_cast<std::int64_t>(plain.h2);
  return lhs == 0 && marked.h3 == plain.h3;
}

}  // namespace tame
