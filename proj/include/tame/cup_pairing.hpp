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

// Local components of cup products H^1 x H^1 -> H^2 of a marked curve.
//
// At a tame place v (v = 1 mod p) the local group H^2(Q_v) is F_p and the
// cup product of two local characters is the determinant
//   chi(sigma_v) psi(tau_v) - chi(tau_v) psi(sigma_v)
// where tau_v = e_v is the inertia generator and sigma_v the reciprocity
// Frobenius. sigma_v is only defined up to multiples of tau_v; adding
// c * tau_v changes both products by c * chi(tau_v) psi(tau_v), which
// cancels. The invariant map is normalised by the smallest primitive root
// mod v. Columns are rescaled by that choice, never zeroed, so ranks and
// vanishing are normalisation free. The wild place p has H^2(Q_p) = 0 and
// never carries a column.

#include <string>
#include <utility>
#include <vector>

#include "tame/classfield.hpp"
#include "tame/coh_dims.hpp"

namespace tame {

using CharacterPair = std::pair<Character, Character>;

struct CupMatrix {
  u64 p;
  std::vector<CharacterPair> pairs;  // one per row
  std::vector<u64> columns;          // places v with delta_v = 1
  FpMatrix entries;
};

u64 local_component(const Character& chi, const Character& psi, u64 v);

enum class Vanishing { kZero, kNonzero };

// Predicted vanishing of (chi u chi_q)_v, chi_q = e_q^*, from splitting
// data alone: at v = q nonzero iff chi(Frob_q) != 0; at any other column v
// nonzero iff chi is ramified at v and s_v is not a p-th power mod q.
// Requires q = 1 mod p, a column of chi's group, split completely in
// Q(E_T^(1/p)), and chi unramified at q.
Vanishing komponenten_predict(const Character& chi, u64 q, u64 v);

// Tame columns (delta_v = 1) of a genus group, in column order.
std::vector<u64> tame_columns(const GenusGroup& g);

CupMatrix cup_matrix(const GenusGroupPtr& g,
                     const std::vector<CharacterPair>& pairs);

// rank(matrix) == h2(setup) == number of columns. Needs V_S^T = 0.
bool surjectivity_certified(const MarkedSetup& setup, const CupMatrix& matrix);

// Mildness test: V u V vanishes and U u V has rank h2. U and V together
// must span the character space of g (PreconditionError otherwise).
// False whenever h2 = 0.
bool mild_verify(const std::vector<Character>& U,
                 const std::vector<Character>& V, const GenusGroupPtr& g);

}  // namespace tame
