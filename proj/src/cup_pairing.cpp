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

#include "tame/cup_pairing.hpp"

#include <string>

#include "tame/error.hpp"

namespace tame {

namespace {

void require_same_group(const Character& chi, const GenusGroupPtr& g) {
  if (!(*chi.group() == *g)) {
    throw PreconditionError("character belongs to a different genus group");
  }
}

}  // namespace

u64 local_component(const Character& chi, const Character& psi, u64 v) {
  require_same_group(psi, chi.group());
  const auto& g = *chi.group();
  const u64 p = g.modulus();
  if (delta_v(v, p) != 1) {
    throw PreconditionError("no local H^2 at " + std::to_string(v));
  }
  const auto sigma = reciprocity_vector(g, v);
  const u64 chi_tau = chi.on_inertia(v);
  const u64 psi_tau = psi.on_inertia(v);
  const u64 lhs = chi(sigma) * psi_tau % p;
  const u64 rhs = chi_tau * psi(sigma) % p;
  return (lhs + p - rhs) % p;
}

Vanishing komponenten_predict(const Character& chi, u64 q, u64 v) {
  const auto& g = *chi.group();
  const u64 p = g.modulus();
  if (!is_one_mod(q, p)) throw NotOneModP(q, p);
  g.require_column(q);
  g.require_column(v);
  if (delta_v(v, p) != 1) {
    throw PreconditionError("no local H^2 at " + std::to_string(v));
  }
  if (!splits_completely_in_unit_kummer(q, g.setup().T, p)) {
    throw PreconditionError(std::to_string(q) +
                            " does not split completely in Q(E_T^(1/p))");
  }
  if (chi.on_inertia(q) != 0) throw RamifiedCharacterEval(q);

  bool nonzero = false;
  if (v == q) {
    nonzero = frobenius_eval(chi, q) != 0;
  } else {
    nonzero = chi.on_inertia(v) != 0 &&
              !is_pth_power(s_element(v, g.setup().T), q, p);
  }
  return nonzero ? Vanishing::kNonzero : Vanishing::kZero;
}

std::vector<u64> tame_columns(const GenusGroup& g) {
  std::vector<u64> out;
  for (u64 v : g.columns()) {
    if (delta_v(v, g.modulus()) == 1) out.push_back(v);
  }
  return out;
}

CupMatrix cup_matrix(const GenusGroupPtr& g,
                     const std::vector<CharacterPair>& pairs) {
  auto columns = tame_columns(*g);
  FpMatrix entries(g->modulus(), pairs.size(), columns.size());
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    require_same_group(pairs[r].first, g);
    require_same_group(pairs[r].second, g);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      entries.set(r, c,
                  local_component(pairs[r].first, pairs[r].second, columns[c]));
    }
  }
  return {g->modulus(), pairs, std::move(columns), std::move(entries)};
}

bool surjectivity_certified(const MarkedSetup& setup, const CupMatrix& matrix) {
  if (v_space(setup).dim() != 0) {
    throw PreconditionError("V_S^T is nonzero; H^2 is not local");
  }
  const auto h2 = h_vector(setup).h2;
  return rank(matrix.entries) == h2 && h2 == matrix.columns.size();
}

bool mild_verify(const std::vector<Character>& U,
                 const std::vector<Character>& V, const GenusGroupPtr& g) {
  std::vector<FpVector> all;
  for (const auto* list : {&U, &V}) {
    for (const auto& c : *list) {
      require_same_group(c, g);
      all.push_back(c.coeffs());
    }
  }
  if (rank(FpMatrix(g->modulus(), all, g->ambient_dim())) !=
      g->quotient_dim()) {
    throw PreconditionError("U and V do not span H^1");
  }
  const auto h2 = h_vector(g->setup()).h2;
  const auto columns = tame_columns(*g);
  if (h2 == 0 || columns.empty()) return false;

  for (const auto& a : V) {
    for (const auto& b : V) {
      for (u64 v : columns) {
        if (local_component(a, b, v) != 0) return false;
      }
    }
  }
  std::vector<CharacterPair> mixed;
  for (const auto& u : U) {
    for (const auto& v : V) mixed.emplace_back(u, v);
  }
  return rank(cup_matrix(g, mixed).entries) == h2;
}

}  // namespace tame
