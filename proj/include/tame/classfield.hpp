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

// The genus group G(k_S^{T,el} | Q), the Galois group of the maximal
// elementary abelian p-extension of Q unramified outside S and completely
// split at T, as an explicit F_p quotient.
//
// By class field theory over Q the group is the quotient of
// (+)_{v in S} (Z_v^x / p) by the Frobenius classes of the primes in T.
// The ambient space has one coordinate per column place (v = 1 mod p via
// the residue index, v = p via the Fermat quotient); the relation row of
// t in T holds the local indices of t. H^1 of the marked curve is the
// dual: functionals on the ambient space that kill every relation row.

#include <memory>
#include <optional>
#include <vector>

#include "tame/fp_linalg.hpp"
#include "tame/kummer.hpp"

namespace tame {

class GenusGroup;
using GenusGroupPtr = std::shared_ptr<const GenusGroup>;

class GenusGroup {
 public:
  // Columns are the places of min_set(S) in increasing order.
  static GenusGroupPtr make(const MarkedSetup& setup);
  // Columns in the given order; every place must be = 1 mod p or p itself.
  static GenusGroupPtr make_ordered(u64 p, std::vector<u64> columns,
                                    PrimeSet T);

  u64 modulus() const { return setup_.p; }
  const MarkedSetup& setup() const { return setup_; }
  const std::vector<u64>& columns() const { return columns_; }
  const FpMatrix& relations() const { return relations_; }

  std::size_t ambient_dim() const { return columns_.size(); }
  std::size_t quotient_dim() const {
    return columns_.size() - echelon_.pivots.size();
  }

  std::optional<std::size_t> column_of(u64 place) const;
  std::size_t require_column(u64 place) const;

  // Canonical representative of the class of v in the quotient.
  FpVector reduce(std::span<const u64> v) const;
  bool is_zero_class(std::span<const u64> v) const;

  FpVector unit_vector(u64 place) const;

  friend bool operator==(const GenusGroup& a, const GenusGroup& b) {
    return a.setup_.p == b.setup_.p && a.setup_.S == b.setup_.S &&
           a.setup_.T == b.setup_.T && a.columns_ == b.columns_;
  }

 private:
  GenusGroup(MarkedSetup setup, std::vector<u64> columns);

  MarkedSetup setup_;
  std::vector<u64> columns_;
  FpMatrix relations_;
  Echelon echelon_;
};

GenusGroupPtr genus_group(const MarkedSetup& setup);

// An element of H^1_et(X - S, T, F_p): a functional on the ambient space of
// a genus group vanishing on every relation row.
class Character {
 public:
  // Throws PreconditionError if coeffs has the wrong length or does not
  // annihilate the relations.
  Character(GenusGroupPtr group, FpVector coeffs);

  static Character zero(GenusGroupPtr group);
  // e_place^*; valid only when the relation column at `place` is zero.
  static Character coordinate(GenusGroupPtr group, u64 place);

  const GenusGroupPtr& group() const { return group_; }
  const FpVector& coeffs() const { return coeffs_; }

  u64 operator()(std::span<const u64> ambient) const;
  // chi(e_place), the value on the inertia generator at `place`.
  u64 on_inertia(u64 place) const;
  bool is_zero() const;

  Character operator+(const Character& other) const;
  Character scaled(u64 factor) const;

  friend bool operator==(const Character& a, const Character& b) {
    return *a.group_ == *b.group_ && a.coeffs_ == b.coeffs_;
  }

 private:
  GenusGroupPtr group_;
  FpVector coeffs_;
};

// Basis of the character space (kernel_basis of the relation matrix).
std::vector<Character> character_basis(const GenusGroupPtr& group);

// Places of S that can ramify in a p-extension: l = 1 mod p, or l = p.
PrimeSet min_set(const PrimeSet& S, u64 p);

// Class of the inertia generator at a column place.
FpVector inertia_class(const GenusGroup& g, u64 place);
bool ramifies(const GenusGroup& g, u64 place);

// Ambient Frobenius vector of a prime q outside S and T: the local index of
// q at each column.
FpVector frobenius_vector(const GenusGroup& g, u64 q);

// Frobenius of a column place l, read off by reciprocity:
// -sum_{j != l} ind_j(l) e_j, with e_l-coefficient 0. Only defined modulo
// the inertia line at l.
FpVector reciprocity_vector(const GenusGroup& g, u64 place);

// chi(Frob_l) for a column place l; RamifiedCharacterEval if chi(e_l) != 0.
u64 frobenius_eval(const Character& chi, u64 place);

// q = 1 mod p splits in Q(zeta_p, a^(1/p)) iff a is a p-th power mod q.
bool splits_in_kummer(u64 q, i64 a, u64 p);

// q = 1 mod p splits completely in Q(zeta_p, E_T^(1/p)).
bool splits_completely_in_unit_kummer(u64 q, const PrimeSet& T, u64 p);

}  // namespace tame
