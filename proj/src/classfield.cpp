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

#include <algorithm>
#include <string>

#include "tame/error.hpp"

namespace tame {

namespace {

FpMatrix relation_matrix(u64 p, const std::vector<u64>& columns,
                         const PrimeSet& T) {
  FpMatrix rel(p, T.size(), columns.size());
  for (std::size_t r = 0; r < T.size(); ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      rel.set(r, c, local_index(static_cast<i64>(T[r]), columns[c], p));
    }
  }
  return rel;
}

}  // namespace

GenusGroup::GenusGroup(MarkedSetup setup, std::vector<u64> columns)
    : setup_(std::move(setup)),
      columns_(std::move(columns)),
      relations_(relation_matrix(setup_.p, columns_, setup_.T)),
      echelon_(row_reduce(relations_)) {}

GenusGroupPtr GenusGroup::make(const MarkedSetup& setup) {
  validate(setup);
  auto columns = min_set(setup.S, setup.p);
  return GenusGroupPtr(new GenusGroup(setup, std::move(columns)));
}

GenusGroupPtr GenusGroup::make_ordered(u64 p, std::vector<u64> columns,
                                       PrimeSet T) {
  MarkedSetup setup{p, make_prime_set(columns), make_prime_set(std::move(T)),
                    {}};
  validate(setup);
  for (u64 v : columns) {
    if (v != p && !is_one_mod(v, p)) {
      throw PreconditionError("column " + std::to_string(v) +
                              " cannot ramify in a p-extension");
    }
  }
  return GenusGroupPtr(new GenusGroup(std::move(setup), std::move(columns)));
}

GenusGroupPtr genus_group(const MarkedSetup& setup) {
  return GenusGroup::make(setup);
}

std::optional<std::size_t> GenusGroup::column_of(u64 place) const {
  auto it = std::find(columns_.begin(), columns_.end(), place);
  if (it == columns_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - columns_.begin());
}

std::size_t GenusGroup::require_column(u64 place) const {
  auto c = column_of(place);
  if (!c) {
    throw PreconditionError(std::to_string(place) +
                            " is not a column place of the genus group");
  }
  return *c;
}

FpVector GenusGroup::reduce(std::span<const u64> v) const {
  return reduce_modulo(v, echelon_);
}

bool GenusGroup::is_zero_class(std::span<const u64> v) const {
  const auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](u64 x) { return x == 0; });
}

FpVector GenusGroup::unit_vector(u64 place) const {
  FpVector e(columns_.size(), 0);
  e[require_column(place)] = 1;
  return e;
}

Character::Character(GenusGroupPtr group, FpVector coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  const auto p = group_->modulus();
  if (coeffs_.size() != group_->ambient_dim()) {
    throw PreconditionError("character has the wrong number of coefficients");
  }
  for (auto& c : coeffs_) c %= p;
  const auto& rel = group_->relations();
  for (std::size_t r = 0; r < rel.rows(); ++r) {
    if (dot(rel.row(r), coeffs_, p) != 0) {
      throw PreconditionError("functional does not kill the relation of " +
                              std::to_string(group_->setup().T[r]));
    }
  }
}

Character Character::zero(GenusGroupPtr group) {
  FpVector z(group->ambient_dim(), 0);
  return Character(std::move(group), std::move(z));
}

Character Character::coordinate(GenusGroupPtr group, u64 place) {
  auto e = group->unit_vector(place);
  return Character(std::move(group), std::move(e));
}

u64 Character::operator()(std::span<const u64> ambient) const {
  return dot(coeffs_, ambient, group_->modulus());
}

u64 Character::on_inertia(u64 place) const {
  return coeffs_[group_->require_column(place)];
}

bool Character::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](u64 x) { return x == 0; });
}

Character Character::operator+(const Character& other) const {
  if (!(*group_ == *other.group_)) {
    throw PreconditionError("characters live on different genus groups");
  }
  const auto p = group_->modulus();
  FpVector sum(coeffs_.size());
  for (std::size_t i = 0; i < sum.size(); ++i) {
    sum[i] = (coeffs_[i] + other.coeffs_[i]) % p;
  }
  return Character(group_, std::move(sum));
}

Character Character::scaled(u64 factor) const {
  const auto p = group_->modulus();
  FpVector out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = coeffs_[i] * (factor % p) % p;
  }
  return Character(group_, std::move(out));
}

std::vector<Character> character_basis(const GenusGroupPtr& group) {
  std::vector<Character> out;
  for (auto& v : kernel_basis(group->relations())) {
    out.emplace_back(group, std::move(v));
  }
  return out;
}

PrimeSet min_set(const PrimeSet& S, u64 p) {
  PrimeSet out;
  std::copy_if(S.begin(), S.end(), std::back_inserter(out),
               [p](u64 l) { return l == p || is_one_mod(l, p); });
  return out;
}

FpVector inertia_class(const GenusGroup& g, u64 place) {
  return g.reduce(g.unit_vector(place));
}

bool ramifies(const GenusGroup& g, u64 place) {
  return !g.is_zero_class(g.unit_vector(place));
}

FpVector frobenius_vector(const GenusGroup& g, u64 q) {
  const auto& setup = g.setup();
  if (!is_prime(q)) {
    throw PreconditionError(std::to_string(q) + " is not prime");
  }
  if (contains(setup.S, q)) {
    throw PreconditionError(std::to_string(q) +
                            " lies in S; use reciprocity_vector");
  }
  if (contains(setup.T, q)) {
    throw PreconditionError(std::to_string(q) + " lies in T");
  }
  FpVector v(g.ambient_dim());
  for (std::size_t c = 0; c < v.size(); ++c) {
    v[c] = local_index(static_cast<i64>(q), g.columns()[c], setup.p);
  }
  return v;
}

FpVector reciprocity_vector(const GenusGroup& g, u64 place) {
  const auto own = g.require_column(place);
  const auto p = g.modulus();
  FpVector v(g.ambient_dim(), 0);
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (c == own) continue;
    v[c] = (p - local_index(static_cast<i64>(place), g.columns()[c], p)) % p;
  }
  return v;
}

u64 frobenius_eval(const Character& chi, u64 place) {
  if (chi.on_inertia(place) != 0) throw RamifiedCharacterEval(place);
  return chi(reciprocity_vector(*chi.group(), place));
}

bool splits_in_kummer(u64 q, i64 a, u64 p) {
  if (!is_one_mod(q, p)) throw NotOneModP(q, p);
  return is_pth_power(a, q, p);
}

bool splits_completely_in_unit_kummer(u64 q, const PrimeSet& T, u64 p) {
  if (!is_one_mod(q, p)) throw NotOneModP(q, p);
  return std::all_of(T.begin(), T.end(), [&](u64 t) {
    return is_pth_power(static_cast<i64>(t), q, p);
  });
}

}  // namespace tame
