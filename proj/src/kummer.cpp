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

#include <algorithm>
#include <iterator>
#include <string>

#include "tame/error.hpp"

namespace tame {

namespace {

bool disjoint(const PrimeSet& a, const PrimeSet& b) {
  PrimeSet both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(both));
  return both.empty();
}

}  // namespace

void validate(const MarkedSetup& s) {
  if (s.p == 2 || !is_prime(s.p)) {
    throw InvalidSetup("p = " + std::to_string(s.p) + " is not an odd prime");
  }
  for (const PrimeSet* set : {&s.S, &s.T, &s.avoid}) {
    if (!std::is_sorted(set->begin(), set->end())) {
      throw InvalidSetup("prime sets must be sorted");
    }
    make_prime_set(*set);
  }
  if (!disjoint(s.S, s.T) || !disjoint(s.S, s.avoid) ||
      !disjoint(s.T, s.avoid)) {
    throw InvalidSetup("S, T and avoid must be pairwise disjoint");
  }
  if (contains(s.T, s.p)) throw InvalidSetup("p must not lie in T");
}

MarkedSetup make_setup(u64 p, std::vector<u64> S, std::vector<u64> T,
                       std::vector<u64> avoid) {
  MarkedSetup setup{p, make_prime_set(std::move(S)),
                    make_prime_set(std::move(T)),
                    make_prime_set(std::move(avoid))};
  validate(setup);
  return setup;
}

PrimeSet t_unit_generators(const PrimeSet& T, u64 /*p*/) {
  PrimeSet gens = T;
  std::sort(gens.begin(), gens.end());
  return gens;
}

i64 s_element(u64 prime, const PrimeSet& T) {
  if (std::find(T.begin(), T.end(), prime) != T.end()) {
    throw PreconditionError("s-element requested for " + std::to_string(prime) +
                            " in T");
  }
  return static_cast<i64>(prime);
}

FpVector kummer_row(u64 v, const PrimeSet& T, u64 p) {
  FpVector row(T.size(), 0);
  if (v != p && !is_one_mod(v, p)) return row;
  for (std::size_t j = 0; j < T.size(); ++j) {
    row[j] = local_index(static_cast<i64>(T[j]), v, p);
  }
  return row;
}

KummerSpace v_space(const MarkedSetup& setup) {
  validate(setup);
  const auto gens = t_unit_generators(setup.T, setup.p);
  std::vector<FpVector> rows;
  rows.reserve(setup.S.size());
  for (u64 v : setup.S) rows.push_back(kummer_row(v, gens, setup.p));
  FpMatrix constraints(setup.p, rows, gens.size());
  auto basis = kernel_basis(constraints);
  return {setup.p, gens, setup.S, std::move(constraints), std::move(basis)};
}

std::size_t v_dim(u64 p, const PrimeSet& S, const PrimeSet& T) {
  std::vector<FpVector> rows;
  for (u64 v : S) rows.push_back(kummer_row(v, T, p));
  return T.size() - rank(FpMatrix(p, rows, T.size()));
}

std::vector<PrimeSet> vskill_search(const PrimeSet& T, const PrimeSet& avoid,
                                    u64 p, u64 bound,
                                    std::size_t multiplicity) {
  if (multiplicity == 0 || bound == 0) {
    throw PreconditionError("vskill_search needs multiplicity >= 1, bound > 0");
  }
  PrimeSet excluded;
  std::set_union(T.begin(), T.end(), avoid.begin(), avoid.end(),
                 std::back_inserter(excluded));
  std::vector<PrimeSet> sets;
  for (std::size_t round = 0; round < multiplicity; ++round) {
    PrimeSet chosen;
    std::vector<FpVector> rows;
    std::size_t kernel = T.size();
    PrimeStream stream(p, true, excluded);
    while (kernel > 0) {
      const u64 l = stream.next();
      if (l > bound) throw SearchExhausted("vskill", bound, round + 1);
      rows.push_back(kummer_row(l, T, p));
      const std::size_t next = T.size() - rank(FpMatrix(p, rows, T.size()));
      if (next < kernel) {
        chosen.push_back(l);
        kernel = next;
      } else {
        rows.pop_back();
      }
    }
    PrimeSet merged;
    std::set_union(excluded.begin(), excluded.end(), chosen.begin(),
                   chosen.end(), std::back_inserter(merged));
    excluded = std::move(merged);
    sets.push_back(std::move(chosen));
  }
  return sets;
}

}  // namespace tame
