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

// The Kummer group V_S^T(Q) and the search that kills it.
//
// Over Q with p odd, E_{Q,T}/p is freely generated by the primes of T, and
// V_S^T is the subspace of exponent vectors x in F_p^T whose product
// prod t^x_t is a local p-th power at every place of S. Only places with
// l = 1 mod p and the wild place p impose conditions.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tame/fp_linalg.hpp"
#include "tame/residue.hpp"

namespace tame {

// A marked arithmetic curve Spec(Z) minus S with T marked, plus the finite
// list of primes excluded from every search.
struct MarkedSetup {
  u64 p = 3;
  PrimeSet S;
  PrimeSet T;
  PrimeSet avoid;

  friend bool operator==(const MarkedSetup&, const MarkedSetup&) = default;
};

// Sorts the sets and checks: p odd prime, all entries prime, S, T, avoid
// pairwise disjoint, p not in T. Throws InvalidSetup.
MarkedSetup make_setup(u64 p, std::vector<u64> S, std::vector<u64> T,
                       std::vector<u64> avoid = {});
void validate(const MarkedSetup& setup);

struct KummerSpace {
  u64 p;
  PrimeSet generators;          // the primes of T, a basis of E_{Q,T}/p
  std::vector<u64> places;      // one per constraint row (the places of S)
  FpMatrix constraints;         // rows: places, columns: generators
  std::vector<FpVector> basis;  // kernel of the constraint matrix

  std::size_t dim() const { return basis.size(); }
};

PrimeSet t_unit_generators(const PrimeSet& T, u64 p);

// Canonical s-element of a prime outside T: the prime itself.
i64 s_element(u64 prime, const PrimeSet& T);

// Local condition row of place v on the generators: residue indices at
// v = 1 mod p, Fermat quotients at v = p, zero otherwise.
FpVector kummer_row(u64 v, const PrimeSet& T, u64 p);

KummerSpace v_space(const MarkedSetup& setup);

// Convenience for dim V_S^T without materialising the setup.
std::size_t v_dim(u64 p, const PrimeSet& S, const PrimeSet& T);

// Greedy kill search: `multiplicity` pairwise disjoint sets of primes
// = 1 mod p, disjoint from T u avoid and from earlier sets, each with
// V^T = 0. A
// prime is taken iff it lowers the current kernel dimension. Throws
// SearchExhausted("vskill", bound) if the stream passes `bound` first.
std::vector<PrimeSet> vskill_search(const PrimeSet& T, const PrimeSet& avoid,
                                    u64 p, u64 bound,
                                    std::size_t multiplicity = 2);

}  // namespace tame
