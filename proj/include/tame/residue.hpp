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

// Elementary arithmetic over Q. The residue index and the Fermat quotient
// are the two local indices every other module builds on.

#include <cstdint>
#include <span>
#include <vector>

namespace tame {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// Sorted, duplicate-free list of rational primes.
using PrimeSet = std::vector<u64>;

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);

// Reduces a signed integer into [0, m).
u64 reduce(i64 a, u64 m);

// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(u64 n);

// Smallest positive generator of (Z/l)^x. Throws PreconditionError if l is
// not prime.
u64 primitive_root(u64 l);

// p-th power residue index of a at l: the d in [0, p) with
// a^((l-1)/p) == (g^((l-1)/p))^d mod l, g = primitive_root(l).
// Requires l prime with l = 1 mod p (NotOneModP otherwise). l must not
// divide a.
u64 index(i64 a, u64 l, u64 p);

bool is_pth_power(i64 a, u64 l, u64 p);

// (a^(p-1) - 1)/p mod p. Throws if p | a.
u64 fermat_quotient(i64 a, u64 p);

// The F_p-valued local index at a column place of a genus group: the
// residue index at l = 1 mod p and the Fermat quotient at l = p.
u64 local_index(i64 a, u64 place, u64 p);

// True iff l = 1 mod p (the local field at l contains the p-th roots of
// unity).
inline bool is_one_mod(u64 l, u64 p) { return l % p == 1; }

bool contains(std::span<const u64> sorted, u64 x);

// Validates a list of primes and returns it sorted. Throws InvalidSetup on
// a non-prime or a duplicate.
PrimeSet make_prime_set(std::vector<u64> primes);

// Increasing stream of primes, optionally restricted to 1 mod p, skipping a
// finite avoid set. Primes come from a segmented sieve of Eratosthenes, so
// the output is identical on every platform.
class PrimeStream {
 public:
  PrimeStream(u64 p, bool residue_one, PrimeSet avoid, u64 start = 2);

  u64 next();

 private:
  void refill();

  u64 p_;
  bool residue_one_;
  PrimeSet avoid_;
  u64 segment_lo_;
  std::vector<u64> buffer_;
  std::size_t pos_ = 0;
  std::vector<u64> base_primes_;
  u64 base_limit_ = 1;
};

}  // namespace tame
