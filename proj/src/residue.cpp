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

#include "tame/residue.hpp"

#include <algorithm>
#include <string>

#include "tame/error.hpp"

namespace tame {

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 reduce(i64 a, u64 m) {
  if (a >= 0) return static_cast<u64>(a) % m;
  // -(a+1) avoids overflow at INT64_MIN.
  const u64 neg = (static_cast<u64>(-(a + 1)) + 1) % m;
  return neg == 0 ? 0 : m - neg;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                    29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 2^64.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::vector<u64> distinct_prime_factors(u64 n) {
  std::vector<u64> factors;
  for (u64 f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
    if (n % f == 0) {
      factors.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

void require_odd_prime(u64 p) {
  if (p == 2 || !is_prime(p)) {
    throw PreconditionError("modulus " + std::to_string(p) +
                            " is not an odd prime");
  }
}

}  // namespace

u64 primitive_root(u64 l) {
  if (!is_prime(l)) {
    throw PreconditionError(std::to_string(l) + " is not prime");
  }
  if (l == 2) return 1;
  const auto factors = distinct_prime_factors(l - 1);
  for (u64 g = 2;; ++g) {
    const bool generates = std::all_of(
        factors.begin(), factors.end(),
        [&](u64 f) { return pow_mod(g, (l - 1) / f, l) != 1; });
    if (generates) return g;
  }
}

namespace {

// Shared validation of index / is_pth_power inputs; returns a mod l.
u64 check_index_args(i64 a, u64 l, u64 p) {
  require_odd_prime(p);
  if (!is_prime(l)) {
    throw PreconditionError(std::to_string(l) + " is not prime");
  }
  if (!is_one_mod(l, p)) throw NotOneModP(l, p);
  const u64 r = reduce(a, l);
  if (r == 0) {
    throw PreconditionError(std::to_string(l) + " divides " +
                            std::to_string(a));
  }
  return r;
}

}  // namespace

u64 index(i64 a, u64 l, u64 p) {
  const u64 r = check_index_args(a, l, p);
  const u64 e = (l - 1) / p;
  const u64 target = pow_mod(r, e, l);
  // h generates the order-p subgroup; walk its powers.
  const u64 h = pow_mod(primitive_root(l), e, l);
  u64 power = 1;
  for (u64 d = 0; d < p; ++d) {
    if (power == target) return d;
    power = mul_mod(power, h, l);
  }
  throw std::logic_error("index: target outside the order-p subgroup");
}

bool is_pth_power(i64 a, u64 l, u64 p) {
  const u64 r = check_index_args(a, l, p);
  return pow_mod(r, (l - 1) / p, l) == 1;
}

u64 fermat_quotient(i64 a, u64 p) {
  require_odd_prime(p);
  if (p >= (1ULL << 31)) throw PreconditionError("modulus too large");
  const u64 p2 = p * p;
  const u64 r = reduce(a, p2);
  if (r % p == 0) {
    throw PreconditionError(std::to_string(p) + " divides " +
                            std::to_string(a));
  }
  const u64 x = pow_mod(r, p - 1, p2);
  return ((x + p2 - 1) % p2) / p;
}

u64 local_index(i64 a, u64 place, u64 p) {
  if (place == p) return fermat_quotient(a, p);
  return index(a, place, p);
}

bool contains(std::span<const u64> sorted, u64 x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

PrimeSet make_prime_set(std::vector<u64> primes) {
  std::sort(primes.begin(), primes.end());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i])) {
      throw InvalidSetup(std::to_string(primes[i]) + " is not prime");
    }
    if (i > 0 && primes[i] == primes[i - 1]) {
      throw InvalidSetup("duplicate prime " + std::to_string(primes[i]));
    }
  }
  return primes;
}

namespace {
constexpr u64 kSegment = 1ULL << 16;
}

PrimeStream::PrimeStream(u64 p, bool residue_one, PrimeSet avoid, u64 start)
    : p_(p),
      residue_one_(residue_one),
      avoid_(std::move(avoid)),
      segment_lo_(std::max<u64>(start, 2)) {
  std::sort(avoid_.begin(), avoid_.end());
}

u64 PrimeStream::next() {
  while (pos_ == buffer_.size()) refill();
  return buffer_[pos_++];
}

void PrimeStream::refill() {
  const u64 lo = segment_lo_;
  const u64 hi = lo + kSegment;
  // Base primes up to sqrt(hi), regrown by a plain sieve when needed.
  if (base_limit_ * base_limit_ < hi) {
    u64 limit = std::max<u64>(base_limit_ * 2, 256);
    while (limit * limit < hi) limit *= 2;
    std::vector<bool> composite(limit + 1, false);
    base_primes_.clear();
    for (u64 i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      base_primes_.push_back(i);
      for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    base_limit_ = limit;
  }
  std::vector<bool> composite(kSegment, false);
  for (u64 b : base_primes_) {
    if (b * b >= hi) break;
    u64 first = std::max(b * b, (lo + b - 1) / b * b);
    for (u64 j = first; j < hi; j += b) composite[j - lo] = true;
  }
  buffer_.clear();
  pos_ = 0;
  for (u64 n = lo; n < hi; ++n) {
    if (n < 2 || composite[n - lo]) continue;
    if (residue_one_ && !is_one_mod(n, p_)) continue;
    if (contains(avoid_, n)) continue;
    buffer_.push_back(n);
  }
  segment_lo_ = hi;
}

}  // namespace tame
