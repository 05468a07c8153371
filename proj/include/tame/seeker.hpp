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

// Constructive search for an auxiliary set S = {p_1..p_m, q_1..q_m} whose
// marked curve (X - S, T) has a mild Galois group, together with a
// certificate that an independent checker can replay.
//
// Pipeline: T0 (always empty over Q) -> S0 by a double kill of V^T ->
// q_a by the splitting conditions below -> characters chi_a, psi_a ->
// cup matrix of (chi_a u eta_a, psi_a u eta_a) against the places of S.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tame/classfield.hpp"
#include "tame/coh_dims.hpp"
#include "tame/cup_pairing.hpp"

namespace tame {

inline constexpr const char* kSchema = "tame-certify/1";
inline constexpr const char* kToolVersion = "1.0.0";

struct ResidueWitness {
  i64 a;
  u64 l;
  u64 index;  // local_index(a, l, p)

  friend auto operator<=>(const ResidueWitness&,
                          const ResidueWitness&) = default;
};

struct S0Build {
  std::vector<u64> primes;          // p_1..p_m in selection order
  std::vector<PrimeSet> kill_sets;  // the vskill_search rounds
  bool enlarged = false;            // extended for the minimum size
};

PrimeSet find_T0(const PrimeSet& T, u64 p);

// Two disjoint kill sets, then further primes = 1 mod p until
// m >= #T + 2 (when min_size is set). Every prime avoids T and `avoid`.
S0Build build_S0(const PrimeSet& T, const PrimeSet& avoid, u64 p, u64 bound,
                 bool min_size = true);

struct BaContext {
  u64 p;
  PrimeSet T;
  PrimeSet avoid;
  std::vector<u64> S0;
  std::vector<i64> s_elements;  // s_{p_i}
  GenusGroupPtr group;          // genus group of (S0, T), columns = S0
  std::size_t a;                // 1-based target
  std::vector<u64> previous_q;  // q_1..q_{a-1}

  static BaContext make(u64 p, PrimeSet T, PrimeSet avoid,
                        std::vector<u64> S0, std::size_t a,
                        std::vector<u64> previous_q);
};

struct BaCheck {
  bool ok = false;
  int failed_condition = 0;  // 1-based condition number, 0 when ok
  std::vector<ResidueWitness> witnesses;  // filled when ok
};

// Conditions, in order:
//  1. q not in T or avoid, and every t in T is a p-th power mod q;
//  2. s_b is a p-th power mod q for b != a;
//  3. s_a is not a p-th power mod q;
//  4. Frob_q is not in the inertia group of p_a in G(S0, T);
//  5. for b < a: q is a p-th power mod q_b and q_b a p-th power mod q.
BaCheck check_Ba(u64 q, const BaContext& ctx);

struct QSequence {
  std::vector<u64> q;
  std::vector<std::vector<ResidueWitness>> witnesses;
};

// Smallest qualifying q_a for a = 1..m in turn. Throws
// SearchExhausted("find_q_sequence", bound, a).
QSequence find_q_sequence(u64 p, const PrimeSet& T, const PrimeSet& avoid,
                          const std::vector<u64>& S0, u64 bound);

struct ChiPsi {
  GenusGroupPtr group;  // genus group of (S0 ++ q_list, T)
  std::vector<Character> chi;
  std::vector<Character> psi;
};

// chi_a: ramified at p_a, chi_a(Frob_{q_a}) = 0; psi_a(Frob_{q_a}) != 0;
// both unramified outside S0. Throws PreconditionError when no such
// character exists.
ChiPsi choose_chi_psi(u64 p, const PrimeSet& T, const std::vector<u64>& S0,
                      const std::vector<u64>& q_list);

struct CertificateChecks {
  std::uint64_t v_final_dim = 0;
  bool ramified = false;
  bool surjective = false;
  bool block_shape = false;
  bool direct_sum = false;
  bool mild = false;

  friend bool operator==(const CertificateChecks&,
                         const CertificateChecks&) = default;
};

struct Failure {
  std::string stage;
  std::size_t index = 0;
  std::string message;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct Certificate {
  std::string schema = kSchema;
  std::string tool_version = kToolVersion;
  u64 p = 0;
  PrimeSet S, T, avoid;
  u64 search_bound = 0;

  PrimeSet T0;
  std::vector<u64> S0;
  std::vector<PrimeSet> kill_sets;
  bool S0_enlarged = false;
  std::uint64_t min_size = 0;
  std::vector<u64> q_list;
  std::map<u64, i64> s_elements;
  PrimeSet S_final;

  std::vector<ResidueWitness> residue_witnesses;
  HVector h_vector;  // of the auxiliary curve (X - S0 - q_list, T)

  std::vector<FpVector> chi, psi, eta;  // over columns S0 ++ q_list
  std::vector<u64> matrix_columns;
  std::vector<std::string> matrix_rows;
  std::vector<FpVector> matrix;
  std::uint64_t rank = 0;
  std::vector<FpVector> U, V;

  CertificateChecks checks;
  std::string verdict = "fail";
  std::optional<Failure> failure;
  std::string digest;  // "sha256:" + hex of the canonical form, digest blank

  bool passed() const { return verdict == "pass"; }
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Runs the whole pipeline. Search failures produce a certificate with
// verdict "fail" and the failing stage instead of throwing.
Certificate certify(const MarkedSetup& setup, u64 bound);

struct VerifyReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Recomputes every recorded quantity from the primes listed in the
// certificate. A "fail" certificate never verifies.
VerifyReport verify_report(const Certificate& cert);
bool verify(const Certificate& cert);

}  // namespace tame
