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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tame {

// Violated precondition of a library operation.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The marked setup (p, S, T, avoid) is malformed.
class InvalidSetup : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A residue index was requested at a prime l with l != 1 mod p.
class NotOneModP : public PreconditionError {
 public:
  NotOneModP(std::uint64_t l, std::uint64_t p)
      : PreconditionError(std::to_string(l) + " is not 1 mod " +
                          std::to_string(p)),
        prime(l) {}
  std::uint64_t prime;
};

// Evaluation of a character at the Frobenius of a place where the
// character is ramified.
class RamifiedCharacterEval : public PreconditionError {
 public:
  explicit RamifiedCharacterEval(std::uint64_t place)
      : PreconditionError("character is ramified at " + std::to_string(place)),
        place(place) {}
  std::uint64_t place;
};

// A deterministic prime search ran past its bound. `stage` names the
// pipeline step, `index` the 1-based position being searched for (0 when
// the stage has no index).
class SearchExhausted : public std::runtime_error {
 public:
  SearchExhausted(std::string stage, std::uint64_t bound, std::size_t index = 0)
      : std::runtime_error("search exhausted in " + stage +
                           (index ? " (index " + std::to_string(index) + ")"
                                  : std::string()) +
                           " below bound " + std::to_string(bound)),
        stage(std::move(stage)),
        bound(bound),
        index(index) {}
  std::string stage;
  std::uint64_t bound;
  std::size_t index;
};

// A certificate document could not be parsed into a Certificate.
class MalformedCertificate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tame
