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

// Exact linear algebra over the prime field F_p.
//
// Vectors and matrix entries are residues in [0, p). Elimination always
// picks the smallest usable row for the leftmost remaining column.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tame {

using FpVector = std::vector<std::uint64_t>;

class FpMatrix {
 public:
  // Zero matrix. Throws PreconditionError unless p is an odd prime < 2^31.
  FpMatrix(std::uint64_t p, std::size_t rows, std::size_t cols);
  // From rows of equal length; entries are reduced mod p. An empty row list
  // needs the explicit column count.
  FpMatrix(std::uint64_t p, const std::vector<FpVector>& rows,
           std::size_t cols);
  FpMatrix(std::uint64_t p, const std::vector<FpVector>& rows);

  std::uint64_t modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint64_t at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::uint64_t value);

  std::span<const std::uint64_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<FpVector> row_vectors() const;

  FpMatrix transposed() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::uint64_t p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint64_t> data_;
};

// Reduced row echelon form with the pivot column of each nonzero row.
struct Echelon {
  FpMatrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(const FpMatrix& m);

std::size_t rank(const FpMatrix& m);

// Basis of the right null space, one vector per free column in increasing
// column order: the free coordinate is 1, other free coordinates are 0.
std::vector<FpVector> kernel_basis(const FpMatrix& m);

// Whether v lies in the F_p-span of gens. Throws on length mismatch.
bool in_span(std::span<const std::uint64_t> v,
             const std::vector<FpVector>& gens, std::uint64_t p);

// Canonical representative of v modulo the row space of an echelon form:
// every pivot coordinate of the result is zero.
FpVector reduce_modulo(std::span<const std::uint64_t> v, const Echelon& rows);

std::uint64_t dot(std::span<const std::uint64_t> a,
                  std::span<const std::uint64_t> b, std::uint64_t p);

// A functional phi on F_p^dim with phi(w) = 0 on constraints_zero and
// phi(w) != 0 on constraints_nonzero. The solution space of the zero
// constraints is scanned through coefficient vectors over its kernel_basis
// in lexicographic order; the first hit is returned. nullopt when no
// functional exists.
std::optional<FpVector> solve_functional(
    const std::vector<FpVector>& constraints_zero,
    const std::vector<FpVector>& constraints_nonzero, std::size_t dim,
    std::uint64_t p);

}  // namespace tame
