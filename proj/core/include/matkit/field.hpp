// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef MATKIT_FIELD_HPP_
#define MATKIT_FIELD_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "matkit/element_set.hpp"

namespace matkit {

using Rational = boost::multiprecision::cpp_rational;

bool is_prime(std::uint64_t n);

// GF(p) for a prime p < 2^31, or the rationals.
class Field {
 public:
  enum class Kind { kPrime, kRational };

  static Field prime(std::uint32_t p);
  static Field rationals() { return Field(Kind::kRational, 0); }
  // Accepts "Q" or "GF(p)".
  static Field parse(const std::string& text);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  std::string to_string() const;

  bool operator==(const Field&) const = default;

 private:
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

// Dense matrix over a Field. Entries over GF(p) are kept reduced to [0, p).
class MatrixOverField {
 public:
  MatrixOverField(Field field, std::size_t rows, std::size_t cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void set(std::size_t row, std::size_t col, const Rational& value);
  void set_mod(std::size_t row, std::size_t col, std::uint64_t value);
  Rational get(std::size_t row, std::size_t col) const;
  bool is_zero(std::size_t row, std::size_t col) const;

  // Rank of the submatrix formed by the given columns, by exact Gaussian
  // elimination.
  std::size_t column_rank(const ElementSet& columns) const;

  bool operator==(const MatrixOverField& o) const;

 private:
  std::size_t index(std::size_t row, std::size_t col) const;

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> mod_entries_;
  std::vector<Rational> rational_entries_;
};

// {"schema": "matkit.matrix.v1", "field": "GF(p)" | "Q", "rows": r,
//  "cols": c, "entries": [row-major]}. Rational entries are "num/den"
// strings; integers are accepted for either field.
nlohmann::json matrix_to_json(const MatrixOverField& m);
MatrixOverField matrix_from_json(const nlohmann::json& j);

}  // namespace matkit

#endif  // MATKIT_FIELD_HPP_
