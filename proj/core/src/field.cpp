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
#include "matkit/field.hpp"

#include <utility>

#include "matkit/errors.hpp"

namespace matkit {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  __extension__ using Wide = unsigned __int128;
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

// Deterministic Miller-Rabin; these bases are exact for all 64-bit n.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
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

Field Field::prime(std::uint32_t p) {
  if (p >= (std::uint32_t{1} << 31) || !is_prime(p)) {
    throw DomainError("GF(p) needs a prime p < 2^31, got " + std::to_string(p));
  }
  return Field(Kind::kPrime, p);
}

Field Field::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.size() > 4 && text.rfind("GF(", 0) == 0 && text.back() == ')') {
    const std::string digits = text.substr(3, text.size() - 4);
    std::uint64_t p = 0;
    for (char c : digits) {
      if (c < '0' || c > '9' || p > (1ull << 32)) {
        throw DomainError("bad field descriptor '" + text + "'");
      }
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
    }
    if (p >= (1ull << 31)) {
      throw DomainError("GF(p) needs p < 2^31, got " + digits);
    }
    return prime(static_cast<std::uint32_t>(p));
  }
  throw DomainError("bad field descriptor '" + text + "'");
}

std::string Field::to_string() const {
  return kind_ == Kind::kRational ? "Q" : "GF(" + std::to_string(p_) + ")";
}

MatrixOverField::MatrixOverField(Field field, std::size_t rows,
                                 std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field_.kind() == Field::Kind::kPrime) {
    mod_entries_.assign(rows * cols, 0);
  } else {
    rational_entries_.assign(rows * cols, Rational(0));
  }
}

std::size_t MatrixOverField::index(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) {
    throw DomainError("matrix index out of range");
  }
  return row * cols_ + col;
}

void MatrixOverField::set(std::size_t row, std::size_t col,
                          const Rational& value) {
  const std::size_t i = index(row, col);
  if (field_.kind() == Field::Kind::kRational) {
    rational_entries_[i] = value;
    return;
  }
  using boost::multiprecision::cpp_int;
  const cpp_int p = field_.characteristic();
  cpp_int num = boost::multiprecision::numerator(value) % p;
  cpp_int den = boost::multiprecision::denominator(value) % p;
  if (num < 0) num += p;
  if (den == 0) {
    throw DomainError("denominator divisible by the field characteristic");
  }
  const std::uint64_t n = num.convert_to<std::uint64_t>();
  const std::uint64_t d = den.convert_to<std::uint64_t>();
  const std::uint64_t pp = field_.characteristic();
  mod_entries_[i] = static_cast<std::uint32_t>(
      mul_mod(n, pow_mod(d, pp - 2, pp), pp));
}

void MatrixOverField::set_mod(std::size_t row, std::size_t col,
                              std::uint64_t value) {
  if (field_.kind() != Field::Kind::kPrime) {
    set(row, col, Rational(value));
    return;
  }
  mod_entries_[index(row, col)] =
      static_cast<std::uint32_t>(value % field_.characteristic());
}

Rational MatrixOverField::get(std::size_t row, std::size_t col) const {
  const std::size_t i = index(row, col);
  if (field_.kind() == Field::Kind::kPrime) return Rational(mod_entries_[i]);
  return rational_entries_[i];
}

bool MatrixOverField::is_zero(std::size_t row, std::size_t col) const {
  const std::size_t i = index(row, col);
  if (field_.kind() == Field::Kind::kPrime) return mod_entries_[i] == 0;
  return rational_entries_[i] == 0;
}

bool MatrixOverField::operator==(const MatrixOverField& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
         mod_entries_ == o.mod_entries_ &&
         rational_entries_ == o.rational_entries_;
}

namespace {

template <typename T, typename IsZero, typename Eliminate>
std::size_t eliminate_rank(std::vector<std::vector<T>>& m, IsZero is_zero,
                           Eliminate eliminate) {
  // m is column-major: m[c][r]; rank = number of pivots.
  const std::size_t cols = m.size();
  if (cols == 0) return 0;
  const std::size_t rows = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && is_zero(m[c][pivot])) ++pivot;
    if (pivot == rows) continue;
    for (std::size_t cc = c; cc < cols; ++cc) std::swap(m[cc][pivot], m[cc][rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (is_zero(m[c][r])) continue;
      eliminate(m, c, rank, r);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t MatrixOverField::column_rank(const ElementSet& columns) const {
  if (columns.universe_size() != cols_) {
    throw DomainError("column set over the wrong universe");
  }
  const std::vector<std::size_t> chosen = columns.elements();
  if (field_.kind() == Field::Kind::kPrime) {
    const std::uint64_t p = field_.characteristic();
    std::vector<std::vector<std::uint64_t>> m(chosen.size(),
                                              std::vector<std::uint64_t>(rows_));
    for (std::size_t c = 0; c < chosen.size(); ++c) {
      for (std::size_t r = 0; r < rows_; ++r) {
        m[c][r] = mod_entries_[r * cols_ + chosen[c]];
      }
    }
    return eliminate_rank(
        m, [](std::uint64_t v) { return v == 0; },
        [p](auto& mat, std::size_t c, std::size_t pivot_row, std::size_t r) {
          const std::uint64_t factor =
              mul_mod(mat[c][r], pow_mod(mat[c][pivot_row], p - 2, p), p);
          for (std::size_t cc = c; cc < mat.size(); ++cc) {
            const std::uint64_t sub = mul_mod(factor, mat[cc][pivot_row], p);
            mat[cc][r] = (mat[cc][r] + p - sub) % p;
          }
        });
  }
  std::vector<std::vector<Rational>> m(chosen.size(),
                                       std::vector<Rational>(rows_));
  for (std::size_t c = 0; c < chosen.size(); ++c) {
    for (std::size_t r = 0; r < rows_; ++r) {
      m[c][r] = rational_entries_[r * cols_ + chosen[c]];
    }
  }
  return eliminate_rank(
      m, [](const Rational& v) { return v == 0; },
      [](auto& mat, std::size_t c, std::size_t pivot_row, std::size_t r) {
        const Rational factor = mat[c][r] / mat[c][pivot_row];
        for (std::size_t cc = c; cc < mat.size(); ++cc) {
          mat[cc][r] -= factor * mat[cc][pivot_row];
        }
      });
}

}  // namespace matkit

namespace matkit {

namespace {

Rational parse_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string()) {
    throw ParseError("matrix entry must be an integer or a \"num/den\" string",
                     0, "entries");
  }
  const std::string text = v.get<std::string>();
  try {
    const auto slash = text.find('/');
    using boost::multiprecision::cpp_int;
    if (slash == std::string::npos) return Rational(cpp_int(text));
    const cpp_int num(text.substr(0, slash));
    const cpp_int den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator", 0, "entries");
    return Rational(num, den);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + text + "'", 0, "entries");
  }
}

}  // namespace

nlohmann::json matrix_to_json(const MatrixOverField& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational v = m.get(r, c);
      if (m.field().kind() == Field::Kind::kPrime) {
        entries.push_back(
            boost::multiprecision::numerator(v).convert_to<std::uint64_t>());
      } else {
        entries.push_back(v.str());
      }
    }
  }
  return {{"schema", "matkit.matrix.v1"},
          {"field", m.field().to_string()},
          {"rows", m.rows()},
          {"cols", m.cols()},
          {"entries", entries}};
}

MatrixOverField matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("matrix must be an object");
  for (const char* key : {"field", "rows", "cols", "entries"}) {
    if (!j.contains(key)) throw ParseError("missing key", 0, key);
  }
  Field field = Field::rationals();
  try {
    field = Field::parse(j.at("field").get<std::string>());
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0, "field");
  }
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != rows * cols) {
    throw ParseError("expected rows * cols entries", 0, "entries");
  }
  MatrixOverField m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m.set(r, c, parse_rational(entries[r * cols + c]));
    }
  }
  return m;
}

}  // namespace matkit
