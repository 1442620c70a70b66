#ifndef FGKIT_ABELIANIZATION_HPP
#define FGKIT_ABELIANIZATION_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "fgkit/homomorphism.hpp"
#include "fgkit/word.hpp"

namespace fgkit {

using ExponentVector = std::vector<std::int64_t>;

/// Dense row-major integer matrix. All arithmetic is overflow checked and
/// throws std::overflow_error instead of wrapping.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  /// Throws std::invalid_argument on ragged input.
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols = 0);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<std::int64_t> row(std::size_t r) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Entry k-1 is the exponent sum of generator k.
ExponentVector exponent_vector(const Word& w);

/// Row k-1 is exponent_vector of the image of domain generator k.
IntMatrix image_matrix(const Homomorphism& h);

/// U * m * V = D, U and V unimodular, D diagonal with d1 | d2 | ... >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::vector<std::int64_t> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Index of the row lattice of `m` in Z^ambient_rank; nullopt when infinite.
struct QuotientOrder {
  std::optional<std::uint64_t> order;
  bool finite() const noexcept { return order.has_value(); }
  bool operator==(const QuotientOrder&) const = default;
};

QuotientOrder quotient_order(const IntMatrix& m, std::size_t ambient_rank);

/// JSON array of integer arrays.
nlohmann::json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace fgkit

#endif  // FGKIT_ABELIANIZATION_HPP
