#include "fgkit/abelianization.hpp"

#include <cstdlib>
#include <limits>
#include <utility>

namespace fgkit {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in addition");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in multiplication");
  return out;
}

namespace {

std::int64_t checked_abs(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("integer overflow in abs");
  return a < 0 ? -a : a;
}

// Elementary operations applied in lockstep to the working matrix and to
// the accumulated transform.
void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

// row_i += q * row_j
void add_row(IntMatrix& a, std::size_t i, std::size_t j, std::int64_t q) {
  for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = checked_add(a(i, c), checked_mul(q, a(j, c)));
}

// col_i += q * col_j
void add_col(IntMatrix& a, std::size_t i, std::size_t j, std::int64_t q) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) = checked_add(a(r, i), checked_mul(q, a(r, j)));
}

}  // namespace

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

std::vector<std::int64_t> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = checked_add(out(i, j), checked_mul(a(i, k), b(k, j)));
    }
  }
  return out;
}

ExponentVector exponent_vector(const Word& w) {
  ExponentVector v(w.alphabet()->rank(), 0);
  for (const Letter x : w.letters()) v[static_cast<std::size_t>(x.gen - 1)] += x.sign;
  return v;
}

IntMatrix image_matrix(const Homomorphism& h) {
  IntMatrix m(h.domain()->rank(), h.codomain()->rank());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto v = exponent_vector(h.images()[r]);
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = v[c];
  }
  return m;
}

std::vector<std::int64_t> SmithForm::diagonal() const {
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k < std::min(D.rows(), D.cols()); ++k) out.push_back(D(k, k));
  return out;
}

namespace {

struct Bezout {
  std::int64_t x, y, g;
};

// x*a + y*b = g = gcd(a, b) > 0.
Bezout extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_x = 1, x = 0, old_y = 0, y = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = checked_add(old_r, -checked_mul(q, r));
    std::swap(old_r, r);
    old_x = checked_add(old_x, -checked_mul(q, x));
    std::swap(old_x, x);
    old_y = checked_add(old_y, -checked_mul(q, y));
    std::swap(old_y, y);
  }
  if (old_r < 0) return {-old_x, -old_y, -old_r};
  return {old_x, old_y, old_r};
}

// Rows (s, i) <- [[x, y], [-b/g, a/g]] * rows (s, i).
void mix_rows(IntMatrix& m, std::size_t s, std::size_t i, const Bezout& b, std::int64_t p, std::int64_t q) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const std::int64_t top = m(s, c), bottom = m(i, c);
    m(s, c) = checked_add(checked_mul(b.x, top), checked_mul(b.y, bottom));
    m(i, c) = checked_add(checked_mul(-q, top), checked_mul(p, bottom));
  }
}

void mix_cols(IntMatrix& m, std::size_t s, std::size_t j, const Bezout& b, std::int64_t p, std::int64_t q) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const std::int64_t left = m(r, s), right = m(r, j);
    m(r, s) = checked_add(checked_mul(b.x, left), checked_mul(b.y, right));
    m(r, j) = checked_add(checked_mul(-q, left), checked_mul(p, right));
  }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  for (std::size_t s = 0; s < std::min(rows, cols); ++s) {
    // Pivot on the least nonzero absolute value in the trailing block.
    std::size_t pr = s, pc = s;
    std::int64_t best = 0;
    for (std::size_t i = s; i < rows; ++i) {
      for (std::size_t j = s; j < cols; ++j) {
        const std::int64_t x = checked_abs(a(i, j));
        if (x != 0 && (best == 0 || x < best)) {
          best = x;
          pr = i;
          pc = j;
        }
      }
    }
    if (best == 0) break;  // trailing block is zero
    swap_rows(a, s, pr);
    swap_rows(u, s, pr);
    swap_cols(a, s, pc);
    swap_cols(v, s, pc);

    while (true) {
      // Bezout steps replace the pivot by a gcd, so each pass strictly
      // shrinks it or clears the row and column outright.
      for (std::size_t i = s + 1; i < rows; ++i) {
        if (a(i, s) == 0) continue;
        const std::int64_t p = a(s, s), q = a(i, s);
        if (q % p == 0) {
          add_row(a, i, s, -(q / p));
          add_row(u, i, s, -(q / p));
          continue;
        }
        const Bezout b = extended_gcd(p, q);
        mix_rows(a, s, i, b, p / b.g, q / b.g);
        mix_rows(u, s, i, b, p / b.g, q / b.g);
      }
      bool clean = true;
      for (std::size_t j = s + 1; j < cols; ++j) {
        if (a(s, j) == 0) continue;
        const std::int64_t p = a(s, s), q = a(s, j);
        if (q % p == 0) {
          add_col(a, j, s, -(q / p));
          add_col(v, j, s, -(q / p));
          continue;
        }
        const Bezout b = extended_gcd(p, q);
        mix_cols(a, s, j, b, p / b.g, q / b.g);
        mix_cols(v, s, j, b, p / b.g, q / b.g);
        clean = false;  // the column may have been refilled
      }
      if (!clean) continue;

      // Pivot row and column are clear; enforce divisibility of the rest.
      bool divides = true;
      for (std::size_t i = s + 1; i < rows && divides; ++i) {
        for (std::size_t j = s + 1; j < cols; ++j) {
          if (a(i, j) % a(s, s) != 0) {
            add_row(a, s, i, 1);
            add_row(u, s, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (a(s, s) < 0) {
      for (std::size_t c = 0; c < cols; ++c) a(s, c) = -a(s, c);
      for (std::size_t c = 0; c < rows; ++c) u(s, c) = -u(s, c);
    }
  }
  return {std::move(u), std::move(a), std::move(v)};
}

QuotientOrder quotient_order(const IntMatrix& m, std::size_t ambient_rank) {
  if (m.cols() != ambient_rank) throw std::invalid_argument("matrix width differs from ambient rank");
  const SmithForm snf = smith_normal_form(m);
  std::size_t nonzero = 0;
  std::int64_t product = 1;
  for (std::int64_t d : snf.diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    product = checked_mul(product, d);
  }
  if (nonzero < ambient_rank) return {};
  return {static_cast<std::uint64_t>(product)};
}

nlohmann::json to_json(const IntMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix JSON must be an array of integer arrays");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : j) rows.push_back(row.get<std::vector<std::int64_t>>());
  return IntMatrix::from_rows(rows);
}

}  // namespace fgkit
