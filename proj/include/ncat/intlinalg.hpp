#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ncat/error.hpp"

namespace ncat {

using Integer = mpz_class;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const IntMatrix& other) const;

  IntMatrix transpose() const;
  IntMatrix column(std::size_t c) const;
  /// Columns [first, last).
  IntMatrix columns(std::size_t first, std::size_t last) const;
  IntMatrix rows_range(std::size_t first, std::size_t last) const;
  IntMatrix submatrix(const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols) const;
  /// [this | other]
  IntMatrix hconcat(const IntMatrix& other) const;

  // Elementary operations used by the reductions.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& k);
  void add_col(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Integer& k, const IntMatrix& a);

/// Bareiss fraction-free elimination.
Integer determinant(const IntMatrix& a);

struct SmithForm {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  std::size_t rank = 0;
};

/// U·A·V = S with U, V unimodular and S diagonal, d1 | d2 | ... , all >= 0.
SmithForm snf(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

/// Columns form a lattice basis of {x : A x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

/// Basis of the lattice spanned by the columns of M.
IntMatrix lattice_basis(const IntMatrix& m);

/// Integer X with A X = B; throws Errc::containment if none exists.
IntMatrix solve_integer(const IntMatrix& a, const IntMatrix& b);

/// Finitely generated abelian group Z^r ⊕ Z/d1 ⊕ ... with d1 | d2 | ... and every di >= 2.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  static AbelianGroup free(std::size_t r) { return {r, {}}; }
  static AbelianGroup cyclic(long m);
  /// Normalises an arbitrary list of cyclic orders (0 = Z, 1 dropped).
  static AbelianGroup from_orders(const std::vector<Integer>& orders);

  std::size_t generator_count() const { return free_rank + torsion.size(); }
  /// Order of generator k: 0 for free generators, listed first.
  Integer generator_order(std::size_t k) const;
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool valid() const;

  bool operator==(const AbelianGroup&) const = default;
  /// "Z^2 ⊕ Z/2", "Z", "0".
  std::string to_string() const;
};

AbelianGroup parse_group(const std::string& text);

/// (span K) / (span B); every column of B must lie in span K.
AbelianGroup subquotient(const IntMatrix& k, const IntMatrix& b);

/// Relation columns of a group presented on its generators.
IntMatrix relation_matrix(const AbelianGroup& g);

/// True iff every column of M, read in the generators of `to`, is a relation.
bool in_relations(const IntMatrix& m, const AbelianGroup& to);

/// Reduces rows of torsion generators into [0, d).
IntMatrix reduce_mod_relations(IntMatrix m, const AbelianGroup& to);

/// M maps relations of `from` into relations of `to`.
bool respects_torsion(const IntMatrix& m, const AbelianGroup& from, const AbelianGroup& to);

}  // namespace ncat
