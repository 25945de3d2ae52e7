#include "ncat/intlinalg.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace ncat {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(Errc::invalid_argument, "ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

bool IntMatrix::operator==(const IntMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

IntMatrix IntMatrix::column(std::size_t c) const { return columns(c, c + 1); }

IntMatrix IntMatrix::columns(std::size_t first, std::size_t last) const {
  IntMatrix out(rows_, last - first);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = first; c < last; ++c) out(r, c - first) = (*this)(r, c);
  }
  return out;
}

IntMatrix IntMatrix::rows_range(std::size_t first, std::size_t last) const {
  IntMatrix out(last - first, cols_);
  for (std::size_t r = first; r < last; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r - first, c) = (*this)(r, c);
  }
  return out;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& rows,
                               const std::vector<std::size_t>& cols) const {
  IntMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  }
  return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  if (rows_ != other.rows_) throw Error(Errc::invalid_argument, "hconcat: row mismatch");
  IntMatrix out(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
  }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << (*this)(r, c).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::invalid_argument, "matrix product: shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& v = a(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += v * b(k, j);
    }
  }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::invalid_argument, "matrix sum: shape mismatch");
  }
  IntMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + Integer(-1) * b; }

IntMatrix operator*(const Integer& k, const IntMatrix& a) {
  IntMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= k;
  }
  return out;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(Errc::invalid_argument, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// Applies row operations to S and U, with the matching column operations on
// U^{-1} so the inverse stays available.
struct Reducer {
  IntMatrix S, U, Uinv, V;

  void swap_rows(std::size_t a, std::size_t b) {
    S.swap_rows(a, b);
    U.swap_rows(a, b);
    Uinv.swap_cols(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    S.add_row(dst, src, k);
    U.add_row(dst, src, k);
    Uinv.add_col(src, dst, -k);
  }
  void negate_row(std::size_t r) {
    S.negate_row(r);
    U.negate_row(r);
    Uinv.negate_col(r);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    S.swap_cols(a, b);
    V.swap_cols(a, b);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    S.add_col(dst, src, k);
    V.add_col(dst, src, k);
  }
};

Integer floor_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

SmithForm smith(const IntMatrix& a, IntMatrix* uinv) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Reducer red{a, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n)};
  IntMatrix& S = red.S;
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Minimal absolute value, first in row-major order.
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (S(i, j) != 0 && (pi == m || abs(S(i, j)) < abs(S(pi, pj)))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == m) break;
    red.swap_rows(t, pi);
    red.swap_cols(t, pj);

    for (;;) {
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) != 0) red.add_row(i, t, -floor_quotient(S(i, t), S(t, t)));
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) != 0) red.add_col(j, t, -floor_quotient(S(t, j), S(t, t)));
      }
      // A nonzero remainder is smaller than the pivot: move it in and repeat.
      std::size_t ri = m, rj = n;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) != 0 && (ri == m || abs(S(i, t)) < abs(S(ri, t)))) ri = i;
      }
      if (ri != m) {
        red.swap_rows(t, ri);
        continue;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) != 0 && (rj == n || abs(S(t, j)) < abs(S(t, rj)))) rj = j;
      }
      if (rj != n) {
        red.swap_cols(t, rj);
        continue;
      }
      // Row and column are clear; enforce divisibility of the remaining block.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
            red.add_row(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (S(t, t) < 0) red.negate_row(t);
  }
  if (uinv) *uinv = std::move(red.Uinv);
  return SmithForm{std::move(red.U), std::move(red.S), std::move(red.V), t};
}

}  // namespace

SmithForm snf(const IntMatrix& a) { return smith(a, nullptr); }

std::size_t rank(const IntMatrix& a) { return snf(a).rank; }

IntMatrix kernel_basis(const IntMatrix& a) {
  const auto f = snf(a);
  return f.V.columns(f.rank, a.cols());
}

IntMatrix lattice_basis(const IntMatrix& m) {
  IntMatrix uinv;
  const auto f = smith(m, &uinv);
  IntMatrix out = uinv.columns(0, f.rank);
  for (std::size_t k = 0; k < f.rank; ++k) {
    for (std::size_t r = 0; r < out.rows(); ++r) out(r, k) *= f.S(k, k);
  }
  return out;
}

IntMatrix solve_integer(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw Error(Errc::invalid_argument, "solve: row mismatch");
  const auto f = snf(a);
  const IntMatrix ub = f.U * b;
  IntMatrix y(a.cols(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i < f.rank) {
        if (!mpz_divisible_p(ub(i, c).get_mpz_t(), f.S(i, i).get_mpz_t())) {
          throw Error(Errc::containment, "column " + std::to_string(c) +
                                             " is not in the lattice spanned by the kernel basis");
        }
        y(i, c) = ub(i, c) / f.S(i, i);
      } else if (ub(i, c) != 0) {
        throw Error(Errc::containment, "column " + std::to_string(c) +
                                           " is not in the span of the kernel basis");
      }
    }
  }
  return f.V * y;
}

AbelianGroup AbelianGroup::cyclic(long m) { return from_orders({Integer(m)}); }

AbelianGroup AbelianGroup::from_orders(const std::vector<Integer>& orders) {
  AbelianGroup g;
  std::vector<Integer> finite;
  for (const auto& d : orders) {
    if (d == 0) {
      ++g.free_rank;
    } else if (abs(d) != 1) {
      finite.push_back(abs(d));
    }
  }
  IntMatrix diag(finite.size(), finite.size());
  for (std::size_t i = 0; i < finite.size(); ++i) diag(i, i) = finite[i];
  const auto f = snf(diag);
  for (std::size_t i = 0; i < f.rank; ++i) {
    if (f.S(i, i) > 1) g.torsion.push_back(f.S(i, i));
  }
  return g;
}

Integer AbelianGroup::generator_order(std::size_t k) const {
  return k < free_rank ? Integer(0) : torsion.at(k - free_rank);
}

bool AbelianGroup::valid() const {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2) return false;
    if (i > 0 && !mpz_divisible_p(torsion[i].get_mpz_t(), torsion[i - 1].get_mpz_t())) return false;
  }
  return true;
}

std::string AbelianGroup::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.emplace_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& d : torsion) parts.push_back("Z/" + d.get_str());
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " ⊕ " + parts[i];
  return out;
}

AbelianGroup parse_group(const std::string& text) {
  static const std::regex summand(R"(\s*(?:(0)|Z(?:\^(\d+))?(?:/(\d+))?)\s*)");
  std::vector<Integer> orders;
  std::string rest = text;
  // Accept both "⊕" and "+" as separators.
  for (std::size_t p; (p = rest.find("⊕")) != std::string::npos;) rest.replace(p, 3, "+");
  if (rest.find_first_not_of(" \t") == std::string::npos) {
    throw Error(Errc::parse, "empty group description");
  }
  for (std::size_t start = 0, end = 0; start <= rest.size(); start = end + 1) {
    end = std::min(rest.find('+', start), rest.size());
    const std::string piece = rest.substr(start, end - start);
    std::smatch m;
    if (!std::regex_match(piece, m, summand)) {
      throw Error(Errc::parse, "cannot read group summand '" + piece + "'");
    }
    if (m[1].matched) continue;
    if (m[3].matched) {
      if (m[2].matched) throw Error(Errc::parse, "summand '" + piece + "' mixes ^ and /");
      orders.emplace_back(m[3].str());
      if (orders.back() == 0) throw Error(Errc::parse, "Z/0 is not a finite cyclic group");
    } else {
      const unsigned long r = m[2].matched ? std::stoul(m[2].str()) : 1;
      orders.insert(orders.end(), r, Integer(0));
    }
  }
  return AbelianGroup::from_orders(orders);
}

AbelianGroup subquotient(const IntMatrix& k, const IntMatrix& b) {
  if (k.rows() != b.rows()) throw Error(Errc::invalid_argument, "subquotient: row mismatch");
  const IntMatrix basis = rank(k) == k.cols() ? k : lattice_basis(k);
  const IntMatrix x = solve_integer(basis, b);
  const auto f = snf(x);
  std::vector<Integer> orders(basis.cols() - f.rank, Integer(0));
  for (std::size_t i = 0; i < f.rank; ++i) orders.push_back(f.S(i, i));
  return AbelianGroup::from_orders(orders);
}

IntMatrix relation_matrix(const AbelianGroup& g) {
  IntMatrix rel(g.generator_count(), g.torsion.size());
  for (std::size_t k = 0; k < g.torsion.size(); ++k) rel(g.free_rank + k, k) = g.torsion[k];
  return rel;
}

bool in_relations(const IntMatrix& m, const AbelianGroup& to) {
  if (m.rows() != to.generator_count()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Integer order = to.generator_order(r);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (order == 0 ? m(r, c) != 0 : !mpz_divisible_p(m(r, c).get_mpz_t(), order.get_mpz_t())) {
        return false;
      }
    }
  }
  return true;
}

IntMatrix reduce_mod_relations(IntMatrix m, const AbelianGroup& to) {
  for (std::size_t r = to.free_rank; r < m.rows(); ++r) {
    const Integer& order = to.torsion.at(r - to.free_rank);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_fdiv_r(m(r, c).get_mpz_t(), m(r, c).get_mpz_t(), order.get_mpz_t());
    }
  }
  return m;
}

bool respects_torsion(const IntMatrix& m, const AbelianGroup& from, const AbelianGroup& to) {
  if (m.rows() != to.generator_count() || m.cols() != from.generator_count()) return false;
  return in_relations(m * relation_matrix(from), to);
}

}  // namespace ncat
