#include "brieskorn/matrix.hpp"

#include <sstream>
#include <string>
#include <utility>

namespace brieskorn {

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign_flip = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign_flip = -sign_flip;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign_flip * a(n - 1, n - 1);
}

Integer bilinear(const IntMatrix& m, const IntVector& u, const IntVector& v) {
  if (u.size() != m.rows() || v.size() != m.cols())
    throw std::invalid_argument("bilinear: dimension mismatch");
  Integer total = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (u[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) row += m(i, j) * v[j];
    total += u[i] * row;
  }
  return total;
}

IntMatrix read_matrix_text(std::istream& in) {
  std::vector<IntVector> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    IntVector row;
    std::string tok;
    while (ls >> tok) {
      Rational v = parse_rational(tok);
      if (!is_integer(v)) throw std::invalid_argument("matrix entry is not an integer: " + tok);
      row.push_back(v.get_num());
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("matrix file has no rows");
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("matrix rows have unequal length");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

void write_matrix_text(std::ostream& out, const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m(r, c).get_str();
    }
    out << '\n';
  }
}

}  // namespace brieskorn
