#include "numgroup/square_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace numgroup {

SquareMatrix::SquareMatrix(FieldPtr field, int n) : field_(std::move(field)), n_(n) {
  if (n_ < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  e_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), field_->zero());
}

SquareMatrix::SquareMatrix(FieldPtr field, int n, std::vector<FieldElement> entries)
    : field_(std::move(field)), n_(n), e_(std::move(entries)) {
  if (n_ < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  if (e_.size() != static_cast<size_t>(n_) * static_cast<size_t>(n_))
    throw std::invalid_argument("entry count does not match dimension");
  for (const auto& x : e_) require_same_field(x, e_[0]);
  if (!e_[0].field()->same_field(*field_)) throw std::invalid_argument("entry field mismatch");
}

SquareMatrix SquareMatrix::identity(const FieldPtr& field, int n) {
  SquareMatrix m(field, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = field->one();
  return m;
}

void SquareMatrix::check_index(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("matrix index");
}

const FieldElement& SquareMatrix::at(int i, int j) const {
  check_index(i, j);
  return e_[static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j)];
}

FieldElement& SquareMatrix::at(int i, int j) {
  check_index(i, j);
  return e_[static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j)];
}

static void require_compatible(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.n() != b.n()) throw std::invalid_argument("matrix dimension mismatch");
  require_same_field(a.at(0, 0), b.at(0, 0));
}

SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
  require_compatible(a, b);
  SquareMatrix out = a;
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) out.at(i, j) += b.at(i, j);
  return out;
}

SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
  require_compatible(a, b);
  SquareMatrix out = a;
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) out.at(i, j) -= b.at(i, j);
  return out;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  require_compatible(a, b);
  SquareMatrix out(a.field(), a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int k = 0; k < a.n(); ++k) {
      const FieldElement& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < a.n(); ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

bool SquareMatrix::operator==(const SquareMatrix& o) const {
  if (n_ != o.n_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (!(e_[i] == o.e_[i])) return false;
  return true;
}

SquareMatrix SquareMatrix::scaled(const FieldElement& c) const {
  SquareMatrix out = *this;
  for (auto& x : out.e_) x *= c;
  return out;
}

FieldElement SquareMatrix::trace() const {
  FieldElement t = field_->zero();
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

FieldElement SquareMatrix::det() const {
  std::vector<FieldElement> a(e_);
  const int n = n_;
  FieldElement det = field_->one();
  auto cell = [&](int i, int j) -> FieldElement& {
    return a[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)];
  };
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && cell(piv, col).is_zero()) ++piv;
    if (piv == n) return field_->zero();
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(cell(piv, j), cell(col, j));
      det = -det;
    }
    det *= cell(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (cell(r, col).is_zero()) continue;
      FieldElement f = cell(r, col) / cell(col, col);
      for (int j = col; j < n; ++j) cell(r, j) -= f * cell(col, j);
    }
  }
  return det;
}

SquareMatrix SquareMatrix::inverse() const {
  const int n = n_;
  std::vector<FieldElement> a(e_);
  SquareMatrix inv = identity(field_, n);
  auto cell = [&](int i, int j) -> FieldElement& {
    return a[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)];
  };
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && cell(piv, col).is_zero()) ++piv;
    if (piv == n) throw std::domain_error("singular matrix has no inverse");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(cell(piv, j), cell(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    FieldElement d = cell(col, col);
    for (int j = 0; j < n; ++j) {
      cell(col, j) = cell(col, j) / d;
      inv.at(col, j) = inv.at(col, j) / d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || cell(r, col).is_zero()) continue;
      FieldElement f = cell(r, col);
      for (int j = 0; j < n; ++j) {
        cell(r, j) -= f * cell(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool SquareMatrix::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

std::vector<FieldElement> SquareMatrix::apply(const std::vector<FieldElement>& v) const {
  if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("vector length mismatch");
  std::vector<FieldElement> out(static_cast<size_t>(n_), field_->zero());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
  return out;
}

std::string SquareMatrix::key() const {
  std::ostringstream os;
  for (const auto& x : e_) {
    for (const auto& c : x.coords()) os << c.get_str() << ',';
    os << ';';
  }
  return os.str();
}

std::string SquareMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    os << (i ? "; " : "") << "[";
    for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

FieldElement trace_product(const SquareMatrix& a, const SquareMatrix& b) {
  FieldElement t = a.field()->zero();
  for (int i = 0; i < a.n(); ++i)
    for (int k = 0; k < a.n(); ++k) t += a.at(i, k) * b.at(k, i);
  return t;
}

}  // namespace numgroup
