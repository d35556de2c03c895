#include "numgroup/ok_module.hpp"

#include <stdexcept>

namespace numgroup {

namespace {

size_t first_nonzero(const std::vector<FieldElement>& row) {
  size_t i = 0;
  while (i < row.size() && row[i].is_zero()) ++i;
  return i;
}

void row_axpy(std::vector<FieldElement>& target, const FieldElement& c,
              const std::vector<FieldElement>& src) {
  for (size_t j = 0; j < target.size(); ++j) target[j] -= c * src[j];
}

}  // namespace

std::vector<std::vector<FieldElement>> OKModule::basis_vectors() const {
  FieldElement d = field->from_rational(Rational(denom));
  std::vector<std::vector<FieldElement>> out;
  out.reserve(hnf.size());
  for (const auto& row : hnf) {
    std::vector<FieldElement> v;
    v.reserve(row.size());
    for (const auto& x : row) v.push_back(x / d);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<FieldElement>> hnf_reduce(
    std::vector<std::vector<FieldElement>> rows, const EuclideanOK& ring) {
  if (rows.empty()) return rows;
  const size_t n = rows[0].size();
  size_t r = 0;  // next pivot row
  for (size_t col = 0; col < n && r < rows.size(); ++col) {
    // gcd cascade: shrink norms at this column until one survivor remains.
    while (true) {
      std::vector<size_t> nz;
      for (size_t i = r; i < rows.size(); ++i)
        if (!rows[i][col].is_zero()) nz.push_back(i);
      if (nz.empty()) break;
      size_t best = nz[0];
      Rational best_norm = ring.abs_norm(rows[best][col]);
      for (size_t k = 1; k < nz.size(); ++k) {
        Rational nk = ring.abs_norm(rows[nz[k]][col]);
        if (nk < best_norm) {
          best = nz[k];
          best_norm = nk;
        }
      }
      std::swap(rows[r], rows[best]);
      if (nz.size() == 1) break;
      for (size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col].is_zero()) continue;
        auto [q, rem] = ring.euclid_div(rows[i][col], rows[r][col]);
        row_axpy(rows[i], q, rows[r]);
      }
    }
    if (rows[r][col].is_zero()) continue;  // no pivot in this column

    // Canonical unit pivot, then canonical residues above it.
    FieldElement assoc = ring.canonical_associate(rows[r][col]);
    FieldElement unit = assoc / rows[r][col];
    if (!unit.is_one())
      for (auto& x : rows[r]) x *= unit;
    for (size_t i = 0; i < r; ++i) {
      if (rows[i][col].is_zero()) continue;
      auto [q, rem] = ring.canonical_rem(rows[i][col], rows[r][col]);
      row_axpy(rows[i], q, rows[r]);
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

OKModule module_from_vectors(std::vector<std::vector<FieldElement>> vectors,
                             const EuclideanOK& ring) {
  if (vectors.empty()) throw std::invalid_argument("module needs at least one vector");
  const FieldPtr field = ring.field();
  const size_t n = vectors[0].size();
  for (const auto& v : vectors)
    if (v.size() != n) throw std::invalid_argument("module vectors must share a dimension");

  Integer denom = 1;
  for (const auto& v : vectors)
    for (const auto& x : v) denom = lcm(denom, common_denominator(x.basis_coords()));

  FieldElement scale = field->from_rational(Rational(denom));
  std::vector<std::vector<FieldElement>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    std::vector<FieldElement> row;
    row.reserve(n);
    for (const auto& x : v) row.push_back(x * scale);
    rows.push_back(std::move(row));
  }
  rows = hnf_reduce(std::move(rows), ring);

  // Cancel common rational integer content against the denominator.
  Integer content = denom;
  for (const auto& row : rows)
    for (const auto& x : row) {
      auto ic = x.integral_coords();
      if (!ic) throw std::logic_error("HNF row left the ring of integers");
      for (const auto& c : *ic) content = gcd(content, c.get_num());
    }
  if (content > 1) {
    FieldElement g = field->from_rational(Rational(content));
    for (auto& row : rows)
      for (auto& x : row) x = x / g;
    denom /= content;
  }

  OKModule m;
  m.field = field;
  m.n = static_cast<int>(n);
  m.denom = denom;
  m.hnf = std::move(rows);
  m.gens = std::move(vectors);
  return m;
}

OKModule standard_lattice(const FieldPtr& field, int n, const EuclideanOK& ring) {
  std::vector<std::vector<FieldElement>> basis;
  for (int i = 0; i < n; ++i) {
    std::vector<FieldElement> e(static_cast<size_t>(n), field->zero());
    e[static_cast<size_t>(i)] = field->one();
    basis.push_back(std::move(e));
  }
  return module_from_vectors(std::move(basis), ring);
}

std::optional<std::vector<FieldElement>> membership(const std::vector<FieldElement>& v,
                                                    const OKModule& m,
                                                    const EuclideanOK& ring) {
  if (static_cast<int>(v.size()) != m.n) throw std::invalid_argument("vector dimension mismatch");
  FieldElement scale = m.field->from_rational(Rational(m.denom));
  std::vector<FieldElement> w;
  w.reserve(v.size());
  for (const auto& x : v) {
    FieldElement s = x * scale;
    if (!ring.is_integral(s)) return std::nullopt;
    w.push_back(std::move(s));
  }

  std::vector<FieldElement> coeffs;
  size_t r = 0;
  for (size_t col = 0; col < w.size(); ++col) {
    bool pivot_here = r < m.hnf.size() && first_nonzero(m.hnf[r]) == col;
    if (!pivot_here) {
      if (!w[col].is_zero()) return std::nullopt;
      continue;
    }
    if (w[col].is_zero()) {
      coeffs.push_back(m.field->zero());
      ++r;
      continue;
    }
    FieldElement k = w[col] / m.hnf[r][col];
    if (!ring.is_integral(k)) return std::nullopt;
    row_axpy(w, k, m.hnf[r]);
    coeffs.push_back(std::move(k));
    ++r;
  }
  for (const auto& x : w)
    if (!x.is_zero()) return std::nullopt;
  return coeffs;
}

ClosureOutcome lattice_closure(const std::vector<SquareMatrix>& generators,
                               const EuclideanOK& ring, int max_rounds) {
  if (generators.empty()) throw std::invalid_argument("need at least one generator");
  const FieldPtr field = ring.field();
  const int n = generators[0].n();

  std::vector<SquareMatrix> actions;  // generators first, then inverses
  for (const auto& g : generators) actions.push_back(g);
  for (const auto& g : generators) actions.push_back(g.inverse());

  ClosureOutcome out;
  out.module = standard_lattice(field, n, ring);

  for (int round = 1; round <= max_rounds; ++round) {
    auto basis = out.module.basis_vectors();
    std::vector<std::vector<FieldElement>> added;
    for (const auto& v : basis)
      for (const auto& a : actions) {
        auto w = a.apply(v);
        if (!membership(w, out.module, ring)) added.push_back(std::move(w));
      }
    out.rounds = round;
    if (added.empty()) {
      out.stabilized = true;
      return out;
    }
    auto all = basis;
    for (auto& w : added) all.push_back(std::move(w));
    out.module = module_from_vectors(std::move(all), ring);
    out.denom_history.push_back(out.module.denom);
    out.row_history.push_back(static_cast<int>(out.module.hnf.size()));
  }
  out.stabilized = false;
  return out;
}

SquareMatrix extract_basis(const OKModule& m) {
  if (static_cast<int>(m.hnf.size()) != m.n)
    throw std::logic_error("module HNF does not have full rank " + std::to_string(m.n));
  FieldElement d = m.field->from_rational(Rational(m.denom));
  SquareMatrix u(m.field, m.n);
  for (int col = 0; col < m.n; ++col)
    for (int row = 0; row < m.n; ++row)
      u.at(row, col) = m.hnf[static_cast<size_t>(col)][static_cast<size_t>(row)] / d;
  if (u.det().is_zero()) throw std::logic_error("extracted basis is singular");
  return u;
}

std::vector<SquareMatrix> conjugate_and_verify(const SquareMatrix& u,
                                               const std::vector<SquareMatrix>& generators) {
  SquareMatrix uinv = u.inverse();
  std::vector<SquareMatrix> out;
  out.reserve(generators.size());
  for (const auto& g : generators) {
    SquareMatrix h = uinv * g * u;
    for (int i = 0; i < h.n(); ++i)
      for (int j = 0; j < h.n(); ++j)
        if (!h.at(i, j).is_in_ok())
          throw std::runtime_error("certification failure: entry " + h.at(i, j).to_string() +
                                   " of a conjugated generator is not integral");
    FieldElement d = h.det();
    if (!d.is_algebraic_integer() || !d.inverse().is_algebraic_integer())
      throw std::runtime_error("certification failure: determinant " + d.to_string() +
                               " is not a unit");
    if (!(h.trace() == g.trace()))
      throw std::runtime_error("certification failure: conjugation changed a trace");
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace numgroup
