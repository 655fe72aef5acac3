#include "scup/linalg.hpp"

#include <algorithm>

namespace scup {

Vec unit_vector(int n, int index) {
  Vec v(n);
  v[index] = Scalar(1);
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] += b[i];
  return r;
}

Vec scale(const Scalar& s, const Vec& v) {
  Vec r = v;
  for (auto& x : r)
    if (!x.is_zero()) x *= s;
  return r;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw DimensionMismatch("row length");
    for (int c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, int rows) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(cols[c].size()) != rows) throw DimensionMismatch("column length");
    for (int r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("matrix-vector");
  Vec out(rows_);
  for (int c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (int r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

Vec Matrix::row(int r) const {
  return Vec(a_.begin() + static_cast<long>(r) * cols_, a_.begin() + static_cast<long>(r + 1) * cols_);
}

Vec Matrix::column(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product");
  Matrix p(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (int c = 0; c < o.cols_; ++c)
        if (!o(k, c).is_zero()) p(r, c) += a * o(k, c);
    }
  return p;
}

Matrix Matrix::power(int e) const {
  Matrix p = identity(rows_);
  for (int i = 0; i < e; ++i) p = p * *this;
  return p;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::vector<int> rref(std::vector<Vec>& rows, int ncols) {
  std::vector<int> pivots;
  size_t r = 0;
  for (int c = 0; c < ncols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    if (!rows[r][c].is_one()) {
      Scalar inv = rows[r][c].inverse();
      for (int j = c; j < ncols; ++j)
        if (!rows[r][j].is_zero()) rows[r][j] *= inv;
    }
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c];
      for (int j = c; j < ncols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

int rank_of(std::vector<Vec> rows, int ncols) {
  return static_cast<int>(rref(rows, ncols).size());
}

std::vector<Vec> null_space(const std::vector<Vec>& rows, int ncols) {
  std::vector<Vec> r = rows;
  auto pivots = rref(r, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(ncols);
    v[f] = Scalar(1);
    for (size_t i = 0; i < r.size(); ++i)
      if (!r[i][f].is_zero()) v[pivots[i]] = -r[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve_in_span(const std::vector<Vec>& basis, const Vec& v) {
  const int n = static_cast<int>(v.size());
  const int k = static_cast<int>(basis.size());
  // Rows are coordinates; columns are basis vectors plus the target.
  std::vector<Vec> aug(n, Vec(k + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < k; ++c) aug[r][c] = basis[c][r];
    aug[r][k] = v[r];
  }
  auto pivots = rref(aug, k + 1);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  Vec coef(k);
  for (size_t i = 0; i < pivots.size(); ++i) coef[pivots[i]] = aug[i][k];
  return coef;
}

Scalar determinant(Matrix a) {
  const int n = a.rows();
  if (n != a.cols()) throw DimensionMismatch("determinant of non-square matrix");
  Scalar det(1);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Scalar inv = a(c, c).inverse();
    for (int r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      Scalar f = a(r, c) * inv;
      for (int j = c; j < n; ++j)
        if (!a(c, j).is_zero()) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

Subspace Subspace::span(int ambient, std::vector<Vec> vectors) {
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != ambient) throw DimensionMismatch("span: vector length");
  Subspace s;
  s.ambient_ = ambient;
  s.pivots_ = rref(vectors, ambient);
  s.rows_ = std::move(vectors);
  return s;
}

Subspace Subspace::full(int ambient) {
  std::vector<Vec> rows;
  for (int i = 0; i < ambient; ++i) rows.push_back(unit_vector(ambient, i));
  return span(ambient, std::move(rows));
}

Subspace Subspace::coordinate(int ambient, const std::vector<int>& indices) {
  std::vector<Vec> rows;
  for (int i : indices) rows.push_back(unit_vector(ambient, i));
  return span(ambient, std::move(rows));
}

bool Subspace::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw DimensionMismatch("contains: vector length");
  Vec w = v;
  for (size_t i = 0; i < rows_.size(); ++i) {
    int p = pivots_[i];
    if (w[p].is_zero()) continue;
    Scalar f = w[p];
    for (int j = p; j < ambient_; ++j)
      if (!rows_[i][j].is_zero()) w[j] -= f * rows_[i][j];
  }
  return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("contains: ambient");
  if (other.dim() > dim()) return false;
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

std::vector<Vec> Subspace::annihilator() const { return null_space(rows_, ambient_); }

Subspace Subspace::image(const Matrix& t) const {
  if (t.cols() != ambient_) throw DimensionMismatch("image: map source");
  std::vector<Vec> out;
  for (const auto& r : rows_) out.push_back(t.apply(r));
  return span(t.rows(), std::move(out));
}

Subspace Subspace::preimage(const Matrix& t) const {
  if (t.rows() != ambient_) throw DimensionMismatch("preimage: map target");
  auto ann = annihilator();
  if (ann.empty()) return full(t.cols());
  std::vector<Vec> pulled;
  for (const auto& phi : ann) {
    Vec row(t.cols());
    for (int r = 0; r < t.rows(); ++r) {
      if (phi[r].is_zero()) continue;
      for (int c = 0; c < t.cols(); ++c)
        if (!t(r, c).is_zero()) row[c] += phi[r] * t(r, c);
    }
    pulled.push_back(std::move(row));
  }
  return span(t.cols(), null_space(pulled, t.cols()));
}

bool Subspace::is_rational() const {
  for (const auto& r : rows_)
    for (const auto& x : r)
      if (!x.is_rational()) return false;
  return true;
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw DimensionMismatch("sum: ambient");
  std::vector<Vec> rows = u.rows();
  rows.insert(rows.end(), v.rows().begin(), v.rows().end());
  return Subspace::span(u.ambient(), std::move(rows));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw DimensionMismatch("intersect: ambient");
  auto a = u.annihilator();
  auto b = v.annihilator();
  a.insert(a.end(), b.begin(), b.end());
  return Subspace::span(u.ambient(), null_space(a, u.ambient()));
}

Subspace image_power(const Subspace& s, const Matrix& t, int e) {
  Subspace r = s;
  for (int i = 0; i < e; ++i) r = r.image(t);
  return r;
}

Subspace preimage_power(const Subspace& s, const Matrix& t, int e) {
  Subspace r = s;
  for (int i = 0; i < e; ++i) r = r.preimage(t);
  return r;
}

Scalar BilinearForm::operator()(const Vec& u, const Vec& v) const {
  if (static_cast<int>(u.size()) != dim() || static_cast<int>(v.size()) != dim())
    throw DimensionMismatch("form: vector size");
  Scalar s;
  for (int r = 0; r < dim(); ++r) {
    if (u[r].is_zero()) continue;
    for (int c = 0; c < dim(); ++c)
      if (!gram(r, c).is_zero() && !v[c].is_zero()) s += u[r] * gram(r, c) * v[c];
  }
  return s;
}

bool BilinearForm::symmetric() const { return gram == gram.transpose(); }

Subspace perp(const Subspace& w, const BilinearForm& beta) {
  if (w.ambient() != beta.dim()) throw DimensionMismatch("perp: ambient");
  std::vector<Vec> rows;
  for (const auto& r : w.rows()) {
    Vec g(beta.dim());
    for (int i = 0; i < beta.dim(); ++i) {
      if (r[i].is_zero()) continue;
      for (int j = 0; j < beta.dim(); ++j)
        if (!beta.gram(i, j).is_zero()) g[j] += r[i] * beta.gram(i, j);
    }
    rows.push_back(std::move(g));
  }
  return Subspace::span(beta.dim(), null_space(rows, beta.dim()));
}

int e_index(const TwoRowPartition& lam, int i) {
  if (i < 1 || i > lam.first()) throw DimensionMismatch("e index out of range");
  return i - 1;
}

int f_index(const TwoRowPartition& lam, int j) {
  if (j < 1 || j > lam.second()) throw DimensionMismatch("f index out of range");
  return lam.first() + j - 1;
}

Vec e_vec(const TwoRowPartition& lam, int i) { return unit_vector(lam.n, e_index(lam, i)); }
Vec f_vec(const TwoRowPartition& lam, int j) { return unit_vector(lam.n, f_index(lam, j)); }

Matrix build_nilpotent(const TwoRowPartition& lam) {
  Matrix x(lam.n, lam.n);
  for (int i = 2; i <= lam.first(); ++i) x(e_index(lam, i - 1), e_index(lam, i)) = Scalar(1);
  for (int j = 2; j <= lam.second(); ++j) x(f_index(lam, j - 1), f_index(lam, j)) = Scalar(1);
  return x;
}

Matrix antidiagonal_J(int size) {
  Matrix j(size, size);
  for (int r = 1; r <= size; ++r) j(r - 1, size - r) = Scalar(r % 2 == 1 ? 1 : -1);
  return j;
}

BilinearForm build_form(const TwoRowPartition& lam) {
  if (!lam.type_d_admissible())
    throw DomainError("invalid_partition",
                      "no type D form for partition " + lam.to_string());
  Matrix g(lam.n, lam.n);
  const int p = lam.first(), q = lam.second();
  if (lam.equal_parts()) {
    Matrix j = antidiagonal_J(p);
    for (int r = 0; r < p; ++r)
      for (int c = 0; c < p; ++c) {
        g(r, p + c) = j(r, c);
        g(p + c, r) = j(r, c);
      }
  } else {
    Matrix jp = antidiagonal_J(p), jq = antidiagonal_J(q);
    for (int r = 0; r < p; ++r)
      for (int c = 0; c < p; ++c) g(r, c) = jp(r, c);
    for (int r = 0; r < q; ++r)
      for (int c = 0; c < q; ++c) g(p + r, p + c) = jq(r, c);
  }
  return BilinearForm{g};
}

Matrix projection_P(const TwoRowPartition& lam, const TwoRowPartition& mu) {
  if (mu.first() > lam.first() || mu.second() > lam.second())
    throw DimensionMismatch("projection_P: mu does not fit in lambda");
  Matrix p(mu.n, lam.n);
  for (int i = 1; i <= mu.first(); ++i) p(e_index(mu, i), e_index(lam, i)) = Scalar(1);
  for (int j = 1; j <= mu.second(); ++j) p(f_index(mu, j), f_index(lam, j)) = Scalar(1);
  return p;
}

Matrix embedding_P(const TwoRowPartition& mu, const TwoRowPartition& lam) {
  return projection_P(lam, mu).transpose();
}

Vec QuotientSpace::coordinates(const Vec& v) const {
  std::vector<Vec> basis = reps;
  basis.insert(basis.end(), W.rows().begin(), W.rows().end());
  auto c = solve_in_span(basis, v);
  if (!c) throw DomainError("not_in_domain", "vector is not in W^perp");
  c->resize(reps.size());
  return *c;
}

QuotientSpace quotient(const Subspace& W, const BilinearForm& beta, const Matrix& x) {
  QuotientSpace q;
  q.W = W;
  q.Wperp = perp(W, beta);
  if (!q.Wperp.contains(W)) throw DomainError("not_isotropic", "W is not isotropic");
  if (!W.contains(W.image(x))) throw DomainError("not_stable", "W is not x-stable");
  if (!q.Wperp.contains(q.Wperp.image(x)))
    throw DomainError("not_stable", "W^perp is not x-stable");
  const auto& wp = W.pivots();
  for (size_t i = 0; i < q.Wperp.rows().size(); ++i)
    if (std::find(wp.begin(), wp.end(), q.Wperp.pivots()[i]) == wp.end())
      q.reps.push_back(q.Wperp.rows()[i]);
  const int d = static_cast<int>(q.reps.size());
  q.form = Matrix(d, d);
  q.nilpotent = Matrix(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) q.form(i, j) = beta(q.reps[i], q.reps[j]);
  for (int j = 0; j < d; ++j) {
    Vec c = q.coordinates(x.apply(q.reps[j]));
    for (int i = 0; i < d; ++i) q.nilpotent(i, j) = c[i];
  }
  return q;
}

std::string to_string(QCase q) {
  switch (q) {
    case QCase::I: return "I";
    case QCase::II_1: return "II-1";
    case QCase::II_2: return "II-2";
    case QCase::III_1: return "III-1";
    case QCase::III_2: return "III-2";
    case QCase::III_3: return "III-3";
    case QCase::III_4: return "III-4";
  }
  return "?";
}

Matrix swap_ef(int r) {
  Matrix s(2 * r, 2 * r);
  for (int i = 0; i < r; ++i) {
    s(r + i, i) = Scalar(1);
    s(i, r + i) = Scalar(1);
  }
  return s;
}

namespace {

[[noreturn]] void bad_data(const std::string& msg) {
  throw DomainError("inconsistent_q_data", msg);
}

void check_q_data(QCase kind, const TwoRowPartition& lam, const QData& data) {
  if (!lam.type_d_admissible()) bad_data("partition " + lam.to_string() + " is not type D");
  const int m = lam.m();
  switch (kind) {
    case QCase::I:
      if (data.t < 1 || 2 * data.t >= m || lam.second() - 2 * data.t < 1)
        bad_data("case I needs 1 <= t, 2t < m and k - 2t >= 1");
      break;
    case QCase::II_1:
    case QCase::II_2:
      if (!lam.equal_parts()) bad_data("case II needs lambda = (m,m)");
      if (kind == QCase::II_1 && data.c.is_zero()) bad_data("Q^II_1 needs c != 0");
      if (kind == QCase::II_2 && data.d.is_zero()) bad_data("Q^II_2 needs d != 0");
      if (m % 2 == 1 && !data.c.is_zero() && !data.d.is_zero())
        bad_data("for m odd the induced form on W^perp/W differs from beta_nu when c d != 0");
      break;
    case QCase::III_1:
    case QCase::III_2:
      if (!lam.equal_parts()) bad_data("III-1/III-2 need lambda = (m,m)");
      break;
    case QCase::III_3:
      if (lam.first() - 2 != lam.second()) bad_data("III-3 needs n-k-2 = k");
      break;
    case QCase::III_4:
      if (lam.first() - 2 <= lam.second()) bad_data("III-4 needs n-k-2 > k");
      if (data.omega_sign != 1 && data.omega_sign != -1) bad_data("omega_sign must be +-1");
      break;
  }
}

}  // namespace

Subspace q_domain_W(QCase kind, const TwoRowPartition& lam, const QData& data) {
  switch (kind) {
    case QCase::I: {
      std::vector<Vec> rows;
      for (int i = 1; i <= data.t; ++i) {
        rows.push_back(e_vec(lam, i));
        rows.push_back(f_vec(lam, i));
      }
      return Subspace::span(lam.n, rows);
    }
    case QCase::II_1:
    case QCase::II_2:
      return Subspace::span(lam.n, {add(scale(data.c, e_vec(lam, 1)), scale(data.d, f_vec(lam, 1)))});
    case QCase::III_2:
      return Subspace::span(lam.n, {f_vec(lam, 1)});
    default:
      return Subspace::span(lam.n, {e_vec(lam, 1)});
  }
}

TwoRowPartition q_target(QCase kind, const TwoRowPartition& lam, const QData& data) {
  switch (kind) {
    case QCase::I: return TwoRowPartition{lam.n - 4 * data.t, lam.second() - 2 * data.t};
    case QCase::III_3:
    case QCase::III_4: return TwoRowPartition{lam.n - 2, lam.second()};
    default: return TwoRowPartition{lam.n - 2, lam.m() - 1};
  }
}

QuadIso build_Q(QCase kind, const TwoRowPartition& lam, const QData& data) {
  check_q_data(kind, lam, data);
  QuadIso q;
  q.kind = kind;
  q.lam = lam;
  q.nu = q_target(kind, lam, data);
  q.W = q_domain_W(kind, lam, data);
  q.Wperp = perp(q.W, build_form(lam));
  const TwoRowPartition& nu = q.nu;
  std::vector<Vec> cols(nu.n, Vec(lam.n));
  auto e = [&](int i) { return e_vec(lam, i); };
  auto f = [&](int j) { return f_vec(lam, j); };
  auto set_e = [&](int i, Vec v) { cols[e_index(nu, i)] = std::move(v); };
  auto set_f = [&](int j, Vec v) { cols[f_index(nu, j)] = std::move(v); };
  switch (kind) {
    case QCase::I:
      for (int i = 1; i <= nu.first(); ++i) set_e(i, e(data.t + i));
      for (int j = 1; j <= nu.second(); ++j) set_f(j, f(data.t + j));
      q.scale = data.t % 2 == 1 ? -Scalar::i() : Scalar(1);
      break;
    case QCase::II_1: {
      Scalar ratio = data.d / data.c;
      for (int i = 1; i <= nu.first(); ++i) set_e(i, add(e(i + 1), scale(ratio, f(i + 1))));
      for (int j = 1; j <= nu.second(); ++j) set_f(j, f(j));
      q.scale = Scalar::i();
      break;
    }
    case QCase::II_2: {
      Scalar ratio = data.c / data.d;
      for (int i = 1; i <= nu.first(); ++i) set_e(i, e(i));
      for (int j = 1; j <= nu.second(); ++j) set_f(j, add(scale(ratio, e(j + 1)), f(j + 1)));
      break;
    }
    case QCase::III_1:
      for (int i = 1; i <= nu.first(); ++i) set_e(i, e(i + 1));
      for (int j = 1; j <= nu.second(); ++j) set_f(j, f(j));
      q.scale = Scalar::i();
      break;
    case QCase::III_2:
      for (int i = 1; i <= nu.first(); ++i) set_e(i, e(i));
      for (int j = 1; j <= nu.second(); ++j) set_f(j, f(j + 1));
      break;
    case QCase::III_3:
      for (int i = 1; i <= nu.first(); ++i) {
        set_e(i, add(e(i + 1), f(i)));
        set_f(i, add(e(i + 1), scale(Scalar(-1), f(i))));
      }
      q.scale = Scalar::sqrt_minus_half();
      break;
    case QCase::III_4:
      if (data.literal_III4) {
        for (int i = 1; i <= nu.first(); ++i) set_e(i, e(i + 1));
        for (int j = 1; j <= nu.second(); ++j) set_f(j, f(j));
        q.scale = Scalar::i();
      } else {
        // Q(e_{i+1} + W) = omega e^nu_i, Q(f_i + W) = f^nu_i.
        Scalar omega_inv = Scalar(-data.omega_sign) * Scalar::i();
        for (int i = 1; i <= nu.first(); ++i) set_e(i, scale(omega_inv, e(i + 1)));
        for (int j = 1; j <= nu.second(); ++j) set_f(j, f(j));
      }
      break;
  }
  q.lift = Matrix::from_columns(cols, lam.n);
  if (data.swap_nu) {
    if (!nu.equal_parts() || nu.first() % 2 == 0)
      bad_data("the e <-> f swap is an isometry only on V_(r,r) with r odd");
    q.lift = q.lift * swap_ef(nu.first());
  }
  return q;
}

Vec QuadIso::lift_vector(const Vec& v_nu) const { return lift.apply(v_nu); }

Vec QuadIso::lift_vector_full(const Vec& v_nu) const {
  return ::scup::scale(this->scale, lift.apply(v_nu));
}

Vec QuadIso::apply(const Vec& w) const {
  std::vector<Vec> basis;
  for (int c = 0; c < lift.cols(); ++c) basis.push_back(lift.column(c));
  basis.insert(basis.end(), W.rows().begin(), W.rows().end());
  auto coef = solve_in_span(basis, w);
  if (!coef) throw DomainError("not_in_domain", "vector is not in W^perp");
  coef->resize(nu.n);
  return *coef;
}

Subspace QuadIso::lift_subspace(const Subspace& s_nu) const {
  if (s_nu.ambient() != nu.n) throw DimensionMismatch("lift_subspace: ambient");
  std::vector<Vec> rows = W.rows();
  for (const auto& r : s_nu.rows()) rows.push_back(lift.apply(r));
  return Subspace::span(lam.n, std::move(rows));
}

Subspace QuadIso::apply_subspace(const Subspace& s) const {
  std::vector<Vec> rows;
  for (const auto& r : s.rows()) rows.push_back(apply(r));
  return Subspace::span(nu.n, std::move(rows));
}

}  // namespace scup
