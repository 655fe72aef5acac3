// Dense exact linear algebra over Scalar and the concrete gadgets on V_lambda:
// the nilpotent x_lambda, the form M^lambda, projections and the quadratic
// space isomorphisms between W^perp/W and a smaller V_nu.
#pragma once

#include <optional>
#include <vector>

#include "scup/diagram.hpp"
#include "scup/field.hpp"

namespace scup {

using Vec = std::vector<Scalar>;

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Vec unit_vector(int n, int index);
Vec add(const Vec& a, const Vec& b);
Vec scale(const Scalar& s, const Vec& v);
bool is_zero(const Vec& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);
  static Matrix from_columns(const std::vector<Vec>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  Vec apply(const Vec& v) const;
  Vec row(int r) const;
  Vec column(int c) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix power(int e) const;
  bool is_zero() const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(std::vector<Vec>& rows, int ncols);
int rank_of(std::vector<Vec> rows, int ncols);
// Basis of {v : r . v = 0 for all rows r}.
std::vector<Vec> null_space(const std::vector<Vec>& rows, int ncols);
// Coefficients c with sum c_i basis_i = v, or nullopt.
std::optional<Vec> solve_in_span(const std::vector<Vec>& basis, const Vec& v);
Scalar determinant(Matrix a);

// Subspace of Scalar^ambient stored by its canonical reduced echelon basis.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(int ambient, std::vector<Vec> vectors);
  static Subspace zero(int ambient) { return span(ambient, {}); }
  static Subspace full(int ambient);
  static Subspace coordinate(int ambient, const std::vector<int>& indices);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Linear functionals vanishing on the subspace, as vectors.
  std::vector<Vec> annihilator() const;
  Subspace image(const Matrix& t) const;
  Subspace preimage(const Matrix& t) const;
  bool is_rational() const;
  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  int ambient_ = 0;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
Subspace image_power(const Subspace& s, const Matrix& t, int e);
Subspace preimage_power(const Subspace& s, const Matrix& t, int e);

struct BilinearForm {
  Matrix gram;
  int dim() const { return gram.rows(); }
  Scalar operator()(const Vec& u, const Vec& v) const;
  bool symmetric() const;
};

Subspace perp(const Subspace& w, const BilinearForm& beta);

// Basis index helpers for V_lambda: e_i -> i-1, f_j -> (n-k) + j - 1.
int e_index(const TwoRowPartition& lam, int i);
int f_index(const TwoRowPartition& lam, int j);
Vec e_vec(const TwoRowPartition& lam, int i);
Vec f_vec(const TwoRowPartition& lam, int j);

Matrix build_nilpotent(const TwoRowPartition& lam);
// Throws DomainError("invalid_partition") unless lam is type D admissible.
BilinearForm build_form(const TwoRowPartition& lam);
Matrix antidiagonal_J(int size);

// P^lambda_mu : V_lambda -> V_mu, and the embedding P^mu_lambda back.
Matrix projection_P(const TwoRowPartition& lam, const TwoRowPartition& mu);
Matrix embedding_P(const TwoRowPartition& mu, const TwoRowPartition& lam);

struct QuotientSpace {
  Subspace W, Wperp;
  std::vector<Vec> reps;  // echelon completion of W inside W^perp
  Matrix form;            // induced form on reps
  Matrix nilpotent;       // induced x in rep coordinates (columns = images)
  // Coordinates of v + W in the rep basis; v must lie in W^perp.
  Vec coordinates(const Vec& v) const;
};

// Throws DomainError when W is not isotropic or not x-stable.
QuotientSpace quotient(const Subspace& W, const BilinearForm& beta, const Matrix& x);

enum class QCase { I, II_1, II_2, III_1, III_2, III_3, III_4 };
std::string to_string(QCase q);

struct QData {
  int t = 0;                        // Case I
  Scalar c = Scalar(1), d = Scalar(0);  // Case II: W = <c e1 + d f1>
  bool swap_nu = false;             // precompose with e <-> f on V_nu (nu = (r,r), r odd)
  int omega_sign = -1;              // III-4: omega = omega_sign * i
  bool literal_III4 = false;        // III-4 with sqrt(-1) on both blocks
};

// Q : W^perp/W -> V_nu stored through its inverse on representatives.
// Full inverse = scale * lift. Spans only need `lift`.
struct QuadIso {
  QCase kind = QCase::I;
  TwoRowPartition lam, nu;
  Subspace W, Wperp;
  Matrix lift;  // n_lam x n_nu
  Scalar scale = Scalar(1);

  Vec lift_vector(const Vec& v_nu) const;
  Vec lift_vector_full(const Vec& v_nu) const;
  // Q(w + W) in the span normalization; w must lie in W^perp.
  Vec apply(const Vec& w) const;
  // W + lift(S).
  Subspace lift_subspace(const Subspace& s_nu) const;
  // Image of S/W for W <= S <= W^perp.
  Subspace apply_subspace(const Subspace& s) const;
};

// The subspace W and partition nu each case acts on.
Subspace q_domain_W(QCase kind, const TwoRowPartition& lam, const QData& data);
TwoRowPartition q_target(QCase kind, const TwoRowPartition& lam, const QData& data);
QuadIso build_Q(QCase kind, const TwoRowPartition& lam, const QData& data);

// e <-> f on V_(r,r); an isometry commuting with x when r is odd.
Matrix swap_ef(int r);

}  // namespace scup
