#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kext/field.hpp"

namespace kext {

using Vec = std::vector<Elem>;

/// Dense matrix over one field level, row-major.
class Mat {
public:
  Mat() = default;
  Mat(FieldPtr field, std::size_t rows, std::size_t cols);
  static Mat identity(FieldPtr field, std::size_t n);
  static Mat from_rows(FieldPtr field, std::size_t cols, const std::vector<Vec>& rows);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Elem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Elem v) { data_[i * cols_ + j] = std::move(v); }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vec row_vec(std::size_t i) const { return Vec(row(i).begin(), row(i).end()); }
  void set_row(std::size_t i, std::span<const Elem> v);
  void swap_rows(std::size_t a, std::size_t b);
  void append_row(std::span<const Elem> v);

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Elem& c) const;
  Mat transpose() const;
  bool operator==(const Mat& o) const;
  bool is_zero() const;
  bool is_identity() const;
  /// Submatrix made of the listed rows.
  Mat select_rows(std::span<const std::size_t> idx) const;
  /// Entries reinterpreted in an extension field.
  Mat embed_into(const FieldPtr& larger) const;
  std::vector<std::string> to_strings() const;

private:
  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
Vec vec_add(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
Vec vec_sub(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
Vec vec_scale(const Field& f, std::span<const Elem> a, const Elem& c);
bool vec_is_zero(const Field& f, std::span<const Elem> a);
/// Row vector times matrix.
Vec vec_mat(const Field& f, std::span<const Elem> v, const Mat& m);

struct RrefInfo {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form in place; zero rows end up at the bottom.
RrefInfo rref_in_place(Mat& a);
/// Nonzero rows of the reduced row echelon form.
Mat rref(const Mat& a);
std::size_t rank(const Mat& a);
/// Rows form the canonical (reduced echelon) basis of {v : A v^T = 0}.
Mat kernel(const Mat& a);
/// Rows form the canonical basis of {x : x A = 0}.
Mat left_kernel(const Mat& a);
std::optional<Mat> inverse(const Mat& a);
Elem determinant(const Mat& a);
/// Some x with x * A = b, if one exists.
std::optional<Vec> solve_left(const Mat& a, std::span<const Elem> b);
Mat vstack(const Mat& a, const Mat& b);
Mat hstack(const std::vector<Mat>& blocks);
Mat block_diagonal(const FieldPtr& f, const std::vector<Mat>& blocks);
/// Kronecker product.
Mat kron(const Mat& a, const Mat& b);

/// Canonical basis (reduced echelon rows) of a subspace of F^n. Equal
/// subspaces have identical bases.
class SubspaceBasis {
public:
  SubspaceBasis() = default;
  static SubspaceBasis zero(FieldPtr f, std::size_t ambient);
  static SubspaceBasis full(FieldPtr f, std::size_t ambient);
  /// Row space of `m` (any spanning set).
  static SubspaceBasis span(const Mat& m);

  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return basis_.cols(); }
  const FieldPtr& field() const { return basis_.field(); }

  bool contains(std::span<const Elem> v) const;
  bool contains(const SubspaceBasis& o) const;
  /// Coordinates of a member vector in the echelon basis.
  Vec coords(std::span<const Elem> v) const;
  /// v minus its projection along the basis (zero iff v is a member).
  Vec reduce(std::span<const Elem> v) const;
  /// Standard basis indices completing this basis (the non-pivot columns).
  std::vector<std::size_t> complement_indices() const;

  SubspaceBasis sum(const SubspaceBasis& o) const;
  SubspaceBasis intersect(const SubspaceBasis& o) const;
  bool operator==(const SubspaceBasis& o) const { return basis_ == o.basis_; }
  bool operator!=(const SubspaceBasis& o) const { return !(*this == o); }

private:
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

/// Incrementally maintained reduced basis; used by spinning and
/// Krylov-style closures.
class EchelonBuilder {
public:
  EchelonBuilder(FieldPtr f, std::size_t n) : field_(std::move(f)), n_(n) {}

  /// Reduces v against the current rows.
  Vec reduce(std::span<const Elem> v) const;
  /// Adds v if independent; returns whether it was added.
  bool insert(std::span<const Elem> v);
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  SubspaceBasis result() const;

private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace kext
