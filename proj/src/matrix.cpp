#include "kext/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace kext {

namespace {

void require_same(const Mat& a, const Mat& b) {
  if (!same_field(*a.field(), *b.field())) raise(ErrorKind::MixedFields, a.field()->key() + " vs " + b.field()->key());
}

}  // namespace

Mat::Mat(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_->zero()) {}

Mat Mat::identity(FieldPtr field, std::size_t n) {
  Mat m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, m.field()->one());
  return m;
}

Mat Mat::from_rows(FieldPtr field, std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(std::move(field), rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) raise(ErrorKind::DimensionMismatch, "row length differs from column count");
    m.set_row(i, rows[i]);
  }
  return m;
}

void Mat::set_row(std::size_t i, std::span<const Elem> v) {
  if (v.size() != cols_) raise(ErrorKind::DimensionMismatch, "row length mismatch");
  std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
}

void Mat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
}

void Mat::append_row(std::span<const Elem> v) {
  if (v.size() != cols_) raise(ErrorKind::DimensionMismatch, "row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Mat Mat::operator*(const Mat& o) const {
  require_same(*this, o);
  if (cols_ != o.rows_) raise(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  const Field& f = *field_;
  Mat r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem& a = (*this)(i, k);
      if (f.is_zero(a)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Elem& b = o(k, j);
        if (f.is_zero(b)) continue;
        r.data_[i * o.cols_ + j] = f.add(r.data_[i * o.cols_ + j], f.mul(a, b));
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  require_same(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) raise(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
  Mat r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_->add(data_[i], o.data_[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  require_same(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) raise(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
  Mat r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_->sub(data_[i], o.data_[i]);
  return r;
}

Mat Mat::scaled(const Elem& c) const {
  Mat r(*this);
  for (auto& x : r.data_) x = field_->mul(x, c);
  return r;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.data_[j * rows_ + i] = (*this)(i, j);
  return r;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  if (rows_ * cols_ == 0) return true;
  if (!same_field(*field_, *o.field_)) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!field_->equal(data_[i], o.data_[i])) return false;
  return true;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [&](const Elem& e) { return field_->is_zero(e); });
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Elem& e = (*this)(i, j);
      if (i == j ? !field_->is_one(e) : !field_->is_zero(e)) return false;
    }
  return true;
}

Mat Mat::select_rows(std::span<const std::size_t> idx) const {
  Mat r(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) r.set_row(i, row(idx[i]));
  return r;
}

Mat Mat::embed_into(const FieldPtr& larger) const {
  if (same_field(*field_, *larger)) return *this;
  Mat r(larger, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = embed(*field_, *larger, data_[i]);
  return r;
}

std::vector<std::string> Mat::to_strings() const {
  std::vector<std::string> out;
  out.reserve(data_.size());
  for (const auto& e : data_) out.push_back(field_->to_string(e));
  return out;
}

// ---------------------------------------------------------------------------

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v(n, f.zero());
  v[i] = f.one();
  return v;
}

Vec vec_add(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  Vec r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!f.is_zero(b[i])) r[i] = f.add(r[i], b[i]);
  return r;
}

Vec vec_sub(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  Vec r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!f.is_zero(b[i])) r[i] = f.sub(r[i], b[i]);
  return r;
}

Vec vec_scale(const Field& f, std::span<const Elem> a, const Elem& c) {
  Vec r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(f.mul(x, c));
  return r;
}

bool vec_is_zero(const Field& f, std::span<const Elem> a) {
  return std::all_of(a.begin(), a.end(), [&](const Elem& e) { return f.is_zero(e); });
}

Vec vec_mat(const Field& f, std::span<const Elem> v, const Mat& m) {
  if (v.size() != m.rows()) raise(ErrorKind::DimensionMismatch, "vector-matrix shape mismatch");
  Vec r(m.cols(), f.zero());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (f.is_zero(v[k])) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Elem& b = m(k, j);
      if (f.is_zero(b)) continue;
      r[j] = f.add(r[j], f.mul(v[k], b));
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

RrefInfo rref_in_place(Mat& a) {
  const Field& f = *a.field();
  RrefInfo info;
  std::size_t r = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && f.is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    const Elem inv = f.inv(a(r, c));
    nz.clear();
    for (std::size_t j = c; j < a.cols(); ++j) {
      if (f.is_zero(a(r, j))) continue;
      a.set(r, j, f.mul(a(r, j), inv));
      nz.push_back(j);
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || f.is_zero(a(i, c))) continue;
      const Elem factor = a(i, c);
      for (auto j : nz) a.set(i, j, f.sub(a(i, j), f.mul(factor, a(r, j))));
    }
    info.pivots.push_back(c);
    ++r;
  }
  info.rank = r;
  return info;
}

Mat rref(const Mat& a) {
  Mat m = a;
  const RrefInfo info = rref_in_place(m);
  std::vector<std::size_t> idx(info.rank);
  std::iota(idx.begin(), idx.end(), 0);
  return m.select_rows(idx);
}

std::size_t rank(const Mat& a) {
  Mat m = a;
  return rref_in_place(m).rank;
}

Mat kernel(const Mat& a) {
  const Field& f = *a.field();
  Mat m = a;
  const RrefInfo info = rref_in_place(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : info.pivots) is_pivot[p] = true;
  Mat k(a.field(), 0, a.cols());
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = unit_vec(f, a.cols(), free);
    for (std::size_t i = 0; i < info.rank; ++i) v[info.pivots[i]] = f.neg(m(i, free));
    k.append_row(v);
  }
  return rref(k);
}

Mat left_kernel(const Mat& a) { return kernel(a.transpose()); }

std::optional<Mat> inverse(const Mat& a) {
  if (a.rows() != a.cols()) raise(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Mat aug = hstack({a, Mat::identity(a.field(), n)});
  const RrefInfo info = rref_in_place(aug);
  if (info.rank < n || (n > 0 && info.pivots[n - 1] != n - 1)) return std::nullopt;
  Mat inv(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, aug(i, n + j));
  return inv;
}

Elem determinant(const Mat& a) {
  if (a.rows() != a.cols()) raise(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  const Field& f = *a.field();
  Mat m = a;
  Elem det = f.one();
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && f.is_zero(m(p, c))) ++p;
    if (p == n) return f.zero();
    if (p != c) {
      m.swap_rows(p, c);
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    const Elem inv = f.inv(m(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      if (f.is_zero(m(r, c))) continue;
      const Elem factor = f.mul(m(r, c), inv);
      for (std::size_t j = c; j < n; ++j)
        if (!f.is_zero(m(c, j))) m.set(r, j, f.sub(m(r, j), f.mul(factor, m(c, j))));
    }
  }
  return det;
}

std::optional<Vec> solve_left(const Mat& a, std::span<const Elem> b) {
  // x A = b  <=>  A^T x^T = b^T
  const Field& f = *a.field();
  if (b.size() != a.cols()) raise(ErrorKind::DimensionMismatch, "right-hand side length mismatch");
  Mat at = a.transpose();
  Mat aug(a.field(), at.rows(), at.cols() + 1);
  for (std::size_t i = 0; i < at.rows(); ++i) {
    for (std::size_t j = 0; j < at.cols(); ++j) aug.set(i, j, at(i, j));
    aug.set(i, at.cols(), b[i]);
  }
  const RrefInfo info = rref_in_place(aug);
  Vec x = zero_vec(f, a.rows());
  for (std::size_t i = 0; i < info.rank; ++i) {
    if (info.pivots[i] == at.cols()) return std::nullopt;
    x[info.pivots[i]] = aug(i, at.cols());
  }
  return x;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) raise(ErrorKind::DimensionMismatch, "vstack column mismatch");
  Mat r = a;
  for (std::size_t i = 0; i < b.rows(); ++i) r.append_row(b.row(i));
  return r;
}

Mat hstack(const std::vector<Mat>& blocks) {
  if (blocks.empty()) raise(ErrorKind::DimensionMismatch, "hstack of nothing");
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != blocks[0].rows()) raise(ErrorKind::DimensionMismatch, "hstack row mismatch");
    cols += b.cols();
  }
  Mat r(blocks[0].field(), blocks[0].rows(), cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) r.set(i, off + j, b(i, j));
    off += b.cols();
  }
  return r;
}

Mat block_diagonal(const FieldPtr& f, const std::vector<Mat>& blocks) {
  std::size_t n = 0, m = 0;
  for (const auto& b : blocks) {
    n += b.rows();
    m += b.cols();
  }
  Mat r(f, n, m);
  std::size_t ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) r.set(ro + i, co + j, b(i, j));
    ro += b.rows();
    co += b.cols();
  }
  return r;
}

Mat kron(const Mat& a, const Mat& b) {
  require_same(a, b);
  const Field& f = *a.field();
  Mat r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Elem& x = a(i, j);
      if (f.is_zero(x)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Elem& y = b(k, l);
          if (f.is_zero(y)) continue;
          r.set(i * b.rows() + k, j * b.cols() + l, f.mul(x, y));
        }
    }
  return r;
}

// ---------------------------------------------------------------------------

SubspaceBasis SubspaceBasis::zero(FieldPtr f, std::size_t ambient) {
  SubspaceBasis s;
  s.basis_ = Mat(std::move(f), 0, ambient);
  return s;
}

SubspaceBasis SubspaceBasis::full(FieldPtr f, std::size_t ambient) {
  SubspaceBasis s;
  s.basis_ = Mat::identity(std::move(f), ambient);
  s.pivots_.resize(ambient);
  std::iota(s.pivots_.begin(), s.pivots_.end(), 0);
  return s;
}

SubspaceBasis SubspaceBasis::span(const Mat& m) {
  SubspaceBasis s;
  Mat r = m;
  const RrefInfo info = rref_in_place(r);
  std::vector<std::size_t> idx(info.rank);
  std::iota(idx.begin(), idx.end(), 0);
  s.basis_ = r.select_rows(idx);
  s.pivots_ = info.pivots;
  return s;
}

Vec SubspaceBasis::reduce(std::span<const Elem> v) const {
  const Field& f = *field();
  Vec r(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Elem c = r[pivots_[i]];
    if (f.is_zero(c)) continue;
    const auto row = basis_.row(i);
    for (std::size_t j = 0; j < r.size(); ++j)
      if (!f.is_zero(row[j])) r[j] = f.sub(r[j], f.mul(c, row[j]));
  }
  return r;
}

bool SubspaceBasis::contains(std::span<const Elem> v) const { return vec_is_zero(*field(), reduce(v)); }

bool SubspaceBasis::contains(const SubspaceBasis& o) const {
  for (std::size_t i = 0; i < o.dim(); ++i)
    if (!contains(o.basis_.row(i))) return false;
  return true;
}

Vec SubspaceBasis::coords(std::span<const Elem> v) const {
  Vec c;
  c.reserve(pivots_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

std::vector<std::size_t> SubspaceBasis::complement_indices() const {
  std::vector<bool> piv(ambient(), false);
  for (auto p : pivots_) piv[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < ambient(); ++j)
    if (!piv[j]) out.push_back(j);
  return out;
}

SubspaceBasis SubspaceBasis::sum(const SubspaceBasis& o) const { return span(vstack(basis_, o.basis_)); }

SubspaceBasis SubspaceBasis::intersect(const SubspaceBasis& o) const {
  if (dim() == 0 || o.dim() == 0) return zero(field(), ambient());
  const Mat lk = left_kernel(vstack(basis_, o.basis_));
  Mat vecs(field(), 0, ambient());
  for (std::size_t i = 0; i < lk.rows(); ++i) {
    const auto row = lk.row(i);
    vecs.append_row(vec_mat(*field(), row.subspan(0, dim()), basis_));
  }
  return span(vecs);
}

// ---------------------------------------------------------------------------

Vec EchelonBuilder::reduce(std::span<const Elem> v) const {
  const Field& f = *field_;
  Vec r(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Elem c = r[pivots_[i]];
    if (f.is_zero(c)) continue;
    const Vec& row = rows_[i];
    for (std::size_t j = 0; j < n_; ++j)
      if (!f.is_zero(row[j])) r[j] = f.sub(r[j], f.mul(c, row[j]));
  }
  return r;
}

bool EchelonBuilder::insert(std::span<const Elem> v) {
  const Field& f = *field_;
  Vec r = reduce(v);
  std::size_t p = 0;
  while (p < n_ && f.is_zero(r[p])) ++p;
  if (p == n_) return false;
  const Elem inv = f.inv(r[p]);
  for (auto& x : r)
    if (!f.is_zero(x)) x = f.mul(x, inv);
  for (auto& row : rows_) {
    const Elem c = row[p];
    if (f.is_zero(c)) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (!f.is_zero(r[j])) row[j] = f.sub(row[j], f.mul(c, r[j]));
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

SubspaceBasis EchelonBuilder::result() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  Mat m(field_, 0, n_);
  for (auto i : order) m.append_row(rows_[i]);
  return SubspaceBasis::span(m);
}

}  // namespace kext
