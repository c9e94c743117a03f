#include "ramfil/fpspace.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "ramfil/error.hpp"

namespace ramfil {

namespace {

Residue mul(Residue a, Residue b, std::uint32_t p) {
  return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p);
}

Residue add(Residue a, Residue b, std::uint32_t p) {
  return static_cast<Residue>((static_cast<std::uint64_t>(a) + b) % p);
}

Residue sub(Residue a, Residue b, std::uint32_t p) {
  return static_cast<Residue>((static_cast<std::uint64_t>(a) + p - b) % p);
}

void require_same_shape(const FpMatrix& a, const FpMatrix& b, const char* op) {
  if (a.p() != b.p() || a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::shape_mismatch, std::string("shape mismatch in matrix ") + op);
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Residue mod_pow(Residue base, std::uint64_t exponent, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  std::uint64_t acc = base % p;
  while (exponent != 0) {
    if (exponent & 1U) result = result * acc % p;
    acc = acc * acc % p;
    exponent >>= 1U;
  }
  return static_cast<Residue>(result);
}

Residue mod_inverse(Residue a, std::uint32_t p) {
  if (a % p == 0) throw Error(Errc::division_by_zero, "division by zero in F_p");
  return mod_pow(a, p - 2, p);
}

std::uint64_t multiplicative_order(Residue a, std::uint32_t p) {
  if (a % p == 0) throw Error(Errc::division_by_zero, "zero has no multiplicative order");
  std::uint64_t order = 1;
  std::uint64_t x = a % p;
  while (x != 1) {
    x = x * a % p;
    ++order;
  }
  return order;
}

// ---------------------------------------------------------------------------
// FpMatrix

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
  if (!is_prime(p)) throw Error(Errc::invalid_params, "matrix modulus " + std::to_string(p) + " is not prime");
}

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols, std::vector<Residue> entries)
    : p_(p), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (!is_prime(p)) throw Error(Errc::invalid_params, "matrix modulus " + std::to_string(p) + " is not prime");
  if (entries_.size() != rows * cols) {
    throw Error(Errc::shape_mismatch, "matrix entry count does not match rows*cols");
  }
  for (auto& v : entries_) v %= p_;
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FpMatrix FpMatrix::diagonal(std::uint32_t p, const std::vector<Residue>& diag) {
  FpMatrix m(p, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
  return m;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = (*this)(r, c);
  return t;
}

FpMatrix FpMatrix::scaled(Residue s) const {
  FpMatrix out = *this;
  for (auto& v : out.entries_) v = mul(v, s % p_, p_);
  return out;
}

FpMatrix FpMatrix::pow(std::uint64_t exponent) const {
  if (!square()) throw Error(Errc::shape_mismatch, "power of a non-square matrix");
  FpMatrix result = identity(p_, rows_);
  FpMatrix acc = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * acc;
    exponent >>= 1U;
    if (exponent != 0) acc = acc * acc;
  }
  return result;
}

std::vector<Residue> FpMatrix::apply(std::span<const Residue> v) const {
  if (v.size() != cols_) throw Error(Errc::shape_mismatch, "vector length does not match matrix");
  std::vector<Residue> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = (acc + static_cast<std::uint64_t>((*this)(r, c)) * v[c]) % p_;
    out[r] = static_cast<Residue>(acc);
  }
  return out;
}

std::size_t FpMatrix::rank() const { return rref(*this).rows(); }

FpMatrix FpMatrix::inverse() const {
  if (!square()) throw Error(Errc::shape_mismatch, "inverse of a non-square matrix");
  const std::size_t n = rows_;
  // Row-reduce [A | I].
  FpMatrix aug(p_, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, (*this)(r, c));
    aug.set(r, n + r, 1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && aug(pivot, col) == 0) ++pivot;
    if (pivot == n) throw Error(Errc::shape_mismatch, "matrix is singular mod p");
    if (pivot != col) {
      for (std::size_t c = 0; c < 2 * n; ++c) {
        Residue tmp = aug(col, c);
        aug.set(col, c, aug(pivot, c));
        aug.set(pivot, c, tmp);
      }
    }
    const Residue inv = mod_inverse(aug(col, col), p_);
    for (std::size_t c = 0; c < 2 * n; ++c) aug.set(col, c, mul(aug(col, c), inv, p_));
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug(r, col) == 0) continue;
      const Residue factor = aug(r, col);
      for (std::size_t c = 0; c < 2 * n; ++c) aug.set(r, c, sub(aug(r, c), mul(factor, aug(col, c), p_), p_));
    }
  }
  FpMatrix out(p_, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.set(r, c, aug(r, n + c));
  return out;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  if (a.p_ != b.p_ || a.cols_ != b.rows_) throw Error(Errc::shape_mismatch, "shape mismatch in matrix product");
  FpMatrix out(a.p_, a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        auto& slot = out.entries_[r * out.cols_ + c];
        slot = static_cast<Residue>((slot + x * b(k, c)) % a.p_);
      }
    }
  }
  return out;
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
  require_same_shape(a, b, "sum");
  FpMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] = add(a.entries_[i], b.entries_[i], a.p_);
  return out;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) {
  require_same_shape(a, b, "difference");
  FpMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] = sub(a.entries_[i], b.entries_[i], a.p_);
  return out;
}

FpMatrix rref(FpMatrix m) {
  const std::uint32_t p = m.p();
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        Residue tmp = m(lead_row, c);
        m.set(lead_row, c, m(pivot, c));
        m.set(pivot, c, tmp);
      }
    }
    const Residue inv = mod_inverse(m(lead_row, col), p);
    for (std::size_t c = col; c < m.cols(); ++c) m.set(lead_row, c, mul(m(lead_row, c), inv, p));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, col) == 0) continue;
      const Residue factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m.set(r, c, sub(m(r, c), mul(factor, m(lead_row, c), p), p));
    }
    ++lead_row;
  }
  std::vector<Residue> kept(m.entries().begin(),
                            m.entries().begin() + static_cast<std::ptrdiff_t>(lead_row * m.cols()));
  return FpMatrix(p, lead_row, m.cols(), std::move(kept));
}

// ---------------------------------------------------------------------------
// FpSubspace

FpSubspace FpSubspace::zero(std::uint32_t p, std::size_t ambient_dim) {
  return FpSubspace(FpMatrix(p, 0, ambient_dim));
}

FpSubspace FpSubspace::full(std::uint32_t p, std::size_t ambient_dim) {
  return FpSubspace(FpMatrix::identity(p, ambient_dim));
}

FpSubspace FpSubspace::coordinate(std::uint32_t p, std::size_t ambient_dim, std::size_t k) {
  if (k > ambient_dim) throw Error(Errc::shape_mismatch, "coordinate subspace larger than ambient space");
  FpMatrix basis(p, k, ambient_dim);
  for (std::size_t i = 0; i < k; ++i) basis.set(i, i, 1);
  return FpSubspace(std::move(basis));
}

FpSubspace FpSubspace::span(std::uint32_t p, std::size_t ambient_dim,
                            const std::vector<std::vector<Residue>>& vectors) {
  std::vector<Residue> entries;
  entries.reserve(vectors.size() * ambient_dim);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw Error(Errc::shape_mismatch, "spanning vector has wrong length");
    entries.insert(entries.end(), v.begin(), v.end());
  }
  return FpSubspace(rref(FpMatrix(p, vectors.size(), ambient_dim, std::move(entries))));
}

FpSubspace FpSubspace::kernel(const FpMatrix& m) {
  const FpMatrix r = rref(m);
  const std::uint32_t p = m.p();
  const std::size_t n = m.cols();
  std::vector<std::size_t> pivot_cols;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t row = 0; row < r.rows(); ++row) {
    std::size_t c = 0;
    while (r(row, c) == 0) ++c;
    pivot_cols.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<std::vector<Residue>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Residue> v(n, 0);
    v[free] = 1;
    for (std::size_t row = 0; row < r.rows(); ++row) v[pivot_cols[row]] = sub(0, r(row, free), p);
    basis.push_back(std::move(v));
  }
  return span(p, n, basis);
}

FpSubspace FpSubspace::image(const FpMatrix& m) { return FpSubspace(rref(m.transpose())); }

bool FpSubspace::contains(std::span<const Residue> v) const {
  if (v.size() != ambient_dim()) throw Error(Errc::shape_mismatch, "vector length does not match subspace");
  // Reduce v against the echelon basis; v is inside iff the remainder is zero.
  std::vector<Residue> rem(v.begin(), v.end());
  for (auto& x : rem) x %= p();
  for (std::size_t row = 0; row < dim(); ++row) {
    std::size_t c = 0;
    while (basis_(row, c) == 0) ++c;
    const Residue factor = rem[c];
    if (factor == 0) continue;
    for (std::size_t k = c; k < ambient_dim(); ++k) rem[k] = sub(rem[k], mul(factor, basis_(row, k), p()), p());
  }
  return std::all_of(rem.begin(), rem.end(), [](Residue x) { return x == 0; });
}

bool FpSubspace::contains(const FpSubspace& other) const {
  if (other.p() != p() || other.ambient_dim() != ambient_dim()) return false;
  for (std::size_t row = 0; row < other.dim(); ++row) {
    if (!contains(other.basis().row(row))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Lines

BigNat count_lines(std::size_t dim, std::uint32_t p) {
  if (dim == 0) return 0;
  return (pow(BigNat(p), dim) - 1) / (p - 1);
}

namespace {

void check_enumeration_size(std::uint32_t p, std::size_t dim) {
  if (pow(BigNat(p), dim) > kEnumerationLimit) {
    throw Error(Errc::enumeration_too_large, "enumeration too large: " + std::to_string(p) + "^" +
                                                 std::to_string(dim) + " vectors exceeds 10^7");
  }
}

}  // namespace

void for_each_line(std::uint32_t p, std::size_t dim,
                   const std::function<void(std::span<const Residue>)>& visit) {
  check_enumeration_size(p, dim);
  std::vector<Residue> v(dim, 0);
  for (std::size_t lead = 0; lead < dim; ++lead) {
    std::fill(v.begin(), v.end(), 0);
    v[lead] = 1;
    // odometer over coordinates lead+1 .. dim-1, least significant last
    for (;;) {
      visit(std::span<const Residue>(v));
      bool exhausted = true;
      for (std::size_t k = dim; k > lead + 1;) {
        --k;
        if (++v[k] < p) {
          exhausted = false;
          break;
        }
        v[k] = 0;
      }
      if (exhausted) break;
    }
  }
}

std::vector<FpSubspace> enumerate_lines(const FpSubspace& ambient) {
  const std::uint32_t p = ambient.p();
  const std::size_t n = ambient.ambient_dim();
  std::vector<FpSubspace> lines;
  for_each_line(p, ambient.dim(), [&](std::span<const Residue> coeffs) {
    std::vector<Residue> v(n, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0) continue;
      const auto row = ambient.basis().row(i);
      for (std::size_t c = 0; c < n; ++c) v[c] = add(v[c], mul(coeffs[i], row[c], p), p);
    }
    lines.push_back(FpSubspace::span(p, n, {v}));
  });
  return lines;
}

// ---------------------------------------------------------------------------
// Group algebra

GroupAlgebraElement::GroupAlgebraElement(std::uint32_t p, std::uint32_t m, std::vector<Residue> coeffs)
    : p_(p), m_(m), coeffs_(std::move(coeffs)) {
  if (!is_prime(p)) throw Error(Errc::invalid_params, "group algebra modulus " + std::to_string(p) + " is not prime");
  if (m == 0 || (p - 1) % m != 0) {
    throw Error(Errc::invalid_params, "group order m=" + std::to_string(m) + " does not divide p-1=" +
                                          std::to_string(p - 1));
  }
  if (coeffs_.size() != m) throw Error(Errc::shape_mismatch, "group algebra element needs exactly m coefficients");
  for (auto& c : coeffs_) c %= p_;
}

GroupAlgebraElement GroupAlgebraElement::unit(std::uint32_t p, std::uint32_t m) {
  std::vector<Residue> c(m, 0);
  if (m > 0) c[0] = 1;
  return {p, m, std::move(c)};
}

GroupAlgebraElement GroupAlgebraElement::shifted() const {
  std::vector<Residue> out(m_);
  for (std::uint32_t k = 0; k < m_; ++k) out[(k + 1) % m_] = coeffs_[k];
  return {p_, m_, std::move(out)};
}

GroupAlgebraElement GroupAlgebraElement::scaled(Residue s) const {
  std::vector<Residue> out = coeffs_;
  for (auto& c : out) c = mul(c, s % p_, p_);
  return {p_, m_, std::move(out)};
}

FpMatrix GroupAlgebraElement::matrix_of(const FpMatrix& rep_gen) const {
  if (rep_gen.p() != p_ || !rep_gen.square()) {
    throw Error(Errc::shape_mismatch, "representation must be a square matrix over the same F_p");
  }
  const std::size_t n = rep_gen.rows();
  FpMatrix total(p_, n, n);
  FpMatrix power = FpMatrix::identity(p_, n);
  for (std::uint32_t k = 0; k < m_; ++k) {
    if (coeffs_[k] != 0) total = total + power.scaled(coeffs_[k]);
    power = power * rep_gen;
  }
  return total;
}

GroupAlgebraElement idempotent(std::uint32_t p, std::uint32_t m, Residue omega_gen) {
  if (!is_prime(p)) throw Error(Errc::invalid_params, std::to_string(p) + " is not prime");
  if (m == 0 || (p - 1) % m != 0) {
    throw Error(Errc::invalid_params, "group order m=" + std::to_string(m) + " does not divide p-1=" +
                                          std::to_string(p - 1));
  }
  if (omega_gen % p == 0 || multiplicative_order(omega_gen, p) != m) {
    throw Error(Errc::not_faithful, "character not faithful on cyclic group: order of " +
                                        std::to_string(omega_gen) + " mod " + std::to_string(p) + " is not " +
                                        std::to_string(m));
  }
  const Residue m_inv = mod_inverse(m % p, p);
  const Residue omega_inv = mod_inverse(omega_gen, p);
  std::vector<Residue> coeffs(m);
  Residue power = 1;
  for (std::uint32_t k = 0; k < m; ++k) {
    coeffs[k] = mul(m_inv, power, p);
    power = mul(power, omega_inv, p);
  }
  return {p, m, std::move(coeffs)};
}

GroupAlgebraElement convolve(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  if (x.p() != y.p() || x.m() != y.m()) throw Error(Errc::shape_mismatch, "group algebra shape mismatch");
  const std::uint32_t p = x.p();
  const std::uint32_t m = x.m();
  std::vector<Residue> out(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    if (x.coeffs()[i] == 0) continue;
    for (std::uint32_t j = 0; j < m; ++j) {
      const std::uint32_t k = (i + j) % m;
      out[k] = add(out[k], mul(x.coeffs()[i], y.coeffs()[j], p), p);
    }
  }
  return {p, m, std::move(out)};
}

FpSubspace eigenspace(const FpMatrix& rep_gen, Residue lambda) {
  if (!rep_gen.square()) throw Error(Errc::shape_mismatch, "eigenspace of a non-square matrix");
  if (!rep_gen.invertible()) throw Error(Errc::shape_mismatch, "representation matrix is singular mod p");
  const FpMatrix shifted = rep_gen - FpMatrix::identity(rep_gen.p(), rep_gen.rows()).scaled(lambda);
  return FpSubspace::kernel(shifted);
}

FpSubspace apply_idempotent(const GroupAlgebraElement& eps, const FpMatrix& rep_gen) {
  if (rep_gen.p() != eps.p() || !rep_gen.square()) {
    throw Error(Errc::shape_mismatch, "representation must be a square matrix over the same F_p");
  }
  if (rep_gen.pow(eps.m()) != FpMatrix::identity(rep_gen.p(), rep_gen.rows())) {
    throw Error(Errc::not_representation,
                "not a Delta-representation of order m=" + std::to_string(eps.m()) + ": rep^m != I");
  }
  return FpSubspace::image(eps.matrix_of(rep_gen));
}

}  // namespace ramfil
