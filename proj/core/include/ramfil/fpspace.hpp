#pragma once

/**
 * @file fpspace.hpp
 * @brief Linear algebra over F_p and the cyclic group algebra F_p[Delta].
 *
 * Vectors are column vectors; a matrix M acts by v -> M v. Subspaces are
 * stored by the reduced row echelon form of a basis, so two FpSubspace
 * values are equal exactly when they describe the same subspace.
 *
 * Delta is always cyclic of order m (m | p-1) with a fixed generator tau;
 * a character omega is given by its value on tau. The projector onto the
 * omega-eigenspace is
 *
 *   eps = m^{-1} * sum_{k<m} omega(tau)^{-k} tau^k
 *
 * and a representation of Delta is given by the matrix of tau.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "ramfil/arith.hpp"

namespace ramfil {

using Residue = std::uint32_t;

bool is_prime(std::uint64_t n);
Residue mod_pow(Residue base, std::uint64_t exponent, std::uint32_t p);
/// Throws Error{division_by_zero} for a == 0 mod p.
Residue mod_inverse(Residue a, std::uint32_t p);
/// Order of a in F_p^x; throws for a == 0 mod p.
std::uint64_t multiplicative_order(Residue a, std::uint32_t p);

class FpMatrix {
 public:
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);
  /// Entries in row-major order, reduced mod p. Throws shape_mismatch when
  /// the entry count is not rows*cols.
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols, std::vector<Residue> entries);

  static FpMatrix identity(std::uint32_t p, std::size_t n);
  static FpMatrix diagonal(std::uint32_t p, const std::vector<Residue>& diag);

  std::uint32_t p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Residue operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Residue v) { entries_[r * cols_ + c] = v % p_; }
  std::span<const Residue> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  const std::vector<Residue>& entries() const { return entries_; }

  FpMatrix transpose() const;
  FpMatrix scaled(Residue s) const;
  FpMatrix pow(std::uint64_t exponent) const;
  std::vector<Residue> apply(std::span<const Residue> v) const;

  std::size_t rank() const;
  bool invertible() const { return square() && rank() == rows_; }
  /// Throws Error{shape_mismatch} when not square or singular.
  FpMatrix inverse() const;

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);
  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::uint32_t p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> entries_;
};

/// Reduced row echelon form with zero rows dropped.
FpMatrix rref(FpMatrix m);

class FpSubspace {
 public:
  static FpSubspace zero(std::uint32_t p, std::size_t ambient_dim);
  static FpSubspace full(std::uint32_t p, std::size_t ambient_dim);
  static FpSubspace span(std::uint32_t p, std::size_t ambient_dim,
                         const std::vector<std::vector<Residue>>& vectors);
  /// Span of the first k standard basis vectors.
  static FpSubspace coordinate(std::uint32_t p, std::size_t ambient_dim, std::size_t k);
  /// {v : M v = 0}
  static FpSubspace kernel(const FpMatrix& m);
  /// {M v : v}
  static FpSubspace image(const FpMatrix& m);

  std::uint32_t p() const { return basis_.p(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const FpMatrix& basis() const { return basis_; }

  bool contains(std::span<const Residue> v) const;
  bool contains(const FpSubspace& other) const;

  friend bool operator==(const FpSubspace&, const FpSubspace&) = default;

 private:
  explicit FpSubspace(FpMatrix basis) : basis_(std::move(basis)) {}
  FpMatrix basis_;
};

/// (p^dim - 1)/(p - 1); 0 when dim == 0.
BigNat count_lines(std::size_t dim, std::uint32_t p);

inline constexpr std::uint64_t kEnumerationLimit = 10'000'000;

/// Calls `visit` once per line of F_p^dim with the line's canonical
/// generator (first nonzero coordinate equal to 1). The span is only valid
/// during the call. Throws Error{enumeration_too_large} when p^dim > 1e7.
void for_each_line(std::uint32_t p, std::size_t dim,
                   const std::function<void(std::span<const Residue>)>& visit);

/// Every line of `ambient`, each exactly once, in canonical form.
std::vector<FpSubspace> enumerate_lines(const FpSubspace& ambient);

class GroupAlgebraElement {
 public:
  /// Throws invalid_params unless coeffs.size() == m and m | p-1.
  GroupAlgebraElement(std::uint32_t p, std::uint32_t m, std::vector<Residue> coeffs);

  static GroupAlgebraElement unit(std::uint32_t p, std::uint32_t m);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  /// Coefficient of tau^k at position k.
  const std::vector<Residue>& coeffs() const { return coeffs_; }

  /// tau * x: coefficient k moves to k+1 (mod m).
  GroupAlgebraElement shifted() const;
  GroupAlgebraElement scaled(Residue s) const;

  /// sum_k coeffs[k] * rep_gen^k
  FpMatrix matrix_of(const FpMatrix& rep_gen) const;

  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

 private:
  std::uint32_t p_;
  std::uint32_t m_;
  std::vector<Residue> coeffs_;
};

/// Projector onto the omega-eigenspace where omega(tau) = omega_gen.
/// Throws not_faithful unless omega_gen has order exactly m, and
/// invalid_params unless m | p-1.
GroupAlgebraElement idempotent(std::uint32_t p, std::uint32_t m, Residue omega_gen);

/// Product in F_p[Z/m]. Throws shape_mismatch on differing (p, m).
GroupAlgebraElement convolve(const GroupAlgebraElement& x, const GroupAlgebraElement& y);

/// ker(rep_gen - lambda I). Throws shape_mismatch for non-square or
/// singular input.
FpSubspace eigenspace(const FpMatrix& rep_gen, Residue lambda);

/// Image of eps acting through rep_gen. Throws not_representation unless
/// rep_gen^m == I.
FpSubspace apply_idempotent(const GroupAlgebraElement& eps, const FpMatrix& rep_gen);

/// Uniformly random invertible n x n matrix (rejection sampling).
template <class URBG>
FpMatrix random_invertible(std::uint32_t p, std::size_t n, URBG& gen) {
  std::uniform_int_distribution<Residue> dist(0, p - 1);
  for (;;) {
    FpMatrix m(p, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.set(r, c, dist(gen));
    if (m.invertible()) return m;
  }
}

/// P D P^{-1} with D diagonal, entries drawn from the m-th roots of unity
/// (powers of `root`, which must have order m). The result satisfies
/// M^m == I. `eigen_counts`, when non-null, receives how often each power
/// root^k appears on the diagonal.
template <class URBG>
FpMatrix random_cyclic_representation(std::uint32_t p, std::uint32_t m, Residue root, std::size_t n,
                                      URBG& gen, std::vector<std::size_t>* eigen_counts = nullptr) {
  std::uniform_int_distribution<std::uint32_t> pick(0, m - 1);
  std::vector<Residue> diag(n);
  if (eigen_counts != nullptr) eigen_counts->assign(m, 0);
  for (auto& d : diag) {
    const std::uint32_t k = pick(gen);
    if (eigen_counts != nullptr) ++(*eigen_counts)[k];
    d = mod_pow(root, k, p);
  }
  const FpMatrix conj = random_invertible(p, n, gen);
  return conj * FpMatrix::diagonal(p, diag) * conj.inverse();
}

}  // namespace ramfil
