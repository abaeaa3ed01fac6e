#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ldsspectra/errors.hpp"

namespace ldsspectra {

// Multiset of complex eigenvalues kept in canonical order: descending
// modulus, ties broken by descending real part, then descending imaginary
// part. The order is for display and serialization; distances are
// permutation-invariant.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<std::complex<double>> values);

  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<std::complex<double>>& values() const { return values_; }
  const std::complex<double>& operator[](int i) const { return values_[i]; }

  double spectral_radius() const;
  // True when every non-real value has a conjugate partner within tol.
  bool is_conjugate_closed(double tol = 1e-8) const;
  double min_pairwise_gap() const;

 private:
  std::vector<std::complex<double>> values_;
};

// Minimum over all pairings of the l2 norm of pairwise differences, via
// exact optimal assignment on the cost matrix of squared moduli. Reduces to
// sorted-order pairing for real spectra.
double spectrum_distance(const Spectrum& a, const Spectrum& b);

// Per-eigenvalue first-order sensitivity bracket for the companion matrix of
// the spectrum's characteristic polynomial:
//   lower_j = 1 / prod_{k != j} |l_j - l_k|
//   upper_j = sqrt(n) * max(1,|l_j|)^(n-1) * (1 + rho^2)^((n-1)/2) / prod_j
// with the empty product at n = 1 equal to 1.
struct ConditionBounds {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
};

// Requires all eigenvalues simple: min pairwise gap > tol_gap.
ConditionBounds condition_bounds(const Spectrum& s, double tol_gap = 1e-10);

// Inverse of the Vandermonde matrix V_{ij} = nodes[i]^(j-1) by the
// elementary-symmetric-polynomial formula. Nodes must be pairwise distinct.
Eigen::MatrixXcd vandermonde_inverse(const Eigen::VectorXcd& nodes,
                                     double tol_gap = 1e-10);

namespace detail {

// Min-cost perfect assignment on a square cost matrix (shortest augmenting
// path / Jonker-Volgenant). Returns total cost; col_of_row[i] is i's match.
double min_cost_assignment(const Eigen::MatrixXd& cost,
                           std::vector<int>* col_of_row = nullptr);

}  // namespace detail

}  // namespace ldsspectra
