#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ldsspectra/errors.hpp"
#include "ldsspectra/spectrum.hpp"

namespace ldsspectra {

// Real monic polynomial z^n + c_1 z^(n-1) + ... + c_n. coeffs() holds
// (c_1 .. c_n); the leading coefficient is implicit.
class MonicPolynomial {
 public:
  explicit MonicPolynomial(Eigen::VectorXd coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()); }
  const Eigen::VectorXd& coeffs() const { return coeffs_; }

  std::complex<double> evaluate(std::complex<double> z) const;
  std::complex<double> derivative_at(std::complex<double> z) const;

  // Vieta expansion of prod (z - r). Imaginary parts must cancel, so the
  // roots have to be conjugate-closed.
  static MonicPolynomial from_roots(
      const std::vector<std::complex<double>>& roots);

 private:
  Eigen::VectorXd coeffs_;
};

// n x n matrix with ones on the subdiagonal and (-c_n, ..., -c_1)^T in the
// last column; its characteristic polynomial is p.
Eigen::MatrixXd companion_matrix(const MonicPolynomial& p);

struct RootOptions {
  int max_qr_iters = 0;             // 0 means 100 * degree
  double tol_root_residual = 1e-8;  // scaled by max(1, |coeffs|_inf)
  double tol_conj = 1e-8;
};

// All n roots with multiplicity. Closed form for n <= 2; otherwise shifted
// QR iteration on the balanced companion matrix plus one Newton polish per
// root. Every returned root r satisfies
// |p(r)| <= tol_root_residual * max(1, |coeffs|_inf).
Spectrum poly_roots(const MonicPolynomial& p, const RootOptions& opts = {});

// z^n - phi_1 z^(n-1) - ... - phi_n: the characteristic polynomial whose
// roots are the system eigenvalues recovered from AR parameters.
MonicPolynomial ar_params_to_char_poly(const Eigen::VectorXd& phi);

// Inverse map: AR parameters of the system whose eigenvalues are `spectrum`.
Eigen::VectorXd char_poly_to_ar_params(const MonicPolynomial& p);

}  // namespace ldsspectra
