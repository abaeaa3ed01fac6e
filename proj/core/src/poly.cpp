#include "ldsspectra/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Jacobi>

namespace ldsspectra {

namespace {

using Complex = std::complex<double>;

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Parlett-Reinsch balancing with powers of two (exact in floating point).
void balance(Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  bool converged = false;
  while (!converged) {
    converged = true;
    for (int i = 0; i < n; ++i) {
      double col = 0.0, row = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        col += std::abs(a(j, i));
        row += std::abs(a(i, j));
      }
      if (col == 0.0 || row == 0.0) continue;
      const double s = col + row;
      double f = 1.0;
      while (col < row / 2.0) {
        col *= 2.0;
        row /= 2.0;
        f *= 2.0;
      }
      while (col > row * 2.0) {
        col /= 2.0;
        row *= 2.0;
        f /= 2.0;
      }
      if (f != 1.0 && col + row < 0.95 * s) {
        converged = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

// Eigenvalues of a 2x2 complex block, returned with the one closer to d last.
std::pair<Complex, Complex> eig2x2(Complex a, Complex b, Complex c, Complex d) {
  const Complex half_tr = 0.5 * (a + d);
  const Complex det = a * d - b * c;
  const Complex disc = std::sqrt(half_tr * half_tr - det);
  Complex e1 = half_tr + disc;
  Complex e2 = half_tr - disc;
  if (std::abs(e1 - d) < std::abs(e2 - d)) std::swap(e1, e2);
  return {e1, e2};
}

// One explicit single-shift QR sweep on the Hessenberg block [lo, hi].
void qr_sweep(Eigen::MatrixXcd& h, int lo, int hi, Complex shift) {
  Eigen::JacobiRotation<Complex> g;
  g.makeGivens(h(lo, lo) - shift, h(lo + 1, lo));
  h.applyOnTheLeft(lo, lo + 1, g.adjoint());
  h.applyOnTheRight(lo, lo + 1, g);
  for (int i = lo + 1; i < hi; ++i) {
    g.makeGivens(h(i, i - 1), h(i + 1, i - 1));
    h(i + 1, i - 1) = 0.0;
    h.applyOnTheLeft(i, i + 1, g.adjoint());
    h.applyOnTheRight(i, i + 1, g);
  }
}

std::vector<Complex> hessenberg_qr_eigenvalues(Eigen::MatrixXcd h,
                                               int max_iters) {
  const int n = static_cast<int>(h.rows());
  const double norm_scale = std::max(h.norm(), 1e-300);
  std::vector<Complex> roots;
  roots.reserve(n);

  auto negligible = [&](int i) {
    const double bound =
        kEps * (std::abs(h(i - 1, i - 1)) + std::abs(h(i, i)));
    return std::abs(h(i, i - 1)) <= std::max(bound, kEps * norm_scale * 1e-3);
  };

  int hi = n - 1;
  int iters = 0;
  int since_deflation = 0;
  while (hi >= 0) {
    if (hi == 0) {
      roots.push_back(h(0, 0));
      break;
    }
    int lo = hi;
    while (lo > 0 && !negligible(lo)) --lo;
    if (lo > 0) h(lo, lo - 1) = 0.0;
    if (lo == hi) {
      roots.push_back(h(hi, hi));
      --hi;
      since_deflation = 0;
      continue;
    }
    if (lo == hi - 1) {
      auto [e1, e2] = eig2x2(h(lo, lo), h(lo, hi), h(hi, lo), h(hi, hi));
      roots.push_back(e1);
      roots.push_back(e2);
      hi -= 2;
      since_deflation = 0;
      continue;
    }
    if (++iters > max_iters) {
      // Carry whatever the iteration has produced so far as partial results.
      for (int i = hi; i >= 0; --i) roots.push_back(h(i, i));
      throw RootSolverFailure("QR iteration did not converge within " +
                              std::to_string(max_iters) + " sweeps");
    }
    Complex shift;
    if (++since_deflation % 15 == 0) {
      // Exceptional shift to break rare cycling.
      shift = h(hi, hi) + 1.5 * std::abs(h(hi, hi - 1));
    } else {
      shift = eig2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1),
                     h(hi, hi))
                  .second;
    }
    qr_sweep(h, lo, hi, shift);
  }
  return roots;
}

void newton_polish(const MonicPolynomial& p, std::vector<Complex>& roots) {
  for (auto& r : roots) {
    const Complex f = p.evaluate(r);
    const Complex fp = p.derivative_at(r);
    if (std::abs(fp) <= 1e-300) continue;
    const Complex candidate = r - f / fp;
    if (std::abs(p.evaluate(candidate)) < std::abs(f)) r = candidate;
  }
}

// Snap near-real roots to the real axis and average near-conjugate pairs so
// real-coefficient inputs yield exactly conjugate-closed spectra.
void symmetrize_conjugates(std::vector<Complex>& roots, double tol_conj) {
  std::vector<bool> done(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double scale = std::max(1.0, std::abs(roots[i]));
    if (std::abs(roots[i].imag()) <= tol_conj * scale) {
      roots[i] = Complex(roots[i].real(), 0.0);
      done[i] = true;
    }
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (done[i]) continue;
    const double scale = std::max(1.0, std::abs(roots[i]));
    std::size_t best = roots.size();
    double best_err = 2.0 * tol_conj * scale;
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (done[j]) continue;
      const double err = std::abs(roots[j] - std::conj(roots[i]));
      if (err < best_err) {
        best_err = err;
        best = j;
      }
    }
    if (best < roots.size()) {
      const Complex mean = 0.5 * (roots[i] + std::conj(roots[best]));
      roots[i] = mean;
      roots[best] = std::conj(mean);
      done[i] = done[best] = true;
    }
  }
}

}  // namespace

MonicPolynomial::MonicPolynomial(Eigen::VectorXd coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() == 0) {
    throw InvalidDegree("monic polynomial needs degree >= 1");
  }
  if (!coeffs_.allFinite()) {
    throw InvalidParams("non-finite polynomial coefficient");
  }
}

std::complex<double> MonicPolynomial::evaluate(std::complex<double> z) const {
  Complex acc = 1.0;
  for (int i = 0; i < coeffs_.size(); ++i) acc = acc * z + coeffs_(i);
  return acc;
}

std::complex<double> MonicPolynomial::derivative_at(
    std::complex<double> z) const {
  const int n = degree();
  Complex acc = static_cast<double>(n);
  for (int i = 0; i < n - 1; ++i) {
    acc = acc * z + static_cast<double>(n - 1 - i) * coeffs_(i);
  }
  return acc;
}

MonicPolynomial MonicPolynomial::from_roots(
    const std::vector<std::complex<double>>& roots) {
  const int n = static_cast<int>(roots.size());
  if (n == 0) throw InvalidDegree("need at least one root");
  std::vector<Complex> c(n + 1, 0.0);
  c[0] = 1.0;
  for (int k = 0; k < n; ++k) {
    for (int d = k + 1; d >= 1; --d) c[d] = c[d] - roots[k] * c[d - 1];
  }
  Eigen::VectorXd out(n);
  double scale = 1.0;
  for (int i = 1; i <= n; ++i) scale = std::max(scale, std::abs(c[i]));
  for (int i = 1; i <= n; ++i) {
    if (std::abs(c[i].imag()) > 1e-8 * scale) {
      throw InvalidParams("roots are not conjugate-closed");
    }
    out(i - 1) = c[i].real();
  }
  return MonicPolynomial(out);
}

Eigen::MatrixXd companion_matrix(const MonicPolynomial& p) {
  const int n = p.degree();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  // Last column is (-c_n, -c_{n-1}, ..., -c_1)^T.
  for (int i = 0; i < n; ++i) m(i, n - 1) = -p.coeffs()(n - 1 - i);
  return m;
}

Spectrum poly_roots(const MonicPolynomial& p, const RootOptions& opts) {
  const int n = p.degree();
  std::vector<Complex> roots;
  if (n == 1) {
    roots.push_back(Complex(-p.coeffs()(0), 0.0));
  } else if (n == 2) {
    const double b = p.coeffs()(0);
    const double c = p.coeffs()(1);
    const double disc = b * b - 4.0 * c;
    if (disc >= 0.0) {
      const double s = std::sqrt(disc);
      // Avoid cancellation: compute the larger-magnitude root first.
      const double q = -0.5 * (b + std::copysign(s, b));
      if (q != 0.0) {
        roots.push_back(Complex(q, 0.0));
        roots.push_back(Complex(c / q, 0.0));
      } else {
        roots.push_back(Complex(0.5 * s, 0.0));
        roots.push_back(Complex(-0.5 * s, 0.0));
      }
    } else {
      const double im = 0.5 * std::sqrt(-disc);
      roots.push_back(Complex(-0.5 * b, im));
      roots.push_back(Complex(-0.5 * b, -im));
    }
  } else {
    Eigen::MatrixXd c = companion_matrix(p);
    balance(c);
    const int max_iters = opts.max_qr_iters > 0 ? opts.max_qr_iters : 100 * n;
    roots = hessenberg_qr_eigenvalues(c.cast<Complex>(), max_iters);
    newton_polish(p, roots);
    symmetrize_conjugates(roots, opts.tol_conj);
  }

  const double residual_scale =
      std::max(1.0, p.coeffs().cwiseAbs().maxCoeff());
  for (const auto& r : roots) {
    if (std::abs(p.evaluate(r)) > opts.tol_root_residual * residual_scale) {
      throw RootSolverFailure("root residual above tolerance");
    }
  }
  return Spectrum(std::move(roots));
}

MonicPolynomial ar_params_to_char_poly(const Eigen::VectorXd& phi) {
  if (!phi.allFinite()) throw InvalidParams("non-finite AR parameter");
  return MonicPolynomial(-phi);
}

Eigen::VectorXd char_poly_to_ar_params(const MonicPolynomial& p) {
  return -p.coeffs();
}

}  // namespace ldsspectra
