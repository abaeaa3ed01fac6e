#include "ldsspectra/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ldsspectra {

namespace {

bool canonical_less(const std::complex<double>& a,
                    const std::complex<double>& b) {
  const double ma = std::abs(a);
  const double mb = std::abs(b);
  if (ma != mb) return ma > mb;
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

}  // namespace

Spectrum::Spectrum(std::vector<std::complex<double>> values)
    : values_(std::move(values)) {
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw InvalidParams("non-finite eigenvalue in spectrum");
    }
  }
  std::sort(values_.begin(), values_.end(), canonical_less);
}

double Spectrum::spectral_radius() const {
  return values_.empty() ? 0.0 : std::abs(values_.front());
}

bool Spectrum::is_conjugate_closed(double tol) const {
  std::vector<bool> used(values_.size(), false);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (used[i]) continue;
    const auto& v = values_[i];
    const double scale = std::max(1.0, std::abs(v));
    if (std::abs(v.imag()) <= tol * scale) continue;
    bool paired = false;
    for (std::size_t j = i + 1; j < values_.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(values_[j] - std::conj(v)) <= tol * scale) {
        used[j] = true;
        paired = true;
        break;
      }
    }
    if (!paired) return false;
  }
  return true;
}

double Spectrum::min_pairwise_gap() const {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < values_.size(); ++i) {
    for (std::size_t j = i + 1; j < values_.size(); ++j) {
      gap = std::min(gap, std::abs(values_[i] - values_[j]));
    }
  }
  return gap;
}

namespace detail {

double min_cost_assignment(const Eigen::MatrixXd& cost,
                           std::vector<int>* col_of_row) {
  const int n = static_cast<int>(cost.rows());
  const double inf = std::numeric_limits<double>::infinity();
  // Shortest-augmenting-path assignment with 1-based potentials; column 0 is
  // the virtual start column.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = 0;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  if (col_of_row) col_of_row->assign(n, -1);
  double total = 0.0;
  for (int j = 1; j <= n; ++j) {
    total += cost(p[j] - 1, j - 1);
    if (col_of_row) (*col_of_row)[p[j] - 1] = j - 1;
  }
  return total;
}

}  // namespace detail

double spectrum_distance(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) {
    throw SpectrumSizeMismatch("spectra have sizes " +
                               std::to_string(a.size()) + " and " +
                               std::to_string(b.size()));
  }
  const int n = a.size();
  if (n == 0) return 0.0;
  Eigen::MatrixXd cost(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cost(i, j) = std::norm(a[i] - b[j]);
    }
  }
  return std::sqrt(std::max(0.0, detail::min_cost_assignment(cost)));
}

ConditionBounds condition_bounds(const Spectrum& s, double tol_gap) {
  const int n = s.size();
  if (n == 0) throw InvalidParams("empty spectrum");
  if (n > 1 && s.min_pairwise_gap() <= tol_gap) {
    throw DegenerateSpectrum("repeated eigenvalue within tol_gap");
  }
  const double rho = s.spectral_radius();
  ConditionBounds out;
  out.lower.resize(n);
  out.upper.resize(n);
  for (int j = 0; j < n; ++j) {
    double prod = 1.0;
    for (int k = 0; k < n; ++k) {
      if (k != j) prod *= std::abs(s[j] - s[k]);
    }
    out.lower(j) = 1.0 / prod;
    out.upper(j) = std::sqrt(static_cast<double>(n)) *
                   std::pow(std::max(1.0, std::abs(s[j])), n - 1) *
                   std::pow(1.0 + rho * rho, 0.5 * (n - 1)) / prod;
  }
  return out;
}

Eigen::MatrixXcd vandermonde_inverse(const Eigen::VectorXcd& nodes,
                                     double tol_gap) {
  const int p = static_cast<int>(nodes.size());
  if (p == 0) throw InvalidParams("empty node list");
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      if (std::abs(nodes(i) - nodes(j)) <= tol_gap) {
        throw DegenerateSpectrum("duplicate Vandermonde nodes");
      }
    }
  }
  Eigen::MatrixXcd inv(p, p);
  std::vector<std::complex<double>> sym(p);
  for (int j = 0; j < p; ++j) {
    // Elementary symmetric polynomials of the nodes excluding nodes[j].
    std::fill(sym.begin(), sym.end(), std::complex<double>(0.0));
    sym[0] = 1.0;
    int count = 0;
    for (int k = 0; k < p; ++k) {
      if (k == j) continue;
      ++count;
      for (int d = count; d >= 1; --d) sym[d] += nodes(k) * sym[d - 1];
    }
    std::complex<double> denom = 1.0;
    for (int k = 0; k < j; ++k) denom *= nodes(j) - nodes(k);
    for (int k = j + 1; k < p; ++k) denom *= nodes(k) - nodes(j);
    for (int i = 0; i < p; ++i) {
      // 1-based formula: (V^-1)_{i,j} = (-1)^(i+j) S_{p-i} / denom.
      const double sign = ((i + 1 + j + 1) % 2 == 0) ? 1.0 : -1.0;
      inv(i, j) = sign * sym[p - (i + 1)] / denom;
    }
  }
  return inv;
}

}  // namespace ldsspectra
