#pragma once

#include <optional>
#include <string>

#include <Eigen/Dense>

#include "ldsspectra/errors.hpp"
#include "ldsspectra/rng.hpp"
#include "ldsspectra/spectrum.hpp"

namespace ldsspectra {

// Parameters of the linear system
//   h_t = A h_{t-1} + B x_t + state_noise,
//   y_t = C h_t + D x_t + output_noise,
// with diagonal Gaussian noise of the given standard deviations.
struct LdsParams {
  Eigen::MatrixXd A;  // n x n
  Eigen::MatrixXd B;  // n x k
  Eigen::MatrixXd C;  // m x n
  Eigen::MatrixXd D;  // m x k
  double state_noise_std = 0.0;
  double output_noise_std = 0.0;
  bool stable = false;  // generator promised spectral radius <= 1

  int state_dim() const { return static_cast<int>(A.rows()); }
  int input_dim() const { return static_cast<int>(B.cols()); }
  int output_dim() const { return static_cast<int>(C.rows()); }
  void validate() const;
};

// One multi-channel output sequence; NaN cells mark missing values. The
// exogenous input matrix is present only when inputs were observed.
struct TimeSeries {
  Eigen::MatrixXd outputs;                 // T x m
  std::optional<Eigen::MatrixXd> inputs;   // T x k
  std::string id;
  std::string source;

  int length() const { return static_cast<int>(outputs.rows()); }
  int channels() const { return static_cast<int>(outputs.cols()); }
  bool has_inputs() const { return inputs.has_value(); }
};

// Eigenvalues of a general square real matrix. Internal utility; polynomial
// roots go through poly_roots instead.
Spectrum matrix_spectrum(const Eigen::MatrixXd& a);
double spectral_radius(const Eigen::MatrixXd& a);

// T x k matrix of independent standard Gaussians.
Eigen::MatrixXd gaussian_inputs(int len, int input_dim, Rng& rng);

// Iterates the system from h_0 = 0 over the given observed inputs. The
// inputs are recorded on the returned series.
TimeSeries simulate(const LdsParams& params, const Eigen::MatrixXd& inputs,
                    Rng& rng);
// Same recursion with hidden inputs x_t ~ N(0, I_k); inputs are not recorded.
TimeSeries simulate_hidden(const LdsParams& params, int len, Rng& rng);

struct RandomLdsOptions {
  int max_tries = 1000;
  double state_noise_std = 0.0;
  double output_noise_std = 0.01;
};

// A, B, C with i.i.d. standard Gaussian entries and D = 0; A is resampled
// until its spectral radius is at most 1.
LdsParams random_stable_lds(int n, int m, int k, Rng& rng,
                            const RandomLdsOptions& opts = {});

// Similarity transform A' = P^-1 A P, B' = P^-1 B, C' = C P; D unchanged.
LdsParams change_of_basis(const LdsParams& params, const Eigen::MatrixXd& p,
                          double max_condition = 1e12);

}  // namespace ldsspectra
