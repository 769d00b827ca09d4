// Copyright 2026 The qdsqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only reference computations, written independently of the library's
// projection code: explicit 4x4 matrices, Kronecker products and binomial
// tails.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

namespace qdsqc::testing {

using Cplx = std::complex<double>;
using Vec4 = std::array<Cplx, 4>;
using Mat2 = std::array<std::array<double, 2>, 2>;
using Mat4 = std::array<std::array<double, 4>, 4>;

// |v><v| for v = cos(a)|0> + sin(a)|1> (outcome 0) or its orthogonal partner.
inline Mat2 projector(double angle_deg, int outcome) {
  const double a = angle_deg * std::numbers::pi / 180.0 + (outcome == 1 ? std::numbers::pi / 2 : 0.0);
  const double c = std::cos(a), s = std::sin(a);
  return {{{c * c, c * s}, {s * c, s * s}}};
}

inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
  return out;
}

inline double expectation(const Mat4& m, const Vec4& psi) {
  Cplx acc{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) acc += std::conj(psi[r]) * m[r][c] * psi[c];
  return acc.real();
}

// P(b1, b2) = <psi| P_b1 (x) P_b2 |psi>.
inline std::array<double, 4> brute_joint(const Vec4& psi, double angle1, double angle2) {
  std::array<double, 4> p{};
  for (int b1 = 0; b1 < 2; ++b1)
    for (int b2 = 0; b2 < 2; ++b2)
      p[2 * b1 + b2] = expectation(kron(projector(angle1, b1), projector(angle2, b2)), psi);
  return p;
}

// D/D mismatch from the |+->, |-+> coefficient (alpha - beta)/2 of the
// alpha|00> + beta|11> expansion in the diagonal basis.
inline double dd_mismatch_from_expansion(Cplx alpha, Cplx beta) {
  return 2.0 * std::norm((alpha - beta) / 2.0);
}

inline Mat2 matmul(const Mat2& a, const Mat2& b) {
  Mat2 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline double apply_norm(const Mat4& m, const Vec4& psi) {
  double n2 = 0.0;
  for (int r = 0; r < 4; ++r) {
    Cplx acc{};
    for (int c = 0; c < 4; ++c) acc += m[r][c] * psi[c];
    n2 += std::norm(acc);
  }
  return n2;
}

// P(Alice != Bob) when Eve first measures qubit 2 along eve_angle and both
// parties then measure along party_angle: sum over Eve outcome e and
// b1 != b2 of || (P_b1 (x) P_b2 E_e) psi ||^2.
inline double brute_attack_mismatch(const Vec4& psi, double eve_angle, double party_angle) {
  double total = 0.0;
  for (int e = 0; e < 2; ++e)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int b2 = 0; b2 < 2; ++b2) {
        if (b1 == b2) continue;
        const Mat2 bob = matmul(projector(party_angle, b2), projector(eve_angle, e));
        total += apply_norm(kron(projector(party_angle, b1), bob), psi);
      }
  return total;
}

// Binomial standard error of a rate p estimated from n trials.
inline double binomial_sigma(double p, double n) { return std::sqrt(p * (1.0 - p) / n); }

// P(X <= k) for X ~ Binomial(n, p), summed in log space.
inline double binomial_cdf(int k, int n, double p) {
  double total = 0.0;
  for (int i = 0; i <= k; ++i) {
    const double log_term = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0) +
                            i * std::log(p) + (n - i) * std::log1p(-p);
    total += std::exp(log_term);
  }
  return total;
}

}  // namespace qdsqc::testing
