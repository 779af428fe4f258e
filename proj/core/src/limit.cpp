#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "qdrazin/drazin.hpp"
#include "qdrazin/errors.hpp"

// The only floating-point code in the library.

namespace qdrazin {
namespace {

using cd = std::complex<double>;

struct DenseComplex {
  std::size_t rows;
  std::size_t cols;
  std::vector<cd> data;

  cd& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const cd& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

DenseComplex embed(const QMatrix& a) {
  DenseComplex out{2 * a.rows(), 2 * a.cols(), std::vector<cd>(4 * a.rows() * a.cols())};
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      const Quaternion& q = a.at_unchecked(i, j);
      const double q0 = q[0].to_double();
      const double q1 = q[1].to_double();
      const double q2 = q[2].to_double();
      const double q3 = q[3].to_double();
      const std::size_t r = 2 * (i - 1);
      const std::size_t c = 2 * (j - 1);
      out(r, c) = {q0, q1};
      out(r, c + 1) = {q2, q3};
      out(r + 1, c) = {-q2, q3};
      out(r + 1, c + 1) = {q0, -q1};
    }
  }
  return out;
}

DenseComplex transpose(const DenseComplex& m) {
  DenseComplex out{m.cols, m.rows, std::vector<cd>(m.data.size())};
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) out(c, r) = m(r, c);
  }
  return out;
}

// Solves m * x = rhs by Gaussian elimination with partial pivoting.
DenseComplex solve(DenseComplex m, DenseComplex rhs) {
  const std::size_t n = m.rows;
  double norm = 0;
  for (const cd& z : m.data) norm = std::max(norm, std::abs(z));
  const double tiny = 1e-14 * (norm > 0 ? norm : 1.0);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(m(r, c)) > std::abs(m(pivot, c))) pivot = r;
    }
    if (std::abs(m(pivot, c)) <= tiny) {
      throw NumericalFailure("shifted matrix is numerically singular");
    }
    if (pivot != c) {
      for (std::size_t t = 0; t < n; ++t) std::swap(m(pivot, t), m(c, t));
      for (std::size_t t = 0; t < rhs.cols; ++t) std::swap(rhs(pivot, t), rhs(c, t));
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      const cd factor = m(r, c) / m(c, c);
      if (factor == cd{}) continue;
      for (std::size_t t = c; t < n; ++t) m(r, t) -= factor * m(c, t);
      for (std::size_t t = 0; t < rhs.cols; ++t) rhs(r, t) -= factor * rhs(c, t);
    }
  }
  for (std::size_t c = n; c-- > 0;) {
    for (std::size_t t = 0; t < rhs.cols; ++t) {
      cd acc = rhs(c, t);
      for (std::size_t s = c + 1; s < n; ++s) acc -= m(c, s) * rhs(s, t);
      rhs(c, t) = acc / m(c, c);
    }
  }
  return rhs;
}

// Largest quaternion modulus among the 2x2 blocks of a - b.
double max_block_distance(const DenseComplex& a, const DenseComplex& b) {
  double out = 0;
  for (std::size_t r = 0; r < a.rows; r += 2) {
    for (std::size_t c = 0; c < a.cols; c += 2) {
      const cd z = a(r, c) - b(r, c);
      const cd w = a(r, c + 1) - b(r, c + 1);
      out = std::max(out, std::sqrt(std::norm(z) + std::norm(w)));
    }
  }
  return out;
}

}  // namespace

std::vector<LimitSample> limit_check(const QMatrix& a, std::span<const double> lambdas) {
  const DrazinFactors f = drazin_factors(a);
  const QMatrix exact = drazin_inverse(a).inverse;

  const DenseComplex target = embed(exact);
  const DenseComplex zero{target.rows, target.cols, std::vector<cd>(target.data.size())};
  const double scale = 1.0 + max_block_distance(target, zero);
  const DenseComplex power_k = embed(f.power_k);
  const DenseComplex power_k1 = embed(f.power_k1);

  std::vector<LimitSample> out;
  out.reserve(lambdas.size());
  for (double lambda : lambdas) {
    if (!(lambda > 0)) throw NumericalFailure("lambda must be positive");
    DenseComplex shifted = power_k1;
    for (std::size_t d = 0; d < shifted.rows; ++d) shifted(d, d) += lambda;

    const DenseComplex left = solve(shifted, power_k);
    // X M = P  <=>  M^T X^T = P^T.
    const DenseComplex right = transpose(solve(transpose(shifted), transpose(power_k)));

    out.push_back({lambda, max_block_distance(left, target), max_block_distance(right, target),
                   scale});
  }
  return out;
}

bool residuals_decreasing(std::span<const LimitSample> samples, bool strict) {
  for (std::size_t t = 1; t < samples.size(); ++t) {
    const double prev = samples[t - 1].residual();
    const double cur = samples[t].residual();
    if (strict ? !(cur < prev) : !(cur <= prev)) return false;
  }
  return true;
}

}  // namespace qdrazin
