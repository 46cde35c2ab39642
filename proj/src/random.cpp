// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "kreinlab/random.hpp"

#include <cmath>

namespace kreinlab
{

Matrix RandomGaussian(Index rows, Index cols, Rng &rng)
{
  std::normal_distribution<double> normal;
  Matrix out(rows, cols);
  for (Index j = 0; j < cols; ++j)
  {
    for (Index i = 0; i < rows; ++i)
    {
      const double re = normal(rng);
      const double im = normal(rng);
      out(i, j) = Complex(re, im);
    }
  }
  return out;
}

Vector RandomGaussianVector(Index n, Rng &rng)
{
  return RandomGaussian(n, 1, rng).col(0);
}

Matrix RandomUnitary(Index n, Rng &rng)
{
  const Matrix g = RandomGaussian(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < n; ++k)
  {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0)
    {
      q.col(k) *= r(k, k) / mag;
    }
  }
  return q;
}

}  // namespace kreinlab
