// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef KREINLAB_COMMON_HPP
#define KREINLAB_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace kreinlab
{

using Complex = std::complex<double>;
using Index = Eigen::Index;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr Complex kI{0.0, 1.0};

// Relative rank tolerance: singular values below tol * sigma_max count as zero.
inline constexpr double kDefaultTol = 1e-10;

// Relative threshold under which an eigenvalue of the Hermitian form matrix is
// treated as an exact zero (kernel of the form). Kept far below kDefaultTol so
// that weakly dissipative directions are not absorbed into the symmetric part.
inline constexpr double kKernelTol = 1e-13;

// Equality of subspaces is decided by gap distance below this value.
inline constexpr double kGapTol = 1e-8;

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error
{
public:
  using Error::Error;
};

class ValidationError : public Error
{
public:
  using Error::Error;
};

class NotDissipative : public Error
{
public:
  using Error::Error;
};

// Raised when a numerically checked postcondition fails.
class InvariantViolation : public Error
{
public:
  using Error::Error;
};

inline void Require(bool condition, const std::string &message)
{
  if (!condition)
  {
    throw DimensionMismatch(message);
  }
}

}  // namespace kreinlab

#endif  // KREINLAB_COMMON_HPP
