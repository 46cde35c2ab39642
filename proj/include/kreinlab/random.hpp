// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef KREINLAB_RANDOM_HPP
#define KREINLAB_RANDOM_HPP

#include <cstdint>
#include <random>

#include "kreinlab/common.hpp"

namespace kreinlab
{

using Rng = std::mt19937_64;

/// Entries with independent standard normal real and imaginary parts.
Matrix RandomGaussian(Index rows, Index cols, Rng &rng);
Vector RandomGaussianVector(Index n, Rng &rng);

/// Haar-distributed unitary (QR of a Gaussian matrix with phase fix).
Matrix RandomUnitary(Index n, Rng &rng);

}  // namespace kreinlab

#endif  // KREINLAB_RANDOM_HPP
