// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef KREINLAB_ENSEMBLES_HPP
#define KREINLAB_ENSEMBLES_HPP

#include <cstdint>

#include "kreinlab/krein.hpp"
#include "kreinlab/random.hpp"

namespace kreinlab
{

/// J = U diag(+-1) U^* with random signs and a Haar-like unitary U.
/// The diagonal signs are returned through `signs` when non-null.
Matrix RandomCanonicalSymmetry(Index n, Rng &rng, Matrix *unitary = nullptr,
                               RealVector *signs = nullptr);

struct InstanceOptions
{
  Index dim = 4;
  Index domain_dim = -1;         // -1: whole space
  Index dissipative_rank = -1;   // rank of Im part on C^n; -1: random in [1, dim]
  Index real_eigenvalues = 0;    // engineered real eigenpairs inside the domain
};

/// T = J (H + i P) restricted to a random domain; H Hermitian, P >= 0, so
/// gamma_T is the compression of 2 P.
OperatorWithDomain RandomDissipative(const InstanceOptions &opts, Rng &rng);

/// Fixed instance with P = P_1 + eps P_2 where P_2 is a single direction.
/// Same seed, same base instance for every eps.
OperatorWithDomain EpsilonFamily(Index dim, double eps, std::uint64_t seed = 7);

}  // namespace kreinlab

#endif  // KREINLAB_ENSEMBLES_HPP
