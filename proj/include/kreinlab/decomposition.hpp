// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef KREINLAB_DECOMPOSITION_HPP
#define KREINLAB_DECOMPOSITION_HPP

#include "kreinlab/krein.hpp"

namespace kreinlab
{

/// T = S (+) N, orthogonal in the graph inner product <.,.>_T.
struct Splitting
{
  OperatorWithDomain s;
  OperatorWithDomain n;
  /// gamma_T restricted to D_N, on the orthonormal basis of n.Domain().
  Matrix gamma_n_gram;
};

/// Deficiency data of the symmetric part S relative to T.
struct DeficiencyData
{
  Subspace n_i;       // Ker_i (J S^c)
  Subspace range;     // (J M + i) D_T
  Subspace target;    // n_i intersected with range
  Matrix p_i;         // orthoprojector onto target in <.,.> = [., J .]
};

/// S = T restricted to the kernel of gamma_T.
OperatorWithDomain SymmetricPart(const OperatorWithDomain &t);

/// N = T restricted to the <.,.>_T-orthocomplement of D_S in D_T.
OperatorWithDomain DissipativePart(const OperatorWithDomain &t, const OperatorWithDomain &s);

/// Both parts plus the Gram matrix of gamma_N; validates the splitting.
Splitting Split(const OperatorWithDomain &t);

DeficiencyData DeficiencySpace(const OperatorWithDomain &s, const OperatorWithDomain &t);

/// (J T + i)^{-1} (N_i intersected with ran (J T + i)), computed inside D_T.
Subspace DnViaResolvent(const OperatorWithDomain &t, const DeficiencyData &defi);

/// (x, y)_N = gamma_T[x, y] for x, y in D_N.
Complex GammaNInner(const Splitting &split, const Vector &x, const Vector &y);

}  // namespace kreinlab

#endif  // KREINLAB_DECOMPOSITION_HPP
