// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef KREINLAB_BOUNDARY_HPP
#define KREINLAB_BOUNDARY_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "kreinlab/decomposition.hpp"

namespace kreinlab
{

/// Ordinary boundary triple (H', Gamma_0, Gamma_1) for S^c.
///
/// The boundary map is stored as one (2m x 2n) matrix `gamma_s` acting on
/// pairs (x, x') in C^n (+) C^n; only its restriction to `s_adjoint` carries
/// meaning. Rows [0, m) give Gamma_0 and rows [m, 2m) give Gamma_1, both in an
/// orthonormal basis of H' = C^m.
struct BoundaryTriple
{
  Index base_dim = 0;
  Index boundary_dim = 0;
  Matrix gamma_s;
  LinearRelation s_adjoint;
  OperatorWithDomain s;
  double green_residual = 0.0;  // sampled (bvs3) residual on S^c

  auto Gamma0() const { return gamma_s.topRows(boundary_dim); }
  auto Gamma1() const { return gamma_s.bottomRows(boundary_dim); }
  /// Graph of Gamma over S^c; requires boundary_dim > 0.
  LinearRelation Relation() const;
};

/// Builds a triple for S^c from the von Neumann decomposition of (J S)^*.
/// Verifies the Green identity on S^c (relative residual <= 1e-10) and that
/// Gamma vanishes exactly on the graph of S.
BoundaryTriple ConstructObt(const OperatorWithDomain &s, std::uint64_t seed = 0);

/// (Gamma_0, Gamma_1) -> (Gamma_1, -Gamma_0); still a boundary triple.
BoundaryTriple SwapBoundaryMaps(const BoundaryTriple &triple);

/// L_T = Gamma_s(graph T) with its Gram matrix.
struct LTSpace
{
  Matrix basis;  // orthonormal columns in C^{2m}
  Matrix gram;
  Index Dim() const { return basis.cols(); }
};

/// Boundary maps on T: gamma0, gamma1 act on coordinates in T's domain basis.
struct RestrictedBoundary
{
  Matrix gamma0;
  Matrix gamma1;
  LTSpace lt;
};

RestrictedBoundary RestrictToT(const BoundaryTriple &triple, const OperatorWithDomain &t);

/// Compression of J'_G = [[0, -i], [i, 0]] to the span of orthonormal columns.
Matrix LtGram(const Matrix &lt_basis);
/// Matrix of [., .]'_G on C^{2m}.
Matrix BoundaryMetric(Index boundary_dim);

enum class Provenance
{
  kProjection,
  kResolvent
};
std::string_view ToString(Provenance p);

/// Boundary pair (E, Gamma_01). E is carried by `e_basis` (ambient vectors
/// spanning E) with inner product matrix `e_gram`; gamma01 maps coordinates in
/// T's domain basis to coordinates in e_basis.
struct BoundaryPair
{
  Matrix e_basis;
  Matrix e_gram;
  Matrix gamma01;
  Provenance provenance = Provenance::kProjection;

  Index EDim() const { return e_basis.cols(); }
  /// Basis independent form: domain coordinates -> C^n.
  Matrix AmbientMap() const { return e_basis * gamma01; }
  /// Same pair in an e_gram-orthonormal basis (Gram = identity).
  BoundaryPair Orthonormalized() const;
};

BoundaryPair Gamma01Projection(const OperatorWithDomain &t, const Splitting &split);
BoundaryPair Gamma01Resolvent(const OperatorWithDomain &t, const DeficiencyData &defi);
/// Gamma'_01 = V Gamma_01 for a unitary V of the orthonormalized E.
BoundaryPair TransformPair(const BoundaryPair &pair, const Matrix &unitary);

/// Relative distance between the ambient maps of two pairs.
double PairGap(const BoundaryPair &a, const BoundaryPair &b);

/// max |([x,Ty] - [Tx,y]) - i (G01 x, G01 y)_E| / (||x||_T ||y||_T) over samples.
double GreenResidualPair(const BoundaryPair &pair, const OperatorWithDomain &t, int samples,
                         std::uint64_t seed = 0);
/// Same identity with <G0 x, G1 y>' - <G1 x, G0 y>' on the right (Green identity on T).
double GreenResidualBoundary(const RestrictedBoundary &rb, const OperatorWithDomain &t, int samples,
                             std::uint64_t seed = 0);
/// Isometry of Gamma on S^c: |[x,y]_G - [G x, G y]'_G| normalized.
double IsometryResidual(const BoundaryTriple &triple, int samples, std::uint64_t seed = 0);

/// The unique x in D_N with Gamma_s(x, T x) = value. Throws if value is not in L_T.
Vector PhiMap(const BoundaryTriple &triple, const Splitting &split, const Vector &value);

/// |(phi u, phi v)_N - [u, v]'_G| / (||u|| ||v||) for random u, v in L_T.
double PhiIsometryResidual(const BoundaryTriple &triple, const Splitting &split,
                           const RestrictedBoundary &rb, int samples, std::uint64_t seed = 0);

struct RealEigenvalueReport
{
  std::vector<double> t_real;          // distinct real eigenvalues of T
  std::vector<double> s_real;          // distinct real eigenvalues of S
  std::vector<Complex> t_eigenvalues;  // all distinct eigenvalues of T
  double max_value_mismatch = 0.0;
  double max_eigenspace_gap = 0.0;
  double max_identity_residual = 0.0;  // |2 Im(l)[x,x] - ||G01 x||_E^2| / ||x||_T^2
  bool pass = true;
};

/// Real eigenvalues of T versus those of S, with eigenspaces; optional pair
/// for the identity 2 Im(l) [x, x] = ||Gamma_01 x||^2.
RealEigenvalueReport RealEigenvalueCheck(const OperatorWithDomain &t, const OperatorWithDomain &s,
                                         const BoundaryPair *pair = nullptr);

}  // namespace kreinlab

#endif  // KREINLAB_BOUNDARY_HPP
