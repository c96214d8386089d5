#pragma once

// Worked examples of frames and biframes, with the outcome each should produce.
//
// Families indexed by k = 1, 2, ... on an infinite orthonormal basis are cut
// off at a finite dimension n (default 64). Diagonal examples keep their
// structure under truncation, so the truncated optimal bounds are known in
// closed form and approach the stated ones as n grows.

#include <functional>
#include <string>
#include <vector>

#include "biframe/biframes.hpp"
#include "biframe/frames.hpp"
#include "biframe/linalg.hpp"

namespace biframe::fixtures {

inline constexpr Index kDefaultTruncation = 64;

/// {c(k) e_k}, k = 1..n.
VectorFamily scaled_basis(Field field, Index n, const std::function<double(Index)>& c);

/// S = [[1,5],[3,-2]]: invertible, symmetric part indefinite.
FamilyPair pair_frame_not_biframe();
/// Dimension 2m. Odd slot j: (e_j, (j+1) e_j); even slot: (j e_j, e_j / (j-1)).
FamilyPair non_bessel_biframe(Index m);
/// f_k = e_k / k, g_{2j} = e_j / j, other g_k = 0. S is nilpotent.
FamilyPair bessel_pair_not_biframe(Index n);
/// {-e_1/2, e_1/2, e_2, ..}, {e_1, e_1, e_2, ..}; n + 1 vectors.
FamilyPair frames_not_biframe(Index n);
/// Complex: E and its cyclic shift {e_2, .., e_n, e_1}.
FamilyPair shifted_basis_pair(Index n);
/// E and E with e_1, e_2 swapped.
FamilyPair permuted_basis_pair(Index n);
/// E and {(1,2),(3,8)}: S = [[1,3],[2,8]] is positive but not symmetric.
FamilyPair real_positive_not_symmetric();
/// f = e_k three times each; g = ((k+1)/k) e_k, e_1, -e_1. 3n vectors.
FamilyPair frame_with_non_frame(Index n);
/// f = e_k (k odd), e_k / k (k even); g = e_k (k odd), k e_k (k even).
FamilyPair bessel_with_non_bessel(Index n);
/// ({k e_k}, {e_k / k}).
FamilyPair weighted_parseval(Index n);
/// Standard basis of R^2 and {(3,-1),(-1,2)}.
FamilyPair member_of_standard_class();
/// {(3,-1),(-1,2)} and {(0,1/5),(-1,13/5)}.
FamilyPair one_b_riesz_biframe();
/// {(0,1/5),(-1,13/5)}.
VectorFamily non_member_partner();
/// {(3,1),(1,1)} and {(2,-1),(-1,1)}: each in the standard class, together not a biframe.
FamilyPair two_b_riesz_not_biframe();
/// {(-1,2),(1,0)}.
VectorFamily small_riesz_basis();
/// {(a, sqrt(1-a^2)), (sqrt(1-a^2), -a)} with a = -sqrt(2/5).
VectorFamily reflected_basis();
/// {(0,1),(1,1)}.
VectorFamily primed_overlap_family();

struct NamedPair {
  std::string name;
  VectorFamily f;
  VectorFamily g;
};

/// Every pair above in dimension 2 or 3.
std::vector<NamedPair> small_pairs();

struct FixtureResult {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass;
};

struct Outcome {
  std::string observed;
  bool pass;
};

struct Fixture {
  std::string name;
  std::string expected;
  bool truncated;
  std::function<Outcome(Index n, const Tolerances& tol)> run;
};

/// Fixed order; results are reported in this order.
const std::vector<Fixture>& corpus();

/// Runs every row. `n` is the truncation used by truncated rows.
std::vector<FixtureResult> run_corpus(Index n, const Tolerances& tol);

}  // namespace biframe::fixtures
