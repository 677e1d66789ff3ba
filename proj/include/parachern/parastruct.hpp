#pragma once

#include <string>
#include <vector>

#include "parachern/rational.hpp"

namespace parachern {

/// Numerical data of a complete parabolic flag on one divisor component:
/// nondecreasing weights in [-1, 0] and the degrees of the rank-one graded
/// pieces.
struct FlagData {
    int rank = 0;
    std::vector<Rat> weights;
    std::vector<long long> gr_degrees;

    long long total_degree() const;
    void validate() const;
};

/// Trace-free normalization of the weights of one flag: beta(k) = alpha(k) -
/// alpha_tot/r, so the betas sum to zero.
struct NormalizedWeights {
    Rat alpha_tot;
    std::vector<Rat> betas;
};

NormalizedWeights normalize(const FlagData& flag);

/// The permutation matching the two full flags at a crossing point: index k of
/// the flag along `from` meets index sigma(k) of the flag along `to`.
/// Stored 0-based; scenario files use 1-based arrays.
struct CrossingPermutation {
    std::string point;
    std::string from, to;
    std::vector<int> sigma;

    void validate(int rank) const;
};

std::vector<int> inverse_permutation(const std::vector<int>& sigma);
bool is_identity(const std::vector<int>& sigma);

/// +1 if the two rank-2 flags agree at the point (sigma = id), -1 if they are
/// transverse (sigma = transposition).
int tau_sign(const CrossingPermutation& perm);

/// Rank-2 shorthand for a flag: normalized weight beta in [0, 1/2), the degree
/// of the sub line bundle, and the degree of the restricted bundle.
/// deg_delta = deg(quotient) - deg(sub) = total - 2*f.
struct Rank2Flag {
    Rat beta;
    long long f_degree = 0;
    long long total_degree = 0;

    long long deg_delta() const { return total_degree - 2 * f_degree; }
    void validate() const;
};

/// One weight-shift elementary transformation along the component (self
/// intersection d_self). The new normalized weight is 1/2 - beta and the
/// degree offset negates up to d_self: deg_delta' = -deg_delta + d_self.
/// A flag with beta = 0 would land on the excluded value 1/2 and is returned
/// unchanged. theta only fixes the weight window and must lie in (0, 1).
Rank2Flag shift_rank2(const Rank2Flag& flag, const Rat& theta, long long d_self);

/// Applies shift_rank2 exactly when beta > 1/4, so the result always has
/// beta in [0, 1/4].
Rank2Flag normalize_to_quarter(const Rank2Flag& flag, long long d_self);

} // namespace parachern
