#include "parachern/parastruct.hpp"

#include <numeric>
#include <set>

#include "parachern/errors.hpp"

namespace parachern {

long long FlagData::total_degree() const {
    long long t = 0;
    for (long long d : gr_degrees) t += d;
    return t;
}

void FlagData::validate() const {
    if (rank < 1) throw DataError("flag rank must be >= 1");
    if (weights.size() != static_cast<std::size_t>(rank))
        throw DataError("flag must carry exactly rank weights");
    if (gr_degrees.size() != static_cast<std::size_t>(rank))
        throw DataError("flag must carry exactly rank graded degrees");
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (weights[k] < -1 || weights[k] > 0)
            throw DataError("parabolic weight out of range [-1,0]: " + rat_to_string(weights[k]));
        if (k > 0 && weights[k] < weights[k - 1])
            throw DataError("parabolic weights must be nondecreasing");
    }
}

NormalizedWeights normalize(const FlagData& flag) {
    flag.validate();
    NormalizedWeights out;
    out.alpha_tot = 0;
    for (const auto& a : flag.weights) out.alpha_tot += a;
    const Rat mean = out.alpha_tot / flag.rank;
    out.betas.reserve(flag.weights.size());
    for (const auto& a : flag.weights) out.betas.push_back(a - mean);
    return out;
}

void CrossingPermutation::validate(int rank) const {
    if (sigma.size() != static_cast<std::size_t>(rank))
        throw DataError("permutation at " + point + " has wrong size for rank");
    std::set<int> seen;
    for (int v : sigma) {
        if (v < 0 || v >= rank) throw DataError("permutation at " + point + " has out-of-range image");
        if (!seen.insert(v).second) throw DataError("permutation at " + point + " is not a bijection");
    }
}

std::vector<int> inverse_permutation(const std::vector<int>& sigma) {
    std::vector<int> inv(sigma.size(), 0);
    for (std::size_t k = 0; k < sigma.size(); ++k) inv[sigma[k]] = static_cast<int>(k);
    return inv;
}

bool is_identity(const std::vector<int>& sigma) {
    for (std::size_t k = 0; k < sigma.size(); ++k)
        if (sigma[k] != static_cast<int>(k)) return false;
    return true;
}

int tau_sign(const CrossingPermutation& perm) {
    if (perm.sigma.size() != 2)
        throw RankError("tau sign is defined for rank 2 only");
    perm.validate(2);
    return is_identity(perm.sigma) ? +1 : -1;
}

void Rank2Flag::validate() const {
    if (beta < 0 || beta >= rat(1, 2))
        throw DataError("rank-2 normalized weight must lie in [0, 1/2): " + rat_to_string(beta));
}

Rank2Flag shift_rank2(const Rank2Flag& flag, const Rat& theta, long long d_self) {
    flag.validate();
    if (theta <= 0 || theta >= 1)
        throw DataError("shift parameter must lie in (0, 1)");
    const Rat shifted = rat(1, 2) - flag.beta;
    if (shifted >= rat(1, 2)) return flag; // beta = 0: shift leaves the range, keep the original
    Rank2Flag out;
    out.beta = shifted;
    // The sub of the shifted flag is the twisted quotient of the old one.
    out.total_degree = flag.total_degree - d_self;
    out.f_degree = (flag.total_degree - flag.f_degree) - d_self;
    return out;
}

Rank2Flag normalize_to_quarter(const Rank2Flag& flag, long long d_self) {
    flag.validate();
    if (flag.beta <= rat(1, 4)) return flag;
    return shift_rank2(flag, rat(1, 2), d_self);
}

} // namespace parachern
