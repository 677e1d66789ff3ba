#pragma once

#include <map>
#include <string>
#include <vector>

#include "parachern/rational.hpp"

namespace parachern {

/// Splitting type of a bundle restricted to an exceptional line: the sorted
/// twists m_1 < ... < m_a with positive multiplicities. mu = m_a - m_1; the
/// type is pure exactly when there is a single part.
struct SplittingType {
    struct Part {
        long long m = 0;
        int mult = 0;
    };
    std::vector<Part> parts;

    static SplittingType rank2(long long m1, long long m2);

    int rank() const;
    long long degree() const;
    long long min() const;
    long long max() const;
    long long mu() const { return max() - min(); }
    bool pure() const { return parts.size() == 1; }

    void validate() const;
    std::string str() const;

    friend bool operator==(const SplittingType& a, const SplittingType& b);
};

/// Chern character of the twisted structure sheaf of the exceptional line,
/// the degree-m line bundle pushed to the surface: ch1 = [P], ch2 = m + 1/2.
/// Derived from 0 -> O(-(m+1)P) -> O(-mP) -> O_P(-mP) -> 0 with P^2 = -1.
struct ChExceptional {
    long long a = 0;
    Rat ch2;
};
ChExceptional ch_exceptional_twist(long long m);

/// One elementary transformation along the minimal part of a non-pure type:
/// the Chern data drops by (r1 [P], (m1 + 1/2) r1) and the new type is pinned
/// by degree, min/max bounds and a strict mu decrease.
struct StepConstraints {
    long long degree = 0; // deg(s') = deg(s) + r1
    long long min_lb = 0; // min(s') >= min(m1 + 1, m2)
    long long max_ub = 0; // max(s') <= max(m1 + 1, m_a)
    long long mu_ub = 0;  // mu(s') <= mu(s) - 1
};
struct ElementaryStep {
    long long a_delta = 0; // change of the [P] coefficient of ch1 (= -r1)
    Rat ch2_delta;         // change of ch2 (= -(m1 + 1/2) r1)
    StepConstraints next;
};
ElementaryStep elementary_step(const SplittingType& s);

/// All rank-2 types satisfying the constraints emitted for s (the possible
/// restrictions of the transformed bundle).
std::vector<SplittingType> rank2_step_results(const SplittingType& s);

/// Exact drop of the local discriminant under one elementary transformation:
/// (1/r) * sum_{i>=2} (m_i - m_1 - 1/2) r_1 r_i, positive for non-pure types.
Rat delta_vb_loc_drop(const SplittingType& s);

/// Chern data of an extension localized at one exceptional divisor: ch1_loc =
/// a [P] (so ch1_loc^2 = -a^2) and the scalar ch2_loc.
struct LocalChernData {
    std::string point;
    long long a = 0;
    Rat ch2_loc;
};

/// A chain of elementary transformations from a pure bundle up to the
/// extension E, recorded through the strictly increasing mu values of the
/// intermediate restrictions. Rank-2 chains force odd mu increments, so
/// mu_j == j (mod 2).
struct ChainRecord {
    std::string point;
    std::vector<long long> mu_seq;
    LocalChernData ch;     // accumulated ch data relative to the plain pullback
    Rat delta_vb_loc;      // rank 2: (1/2) sum (mu_j - 1/2)

    int g() const { return static_cast<int>(mu_seq.size()); }
    long long mu() const { return mu_seq.empty() ? 0 : mu_seq.back(); }
};

/// Rejects mu chains that no sequence of rank-2 elementary transformations can
/// realize: entries must be positive, strictly increasing by odd amounts.
void validate_mu_chain(const std::vector<long long>& mu_seq);

/// Builds the chain record for a mu sequence in the gauge where the pure
/// endpoint is the plain pullback (restriction degree 0).
ChainRecord chain_from_mu_seq(const std::string& point, const std::vector<long long>& mu_seq);

/// All rank-2 chains with final mu at most mu_max, ordered lexicographically
/// by mu sequence; includes the empty chain.
std::vector<ChainRecord> enumerate_chains(const std::string& point, long long mu_max);

/// Chains reducing a concrete restriction type to pure form. Rank 2
/// enumerates every constraint-satisfying chain in the gauge of s; higher
/// ranks take the single greedy chain (split-as-expected at each step) and
/// report the accumulated discriminant drops.
std::vector<ChainRecord> reduce_to_pure(const std::string& point, const SplittingType& s);

/// Local filtration-degree bookkeeping along a rank-2 chain. Per step the
/// restriction degree along each incident component gains one, landing on the
/// quotient line (bit 1) or the sub line (bit 0), so the local degree offset
/// deg_delta_loc moves by +1 or -1.
struct LocalDegrees {
    std::map<std::string, std::vector<long long>> per_k; // deg_loc per flag index
    std::map<std::string, long long> deg_delta;          // quotient minus sub
};
LocalDegrees update_filtration_degrees(const ChainRecord& record,
                                       const std::map<std::string, std::vector<int>>& tau_bits);

} // namespace parachern
