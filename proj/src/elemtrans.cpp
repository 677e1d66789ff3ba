#include "parachern/elemtrans.hpp"

#include <algorithm>

#include "parachern/errors.hpp"

namespace parachern {

SplittingType SplittingType::rank2(long long m1, long long m2) {
    SplittingType s;
    if (m1 > m2) std::swap(m1, m2);
    if (m1 == m2) {
        s.parts = {{m1, 2}};
    } else {
        s.parts = {{m1, 1}, {m2, 1}};
    }
    return s;
}

int SplittingType::rank() const {
    int r = 0;
    for (const auto& p : parts) r += p.mult;
    return r;
}

long long SplittingType::degree() const {
    long long d = 0;
    for (const auto& p : parts) d += p.m * p.mult;
    return d;
}

long long SplittingType::min() const {
    if (parts.empty()) throw DataError("empty splitting type");
    return parts.front().m;
}

long long SplittingType::max() const {
    if (parts.empty()) throw DataError("empty splitting type");
    return parts.back().m;
}

void SplittingType::validate() const {
    if (parts.empty()) throw DataError("empty splitting type");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].mult < 1) throw DataError("splitting type multiplicities must be positive");
        if (i > 0 && parts[i].m <= parts[i - 1].m)
            throw DataError("splitting type twists must be strictly increasing");
    }
}

std::string SplittingType::str() const {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += " + ";
        out += "O(" + std::to_string(p.m) + ")";
        if (p.mult > 1) out += "^" + std::to_string(p.mult);
    }
    return out;
}

bool operator==(const SplittingType& a, const SplittingType& b) {
    if (a.parts.size() != b.parts.size()) return false;
    for (std::size_t i = 0; i < a.parts.size(); ++i)
        if (a.parts[i].m != b.parts[i].m || a.parts[i].mult != b.parts[i].mult) return false;
    return true;
}

namespace {

// ch of O_X(k P) relative to O_X, truncated in degree 2, using P^2 = -1.
struct TwistCh {
    long long a;
    Rat ch2;
};
TwistCh ch_line_twist(long long k) { return {k, Rat(-k * k, 2)}; }

} // namespace

ChExceptional ch_exceptional_twist(long long m) {
    // 0 -> O_X(-(m+1)P) -> O_X(-mP) -> O_P(-mP) -> 0, and O_P(-mP) has degree m.
    const TwistCh lo = ch_line_twist(-m);
    const TwistCh hi = ch_line_twist(-(m + 1));
    return {lo.a - hi.a, lo.ch2 - hi.ch2};
}

ElementaryStep elementary_step(const SplittingType& s) {
    s.validate();
    if (s.pure()) throw DataError("elementary transformation requires a non-pure splitting type");
    const long long m1 = s.parts[0].m;
    const long long r1 = s.parts[0].mult;
    const long long m2 = s.parts[1].m;
    ElementaryStep step;
    step.a_delta = -r1;
    step.ch2_delta = -(Rat(m1) + rat(1, 2)) * r1;
    step.next.degree = s.degree() + r1;
    step.next.min_lb = std::min(m1 + 1, m2);
    step.next.max_ub = std::max(m1 + 1, s.max());
    step.next.mu_ub = s.mu() - 1;
    return step;
}

std::vector<SplittingType> rank2_step_results(const SplittingType& s) {
    if (s.rank() != 2) throw RankError("step enumeration requires rank 2");
    const StepConstraints c = elementary_step(s).next;
    std::vector<SplittingType> out;
    for (long long n1 = c.min_lb;; ++n1) {
        const long long n2 = c.degree - n1;
        if (n1 > n2) break;
        if (n2 > c.max_ub || n2 - n1 > c.mu_ub) continue;
        out.push_back(SplittingType::rank2(n1, n2));
    }
    return out;
}

Rat delta_vb_loc_drop(const SplittingType& s) {
    s.validate();
    if (s.pure()) throw DataError("discriminant drop requires a non-pure splitting type");
    const long long m1 = s.parts[0].m;
    const long long r1 = s.parts[0].mult;
    Rat acc(0);
    for (std::size_t i = 1; i < s.parts.size(); ++i)
        acc += (Rat(s.parts[i].m - m1) - rat(1, 2)) * r1 * s.parts[i].mult;
    return acc / s.rank();
}

void validate_mu_chain(const std::vector<long long>& mu_seq) {
    long long prev = 0;
    for (long long mu : mu_seq) {
        if (mu <= prev)
            throw DataError("mu chain must be strictly increasing from 0");
        if ((mu - prev) % 2 == 0)
            throw DataError("mu chain increments must be odd (no elementary transformation "
                            "changes mu by an even amount)");
        prev = mu;
    }
}

ChainRecord chain_from_mu_seq(const std::string& point, const std::vector<long long>& mu_seq) {
    validate_mu_chain(mu_seq);
    ChainRecord rec;
    rec.point = point;
    rec.mu_seq = mu_seq;
    rec.ch.point = point;
    rec.ch.a = static_cast<long long>(mu_seq.size());
    rec.ch.ch2_loc = 0;
    rec.delta_vb_loc = 0;
    for (std::size_t j = 1; j <= mu_seq.size(); ++j) {
        // Restriction degree after j upward steps is -j, so the minimal twist
        // of the j-th restriction is (-j - mu_j)/2.
        const long long m1 = (-(static_cast<long long>(j)) - mu_seq[j - 1]) / 2;
        rec.ch.ch2_loc += Rat(m1) + rat(1, 2);
        rec.delta_vb_loc += (Rat(mu_seq[j - 1]) - rat(1, 2)) / 2;
    }
    return rec;
}

namespace {

void enumerate_chains_rec(const std::string& point, long long mu_max,
                          std::vector<long long>& prefix, std::vector<ChainRecord>& out) {
    out.push_back(chain_from_mu_seq(point, prefix));
    const long long prev = prefix.empty() ? 0 : prefix.back();
    for (long long mu = prev + 1; mu <= mu_max; mu += 2) {
        prefix.push_back(mu);
        enumerate_chains_rec(point, mu_max, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<ChainRecord> enumerate_chains(const std::string& point, long long mu_max) {
    std::vector<ChainRecord> out;
    std::vector<long long> prefix;
    enumerate_chains_rec(point, mu_max, prefix, out);
    return out;
}

namespace {

// Backward search from a concrete rank-2 type; mu values and ch deltas are
// collected root-first, then reversed into forward chains.
void reduce_rank2_rec(const std::string& point, const SplittingType& cur,
                      std::vector<long long>& mu_path, long long a_acc, Rat ch2_acc,
                      std::vector<ChainRecord>& out) {
    if (cur.pure()) {
        ChainRecord rec;
        rec.point = point;
        rec.mu_seq.assign(mu_path.rbegin(), mu_path.rend());
        // Pure endpoint O(c)^2 relative to the plain pullback.
        const long long c = cur.min();
        rec.ch.point = point;
        rec.ch.a = -2 * c - a_acc;
        rec.ch.ch2_loc = -Rat(c * c) - ch2_acc;
        rec.delta_vb_loc = 0;
        for (long long mu : rec.mu_seq) rec.delta_vb_loc += (Rat(mu) - rat(1, 2)) / 2;
        out.push_back(rec);
        return;
    }
    const ElementaryStep step = elementary_step(cur);
    mu_path.push_back(cur.mu());
    for (const auto& next : rank2_step_results(cur))
        reduce_rank2_rec(point, next, mu_path, a_acc + step.a_delta, ch2_acc + step.ch2_delta, out);
    mu_path.pop_back();
}

SplittingType greedy_step(const SplittingType& s) {
    // Assume the transformed restriction splits as expected: the minimal part
    // moves up one twist, merging if it reaches the next part.
    SplittingType next;
    const long long m1 = s.parts[0].m;
    const int r1 = s.parts[0].mult;
    if (s.parts.size() > 1 && s.parts[1].m == m1 + 1) {
        next.parts.push_back({m1 + 1, r1 + s.parts[1].mult});
        next.parts.insert(next.parts.end(), s.parts.begin() + 2, s.parts.end());
    } else {
        next.parts.push_back({m1 + 1, r1});
        next.parts.insert(next.parts.end(), s.parts.begin() + 1, s.parts.end());
    }
    return next;
}

} // namespace

std::vector<ChainRecord> reduce_to_pure(const std::string& point, const SplittingType& s) {
    s.validate();
    if (s.rank() == 2) {
        std::vector<ChainRecord> out;
        std::vector<long long> mu_path;
        reduce_rank2_rec(point, s, mu_path, 0, Rat(0), out);
        std::sort(out.begin(), out.end(),
                  [](const ChainRecord& a, const ChainRecord& b) { return a.mu_seq < b.mu_seq; });
        return out;
    }
    // Higher rank: one greedy chain, discriminant accumulated from the
    // per-step drops (each depends only on the current type).
    ChainRecord rec;
    rec.point = point;
    rec.ch.point = point;
    Rat dv(0);
    std::vector<long long> mu_path;
    long long a_acc = 0;
    Rat ch2_acc(0);
    SplittingType cur = s;
    while (!cur.pure()) {
        mu_path.push_back(cur.mu());
        dv += delta_vb_loc_drop(cur);
        const ElementaryStep step = elementary_step(cur);
        a_acc += step.a_delta;
        ch2_acc += step.ch2_delta;
        cur = greedy_step(cur);
    }
    rec.mu_seq.assign(mu_path.rbegin(), mu_path.rend());
    const long long c = cur.min();
    const int r = s.rank();
    rec.ch.a = -r * c - a_acc;
    rec.ch.ch2_loc = -Rat(r * c * c, 2) - ch2_acc;
    rec.delta_vb_loc = dv;
    return {rec};
}

LocalDegrees update_filtration_degrees(const ChainRecord& record,
                                       const std::map<std::string, std::vector<int>>& tau_bits) {
    validate_mu_chain(record.mu_seq);
    LocalDegrees out;
    const int g = record.g();
    for (const auto& [comp, bits] : tau_bits) {
        if (bits.size() != static_cast<std::size_t>(g))
            throw DataError("tau bits for " + comp + " must give exactly one bit per step");
        long long f_loc = 0, q_loc = 0;
        for (int b : bits) {
            if (b != 0 && b != 1)
                throw DataError("tau bits for " + comp + " must be 0 or 1");
            // Each step adds one to the restriction degree, on the quotient
            // line (bit 1) or the sub line (bit 0).
            q_loc += b;
            f_loc += 1 - b;
        }
        out.per_k[comp] = {f_loc, q_loc};
        out.deg_delta[comp] = q_loc - f_loc;
    }
    return out;
}

} // namespace parachern
