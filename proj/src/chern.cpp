#include "parachern/chern.hpp"

#include <algorithm>

#include "parachern/errors.hpp"

namespace parachern {

namespace {

std::string sigma_key(const std::string& point, const std::string& from, const std::string& to) {
    return point + "|" + from + "|" + to;
}

std::vector<int> identity_permutation(int rank) {
    std::vector<int> id(rank);
    for (int k = 0; k < rank; ++k) id[k] = k;
    return id;
}

} // namespace

BundleView::BundleView(const SurfaceScenario& scenario, const ParabolicBundle& bundle)
    : scenario_(&scenario), bundle_(&bundle) {
    scenario.validate();
    if (bundle.rank < 1) throw DataError("bundle rank must be >= 1");
    if (bundle.ch1.dim() != scenario.chow.dim())
        throw DataError("bundle ch1 has wrong coefficient dimension");
    if (!bundle.ch1.is_integral()) throw DataError("bundle ch1 must be an integral class");

    for (const auto& [name, flag] : bundle.flags)
        if (!scenario.components.count(name))
            throw DataError("flag attached to unknown component: " + name);
    for (const auto& [name, cls] : scenario.components) {
        auto it = bundle.flags.find(name);
        if (it == bundle.flags.end())
            throw DataError("component " + name + " carries no flag data");
        const FlagData& flag = it->second;
        flag.validate();
        if (flag.rank != bundle.rank)
            throw DataError("flag on " + name + " has rank " + std::to_string(flag.rank) +
                            " but the bundle has rank " + std::to_string(bundle.rank));
        const Rat expected = pair(bundle.ch1, cls, scenario.chow);
        if (Rat(flag.total_degree()) != expected)
            throw DataError("graded degrees on " + name + " sum to " +
                            std::to_string(flag.total_degree()) + " but ch1 pairs to " +
                            rat_to_string(expected));
        normalized_[name] = normalize(flag);
    }

    // Index the declared permutations, both directions, checking consistency.
    const auto instances = scenario.pair_instances();
    auto is_instance = [&](const std::string& point, const std::string& a, const std::string& b) {
        for (const auto& inst : instances)
            if (inst.point == point && ((inst.a == a && inst.b == b) || (inst.a == b && inst.b == a)))
                return true;
        return false;
    };
    for (const auto& perm : bundle.permutations) {
        perm.validate(bundle.rank);
        if (!is_instance(perm.point, perm.from, perm.to))
            throw DataError("permutation at " + perm.point + " references components " + perm.from +
                            ", " + perm.to + " which do not meet there");
        const auto key = sigma_key(perm.point, perm.from, perm.to);
        const auto rkey = sigma_key(perm.point, perm.to, perm.from);
        const auto inv = inverse_permutation(perm.sigma);
        if (auto it = sigma_.find(key); it != sigma_.end() && it->second != perm.sigma)
            throw DataError("conflicting permutations at " + perm.point + " for " + perm.from +
                            " -> " + perm.to);
        if (auto it = sigma_.find(rkey); it != sigma_.end() && it->second != inv)
            throw DataError("permutations at " + perm.point + " for " + perm.from + " and " +
                            perm.to + " are not mutually inverse");
        sigma_[key] = perm.sigma;
        sigma_[rkey] = inv;
    }
    // Default the rest to the identity so every pair instance resolves.
    for (const auto& inst : instances) {
        const auto key = sigma_key(inst.point, inst.a, inst.b);
        if (!sigma_.count(key)) {
            sigma_[key] = identity_permutation(bundle.rank);
            sigma_[sigma_key(inst.point, inst.b, inst.a)] = identity_permutation(bundle.rank);
            warnings_.push_back("crossing " + inst.point + " (" + inst.a + "," + inst.b +
                                "): permutation defaulted to identity");
        }
    }
    std::sort(warnings_.begin(), warnings_.end());
}

const FlagData& BundleView::flag(const std::string& comp) const {
    auto it = bundle_->flags.find(comp);
    if (it == bundle_->flags.end()) throw DataError("no flag data for component " + comp);
    return it->second;
}

const std::vector<Rat>& BundleView::betas(const std::string& comp) const {
    auto it = normalized_.find(comp);
    if (it == normalized_.end()) throw DataError("no flag data for component " + comp);
    return it->second.betas;
}

const Rat& BundleView::alpha_tot(const std::string& comp) const {
    auto it = normalized_.find(comp);
    if (it == normalized_.end()) throw DataError("no flag data for component " + comp);
    return it->second.alpha_tot;
}

const std::vector<int>& BundleView::sigma(const std::string& point, const std::string& from,
                                          const std::string& to) const {
    auto it = sigma_.find(sigma_key(point, from, to));
    if (it == sigma_.end())
        throw DataError("no permutation resolved for point " + point);
    return it->second;
}

DivisorClass ch1_par(const BundleView& v) {
    DivisorClass out = v.bundle().ch1;
    for (const auto& [name, cls] : v.scenario().components) {
        const FlagData& flag = v.flag(name);
        Rat wsum(0);
        for (const auto& a : flag.weights) wsum += a;
        out -= wsum * cls;
    }
    return out;
}

Rat ch2_par(const BundleView& v) {
    const auto& scen = v.scenario();
    Rat out = v.bundle().ch2;
    for (const auto& [name, cls] : scen.components) {
        const FlagData& flag = v.flag(name);
        const Rat self = pair(cls, cls, scen.chow);
        for (int k = 0; k < flag.rank; ++k) {
            out -= flag.weights[k] * flag.gr_degrees[k];
            out += flag.weights[k] * flag.weights[k] * self / 2;
        }
    }
    // Ordered-pair double sum with prefactor 1/2: one term per unordered pair
    // of branches per point.
    for (const auto& inst : scen.pair_instances()) {
        const auto& wa = v.flag(inst.a).weights;
        const auto& wb = v.flag(inst.b).weights;
        const auto& s = v.sigma(inst.point, inst.a, inst.b);
        for (std::size_t k = 0; k < wa.size(); ++k) out += wa[k] * wb[s[k]];
    }
    return out;
}

Rat delta_vb(const Rat& ch1_sq, const Rat& ch2, int rank) {
    if (rank < 1) throw DataError("rank must be >= 1");
    return ch1_sq / (2 * rank) - ch2;
}

Rat delta_vb(const BundleView& v) {
    return delta_vb(pair(v.bundle().ch1, v.bundle().ch1, v.scenario().chow), v.bundle().ch2,
                    v.rank());
}

Rat delta_par(const BundleView& v) {
    const auto& scen = v.scenario();
    Rat out = delta_vb(v);
    for (const auto& [name, cls] : scen.components) {
        const auto& betas = v.betas(name);
        const auto& gr = v.flag(name).gr_degrees;
        const Rat self = pair(cls, cls, scen.chow);
        for (std::size_t k = 0; k < betas.size(); ++k) {
            out += betas[k] * gr[k];
            out -= betas[k] * betas[k] * self / 2;
        }
    }
    for (const auto& inst : scen.pair_instances()) {
        const auto& ba = v.betas(inst.a);
        const auto& bb = v.betas(inst.b);
        const auto& s = v.sigma(inst.point, inst.a, inst.b);
        for (std::size_t k = 0; k < ba.size(); ++k) out -= ba[k] * bb[s[k]];
    }
    return out;
}

Rat delta_par_dual(const BundleView& v) {
    const DivisorClass c = ch1_par(v);
    return pair(c, c, v.scenario().chow) / (2 * v.rank()) - ch2_par(v);
}

Rat delta_par_rank2(const BundleView& v) {
    if (v.rank() != 2) throw RankError("rank-2 discriminant requires a rank-2 bundle");
    const auto& scen = v.scenario();
    Rat out = delta_vb(v);
    for (const auto& [name, cls] : scen.components) {
        const Rat beta = v.betas(name)[1]; // (-beta, +beta)
        const auto& gr = v.flag(name).gr_degrees;
        const long long deg_delta = gr[1] - gr[0];
        out += beta * deg_delta;
        out -= beta * beta * pair(cls, cls, scen.chow);
    }
    for (const auto& inst : scen.pair_instances()) {
        const int tau = is_identity(v.sigma(inst.point, inst.a, inst.b)) ? +1 : -1;
        out -= 2 * tau * v.betas(inst.a)[1] * v.betas(inst.b)[1];
    }
    return out;
}

ParabolicBundle tensor_line_bundle(const ParabolicBundle& b, const DivisorClass& L,
                                   const SurfaceScenario& scenario) {
    if (!L.is_integral()) throw DataError("tensor class must be integral");
    if (L.dim() != scenario.chow.dim()) throw DataError("tensor class has wrong dimension");
    ParabolicBundle out = b;
    out.ch2 = b.ch2 + pair(b.ch1, L, scenario.chow) + Rat(b.rank) * pair(L, L, scenario.chow) / 2;
    out.ch1 = b.ch1 + Rat(b.rank) * L;
    for (auto& [name, flag] : out.flags) {
        const long long d = to_int64(pair(L, scenario.component(name), scenario.chow),
                                     "tensor degree shift");
        for (auto& g : flag.gr_degrees) g += d;
    }
    return out;
}

} // namespace parachern
