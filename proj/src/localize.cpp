#include "parachern/localize.hpp"

#include <algorithm>

#include "parachern/errors.hpp"

namespace parachern {

Rat delta_vb_loc(const LocalChernData& d, int rank) {
    if (rank < 1) throw DataError("rank must be >= 1");
    return Rat(-d.a * d.a) / (2 * rank) - d.ch2_loc;
}

std::vector<LocalChernData> ch_decompose(
    const DivisorClass& ch1_e, const Rat& ch2_e, const DivisorClass& ch1_pullback,
    const Rat& ch2_pullback, const ChowModel& chow,
    const std::optional<std::map<std::string, Rat>>& ch2_records) {
    chow.validate();
    if (ch1_e.dim() != chow.dim() || ch1_pullback.dim() != chow.dim())
        throw DataError("ch1 classes have wrong coefficient dimension");

    std::vector<LocalChernData> out;
    for (std::size_t i = 0; i < chow.dim(); ++i) {
        const Rat diff = ch1_e.coeff[i] - ch1_pullback.coeff[i];
        if (!chow.exceptional[i]) {
            if (diff != 0)
                throw DataError("ch1 difference is not supported on exceptional classes (" +
                                chow.basis[i] + ")");
            continue;
        }
        LocalChernData d;
        d.point = chow.basis[i];
        d.a = to_int64(diff, "exceptional ch1 coefficient");
        out.push_back(d);
    }

    const Rat ch2_diff = ch2_e - ch2_pullback;
    if (ch2_records) {
        Rat sum(0);
        for (const auto& [point, value] : *ch2_records) {
            auto it = std::find_if(out.begin(), out.end(),
                                   [&](const LocalChernData& d) { return d.point == point; });
            if (it == out.end())
                throw DataError("ch2 record for unknown exceptional point: " + point);
            it->ch2_loc = value;
            sum += value;
        }
        if (sum != ch2_diff)
            throw DataError("per-point ch2 records sum to " + rat_to_string(sum) +
                            " but the ch2 difference is " + rat_to_string(ch2_diff));
    } else if (out.size() == 1) {
        out.front().ch2_loc = ch2_diff;
    } else if (ch2_diff != 0 || out.empty()) {
        if (ch2_diff != 0)
            throw DataError("ch2 attribution across several exceptional points is ambiguous "
                            "without per-point records");
    }
    return out;
}

namespace {

void validate_local_record(const LocalRecord& rec) {
    const std::size_t r = static_cast<std::size_t>(rec.rank);
    if (rec.rank < 1) throw DataError("local record rank must be >= 1");
    if (rec.betas_exceptional.size() != r || rec.gr_exceptional.size() != r)
        throw DataError("local record at " + rec.point + " has wrong exceptional flag size");
    for (const auto& inc : rec.incident) {
        if (inc.betas.size() != r || inc.deg_loc.size() != r ||
            inc.sigma_to_exceptional.size() != r)
            throw DataError("local record at " + rec.point + " has wrong data size for " +
                            inc.name);
    }
    for (std::size_t i = 0; i < rec.incident.size(); ++i)
        for (std::size_t j = i + 1; j < rec.incident.size(); ++j)
            if (!rec.sigma_base.count({static_cast<int>(i), static_cast<int>(j)}))
                throw DataError("local record at " + rec.point +
                                " is missing a pairwise permutation");
}

} // namespace

Rat delta_par_loc(const LocalRecord& rec) {
    validate_local_record(rec);
    const std::size_t r = static_cast<std::size_t>(rec.rank);
    Rat out = delta_vb_loc(rec.ch, rec.rank);
    for (std::size_t k = 0; k < r; ++k) {
        out += rec.betas_exceptional[k] * rec.gr_exceptional[k];
        out += rec.betas_exceptional[k] * rec.betas_exceptional[k] / 2;
    }
    for (const auto& inc : rec.incident) {
        for (std::size_t k = 0; k < r; ++k) {
            out += inc.betas[k] * inc.deg_loc[k];
            out += inc.betas[k] * inc.betas[k] / 2;
            out -= inc.betas[k] * rec.betas_exceptional[inc.sigma_to_exceptional[k]];
        }
    }
    for (const auto& [ij, sigma] : rec.sigma_base) {
        const auto& bi = rec.incident[ij.first].betas;
        const auto& bj = rec.incident[ij.second].betas;
        for (std::size_t k = 0; k < r; ++k) out += bi[k] * bj[sigma[k]];
    }
    return out;
}

Rat delta_par_loc_baseline(const LocalRecord& rec) {
    validate_local_record(rec);
    const std::size_t r = static_cast<std::size_t>(rec.rank);
    Rat out(0);
    for (const auto& inc : rec.incident)
        for (std::size_t k = 0; k < r; ++k) out += inc.betas[k] * inc.betas[k] / 2;
    for (const auto& [ij, sigma] : rec.sigma_base) {
        const auto& bi = rec.incident[ij.first].betas;
        const auto& bj = rec.incident[ij.second].betas;
        for (std::size_t k = 0; k < r; ++k) out += bi[k] * bj[sigma[k]];
    }
    return out;
}

Rat delta_par_loc_diff_rank2(const Rank2LocalDiffInput& in) {
    const std::size_t n = in.incident_betas.size();
    if (in.incident_deg_delta.size() != n || in.incident_tau.size() != n)
        throw DataError("rank-2 local difference input sizes do not match");
    if (in.beta0 < 0 || in.beta0 >= rat(1, 2))
        throw DataError("beta0 must lie in [0, 1/2)");
    Rat out = in.delta_vb_loc;
    out += in.beta0 * in.f0_deg_delta;
    out += in.beta0 * in.beta0;
    for (std::size_t i = 0; i < n; ++i) {
        if (in.incident_tau[i] != 1 && in.incident_tau[i] != -1)
            throw DataError("tau signs must be +1 or -1");
        out += in.incident_betas[i] * in.incident_deg_delta[i];
        out -= 2 * in.incident_tau[i] * in.incident_betas[i] * in.beta0;
    }
    return out;
}

bool ExtensionRecord::is_pullback() const {
    if (!mu_chain.empty() || f0_deg_delta != 0 || beta0 != 0) return false;
    for (const auto& [name, d] : deg_delta_loc)
        if (d != 0) return false;
    return true;
}

namespace {

std::vector<int> rank2_sigma(int tau) {
    return tau == 1 ? std::vector<int>{0, 1} : std::vector<int>{1, 0};
}

} // namespace

BuiltExtension build_extension(const SurfaceScenario& scenario, const ParabolicBundle& base,
                               const ExtensionMap& ext) {
    BundleView base_view(scenario, base);
    BuiltExtension out;
    out.warnings = base_view.warnings();

    for (const auto& [point, rec] : ext) {
        scenario.multiple_point(point); // declared?
        (void)rec;
    }

    out.blowup = blow_up(scenario);
    const ChowModel& chow_x = out.blowup.surface.chow;
    const std::size_t n = scenario.chow.dim();

    ParabolicBundle& bx = out.bundle_x;
    bx.rank = base.rank;
    bx.ch1 = out.blowup.pullback(base.ch1);
    bx.ch2 = base.ch2;
    for (const auto& [name, flag] : base.flags) bx.flags[name] = flag;
    for (const auto& perm : base.permutations) {
        // Permutations pinned to blown-up points stay on the base side; the
        // surviving crossings carry over unchanged.
        bool at_multiple_point = false;
        for (const auto& p : scenario.multiple_points)
            if (p.point == perm.point) at_multiple_point = true;
        if (!at_multiple_point) bx.permutations.push_back(perm);
    }

    for (std::size_t u = 0; u < scenario.multiple_points.size(); ++u) {
        const MultiplePoint& mp = scenario.multiple_points[u];
        ExtensionRecord rec;
        if (auto it = ext.find(mp.point); it != ext.end()) {
            rec = it->second;
        } else {
            out.warnings.push_back("extension at " + mp.point + " defaulted to the pullback");
        }
        if (base.rank != 2 && !rec.is_pullback())
            throw RankError("non-trivial extension records require a rank-2 bundle (point " +
                            mp.point + ")");

        validate_mu_chain(rec.mu_chain);
        const long long g = static_cast<long long>(rec.mu_chain.size());
        const long long mu = rec.mu_chain.empty() ? 0 : rec.mu_chain.back();

        for (const auto& [name, d] : rec.deg_delta_loc) {
            if (std::find(mp.incident.begin(), mp.incident.end(), name) == mp.incident.end())
                throw DataError("deg_delta_loc at " + mp.point + " names non-incident component " +
                                name);
            if (d < -g || d > g || ((d - g) % 2) != 0)
                throw DataError("deg_delta_loc for " + name + " at " + mp.point +
                                " must have |d| <= g and d == g (mod 2)");
        }
        if (g >= 1)
            for (const auto& name : mp.incident)
                if (!rec.deg_delta_loc.count(name))
                    throw DataError("extension at " + mp.point +
                                    " is missing deg_delta_loc for incident component " + name);
        if (rec.f0_deg_delta < -mu || (((rec.f0_deg_delta - mu) % 2) != 0))
            throw DataError("f0_deg_delta at " + mp.point +
                            " must be >= -mu and congruent to mu (mod 2)");
        if (rec.beta0 < 0 || rec.beta0 >= rat(1, 2))
            throw DataError("beta0 at " + mp.point + " must lie in [0, 1/2)");
        for (const auto& [name, t] : rec.tau) {
            if (std::find(mp.incident.begin(), mp.incident.end(), name) == mp.incident.end())
                throw DataError("tau at " + mp.point + " names non-incident component " + name);
            if (t != 1 && t != -1) throw DataError("tau at " + mp.point + " must be +1 or -1");
        }

        const ChainRecord chain = chain_from_mu_seq(mp.point, rec.mu_chain);
        bx.ch1.coeff[n + u] += chain.ch.a;
        bx.ch2 += chain.ch.ch2_loc;

        LocalRecord loc;
        loc.point = mp.point;
        loc.rank = base.rank;
        loc.ch = chain.ch;

        if (base.rank == 2) {
            // Weights (-2 beta0, 0) normalize to (-beta0, +beta0).
            const long long t_p = -chain.ch.a;
            const long long f0 = (t_p - rec.f0_deg_delta) / 2;
            FlagData pflag;
            pflag.rank = 2;
            pflag.weights = {-2 * rec.beta0, Rat(0)};
            pflag.gr_degrees = {f0, t_p - f0};
            bx.flags[mp.point] = pflag;
            loc.betas_exceptional = {-rec.beta0, rec.beta0};
            loc.gr_exceptional = pflag.gr_degrees;
        } else {
            FlagData pflag;
            pflag.rank = base.rank;
            pflag.weights.assign(base.rank, Rat(0));
            pflag.gr_degrees.assign(base.rank, 0);
            bx.flags[mp.point] = pflag;
            loc.betas_exceptional.assign(base.rank, Rat(0));
            loc.gr_exceptional.assign(base.rank, 0);
        }

        for (const auto& name : mp.incident) {
            LocalRecord::Incident inc;
            inc.name = name;
            inc.betas = base_view.betas(name);
            int tau = 1;
            if (auto it = rec.tau.find(name); it != rec.tau.end()) tau = it->second;
            if (base.rank == 2) {
                const long long d = rec.deg_delta_loc.count(name) ? rec.deg_delta_loc.at(name) : 0;
                const long long f_loc = (g - d) / 2;
                const long long q_loc = (g + d) / 2;
                inc.deg_loc = {f_loc, q_loc};
                inc.sigma_to_exceptional = rank2_sigma(tau);
                auto& flag = bx.flags.at(name);
                flag.gr_degrees[0] += f_loc;
                flag.gr_degrees[1] += q_loc;
            } else {
                inc.deg_loc.assign(base.rank, 0);
                inc.sigma_to_exceptional.resize(base.rank);
                for (int k = 0; k < base.rank; ++k) inc.sigma_to_exceptional[k] = k;
            }
            CrossingPermutation perm;
            perm.point = BlowUpResult::crossing_point_name(mp.point, name);
            perm.from = name;
            perm.to = mp.point;
            perm.sigma = inc.sigma_to_exceptional;
            bx.permutations.push_back(perm);
            loc.incident.push_back(inc);
        }
        for (std::size_t i = 0; i < mp.incident.size(); ++i)
            for (std::size_t j = i + 1; j < mp.incident.size(); ++j)
                loc.sigma_base[{static_cast<int>(i), static_cast<int>(j)}] =
                    base_view.sigma(mp.point, mp.incident[i], mp.incident[j]);

        out.locals.push_back(loc);
    }

    (void)chow_x;
    std::sort(out.warnings.begin(), out.warnings.end());
    return out;
}

Rat delta_par_global(const BundleView& v) { return delta_par(v); }

Rat DecompositionReport::rhs() const {
    Rat acc = rhs_global;
    for (const auto& t : locals) acc += t.absolute;
    return acc;
}

DecompositionReport decomposition_check(const SurfaceScenario& scenario,
                                        const ParabolicBundle& base, const ExtensionMap& ext) {
    BuiltExtension built = build_extension(scenario, base, ext);
    BundleView base_view(scenario, base);
    BundleView x_view(built.blowup.surface, built.bundle_x);

    DecompositionReport report;
    report.lhs = delta_par(x_view);
    report.rhs_global = delta_par_global(base_view);
    for (const auto& loc : built.locals) {
        DecompositionReport::LocalTerm term;
        term.point = loc.point;
        auto it = ext.find(loc.point);
        term.g = it == ext.end() ? 0 : static_cast<int>(it->second.mu_chain.size());
        term.delta_vb_loc = delta_vb_loc(loc.ch, base.rank);
        term.absolute = delta_par_loc(loc);
        term.baseline = delta_par_loc_baseline(loc);
        term.diff = term.absolute - term.baseline;
        report.locals.push_back(term);
    }
    report.warnings = built.warnings;
    for (const auto& w : x_view.warnings()) report.warnings.push_back(w);
    std::sort(report.warnings.begin(), report.warnings.end());
    report.warnings.erase(std::unique(report.warnings.begin(), report.warnings.end()),
                          report.warnings.end());
    return report;
}

} // namespace parachern
