#include "parachern/surface.hpp"

#include <algorithm>
#include <set>

#include "parachern/errors.hpp"

namespace parachern {

bool DivisorClass::is_zero() const {
    for (const auto& c : coeff)
        if (c != 0) return false;
    return true;
}

bool DivisorClass::is_integral() const {
    for (const auto& c : coeff)
        if (!is_integer(c)) return false;
    return true;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    if (coeff.size() != o.coeff.size()) throw DataError("divisor class basis mismatch in sum");
    for (std::size_t i = 0; i < coeff.size(); ++i) coeff[i] += o.coeff[i];
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    if (coeff.size() != o.coeff.size()) throw DataError("divisor class basis mismatch in difference");
    for (std::size_t i = 0; i < coeff.size(); ++i) coeff[i] -= o.coeff[i];
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Rat& s) {
    for (auto& c : coeff) c *= s;
    return *this;
}

std::size_t ChowModel::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == name) return i;
    throw DataError("unknown basis class: " + name);
}

void ChowModel::validate() const {
    const std::size_t n = basis.size();
    if (gram.size() != n) throw DataError("intersection matrix size does not match basis");
    for (const auto& row : gram)
        if (row.size() != n) throw DataError("intersection matrix is not square");
    if (exceptional.size() != n) throw DataError("exceptional flags size does not match basis");
    std::set<std::string> seen;
    for (const auto& b : basis)
        if (!seen.insert(b).second) throw DataError("duplicate basis class name: " + b);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (gram[i][j] != gram[j][i]) throw DataError("intersection matrix is not symmetric");
    for (std::size_t i = 0; i < n; ++i) {
        if (!exceptional[i]) continue;
        if (gram[i][i] != -1)
            throw DataError("exceptional class " + basis[i] + " must have self-pairing -1");
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && gram[i][j] != 0)
                throw DataError("exceptional class " + basis[i] + " must pair to 0 with " + basis[j]);
    }
}

Rat pair(const DivisorClass& a, const DivisorClass& b, const ChowModel& chow) {
    const std::size_t n = chow.dim();
    if (a.dim() != n || b.dim() != n)
        throw DataError("divisor class basis mismatch in pairing");
    Rat acc(0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeff[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (chow.gram[i][j] == 0 || b.coeff[j] == 0) continue;
            acc += a.coeff[i] * b.coeff[j] * chow.gram[i][j];
        }
    }
    return acc;
}

const DivisorClass& SurfaceScenario::component(const std::string& name) const {
    auto it = components.find(name);
    if (it == components.end()) throw DataError("unknown component: " + name);
    return it->second;
}

const MultiplePoint& SurfaceScenario::multiple_point(const std::string& name) const {
    for (const auto& p : multiple_points)
        if (p.point == name) return p;
    throw DataError("unknown multiple point: " + name);
}

std::vector<SurfaceScenario::PairInstance> SurfaceScenario::pair_instances() const {
    std::vector<PairInstance> out;
    for (const auto& c : crossings) out.push_back({c.point, c.a, c.b});
    for (const auto& p : multiple_points)
        for (std::size_t i = 0; i < p.incident.size(); ++i)
            for (std::size_t j = i + 1; j < p.incident.size(); ++j)
                out.push_back({p.point, p.incident[i], p.incident[j]});
    return out;
}

void SurfaceScenario::validate() const {
    chow.validate();
    for (const auto& [name, cls] : components) {
        if (name.empty()) throw DataError("empty component name");
        if (cls.dim() != chow.dim())
            throw DataError("component " + name + " has wrong coefficient dimension");
        if (!cls.is_integral())
            throw DataError("component " + name + " must be an integral class");
    }

    std::set<std::string> point_names;
    for (const auto& c : crossings) {
        if (!point_names.insert(c.point).second)
            throw DataError("duplicate point name: " + c.point);
        if (c.a == c.b) throw DataError("crossing " + c.point + " must join two distinct components");
        component(c.a);
        component(c.b);
    }
    for (const auto& p : multiple_points) {
        if (!point_names.insert(p.point).second)
            throw DataError("duplicate point name: " + p.point);
        if (p.incident.size() < 3)
            throw DataError("multiple point " + p.point + " must have at least 3 incident components");
        std::set<std::string> seen;
        for (const auto& name : p.incident) {
            component(name);
            if (!seen.insert(name).second)
                throw DataError("multiple point " + p.point + " lists component " + name + " twice");
        }
    }

    // The declared points must account exactly for the pairing of each pair of
    // components; otherwise the crossing terms and the intersection form would
    // disagree.
    for (auto i = components.begin(); i != components.end(); ++i) {
        for (auto j = std::next(i); j != components.end(); ++j) {
            long long declared = 0;
            for (const auto& c : crossings)
                if ((c.a == i->first && c.b == j->first) || (c.a == j->first && c.b == i->first))
                    ++declared;
            for (const auto& p : multiple_points) {
                bool has_i = std::find(p.incident.begin(), p.incident.end(), i->first) != p.incident.end();
                bool has_j = std::find(p.incident.begin(), p.incident.end(), j->first) != p.incident.end();
                if (has_i && has_j) ++declared;
            }
            const Rat pairing = pair(i->second, j->second, chow);
            if (pairing != declared)
                throw DataError("components " + i->first + " and " + j->first + " pair to " +
                                rat_to_string(pairing) + " but the scenario declares " +
                                std::to_string(declared) + " intersection point(s)");
        }
    }
}

std::string BlowUpResult::crossing_point_name(const std::string& point, const std::string& comp) {
    return point + "@" + comp;
}

DivisorClass BlowUpResult::pullback(const DivisorClass& base) const {
    DivisorClass out = DivisorClass::zero(surface.chow.dim());
    if (base.dim() + exceptional.size() != surface.chow.dim())
        throw DataError("pullback dimension mismatch");
    for (std::size_t i = 0; i < base.dim(); ++i) out.coeff[i] = base.coeff[i];
    return out;
}

BlowUpResult blow_up(const SurfaceScenario& scenario) {
    scenario.validate();

    BlowUpResult res;
    const std::size_t n = scenario.chow.dim();
    const std::size_t k = scenario.multiple_points.size();

    ChowModel& chow = res.surface.chow;
    chow.basis = scenario.chow.basis;
    chow.gram.assign(n + k, std::vector<long long>(n + k, 0));
    chow.exceptional.assign(n + k, false);
    for (std::size_t i = 0; i < n; ++i) {
        chow.exceptional[i] = scenario.chow.exceptional[i];
        for (std::size_t j = 0; j < n; ++j) chow.gram[i][j] = scenario.chow.gram[i][j];
    }
    for (std::size_t u = 0; u < k; ++u) {
        const auto& p = scenario.multiple_points[u];
        if (scenario.components.count(p.point))
            throw DataError("multiple point " + p.point + " clashes with a component name");
        chow.basis.push_back(p.point);
        chow.gram[n + u][n + u] = -1;
        chow.exceptional[n + u] = true;
        res.exceptional.push_back(p.point);
    }
    chow.validate();

    for (const auto& [name, cls] : scenario.components) {
        DivisorClass st = res.pullback(cls);
        for (std::size_t u = 0; u < k; ++u) {
            const auto& inc = scenario.multiple_points[u].incident;
            if (std::find(inc.begin(), inc.end(), name) != inc.end())
                st.coeff[n + u] -= 1;
        }
        res.strict_transforms[name] = st;
        res.surface.components[name] = st;
    }
    for (std::size_t u = 0; u < k; ++u) {
        DivisorClass exc = DivisorClass::zero(n + k);
        exc.coeff[n + u] = 1;
        res.surface.components[scenario.multiple_points[u].point] = exc;
    }

    // Surviving crossings keep their names; each blown-up point contributes
    // one new transverse crossing per incident branch.
    res.surface.crossings = scenario.crossings;
    for (const auto& p : scenario.multiple_points)
        for (const auto& inc : p.incident)
            res.surface.crossings.push_back(
                {BlowUpResult::crossing_point_name(p.point, inc), p.point, inc});

    res.surface.stable_restriction = scenario.stable_restriction;
    res.surface.validate();
    return res;
}

} // namespace parachern
