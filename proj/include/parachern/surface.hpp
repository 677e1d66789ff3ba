#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "parachern/rational.hpp"

namespace parachern {

/// An element of the rational divisor-class group, as a coefficient vector
/// over the basis of some ChowModel. Arithmetic is componentwise and exact.
struct DivisorClass {
    std::vector<Rat> coeff;

    DivisorClass() = default;
    explicit DivisorClass(std::vector<Rat> c) : coeff(std::move(c)) {}
    static DivisorClass zero(std::size_t n) { return DivisorClass(std::vector<Rat>(n, Rat(0))); }

    std::size_t dim() const { return coeff.size(); }
    bool is_zero() const;
    bool is_integral() const;

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    DivisorClass& operator*=(const Rat& s);

    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rat& s, DivisorClass a) { return a *= s; }
    friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.coeff == b.coeff; }
};

/// The divisor-class group A^1 of a smooth projective surface with its
/// integer intersection pairing. Exceptional classes (introduced by blow-ups)
/// are marked: each satisfies e.e = -1 and pairs to 0 with every other basis
/// class.
struct ChowModel {
    std::vector<std::string> basis;
    std::vector<std::vector<long long>> gram;
    std::vector<bool> exceptional;

    std::size_t dim() const { return basis.size(); }
    std::size_t index_of(const std::string& name) const;

    /// Checks symmetry of the pairing and the exceptional-class relations.
    void validate() const;
};

/// Exact intersection pairing of two classes over the same model.
Rat pair(const DivisorClass& a, const DivisorClass& b, const ChowModel& chow);

/// A transverse intersection point of exactly two divisor components.
struct Crossing {
    std::string point;
    std::string a, b;
};

/// A point where kappa >= 3 smooth branches meet pairwise transversally with
/// distinct tangents; one blow-up separates them.
struct MultiplePoint {
    std::string point;
    std::vector<std::string> incident;
};

/// A surface together with its divisor components and the named points where
/// they meet. Declared points must account exactly for the intersection
/// pairing of the component classes.
struct SurfaceScenario {
    ChowModel chow;
    std::map<std::string, DivisorClass> components;
    std::vector<Crossing> crossings;
    std::vector<MultiplePoint> multiple_points;
    bool stable_restriction = false;

    const DivisorClass& component(const std::string& name) const;
    const MultiplePoint& multiple_point(const std::string& name) const;
    bool is_normal_crossings() const { return multiple_points.empty(); }

    /// One entry per unordered pair of components meeting at a point: every
    /// declared crossing, plus every pair of branches at each multiple point.
    struct PairInstance {
        std::string point;
        std::string a, b;
    };
    std::vector<PairInstance> pair_instances() const;

    void validate() const;
};

/// Result of blowing up every declared multiple point once.
struct BlowUpResult {
    /// Normal-crossings model: strict transforms plus one exceptional
    /// component per blown-up point, all intersections declared as crossings.
    SurfaceScenario surface;
    /// Names of the exceptional components (same names as the blown-up points).
    std::vector<std::string> exceptional;
    /// Strict transforms of the base components, over the extended model.
    std::map<std::string, DivisorClass> strict_transforms;

    /// Zero-extends a base class to the blown-up model.
    DivisorClass pullback(const DivisorClass& base) const;

    /// Name of the crossing point where an exceptional component meets the
    /// strict transform of an incident component.
    static std::string crossing_point_name(const std::string& point, const std::string& comp);
};

/// Blows up each multiple point of the scenario exactly once. Pullbacks keep
/// their pairing, exceptional classes are mutually orthogonal with square -1,
/// and each strict transform loses one from its pairing per blown-up point
/// lying on it.
BlowUpResult blow_up(const SurfaceScenario& scenario);

} // namespace parachern
