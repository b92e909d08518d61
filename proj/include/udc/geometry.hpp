#pragma once

#include <string>

namespace udc {

// Default slack for coverage predicates. Boundary-tangent configurations
// (a disk touching a point at distance exactly 1) are routine in this
// problem, so membership is closed with a small tolerance.
inline constexpr double kDefaultEps = 1e-9;

// Lp exponents at or above this are collapsed to the max norm.
inline constexpr double kLpInfinityCap = 1e6;

struct Point {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point&) const = default;
};

enum class NormKind { L2, Linf, Lp };

// Which unit ball defines "disk". L2 and Linf have dedicated fast paths;
// Lp handles any finite exponent p >= 1.
struct Norm {
    NormKind kind = NormKind::L2;
    double p = 2.0;  // exponent; meaningful for Lp, informational otherwise

    static Norm l2() { return {NormKind::L2, 2.0}; }
    static Norm linf();
    // Throws std::invalid_argument unless p is finite and >= 1.
    static Norm lp(double p);

    // "l2", "linf" or "lp:<p>"; matches the CLI syntax.
    std::string label() const;

    bool operator==(const Norm&) const = default;
};

// Unit-radius disk; the radius is implicit and immutable.
struct Disk {
    Point center;
    Norm norm;
};

double distance(const Norm& norm, const Point& a, const Point& b);

// True iff p lies within distance 1 + eps of the disk center. eps >= 0.
bool covers(const Disk& disk, const Point& p, double eps = kDefaultEps);

// Half-length h of the interval of admissible center ordinates: a center on a
// vertical line at horizontal offset dx from the point covers it iff the
// vertical offset t satisfies |t| <= h. For Lp, h = (1 - |dx|^p)^(1/p); for
// Linf, h = 1 everywhere within reach. Throws std::domain_error when |dx| > 1.
double segment_half_length(const Norm& norm, double dx);

}  // namespace udc
