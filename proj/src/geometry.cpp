#include "udc/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace udc {

Norm Norm::linf() {
    return {NormKind::Linf, std::numeric_limits<double>::infinity()};
}

Norm Norm::lp(double p) {
    if (!std::isfinite(p) || p < 1.0) {
        throw std::invalid_argument("Lp exponent must be finite and >= 1");
    }
    if (p >= kLpInfinityCap) {
        return linf();  // overflow guard: |dx|^p is useless at these exponents
    }
    return {NormKind::Lp, p};
}

std::string Norm::label() const {
    switch (kind) {
        case NormKind::L2:
            return "l2";
        case NormKind::Linf:
            return "linf";
        case NormKind::Lp: {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "lp:%.17g", p);
            return buf;
        }
    }
    return "l2";
}

double distance(const Norm& norm, const Point& a, const Point& b) {
    const double dx = std::fabs(a.x - b.x);
    const double dy = std::fabs(a.y - b.y);
    switch (norm.kind) {
        case NormKind::L2:
            return std::hypot(dx, dy);
        case NormKind::Linf:
            return std::max(dx, dy);
        case NormKind::Lp:
            break;
    }
    if (norm.p == 1.0) return dx + dy;
    if (norm.p == 2.0) return std::hypot(dx, dy);
    return std::pow(std::pow(dx, norm.p) + std::pow(dy, norm.p), 1.0 / norm.p);
}

bool covers(const Disk& disk, const Point& p, double eps) {
    if (!(eps >= 0.0)) {
        throw std::invalid_argument("coverage tolerance must be >= 0");
    }
    return distance(disk.norm, disk.center, p) <= 1.0 + eps;
}

double segment_half_length(const Norm& norm, double dx) {
    const double adx = std::fabs(dx);
    if (adx > 1.0) {
        throw std::domain_error("point unreachable from this line: |dx| > 1");
    }
    if (norm.kind == NormKind::Linf) return 1.0;
    const double p = norm.kind == NormKind::L2 ? 2.0 : norm.p;
    if (p == 1.0) return 1.0 - adx;
    if (p == 2.0) {
        // (1 - adx)(1 + adx) keeps precision near adx = 1
        return std::sqrt(std::max(0.0, (1.0 - adx) * (1.0 + adx)));
    }
    return std::pow(std::max(0.0, 1.0 - std::pow(adx, p)), 1.0 / p);
}

}  // namespace udc
