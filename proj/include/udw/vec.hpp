#pragma once
#include <cmath>

namespace udw {

// Spatial vector. Scenarios in 1+1 and 2+1 dimensions use the leading
// components and leave the rest at zero.
struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
    friend Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }

    double dot(Vec3 o) const { return x * o.x + y * o.y + z * o.z; }
    // hypot keeps |v| finite for component magnitudes near the overflow threshold
    double norm() const { return std::hypot(x, y, z); }
};

} // namespace udw
