#pragma once

// Reference polynomials shared by the unit and acceptance suites. The
// (4,5) factor for n = 2 was cross-checked in sympy: the trace map sends
// (2,2)·(4,5) to m³s³·gcd(p₁, p₂) computed from the matrices directly.

namespace charvar::testref {

inline constexpr const char* kWhiteheadWord = "b a b^-1 a^-1 b^-1 a b";

inline constexpr const char* kWhiteheadCore =
    "r - m^2*r + m*s - m^3*s + 2*m*r^2*s - m^3*r^2*s - r*s^2 + 4*m^2*r*s^2 - m^4*r*s^2 + m^2*r^3*s^2"
    " - m*s^3 + m^3*s^3 - m*r^2*s^3 + 2*m^3*r^2*s^3 - m^2*r*s^4 + m^4*r*s^4";
inline constexpr const char* kWhiteheadP1 =
    "m^-2*s^-2*r*(r - m^2*r + m*s - m^3*s + 2*m*r^2*s - m^3*r^2*s - r*s^2 + 4*m^2*r*s^2 - m^4*r*s^2"
    " + m^2*r^3*s^2 - m*s^3 + m^3*s^3 - m*r^2*s^3 + 2*m^3*r^2*s^3 - m^2*r*s^4 + m^4*r*s^4)";
inline constexpr const char* kWhiteheadP2 =
    "m^-2*s^-3*(-1 + s)*(1 + s)*(r - m^2*r + m*s - m^3*s + 2*m*r^2*s - m^3*r^2*s - r*s^2 + 4*m^2*r*s^2"
    " - m^4*r*s^2 + m^2*r^3*s^2 - m*s^3 + m^3*s^3 - m*r^2*s^3 + 2*m^3*r^2*s^3 - m^2*r*s^4 + m^4*r*s^4)";

inline constexpr const char* kWhiteheadTrace = "-x*y - 2*z + x^2*z + y^2*z - x*y*z^2 + z^3";
inline constexpr const char* kWhiteheadSurface = "-w^3*x*y + w^2*x^2*z + w^2*y^2*z - w*x*y*z^2 + u^2*(z^3 - 2*w^2*z)";
inline constexpr const char* kWhiteheadG = "-w^3*x*y + w^2*x^2*z + w^2*y^2*z - w*x*y*z^2";
inline constexpr const char* kWhiteheadH = "z*(z^2 - 2*w^2)";

inline constexpr const char* kSurgery2Surface = "w^2*x^2 + w^2*y^2 - w*x*y*z + u^2*(z^2 - 2*w^2)";
inline constexpr const char* kSurgery3SurfaceA = "w^2*x^2 + w^2*y^2 - w*x*y*z + u^2*(z^2 - 3*w^2)";
inline constexpr const char* kSurgery3SurfaceB = "w^2*x^2 + w^2*y^2 - w*x*y*z + u^2*(z^2 - w^2)";
inline constexpr const char* kSurgery2Trace = "x^2 + y^2 - x*y*z + z^2 - 2";

// Chart a=1 at [1,0,0:1,0]: the displayed exceptional conic.
inline constexpr const char* kS1ChartAConic = "-b^2 + c - c^2";

// Derived: full character polynomials for n = 2, 3, 4 (normalized).
inline constexpr const char* kTrace2Factor45 =
    "x^2*y^2*z^3-2*x^3*y*z^2-2*x*y^3*z^2-2*x*y*z^4+x^4*z+3*x^2*y^2*z+2*x^2*z^3+y^4*z+2*y^2*z^3+z^5-x^3*y-x*y^3"
    "+3*x*y*z^2-4*x^2*z-4*y^2*z-4*z^3+3*x*y+2*z";

}  // namespace charvar::testref
