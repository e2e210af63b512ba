// Copyright 2026 The vortexsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Published polynomials used as oracles by the scenario checks. Variables
// are r, mu1..mu4, and the plane parameters a, b. Scalars are kept as
// printed; comparisons are scalar-invariant.
#pragma once

#include <array>

namespace vortexsym::reference {

// Kite gradient numerators in r, as published (scalars included).
inline constexpr std::array<const char*, 3> kKitePipeline{
    "64*mu1*r^6-128*mu1*r^4-192*mu1*r^2+192*mu3*r^4+128*mu3*r^2-64*mu3+32*mu4*r^6"
    "-480*mu4*r^4+480*mu4*r^2-32*mu4",
    "3*mu2*r^2-mu2-3*mu4*r^2+mu4",
    "64*mu1*r^6-128*mu1*r^4-192*mu1*r^2+32*mu2*r^6-480*mu2*r^4+480*mu2*r^2-32*mu2"
    "+192*mu3*r^4+128*mu3*r^2-64*mu3"
};

// Even sextic whose real roots are kite configurations when mu4 = mu2.
inline constexpr const char* kKiteConfigFactor =
    "2*mu1*r^6-4*mu1*r^4-6*mu1*r^2+mu2*r^6-15*mu2*r^4+15*mu2*r^2-mu2+6*mu3*r^4+4*mu3*r^2"
    "-2*mu3";

inline constexpr std::array<const char*, 3> kRectanglePipeline{
    "4*mu1*r^4-12*mu1*r^2+12*mu3*r^2-4*mu3",
    "-12*mu2*r^2+4*mu2-4*mu4*r^4+12*mu4*r^2",
    "12*mu1*r^2-4*mu1+4*mu3*r^4-12*mu3*r^2"
};

// Three-equal-sides trapezoid gradient numerators.
inline constexpr std::array<const char*, 3> kTrapezoidPipeline{
    "-16*mu1*r^6+32*mu1*r^4+48*mu1*r^2+16*mu3*r^6-32*mu3*r^4-48*mu3*r^2+8*mu4*r^6"
    "-120*mu4*r^4+120*mu4*r^2-8*mu4",
    "-8*mu1*r^6+120*mu1*r^4-120*mu1*r^2+8*mu1-16*mu2*r^6+32*mu2*r^4+48*mu2*r^2+16*mu4*r^6"
    "-32*mu4*r^4-48*mu4*r^2",
    "64*mu1*r^10-2304*mu1*r^8+8064*mu1*r^6-5376*mu1*r^4+576*mu1*r^2+96*mu2*r^10-1376*mu2*r^8"
    "+448*mu2*r^6+1344*mu2*r^4-544*mu2*r^2+32*mu2+192*mu3*r^10-256*mu3*r^8-896*mu3*r^6"
    "-256*mu3*r^4+192*mu3*r^2"
};

// Generators f1..f9 of the trapezoid elimination ideal over mu1..mu4.
inline constexpr std::array<const char*, 9> kTrapezoidElimination{
    "mu1^2-mu1*mu3+mu2*mu4-mu4^2",
    "2*mu1*mu2^3*mu4^4-6*mu1*mu2^2*mu3^2*mu4^3-7*mu1*mu2^2*mu4^5+2*mu1*mu2*mu3^4*mu4^2"
    "+13*mu1*mu2*mu3^2*mu4^4+5*mu1*mu2*mu3*mu4^5-3*mu1*mu2*mu4^6-2*mu1*mu3^4*mu4^3"
    "-7*mu1*mu3^2*mu4^5-5*mu1*mu3*mu4^6+8*mu1*mu4^7-6*mu2^3*mu3*mu4^4+8*mu2^2*mu3^3*mu4^3"
    "+20*mu2^2*mu3*mu4^5+5*mu2^2*mu4^6-2*mu2*mu3^5*mu4^2-17*mu2*mu3^3*mu4^4"
    "-5*mu2*mu3^2*mu4^5-11*mu2*mu3*mu4^6-14*mu2*mu4^7+2*mu3^5*mu4^3+9*mu3^3*mu4^5"
    "+5*mu3^2*mu4^6-3*mu3*mu4^7+9*mu4^8",
    "-4*mu1*mu2^3*mu3*mu4^3+2*mu1*mu2^2*mu3^3*mu4^2+13*mu1*mu2^2*mu3*mu4^4+5*mu1*mu2^2*mu4^5"
    "-4*mu1*mu2*mu3^3*mu4^3-14*mu1*mu2*mu3*mu4^5-14*mu1*mu2*mu4^6+2*mu1*mu3^3*mu4^4"
    "+5*mu1*mu3*mu4^6+9*mu1*mu4^7-2*mu2^4*mu4^4+6*mu2^3*mu3^2*mu4^3+9*mu2^3*mu4^5"
    "-2*mu2^2*mu3^4*mu4^2-19*mu2^2*mu3^2*mu4^4-5*mu2^2*mu3*mu4^5-4*mu2^2*mu4^6"
    "+4*mu2*mu3^4*mu4^3+20*mu2*mu3^2*mu4^5+10*mu2*mu3*mu4^6-11*mu2*mu4^7-2*mu3^4*mu4^4"
    "-7*mu3^2*mu4^6-5*mu3*mu4^7+8*mu4^8",
    "-2*mu1*mu2^4*mu4^3+2*mu1*mu2^3*mu3^2*mu4^2+9*mu1*mu2^3*mu4^4-6*mu1*mu2^2*mu3^2*mu4^3"
    "-4*mu1*mu2^2*mu4^5+6*mu1*mu2*mu3^2*mu4^4-4*mu1*mu2*mu3*mu4^5-11*mu1*mu2*mu4^6"
    "-2*mu1*mu3^2*mu4^5+4*mu1*mu3*mu4^6+8*mu1*mu4^7+4*mu2^4*mu3*mu4^3-2*mu2^3*mu3^3*mu4^2"
    "-17*mu2^3*mu3*mu4^4-5*mu2^3*mu4^5+6*mu2^2*mu3^3*mu4^3+27*mu2^2*mu3*mu4^5+19*mu2^2*mu4^6"
    "-6*mu2*mu3^3*mu4^4-19*mu2*mu3*mu4^6-23*mu2*mu4^7+2*mu3^3*mu4^5+5*mu3*mu4^7+9*mu4^8",
    "2*mu1*mu2^4*mu3*mu4^2-8*mu1*mu2^3*mu3*mu4^3-5*mu1*mu2^3*mu4^4+23*mu1*mu2^2*mu3*mu4^4"
    "+19*mu1*mu2^2*mu4^5-4*mu1*mu2*mu3^2*mu4^4-30*mu1*mu2*mu3*mu4^5-23*mu1*mu2*mu4^6"
    "+4*mu1*mu3^2*mu4^5+13*mu1*mu3*mu4^6+9*mu1*mu4^7+2*mu2^5*mu4^3-2*mu2^4*mu3^2*mu4^2"
    "-11*mu2^4*mu4^4+8*mu2^3*mu3^2*mu4^3+13*mu2^3*mu4^5-12*mu2^2*mu3^2*mu4^4"
    "+4*mu2^2*mu3*mu4^5+7*mu2^2*mu4^6+8*mu2*mu3^2*mu4^5-8*mu2*mu3*mu4^6-19*mu2*mu4^7"
    "-2*mu3^2*mu4^6+4*mu3*mu4^7+8*mu4^8",
    "4*mu2^6*mu4^2-28*mu2^5*mu4^3+2*mu2^4*mu3^2*mu4^2-30*mu2^4*mu3*mu4^3+37*mu2^4*mu4^4"
    "+10*mu2^3*mu3^3*mu4^2+80*mu2^3*mu3^2*mu4^3+165*mu2^3*mu3*mu4^4+99*mu2^3*mu4^5"
    "-22*mu2^2*mu3^4*mu4^2-70*mu2^2*mu3^3*mu4^3-263*mu2^2*mu3^2*mu4^4-382*mu2^2*mu3*mu4^5"
    "-218*mu2^2*mu4^6+8*mu2*mu3^5*mu4^2+44*mu2*mu3^4*mu4^3+114*mu2*mu3^3*mu4^4"
    "+298*mu2*mu3^2*mu4^5+345*mu2*mu3*mu4^6+123*mu2*mu4^7-8*mu3^5*mu4^3-22*mu3^4*mu4^4"
    "-54*mu3^3*mu4^5-117*mu3^2*mu4^6-98*mu3*mu4^7-17*mu4^8",
    "2*mu1*mu2^5*mu4^2-11*mu1*mu2^4*mu4^3-5*mu1*mu2^3*mu3*mu4^3+13*mu1*mu2^3*mu4^4"
    "+11*mu1*mu2^2*mu3^2*mu4^3+23*mu1*mu2^2*mu3*mu4^4+7*mu1*mu2^2*mu4^5"
    "-4*mu1*mu2*mu3^3*mu4^3-22*mu1*mu2*mu3^2*mu4^4-31*mu1*mu2*mu3*mu4^5-19*mu1*mu2*mu4^6"
    "+4*mu1*mu3^3*mu4^4+11*mu1*mu3^2*mu4^5+13*mu1*mu3*mu4^6+8*mu1*mu4^7-2*mu2^5*mu3*mu4^2"
    "+10*mu2^4*mu3*mu4^3+5*mu2^4*mu4^4-31*mu2^3*mu3*mu4^4-24*mu2^3*mu4^5+4*mu2^2*mu3^2*mu4^4"
    "+53*mu2^2*mu3*mu4^5+42*mu2^2*mu4^6-8*mu2*mu3^2*mu4^5-43*mu2*mu3*mu4^6-32*mu2*mu4^7"
    "+4*mu3^2*mu4^6+13*mu3*mu4^7+9*mu4^8",
    "4*mu1*mu2^6*mu4+2*mu1*mu2^4*mu3^2*mu4-37*mu1*mu2^4*mu4^3+10*mu1*mu2^3*mu3^3*mu4"
    "-165*mu1*mu2^3*mu3*mu4^3-198*mu1*mu2^3*mu4^4-22*mu1*mu2^2*mu3^4*mu4"
    "+263*mu1*mu2^2*mu3^2*mu4^3+740*mu1*mu2^2*mu3*mu4^4+654*mu1*mu2^2*mu4^5"
    "+8*mu1*mu2*mu3^5*mu4-82*mu1*mu2*mu3^3*mu4^3-596*mu1*mu2*mu3^2*mu4^4"
    "-979*mu1*mu2*mu3*mu4^5-472*mu1*mu2*mu4^6-8*mu1*mu3^5*mu4^2+22*mu1*mu3^4*mu4^3"
    "+72*mu1*mu3^3*mu4^4+331*mu1*mu3^2*mu4^5+404*mu1*mu3*mu4^6+49*mu1*mu4^7"
    "-28*mu2^5*mu3*mu4^2+30*mu2^5*mu4^3-30*mu2^4*mu3^2*mu4^2-20*mu2^4*mu3*mu4^3"
    "-165*mu2^4*mu4^4+80*mu2^3*mu3^3*mu4^2+330*mu2^3*mu3^2*mu4^3+378*mu2^3*mu3*mu4^4"
    "+374*mu2^3*mu4^5-70*mu2^2*mu3^4*mu4^2-416*mu2^2*mu3^3*mu4^3-789*mu2^2*mu3^2*mu4^4"
    "-893*mu2^2*mu3*mu4^5-317*mu2^2*mu4^6+44*mu2*mu3^5*mu4^2+140*mu2*mu3^4*mu4^3"
    "+614*mu2*mu3^3*mu4^4+818*mu2*mu3^2*mu4^5+630*mu2*mu3*mu4^6+110*mu2*mu4^7-44*mu3^5*mu4^3"
    "-70*mu3^4*mu4^4-278*mu3^3*mu4^5-329*mu3^2*mu4^6-67*mu3*mu4^7-32*mu4^8",
    "8*mu1*mu2^6*mu3-56*mu1*mu2^5*mu3*mu4+4*mu1*mu2^4*mu3^3-60*mu1*mu2^4*mu3^2*mu4"
    "+330*mu1*mu2^4*mu4^3+20*mu1*mu2^3*mu3^4+160*mu1*mu2^3*mu3^3*mu4-558*mu1*mu2^3*mu3*mu4^3"
    "-1528*mu1*mu2^3*mu4^4-44*mu1*mu2^2*mu3^5-140*mu1*mu2^2*mu3^4*mu4"
    "+910*mu1*mu2^2*mu3^2*mu4^3+2132*mu1*mu2^2*mu3*mu4^4+2070*mu1*mu2^2*mu4^5"
    "+16*mu1*mu2*mu3^6+88*mu1*mu2*mu3^5*mu4-456*mu1*mu2*mu3^3*mu4^3-1634*mu1*mu2*mu3^2*mu4^4"
    "-2236*mu1*mu2*mu3*mu4^5-674*mu1*mu2*mu4^6-16*mu1*mu3^6*mu4-44*mu1*mu3^5*mu4^2"
    "+120*mu1*mu3^4*mu4^3+292*mu1*mu3^3*mu4^4+784*mu1*mu3^2*mu4^5+710*mu1*mu3*mu4^6"
    "-198*mu1*mu4^7-8*mu2^7*mu4-4*mu2^5*mu3^2*mu4+60*mu2^5*mu3*mu4^2+244*mu2^5*mu4^3"
    "-20*mu2^4*mu3^3*mu4-114*mu2^4*mu3^2*mu4^2-570*mu2^4*mu3*mu4^3-835*mu2^4*mu4^4"
    "+44*mu2^3*mu3^4*mu4+330*mu2^3*mu3^3*mu4^2+688*mu2^3*mu3^2*mu4^3+1943*mu2^3*mu3*mu4^4"
    "+1761*mu2^3*mu4^5-16*mu2^2*mu3^5*mu4-306*mu2^2*mu3^4*mu4^2-1150*mu2^2*mu3^3*mu4^3"
    "-1467*mu2^2*mu3^2*mu4^4-3540*mu2^2*mu3*mu4^5-2210*mu2^2*mu4^6+132*mu2*mu3^5*mu4^2"
    "+480*mu2*mu3^4*mu4^3+1440*mu2*mu3^3*mu4^4+1596*mu2*mu3^2*mu4^5+2681*mu2*mu3*mu4^6"
    "+1513*mu2*mu4^7-116*mu3^5*mu4^3-218*mu3^4*mu4^4-600*mu3^3*mu4^5-699*mu3^2*mu4^6"
    "-574*mu3*mu4^7-465*mu4^8"
};

// Quintic cofactor of f6 in mu2, mu3, mu4.
inline constexpr const char* kQuinticP1 =
    "4*mu2^5-24*mu2^4*mu4+2*mu2^3*mu3^2-30*mu2^3*mu3*mu4+13*mu2^3*mu4^2+10*mu2^2*mu3^3"
    "+82*mu2^2*mu3^2*mu4+135*mu2^2*mu3*mu4^2+112*mu2^2*mu4^3-22*mu2*mu3^4-60*mu2*mu3^3*mu4"
    "-181*mu2*mu3^2*mu4^2-247*mu2*mu3*mu4^3-106*mu2*mu4^4+8*mu3^5+22*mu3^4*mu4"
    "+54*mu3^3*mu4^2+117*mu3^2*mu4^3+98*mu3*mu4^4+17*mu4^5";

// mu1-coefficient and mu1-free part of f2..f5, f7, f8, f9, interleaved.
inline constexpr std::array<const char*, 14> kLinearCoefficients{
    "2*mu2^3*mu4^4-6*mu2^2*mu3^2*mu4^3-7*mu2^2*mu4^5+2*mu2*mu3^4*mu4^2+13*mu2*mu3^2*mu4^4"
    "+5*mu2*mu3*mu4^5-3*mu2*mu4^6-2*mu3^4*mu4^3-7*mu3^2*mu4^5-5*mu3*mu4^6+8*mu4^7",
    "-6*mu2^3*mu3*mu4^4+8*mu2^2*mu3^3*mu4^3+20*mu2^2*mu3*mu4^5+5*mu2^2*mu4^6"
    "-2*mu2*mu3^5*mu4^2-17*mu2*mu3^3*mu4^4-5*mu2*mu3^2*mu4^5-11*mu2*mu3*mu4^6-14*mu2*mu4^7"
    "+2*mu3^5*mu4^3+9*mu3^3*mu4^5+5*mu3^2*mu4^6-3*mu3*mu4^7+9*mu4^8",
    "-4*mu2^3*mu3*mu4^3+2*mu2^2*mu3^3*mu4^2+13*mu2^2*mu3*mu4^4+5*mu2^2*mu4^5"
    "-4*mu2*mu3^3*mu4^3-14*mu2*mu3*mu4^5-14*mu2*mu4^6+2*mu3^3*mu4^4+5*mu3*mu4^6+9*mu4^7",
    "-2*mu2^4*mu4^4+6*mu2^3*mu3^2*mu4^3+9*mu2^3*mu4^5-2*mu2^2*mu3^4*mu4^2"
    "-19*mu2^2*mu3^2*mu4^4-5*mu2^2*mu3*mu4^5-4*mu2^2*mu4^6+4*mu2*mu3^4*mu4^3"
    "+20*mu2*mu3^2*mu4^5+10*mu2*mu3*mu4^6-11*mu2*mu4^7-2*mu3^4*mu4^4-7*mu3^2*mu4^6"
    "-5*mu3*mu4^7+8*mu4^8",
    "-2*mu2^4*mu4^3+2*mu2^3*mu3^2*mu4^2+9*mu2^3*mu4^4-6*mu2^2*mu3^2*mu4^3-4*mu2^2*mu4^5"
    "+6*mu2*mu3^2*mu4^4-4*mu2*mu3*mu4^5-11*mu2*mu4^6-2*mu3^2*mu4^5+4*mu3*mu4^6+8*mu4^7",
    "4*mu2^4*mu3*mu4^3-2*mu2^3*mu3^3*mu4^2-17*mu2^3*mu3*mu4^4-5*mu2^3*mu4^5"
    "+6*mu2^2*mu3^3*mu4^3+27*mu2^2*mu3*mu4^5+19*mu2^2*mu4^6-6*mu2*mu3^3*mu4^4"
    "-19*mu2*mu3*mu4^6-23*mu2*mu4^7+2*mu3^3*mu4^5+5*mu3*mu4^7+9*mu4^8",
    "2*mu2^4*mu3*mu4^2-8*mu2^3*mu3*mu4^3-5*mu2^3*mu4^4+23*mu2^2*mu3*mu4^4+19*mu2^2*mu4^5"
    "-4*mu2*mu3^2*mu4^4-30*mu2*mu3*mu4^5-23*mu2*mu4^6+4*mu3^2*mu4^5+13*mu3*mu4^6+9*mu4^7",
    "2*mu2^5*mu4^3-2*mu2^4*mu3^2*mu4^2-11*mu2^4*mu4^4+8*mu2^3*mu3^2*mu4^3+13*mu2^3*mu4^5"
    "-12*mu2^2*mu3^2*mu4^4+4*mu2^2*mu3*mu4^5+7*mu2^2*mu4^6+8*mu2*mu3^2*mu4^5-8*mu2*mu3*mu4^6"
    "-19*mu2*mu4^7-2*mu3^2*mu4^6+4*mu3*mu4^7+8*mu4^8",
    "2*mu2^5*mu4^2-11*mu2^4*mu4^3-5*mu2^3*mu3*mu4^3+13*mu2^3*mu4^4+11*mu2^2*mu3^2*mu4^3"
    "+23*mu2^2*mu3*mu4^4+7*mu2^2*mu4^5-4*mu2*mu3^3*mu4^3-22*mu2*mu3^2*mu4^4-31*mu2*mu3*mu4^5"
    "-19*mu2*mu4^6+4*mu3^3*mu4^4+11*mu3^2*mu4^5+13*mu3*mu4^6+8*mu4^7",
    "-2*mu2^5*mu3*mu4^2+10*mu2^4*mu3*mu4^3+5*mu2^4*mu4^4-31*mu2^3*mu3*mu4^4-24*mu2^3*mu4^5"
    "+4*mu2^2*mu3^2*mu4^4+53*mu2^2*mu3*mu4^5+42*mu2^2*mu4^6-8*mu2*mu3^2*mu4^5"
    "-43*mu2*mu3*mu4^6-32*mu2*mu4^7+4*mu3^2*mu4^6+13*mu3*mu4^7+9*mu4^8",
    "4*mu2^6*mu4+2*mu2^4*mu3^2*mu4-37*mu2^4*mu4^3+10*mu2^3*mu3^3*mu4-165*mu2^3*mu3*mu4^3"
    "-198*mu2^3*mu4^4-22*mu2^2*mu3^4*mu4+263*mu2^2*mu3^2*mu4^3+740*mu2^2*mu3*mu4^4"
    "+654*mu2^2*mu4^5+8*mu2*mu3^5*mu4-82*mu2*mu3^3*mu4^3-596*mu2*mu3^2*mu4^4"
    "-979*mu2*mu3*mu4^5-472*mu2*mu4^6-8*mu3^5*mu4^2+22*mu3^4*mu4^3+72*mu3^3*mu4^4"
    "+331*mu3^2*mu4^5+404*mu3*mu4^6+49*mu4^7",
    "-28*mu2^5*mu3*mu4^2+30*mu2^5*mu4^3-30*mu2^4*mu3^2*mu4^2-20*mu2^4*mu3*mu4^3"
    "-165*mu2^4*mu4^4+80*mu2^3*mu3^3*mu4^2+330*mu2^3*mu3^2*mu4^3+378*mu2^3*mu3*mu4^4"
    "+374*mu2^3*mu4^5-70*mu2^2*mu3^4*mu4^2-416*mu2^2*mu3^3*mu4^3-789*mu2^2*mu3^2*mu4^4"
    "-893*mu2^2*mu3*mu4^5-317*mu2^2*mu4^6+44*mu2*mu3^5*mu4^2+140*mu2*mu3^4*mu4^3"
    "+614*mu2*mu3^3*mu4^4+818*mu2*mu3^2*mu4^5+630*mu2*mu3*mu4^6+110*mu2*mu4^7-44*mu3^5*mu4^3"
    "-70*mu3^4*mu4^4-278*mu3^3*mu4^5-329*mu3^2*mu4^6-67*mu3*mu4^7-32*mu4^8",
    "8*mu2^6*mu3-56*mu2^5*mu3*mu4+4*mu2^4*mu3^3-60*mu2^4*mu3^2*mu4+330*mu2^4*mu4^3"
    "+20*mu2^3*mu3^4+160*mu2^3*mu3^3*mu4-558*mu2^3*mu3*mu4^3-1528*mu2^3*mu4^4-44*mu2^2*mu3^5"
    "-140*mu2^2*mu3^4*mu4+910*mu2^2*mu3^2*mu4^3+2132*mu2^2*mu3*mu4^4+2070*mu2^2*mu4^5"
    "+16*mu2*mu3^6+88*mu2*mu3^5*mu4-456*mu2*mu3^3*mu4^3-1634*mu2*mu3^2*mu4^4"
    "-2236*mu2*mu3*mu4^5-674*mu2*mu4^6-16*mu3^6*mu4-44*mu3^5*mu4^2+120*mu3^4*mu4^3"
    "+292*mu3^3*mu4^4+784*mu3^2*mu4^5+710*mu3*mu4^6-198*mu4^7",
    "-8*mu2^7*mu4-4*mu2^5*mu3^2*mu4+60*mu2^5*mu3*mu4^2+244*mu2^5*mu4^3-20*mu2^4*mu3^3*mu4"
    "-114*mu2^4*mu3^2*mu4^2-570*mu2^4*mu3*mu4^3-835*mu2^4*mu4^4+44*mu2^3*mu3^4*mu4"
    "+330*mu2^3*mu3^3*mu4^2+688*mu2^3*mu3^2*mu4^3+1943*mu2^3*mu3*mu4^4+1761*mu2^3*mu4^5"
    "-16*mu2^2*mu3^5*mu4-306*mu2^2*mu3^4*mu4^2-1150*mu2^2*mu3^3*mu4^3-1467*mu2^2*mu3^2*mu4^4"
    "-3540*mu2^2*mu3*mu4^5-2210*mu2^2*mu4^6+132*mu2*mu3^5*mu4^2+480*mu2*mu3^4*mu4^3"
    "+1440*mu2*mu3^3*mu4^4+1596*mu2*mu3^2*mu4^5+2681*mu2*mu3*mu4^6+1513*mu2*mu4^7"
    "-116*mu3^5*mu4^3-218*mu3^4*mu4^4-600*mu3^3*mu4^5-699*mu3^2*mu4^6-574*mu3*mu4^7-465*mu4^8"
};

// Published grevlex basis of <c1..c14, p1>, mu2 > mu3 > mu4.
inline constexpr std::array<const char*, 6> kAnnihilatorBasis{
    "4*mu2^5-24*mu2^4*mu4+2*mu2^3*mu3^2-30*mu2^3*mu3*mu4+13*mu2^3*mu4^2+10*mu2^2*mu3^3"
    "+82*mu2^2*mu3^2*mu4+135*mu2^2*mu3*mu4^2+112*mu2^2*mu4^3-22*mu2*mu3^4-60*mu2*mu3^3*mu4"
    "-181*mu2*mu3^2*mu4^2-247*mu2*mu3*mu4^3-106*mu2*mu4^4+8*mu3^5+22*mu3^4*mu4"
    "+54*mu3^3*mu4^2+117*mu3^2*mu4^3+98*mu3*mu4^4+17*mu4^5",
    "-6*mu2^2*mu3*mu4^4+8*mu2*mu3^3*mu4^3+14*mu2*mu3*mu4^5+5*mu2*mu4^6-2*mu3^5*mu4^2"
    "-9*mu3^3*mu4^4-5*mu3^2*mu4^5+3*mu3*mu4^6-9*mu4^7",
    "2*mu2^3*mu4^4-6*mu2^2*mu3^2*mu4^3-7*mu2^2*mu4^5+2*mu2*mu3^4*mu4^2+13*mu2*mu3^2*mu4^4"
    "+5*mu2*mu3*mu4^5-3*mu2*mu4^6-2*mu3^4*mu4^3-7*mu3^2*mu4^5-5*mu3*mu4^6+8*mu4^7",
    "-4*mu2^3*mu3*mu4^3+2*mu2^2*mu3^3*mu4^2+13*mu2^2*mu3*mu4^4+5*mu2^2*mu4^5"
    "-4*mu2*mu3^3*mu4^3-14*mu2*mu3*mu4^5-14*mu2*mu4^6+2*mu3^3*mu4^4+5*mu3*mu4^6+9*mu4^7",
    "-2*mu2^4*mu4^3+2*mu2^3*mu3^2*mu4^2+9*mu2^3*mu4^4-6*mu2^2*mu3^2*mu4^3-4*mu2^2*mu4^5"
    "+6*mu2*mu3^2*mu4^4-4*mu2*mu3*mu4^5-11*mu2*mu4^6-2*mu3^2*mu4^5+4*mu3*mu4^6+8*mu4^7",
    "2*mu2^4*mu3*mu4^2-8*mu2^3*mu3*mu4^3-5*mu2^3*mu4^4+23*mu2^2*mu3*mu4^4+19*mu2^2*mu4^5"
    "-4*mu2*mu3^2*mu4^4-30*mu2*mu3*mu4^5-23*mu2*mu4^6+4*mu3^2*mu4^5+13*mu3*mu4^6+9*mu4^7"
};

// Coefficients of mu2^5, mu2^4 mu3, ..., mu3^5 in p1 mod (a mu2 + b mu3 + mu4).
inline constexpr std::array<const char*, 6> kRemainderCoefficients{
    "-17*a^5-106*a^4-112*a^3+13*a^2+24*a+4",
    "-85*a^4*b+98*a^4-424*a^3*b+247*a^3-336*a^2*b+135*a^2+26*a*b+30*a+24*b",
    "-170*a^3*b^2+392*a^3*b-117*a^3-636*a^2*b^2+741*a^2*b-181*a^2-336*a*b^2+270*a*b-82*a"
    "+13*b^2+30*b+2",
    "-170*a^2*b^3+588*a^2*b^2-351*a^2*b+54*a^2-424*a*b^3+741*a*b^2-362*a*b+60*a-112*b^3"
    "+135*b^2-82*b+10",
    "-85*a*b^4+392*a*b^3-351*a*b^2+108*a*b-22*a-106*b^4+247*b^3-181*b^2+60*b-22",
    "-17*b^5+98*b^4-117*b^3+54*b^2-22*b+8"
};

// The (a, b) basis exactly as printed; the last term of the second entry is suspect.
inline constexpr std::array<const char*, 2> kAbIdealPrinted{
    "17*b^5-98*b^4+117*b^3-54*b^2+22*b-8",
    "178*a-2907*b^3+1885*b^2+94*b+434"
};

inline constexpr const char* kValidThetaFactor =
    "13*r^10-117*r^8+146*r^6-202*r^4+33*r^2-1";

// Elimination of mu2, mu4 from the trapezoid system plus p1, order mu2 > mu4 > r > mu1 > mu3.
inline constexpr std::array<const char*, 5> kValidThetaBasis{
    "13*mu1^3*r^10-117*mu1^3*r^8+146*mu1^3*r^6-202*mu1^3*r^4+33*mu1^3*r^2-mu1^3"
    "-13*mu1^2*mu3*r^10+117*mu1^2*mu3*r^8-146*mu1^2*mu3*r^6+202*mu1^2*mu3*r^4"
    "-33*mu1^2*mu3*r^2+mu1^2*mu3",
    "-26*mu1^2*r^10+234*mu1^2*r^8-292*mu1^2*r^6+404*mu1^2*r^4-66*mu1^2*r^2+2*mu1^2"
    "+13*mu1*mu3*r^12-104*mu1*mu3*r^10+29*mu1*mu3*r^8-56*mu1*mu3*r^6-169*mu1*mu3*r^4"
    "+32*mu1*mu3*r^2-mu1*mu3",
    "13*mu1^2*r^12-130*mu1^2*r^10+263*mu1^2*r^8-348*mu1^2*r^6+235*mu1^2*r^4-34*mu1^2*r^2"
    "+mu1^2",
    "13*mu1*r^14-117*mu1*r^12+133*mu1*r^10-85*mu1*r^8-113*mu1*r^6+201*mu1*r^4-33*mu1*r^2+mu1",
    "-26624*mu1^2*mu3^3*r^10+239616*mu1^2*mu3^3*r^8-299008*mu1^2*mu3^3*r^6"
    "+413696*mu1^2*mu3^3*r^4-67584*mu1^2*mu3^3*r^2+2048*mu1^2*mu3^3+169*mu3^5*r^34"
    "-2873*mu3^5*r^32+12922*mu3^5*r^30+27118*mu3^5*r^28-406722*mu3^5*r^26+1347738*mu3^5*r^24"
    "-1586862*mu3^5*r^22-281258*mu3^5*r^20+2799456*mu3^5*r^18-3540776*mu3^5*r^16"
    "+351950*mu3^5*r^14+2016810*mu3^5*r^12-1266942*mu3^5*r^10+299974*mu3^5*r^8"
    "-34970*mu3^5*r^6+2194*mu3^5*r^4-73*mu3^5*r^2+mu3^5"
};
// ---- published decimals (six significant figures) ---------------------------

// Roots of the b-quintic and the matching a values, ascending in b.
inline constexpr std::array<double, 3> kPlaneB{0.638032, 0.843716, 4.330096};
inline constexpr std::array<double, 3> kPlaneA{-1.31061, -0.480743, -4.858868};

// The quadratic cofactor: coefficients of mu2^2, mu2 mu3, mu3^2, mu2 mu4,
// mu3 mu4, mu4^2; eigenvalues of its form; unit null vector.
inline constexpr std::array<double, 6> kQuadraticCofactor{0.0768582, -0.0289778, 0.201885,
                                                          -0.546561, -0.0471389, 1.0};
inline constexpr std::array<double, 3> kQuadraticEigenvalues{1.07524, 0.2035, 0.0};
inline constexpr std::array<double, 3> kQuadraticNull{-0.95922, -0.0997192, -0.264487};

// Lines of (mu2, mu3, mu4) annihilating f2..f5, f7..f9 on Var(p1).
struct AnnihilatingLineRow {
  std::array<double, 3> u;
  bool discriminant_positive;  // mu3^2 - 4 mu2 mu4 + 4 mu4^2 > 0
  std::array<double, 2> mu1;   // roots of f1 on the line; unused when not positive
  const char* kind;
};

inline constexpr std::array<AnnihilatingLineRow, 10> kAnnihilatingLines{{
    {{-0.392564, -0.601236, 0.695995}, true, {-1.221488, 0.620252}, "intersection"},
    {{0.437709, 0.899117, 0.0}, true, {0.899117, 0.0}, "mu4=0"},
    {{0.0897986, -0.782076, 0.616680}, true, {-1.082289, 0.300213}, "intersection"},
    {{-0.644154, -0.619064, -0.449250}, true, {-0.400360, -0.218705}, "intersection"},
    {{0.959220, 0.099719, 0.264487}, false, {0.0, 0.0}, "l1"},
    {{-0.443673, 0.778658, -0.443673}, true, {0.778658, 0.0}, "mu2=mu4"},
    {{-0.598235, -0.533132, -0.598235}, true, {-0.533132, 0.0}, "mu2=mu4"},
    {{0.668602, 0.325490, 0.668602}, true, {0.325490, 0.0}, "mu2=mu4"},
    {{0.665316, 0.746562, 0.0}, true, {0.746561, 0.0}, "mu4=0"},
    {{0.868855, -0.495067, 0.0}, true, {-0.495067, 0.0}, "mu4=0"},
}};

// Positive roots of the valid-angle factor g and the matching plane
// (1 = A1, 2 = B2, 3 = C3); theta2 = atan2(2r, r^2 - 1).
inline constexpr std::array<double, 3> kValidRoots{2.79493, 0.375563, 0.199167};
inline constexpr std::array<int, 3> kValidRootPlane{1, 3, 2};
inline constexpr std::array<double, 3> kValidThetas{0.687197, 2.42306, 2.74840};

}  // namespace vortexsym::reference
