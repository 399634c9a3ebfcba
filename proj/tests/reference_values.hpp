// Generated by scripts/reference_values.py -- do not edit by hand.
#pragma once

namespace refvals {

// entropy of q = (0.5, 0.4, 0.025, 0.025, 0.025, 0.025), nats
inline constexpr double kEntropySixFaceQ = 1.0819778284410283;

// jsd(p~1, p~2, 1/2) for p~1 = (1,0,...), p~2 = (0.7,0.3,0,...)
inline constexpr double kJsdComponentsHalf = 0.11727693677854414;

// binary entropy of 0.3, nats
inline constexpr double kBinaryEntropy03 = 0.61086430205489349;

// sjsd(p1, p2) with p1 = 0.3 p~1 + 0.7 q, p2 = 0.7 p~2 + 0.3 q
inline constexpr double kSjsdSixFace0307 = 0.0051592645287370338;

// sum_x min(p1(x), p2(x)) / 2, the exact MAP error at pi = 1/2
inline constexpr double kBayesSixFace0307 = 0.47499999999999997;

// d/dl H(l*(1,0) + (1-l)*(0.5,0.5)) at l = 0.5, equals -log(3)/2
inline constexpr double kEntropyDerivSegment = -0.54930614433405485;

}  // namespace refvals
