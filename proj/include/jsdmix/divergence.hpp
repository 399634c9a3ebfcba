#pragma once

#include "jsdmix/pmf.hpp"

namespace jsdmix {

// All divergences use the natural logarithm. Zero-mass terms are skipped
// (the 0 ln 0 := 0 convention), never fed to the log.

// H(r) = -sum r(x) ln r(x), in [0, ln |alphabet|].
double entropy(const Pmf& r);

// D(r1 || r2); +infinity when supp(r1) is not contained in supp(r2).
// Throws std::invalid_argument on mismatched alphabets.
double kl_divergence(const Pmf& r1, const Pmf& r2);

// pi*D(r1||rM) + (1-pi)*D(r2||rM) with rM = pi*r1 + (1-pi)*r2.
// Always finite; returns 0 for pi in {0,1}.
double js_divergence(const Pmf& r1, const Pmf& r2, Weight pi);

// Same quantity as H(rM) - pi*H(r1) - (1-pi)*H(r2). Kept as a separate
// entry point so the two routes can be compared; js_divergence is the
// canonical one.
double js_divergence_entropy_form(const Pmf& r1, const Pmf& r2, Weight pi);

// js_divergence at pi = 1/2; symmetric in its arguments by construction.
double sym_js(const Pmf& r1, const Pmf& r2);

// h2(x) = -x ln x - (1-x) ln(1-x). Throws std::domain_error outside [0,1].
double binary_entropy(double x);

}  // namespace jsdmix
