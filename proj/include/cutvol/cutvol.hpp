#pragma once

// Umbrella header for the cutvol library: exact cut-volume polynomials for
// tubular neighborhoods of even-dimensional spheres, closed forms for
// classical quadrics, and the numeric machinery used to cross-check them.

#include "cutvol/classical.hpp"
#include "cutvol/errors.hpp"
#include "cutvol/fitter.hpp"
#include "cutvol/monte_carlo.hpp"
#include "cutvol/pi_number.hpp"
#include "cutvol/polynomial.hpp"
#include "cutvol/quadrature.hpp"
#include "cutvol/rational.hpp"
#include "cutvol/tube.hpp"
#include "cutvol/tube_oracle.hpp"
#include "cutvol/wallis.hpp"
