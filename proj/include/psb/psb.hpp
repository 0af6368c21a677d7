#pragma once

// Everything except the command-line front end (psb/cli.hpp).

#include "psb/error.hpp"
#include "psb/exponent.hpp"
#include "psb/rational.hpp"
#include "psb/order.hpp"
#include "psb/polynomial.hpp"
#include "psb/parse.hpp"
#include "psb/groebner.hpp"
#include "psb/param_polynomial.hpp"
#include "psb/param_ring.hpp"
#include "psb/mora_engine.hpp"
#include "psb/modified_standard.hpp"
#include "psb/stratify.hpp"
#include "psb/hilbert.hpp"
#include "psb/hs_strat.hpp"
#include "psb/render.hpp"
