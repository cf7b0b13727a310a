#pragma once

// Umbrella header for the table-free dyadic trigonometry library.

#include "dyadic/dyadic_rational.hpp"
#include "dyadic/errors.hpp"
#include "dyadic/forward_trig.hpp"
#include "dyadic/intmath.hpp"
#include "dyadic/inverse_trig.hpp"
#include "dyadic/signature.hpp"
