#pragma once

#include "bound_state.hpp"
#include "dirac.hpp"
#include "integrator.hpp"
#include "io.hpp"
#include "potential.hpp"
#include "potential_config.hpp"
#include "pt_core.hpp"
#include "scattering.hpp"
#include "special_functions.hpp"
#include "types.hpp"
