#pragma once

// Umbrella header: invertible cellular automata on the full shift, marker
// rewriting schemes, the induced boundary action, and the d-to-1 lattice
// reduction.

#include "autshift/base.hpp"
#include "autshift/dyadic.hpp"
#include "autshift/periodic_word.hpp"
#include "autshift/biconfig.hpp"
#include "autshift/omega.hpp"
#include "autshift/block_code.hpp"
#include "autshift/marker.hpp"
#include "autshift/families.hpp"
#include "autshift/boundary.hpp"
#include "autshift/lattice.hpp"
#include "autshift/zd_code.hpp"
#include "autshift/dsl.hpp"
