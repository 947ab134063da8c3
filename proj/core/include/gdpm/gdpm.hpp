#pragma once

// Umbrella header.

#include "gdpm/baselines.hpp"
#include "gdpm/gdeig.hpp"
#include "gdpm/gdm.hpp"
#include "gdpm/jacobi_eig.hpp"
#include "gdpm/kick.hpp"
#include "gdpm/linops.hpp"
#include "gdpm/mmio.hpp"
#include "gdpm/planar.hpp"
#include "gdpm/pmm.hpp"
#include "gdpm/probgen.hpp"
#include "gdpm/rng.hpp"
#include "gdpm/saddle_examples.hpp"
#include "gdpm/solver.hpp"
#include "gdpm/trace.hpp"
