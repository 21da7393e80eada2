#ifndef BRSTLAB_BRSTLAB_HPP
#define BRSTLAB_BRSTLAB_HPP

// Umbrella header for the brstlab library.

#include "brstlab/errors.hpp"
#include "brstlab/linalg.hpp"
#include "brstlab/krein.hpp"
#include "brstlab/subspace.hpp"
#include "brstlab/ghost.hpp"
#include "brstlab/constraints.hpp"
#include "brstlab/hamiltonian.hpp"
#include "brstlab/dsp.hpp"
#include "brstlab/dirac.hpp"
#include "brstlab/bose.hpp"
#include "brstlab/pipeline.hpp"

#endif // BRSTLAB_BRSTLAB_HPP
