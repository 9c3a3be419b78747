#pragma once

#include "tpgabor/banded_matrix.hpp"
#include "tpgabor/error.hpp"
#include "tpgabor/gabor_frames.hpp"
#include "tpgabor/io.hpp"
#include "tpgabor/point_sequence.hpp"
#include "tpgabor/quadrature.hpp"
#include "tpgabor/si_sampling.hpp"
#include "tpgabor/tp_kernel.hpp"
#include "tpgabor/tp_linalg.hpp"
