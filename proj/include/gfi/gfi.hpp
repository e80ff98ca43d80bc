#pragma once

// Umbrella header for the whole toolkit.

#include "gfi/bvm.hpp"
#include "gfi/coverage.hpp"
#include "gfi/d_operator.hpp"
#include "gfi/density.hpp"
#include "gfi/errors.hpp"
#include "gfi/grid.hpp"
#include "gfi/method.hpp"
#include "gfi/parallel.hpp"
#include "gfi/reference_table.hpp"
#include "gfi/rng.hpp"
#include "gfi/spline.hpp"
#include "gfi/spline_sampler.hpp"
#include "gfi/triangular.hpp"
