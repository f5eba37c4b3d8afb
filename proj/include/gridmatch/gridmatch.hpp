#pragma once

#include "gridmatch/bench.hpp"
#include "gridmatch/errors.hpp"
#include "gridmatch/gen.hpp"
#include "gridmatch/grid_graph.hpp"
#include "gridmatch/instance.hpp"
#include "gridmatch/io.hpp"
#include "gridmatch/reduction.hpp"
#include "gridmatch/render.hpp"
#include "gridmatch/solver.hpp"
