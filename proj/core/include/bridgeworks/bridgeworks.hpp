#pragma once

#include "bridgeworks/bench.hpp"
#include "bridgeworks/distance_table.hpp"
#include "bridgeworks/error.hpp"
#include "bridgeworks/geometry.hpp"
#include "bridgeworks/graph.hpp"
#include "bridgeworks/io.hpp"
#include "bridgeworks/numeric.hpp"
#include "bridgeworks/optimal_bridge.hpp"
#include "bridgeworks/planar.hpp"
#include "bridgeworks/random.hpp"
#include "bridgeworks/reductions/cov.hpp"
#include "bridgeworks/reductions/ksum.hpp"
#include "bridgeworks/reductions/rdbp.hpp"
#include "bridgeworks/reductions/sat.hpp"
#include "bridgeworks/twin_bridges.hpp"
