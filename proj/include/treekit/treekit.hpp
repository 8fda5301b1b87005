#pragma once

// Umbrella header.

#include "core.hpp"
#include "shortest_paths.hpp"
#include "mst.hpp"
#include "geometry.hpp"
#include "oracles.hpp"
#include "merge_collect.hpp"
#include "plane.hpp"
#include "exact_special.hpp"
#include "convex.hpp"
#include "short_trees.hpp"
#include "instance_gen.hpp"
#include "io.hpp"
#include "svg.hpp"
