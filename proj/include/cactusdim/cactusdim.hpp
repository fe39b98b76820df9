// Umbrella header.
#pragma once

#include "bitset.hpp"
#include "block_reduction.hpp"
#include "blocks.hpp"
#include "cactus.hpp"
#include "canonical.hpp"
#include "distance.hpp"
#include "enumerate.hpp"
#include "exact_dim.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "harness.hpp"
#include "serialize.hpp"
#include "structural.hpp"
#include "threads.hpp"
#include "vertex_cover.hpp"
