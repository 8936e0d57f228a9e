#pragma once

// Umbrella header: the whole library in dependency order.

#include "lcf/errors.hpp"
#include "lcf/hypergraph.hpp"
#include "lcf/matching.hpp"
#include "lcf/cycles.hpp"
#include "lcf/oracle.hpp"
#include "lcf/trees.hpp"
#include "lcf/construct.hpp"
#include "lcf/generators.hpp"
#include "lcf/io.hpp"
#include "lcf/harness.hpp"
