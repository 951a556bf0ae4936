#pragma once

/// @file convex.hpp
/// @brief Umbrella header for the algebraic core (everything except io.hpp).

#include "convex/analysis.hpp"
#include "convex/binary_laws.hpp"
#include "convex/conical.hpp"
#include "convex/conical_laws.hpp"
#include "convex/convn.hpp"
#include "convex/distribution.hpp"
#include "convex/error.hpp"
#include "convex/hull.hpp"
#include "convex/instances.hpp"
#include "convex/multiary_laws.hpp"
#include "convex/random.hpp"
#include "convex/rational.hpp"
#include "convex/report.hpp"
#include "convex/space.hpp"
