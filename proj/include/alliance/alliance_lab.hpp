#pragma once

// Umbrella header.
#include "alliance/alliance.hpp"
#include "alliance/canonical.hpp"
#include "alliance/enumeration.hpp"
#include "alliance/errors.hpp"
#include "alliance/families.hpp"
#include "alliance/graph.hpp"
#include "alliance/graph6.hpp"
#include "alliance/limits.hpp"
#include "alliance/rational.hpp"
#include "alliance/solver.hpp"
#include "alliance/verification.hpp"
#include "alliance/vertex_set.hpp"
