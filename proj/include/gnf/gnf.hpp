#pragma once

// Convenience umbrella: the special functions, graded tensor tools, the
// evaluated R-matrix / twist catalog, the twist workbench and the residual
// verification suites.

#include <gnf/catalog.hpp>
#include <gnf/common.hpp>
#include <gnf/gtensor.hpp>
#include <gnf/specfun.hpp>
#include <gnf/twistlab.hpp>
#include <gnf/verify.hpp>
