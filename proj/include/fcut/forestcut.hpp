#pragma once

// Umbrella header: the whole toolkit in one include.

#include "bounds.hpp"     // IWYU pragma: export
#include "cuts.hpp"       // IWYU pragma: export
#include "cyclic.hpp"     // IWYU pragma: export
#include "errors.hpp"     // IWYU pragma: export
#include "generators.hpp" // IWYU pragma: export
#include "graph.hpp"      // IWYU pragma: export
#include "io.hpp"         // IWYU pragma: export
#include "rational.hpp"   // IWYU pragma: export
#include "scan.hpp"       // IWYU pragma: export
#include "subsets.hpp"    // IWYU pragma: export
#include "vertex_set.hpp" // IWYU pragma: export
