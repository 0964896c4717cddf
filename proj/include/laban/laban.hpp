#pragma once

// Umbrella header: the whole library.

#include "laban/devices.hpp"
#include "laban/errors.hpp"
#include "laban/group.hpp"
#include "laban/notation.hpp"
#include "laban/permutation.hpp"
#include "laban/polyhedra.hpp"
#include "laban/render.hpp"
#include "laban/scale.hpp"
#include "laban/selfcheck.hpp"
