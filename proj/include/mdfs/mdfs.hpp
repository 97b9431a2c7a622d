#pragma once

// Umbrella header for the whole toolkit.

#include "mdfs/classifiers.hpp"
#include "mdfs/csv.hpp"
#include "mdfs/dataset.hpp"
#include "mdfs/decompose.hpp"
#include "mdfs/discretize.hpp"
#include "mdfs/eval.hpp"
#include "mdfs/folds.hpp"
#include "mdfs/matrix.hpp"
#include "mdfs/metrics.hpp"
#include "mdfs/rng.hpp"
#include "mdfs/selectors.hpp"
#include "mdfs/siren.hpp"
