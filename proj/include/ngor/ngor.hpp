#pragma once

// Exact tools for decorated resolution graphs: the anti-canonical cycle,
// the numerically Gorenstein test, and enumeration of self-intersection
// weightings with negative definite intersection form.

#include "ngor/classify.hpp"
#include "ngor/cycle.hpp"
#include "ngor/enumerate.hpp"
#include "ngor/errors.hpp"
#include "ngor/graph.hpp"
#include "ngor/graph_io.hpp"
#include "ngor/linalg.hpp"
#include "ngor/numbers.hpp"
