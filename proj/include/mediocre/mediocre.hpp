#pragma once

#include "mediocre/approx_select.hpp"
#include "mediocre/core.hpp"
#include "mediocre/cost_model.hpp"
#include "mediocre/exact_select.hpp"
#include "mediocre/harness.hpp"
#include "mediocre/rng.hpp"
