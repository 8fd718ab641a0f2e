#pragma once

#include "errors.hpp"
#include "interval.hpp"
#include "sampling.hpp"
#include "weights.hpp"
#include "means.hpp"
#include "function.hpp"
#include "functions.hpp"
#include "convexity.hpp"
#include "popoviciu.hpp"
#include "catalog.hpp"
#include "report.hpp"
#include "cli.hpp"
