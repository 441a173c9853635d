#pragma once

#include "respond/bulk.hpp"
#include "respond/curves.hpp"
#include "respond/disorder.hpp"
#include "respond/error.hpp"
#include "respond/greens_analytic.hpp"
#include "respond/greens_numeric.hpp"
#include "respond/log_polar.hpp"
#include "respond/model.hpp"
#include "respond/parallel.hpp"
#include "respond/spectra.hpp"
#include "respond/winding.hpp"
