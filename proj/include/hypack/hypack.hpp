#pragma once

#include "hypack/error.hpp"
#include "hypack/lorentz.hpp"
#include "hypack/orthoscheme.hpp"
#include "hypack/essential_points.hpp"
#include "hypack/volume.hpp"
#include "hypack/density_cases.hpp"
#include "hypack/reference_tables.hpp"
#include "hypack/survey.hpp"
