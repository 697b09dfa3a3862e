#pragma once

#include "udw/csv.hpp"
#include "udw/dynamics.hpp"
#include "udw/errors.hpp"
#include "udw/linalg.hpp"
#include "udw/params.hpp"
#include "udw/quadrature.hpp"
#include "udw/regression.hpp"
#include "udw/spectral.hpp"
#include "udw/spectrum.hpp"
#include "udw/verify.hpp"
