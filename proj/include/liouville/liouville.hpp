#pragma once

#include "liouville/catalog.hpp"
#include "liouville/chart.hpp"
#include "liouville/classify.hpp"
#include "liouville/diagonals.hpp"
#include "liouville/ellipsoid.hpp"
#include "liouville/energy.hpp"
#include "liouville/errors.hpp"
#include "liouville/geodesics.hpp"
#include "liouville/geometry.hpp"
#include "liouville/nd_liouville.hpp"
#include "liouville/quadrature.hpp"
#include "liouville/random.hpp"
#include "liouville/special/elliptic.hpp"
#include "liouville/special/lie_series.hpp"
#include "liouville/special/polynomial.hpp"
