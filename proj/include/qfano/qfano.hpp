#pragma once

#include "basket.hpp"
#include "classifier.hpp"
#include "error.hpp"
#include "link_arithmetic.hpp"
#include "link_case.hpp"
#include "orbifold_rr.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "torsion.hpp"
#include "wps.hpp"
