#pragma once

// Everything except report_io.hpp, which needs the vendored JSON header.

#include "catsym/category.hpp"
#include "catsym/comma.hpp"
#include "catsym/finset.hpp"
#include "catsym/format.hpp"
#include "catsym/functor.hpp"
#include "catsym/internal.hpp"
#include "catsym/iso.hpp"
#include "catsym/levels.hpp"
#include "catsym/report.hpp"
#include "catsym/symmetry.hpp"
