#pragma once

#include "fracdiff/fracops/erdelyi_kober.hpp"
#include "fracdiff/fracops/grid.hpp"
