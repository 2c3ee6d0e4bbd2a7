#pragma once

#include "fracdiff/specfun/airy.hpp"
#include "fracdiff/specfun/gamma.hpp"
#include "fracdiff/specfun/kilbas_saigo.hpp"
#include "fracdiff/specfun/mittag_leffler.hpp"
#include "fracdiff/specfun/series.hpp"
#include "fracdiff/specfun/wright.hpp"
