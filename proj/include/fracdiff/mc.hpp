#pragma once

#include "fracdiff/mc/parallel.hpp"
#include "fracdiff/mc/philox.hpp"
#include "fracdiff/mc/samplers.hpp"
#include "fracdiff/mc/stats.hpp"
