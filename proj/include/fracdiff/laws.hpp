#pragma once

#include "fracdiff/laws/cf.hpp"
#include "fracdiff/laws/curve.hpp"
#include "fracdiff/laws/densities.hpp"
#include "fracdiff/laws/higher_order.hpp"
#include "fracdiff/laws/model.hpp"
#include "fracdiff/laws/moments.hpp"
