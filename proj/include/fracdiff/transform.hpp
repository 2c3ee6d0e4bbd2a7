#pragma once

#include "fracdiff/transform/fourier.hpp"
#include "fracdiff/transform/gauss_legendre.hpp"
#include "fracdiff/transform/lamperti.hpp"
#include "fracdiff/transform/quadrature.hpp"
