#pragma once

#include "rhodonea/curve.hpp"
#include "rhodonea/nodes.hpp"
#include "rhodonea/variety.hpp"
#include "rhodonea/data_grid.hpp"
#include "rhodonea/spectral.hpp"
#include "rhodonea/fft.hpp"
#include "rhodonea/transform.hpp"
#include "rhodonea/interpolation.hpp"
#include "rhodonea/quadrature.hpp"
#include "rhodonea/analysis.hpp"
#include "rhodonea/io.hpp"
