#pragma once

// Umbrella header: exact nonsymmetric Macdonald polynomials via alcove
// walks, the DAHA polynomial module, graded characters of generalized Weyl
// modules, and the series part of the nonsymmetric q-Whittaker function.

#include "macweyl/affine_weyl.hpp"
#include "macweyl/bivariate.hpp"
#include "macweyl/hecke.hpp"
#include "macweyl/json_io.hpp"
#include "macweyl/laurent.hpp"
#include "macweyl/macdonald.hpp"
#include "macweyl/qbg.hpp"
#include "macweyl/root_data.hpp"
#include "macweyl/scalar.hpp"
#include "macweyl/series.hpp"
#include "macweyl/verify.hpp"
#include "macweyl/walks.hpp"
#include "macweyl/weight.hpp"
#include "macweyl/weyl_characters.hpp"
#include "macweyl/whittaker.hpp"
