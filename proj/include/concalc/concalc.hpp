#pragma once

#include "concalc/besov.hpp"
#include "concalc/calculus.hpp"
#include "concalc/core.hpp"
#include "concalc/dilation.hpp"
#include "concalc/divdiff.hpp"
#include "concalc/funcalc.hpp"
#include "concalc/json_io.hpp"
#include "concalc/matcore.hpp"
#include "concalc/opint.hpp"
#include "concalc/random_gen.hpp"
#include "concalc/semispectral.hpp"
#include "concalc/suite.hpp"
