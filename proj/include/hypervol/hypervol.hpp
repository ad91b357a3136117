#pragma once

#include "hypervol/angles.hpp"
#include "hypervol/lorentz.hpp"
#include "hypervol/oracle.hpp"
#include "hypervol/shape.hpp"
#include "hypervol/specfun.hpp"
#include "hypervol/sweep.hpp"
#include "hypervol/verify.hpp"
#include "hypervol/volume.hpp"
