#pragma once

#include "checkerboard/classify.hpp"
#include "checkerboard/designs.hpp"
#include "checkerboard/duality.hpp"
#include "checkerboard/errors.hpp"
#include "checkerboard/lattice.hpp"
#include "checkerboard/matrix.hpp"
#include "checkerboard/normal_form.hpp"
#include "checkerboard/numeric.hpp"
#include "checkerboard/recognition.hpp"
#include "checkerboard/roots.hpp"
