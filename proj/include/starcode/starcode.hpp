#pragma once

// Umbrella header.

#include "starcode/error.hpp"
#include "starcode/field.hpp"
#include "starcode/matrix.hpp"
#include "starcode/code.hpp"
#include "starcode/families.hpp"
#include "starcode/ecp.hpp"
#include "starcode/distinguish.hpp"
#include "starcode/sss.hpp"
#include "starcode/hull.hpp"
#include "starcode/codespec.hpp"
#include "starcode/parallel.hpp"
