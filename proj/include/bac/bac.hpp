#pragma once

#include "bac/binary.hpp"
#include "bac/chain.hpp"
#include "bac/error.hpp"
#include "bac/field.hpp"
#include "bac/json.hpp"
#include "bac/matrix.hpp"
#include "bac/randgen.hpp"
#include "bac/shortening.hpp"
#include "bac/torsion.hpp"
#include "bac/total.hpp"
#include "bac/verify.hpp"
