#pragma once

#include "dehn/integer.hpp"
#include "dehn/integer_matrix.hpp"
#include "dehn/slope.hpp"
#include "dehn/surgery.hpp"
#include "dehn/two_bridge.hpp"
