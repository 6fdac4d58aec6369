#pragma once

#include "determinant.hpp"
#include "free_group.hpp"
#include "integer.hpp"
#include "laurent.hpp"
#include "metabelian.hpp"
#include "poly_matrix.hpp"
#include "presentation.hpp"
#include "representation.hpp"
#include "twin_ring.hpp"
#include "twisted.hpp"
#include "two_bridge.hpp"
