#pragma once

#include "vpg/constructors.hpp"
#include "vpg/errors.hpp"
#include "vpg/geometry.hpp"
#include "vpg/graph.hpp"
#include "vpg/lowerbound.hpp"
#include "vpg/oracle.hpp"
#include "vpg/poset.hpp"
#include "vpg/rational.hpp"
#include "vpg/representation.hpp"
#include "vpg/subsets.hpp"
#include "vpg/svg.hpp"
