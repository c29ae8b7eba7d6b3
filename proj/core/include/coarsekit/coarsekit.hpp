#pragma once

#include "coarsekit/coarse_map.hpp"
#include "coarsekit/control.hpp"
#include "coarsekit/extension.hpp"
#include "coarsekit/game.hpp"
#include "coarsekit/group.hpp"
#include "coarsekit/metric.hpp"
#include "coarsekit/point.hpp"
#include "coarsekit/quasi_action.hpp"
#include "coarsekit/scalar.hpp"
#include "coarsekit/witness.hpp"
