#pragma once

#include "diskcover/core.hpp"
#include "diskcover/discrete1d.hpp"
#include "diskcover/enclosing.hpp"
#include "diskcover/generate.hpp"
#include "diskcover/io.hpp"
#include "diskcover/line_cover.hpp"
#include "diskcover/line_search.hpp"
#include "diskcover/mcct.hpp"
#include "diskcover/pinned.hpp"
#include "diskcover/svg.hpp"
#include "diskcover/tsp.hpp"
