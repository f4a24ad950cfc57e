#pragma once

#include "spex/charpoly.hpp"
#include "spex/constructions.hpp"
#include "spex/enumeration.hpp"
#include "spex/error.hpp"
#include "spex/forbidden_pattern.hpp"
#include "spex/graph.hpp"
#include "spex/graph6.hpp"
#include "spex/parallel.hpp"
#include "spex/partitions.hpp"
#include "spex/patterns.hpp"
#include "spex/perron_report.hpp"
#include "spex/planarity.hpp"
#include "spex/search.hpp"
#include "spex/spectral.hpp"
