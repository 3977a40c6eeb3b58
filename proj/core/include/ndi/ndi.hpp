#pragma once

#include "ndi/analysis.hpp"
#include "ndi/centrality.hpp"
#include "ndi/graph.hpp"
#include "ndi/numerics.hpp"
#include "ndi/nsi.hpp"
#include "ndi/pipeline.hpp"
#include "ndi/report_io.hpp"
#include "ndi/svg.hpp"
