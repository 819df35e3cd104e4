#ifndef TIA_TIA_HPP
#define TIA_TIA_HPP

#include "tia/decomposer.hpp"
#include "tia/generators.hpp"
#include "tia/graph.hpp"
#include "tia/graph_io.hpp"
#include "tia/mwis.hpp"
#include "tia/oracles.hpp"
#include "tia/rational_lp.hpp"
#include "tia/separator.hpp"
#include "tia/separator_search.hpp"
#include "tia/td_io.hpp"
#include "tia/tree_decomposition.hpp"
#include "tia/vertex_set.hpp"

#endif
