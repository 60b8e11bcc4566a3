#ifndef FLALC_FLALC_HPP
#define FLALC_FLALC_HPP

#include "flalc/canonical.hpp"
#include "flalc/concept.hpp"
#include "flalc/degree.hpp"
#include "flalc/error.hpp"
#include "flalc/evaluator.hpp"
#include "flalc/grid_search.hpp"
#include "flalc/interpretation.hpp"
#include "flalc/knowledge_base.hpp"
#include "flalc/pcp.hpp"
#include "flalc/reduction.hpp"
#include "flalc/syntax.hpp"

#endif  // FLALC_FLALC_HPP
