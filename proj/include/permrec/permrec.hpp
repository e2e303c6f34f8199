#pragma once

#include "permrec/arith.hpp"
#include "permrec/ball.hpp"
#include "permrec/ball_cache.hpp"
#include "permrec/closed_forms.hpp"
#include "permrec/cycle_type.hpp"
#include "permrec/errors.hpp"
#include "permrec/generators.hpp"
#include "permrec/graph_report.hpp"
#include "permrec/limits.hpp"
#include "permrec/metric.hpp"
#include "permrec/permutation.hpp"
#include "permrec/probe.hpp"
#include "permrec/reconstruct.hpp"
#include "permrec/report.hpp"
#include "permrec/rng.hpp"
#include "permrec/small_graph.hpp"
#include "permrec/structure.hpp"
#include "permrec/verify.hpp"
